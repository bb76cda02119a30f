"""The lower-bound coloring of PG(5,q) built from the packing structure.

Every non-induced spread of every carrier packing gets its own color,
numbered lexicographically by (carrier index, spread index), and the whole
base spread shares one final color.  Color classes are spreads or spreads of
carriers, hence partial spreads, so the coloring is proper; any two colors
meet at a point of a shared carrier or of a shared spread member, so it is
complete.  The color count is (q^7 - 1)/(q - 1).
"""

from __future__ import annotations

from .coloring import Coloring, validate_coloring
from .errors import StructureInvalid
from .geometry import SpaceModel, lines_in_subspace
from .packings import PackingStructure5


def lower_bound_coloring(space: SpaceModel, structure: PackingStructure5) -> Coloring:
    """Color the lines of PG(5,q) with (q^7-1)/(q-1) colors, proper and complete."""
    q = space.q
    if space.n != 5:
        raise StructureInvalid(f"construction needs PG(5,q), got n={space.n}")

    assignment = [0] * space.num_lines
    color = 0
    for cp in structure.carriers:
        for spread_lines in cp.spreads[1:]:
            color += 1
            for l in spread_lines:
                if assignment[l]:
                    raise StructureInvalid(f"line {l} assigned twice by the structure")
                assignment[l] = color

    base_color = color + 1
    for l in structure.base_spread.line_ids:
        if assignment[l]:
            raise StructureInvalid(f"base spread line {l} already colored")
        assignment[l] = base_color

    if any(c == 0 for c in assignment):
        missing = assignment.index(0)
        raise StructureInvalid(f"line {missing} left uncolored by the structure")

    expected = (q**7 - 1) // (q - 1)
    if base_color != expected:
        raise StructureInvalid(f"built {base_color} colors, expected {expected}")

    col = Coloring(k=base_color, assignment=assignment)
    validate_coloring(space, col)
    return col


def carrier_color_sets(
    space: SpaceModel, structure: PackingStructure5, col: Coloring
) -> list[set[int]]:
    """Per big line, the set of colors used by the lines inside its carrier."""
    out = []
    for cp in structure.carriers:
        colors = {col.assignment[l] for l in lines_in_subspace(space, cp.carrier)}
        out.append(colors)
    return out
