"""Line colorings and their verification: properness, completeness, owners.

A coloring is a total map from line ids to colors 1..k.  Properness means
intersecting lines get different colors (every color class is a partial
spread).  Completeness means every unordered pair of colors appears together
at some point.  Completeness is checked in O(points * r^2) by sweeping
per-point owner color sets into per-color partner bitsets, which yields a
witness point for every covered pair as a byproduct.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotComplete, OwnerClaimFalse
from .geometry import SpaceModel
from .spreads import QuotientGeometry

MAX_LISTED = 100  # cap on explicitly listed violations in reports


@dataclass
class Coloring:
    """Total assignment of line ids to colors 1..k."""

    k: int
    assignment: list[int]

    def color_classes(self) -> list[list[int]]:
        classes: list[list[int]] = [[] for _ in range(self.k + 1)]
        for l, c in enumerate(self.assignment):
            classes[c].append(l)
        return classes[1:]


def validate_coloring(space: SpaceModel, col: Coloring) -> None:
    if len(col.assignment) != space.num_lines:
        raise ValueError(
            f"assignment covers {len(col.assignment)} lines, space has {space.num_lines}"
        )
    used = set(col.assignment)
    if not used <= set(range(1, col.k + 1)):
        raise ValueError("assignment uses colors outside 1..k")
    if len(used) != col.k:
        missing = next(c for c in range(1, col.k + 1) if c not in used)
        raise ValueError(f"color {missing} is unused")


@dataclass
class ProperReport:
    proper: bool
    violations: list[tuple[int, int, int]]  # (line, line, shared point)
    violation_count: int


@dataclass
class CompleteReport:
    complete: bool
    missing_pairs: list[tuple[int, int]]
    missing_count: int
    pair_witness: dict[tuple[int, int], int] = field(repr=False, default_factory=dict)


@dataclass
class VerificationReport:
    proper: ProperReport
    complete: CompleteReport


def owner_colors(space: SpaceModel, col: Coloring, p: int) -> set[int]:
    """Colors appearing on the lines through a point."""
    assignment = col.assignment
    return {assignment[l] for l in space.point_to_lines[p]}


def is_proper(space: SpaceModel, col: Coloring, max_listed: int = MAX_LISTED) -> ProperReport:
    """Report every pair of intersecting lines that share a color."""
    assignment = col.assignment
    violations: list[tuple[int, int, int]] = []
    count = 0
    for p in range(space.v):
        first_line: dict[int, int] = {}
        for l in space.point_to_lines[p]:
            c = assignment[l]
            if c in first_line:
                count += 1
                if len(violations) < max_listed:
                    violations.append((first_line[c], l, p))
            else:
                first_line[c] = l
    return ProperReport(proper=count == 0, violations=violations, violation_count=count)


def is_complete(
    space: SpaceModel,
    col: Coloring,
    max_listed: int = MAX_LISTED,
    want_witnesses: bool = True,
) -> CompleteReport:
    """Report every color pair that appears together at no point."""
    k = col.k
    assignment = col.assignment
    partners = [0] * (k + 1)  # partners[c] = bitset of colors met alongside c
    witness: dict[tuple[int, int], int] = {}
    for p in range(space.v):
        owned = sorted({assignment[l] for l in space.point_to_lines[p]})
        mask = 0
        for c in owned:
            mask |= 1 << c
        for c in owned:
            new = mask & ~partners[c]
            if not new:
                continue
            partners[c] |= mask
            if want_witnesses:
                while new:
                    bit = new & -new
                    d = bit.bit_length() - 1
                    new ^= bit
                    if d > c:
                        witness[(c, d)] = p
    missing: list[tuple[int, int]] = []
    count = 0
    for c in range(1, k + 1):
        row = partners[c]
        for d in range(c + 1, k + 1):
            if not row >> d & 1:
                count += 1
                if len(missing) < max_listed:
                    missing.append((c, d))
    return CompleteReport(
        complete=count == 0,
        missing_pairs=missing,
        missing_count=count,
        pair_witness=witness,
    )


def verify(space: SpaceModel, col: Coloring) -> VerificationReport:
    return VerificationReport(proper=is_proper(space, col), complete=is_complete(space, col))


def completeness_via_bigline_owners(
    space: SpaceModel,
    col: Coloring,
    quotient: QuotientGeometry,
    claimed_sets: list[set[int]],
) -> bool:
    """Completeness through carrier owners instead of a point sweep.

    Checks the hypothesis first: every point of every carrier must own every
    color claimed for that carrier (OwnerClaimFalse otherwise).  Then a pair
    of claimed colors from one carrier is covered by any of its points, and a
    pair split across two carriers is covered by the points of the shared
    spread member, so the return value states whether every pair inside the
    union of the claimed sets is accounted for.
    """
    if len(claimed_sets) != len(quotient.big_lines):
        raise ValueError("one claimed color set per big line required")

    owner_cache: dict[int, set[int]] = {}

    def owned(p: int) -> set[int]:
        if p not in owner_cache:
            owner_cache[p] = owner_colors(space, col, p)
        return owner_cache[p]

    for j, (bl, colors) in enumerate(zip(quotient.big_lines, claimed_sets)):
        for p in bl.carrier.point_ids:
            missing = colors - owned(p)
            if missing:
                raise OwnerClaimFalse(
                    f"point {p} of carrier {j} does not own color {min(missing)}"
                )

    color_carriers: dict[int, list[int]] = {}
    for j, colors in enumerate(claimed_sets):
        for c in colors:
            color_carriers.setdefault(c, []).append(j)

    member_sets = [set(bl.member_indices) for bl in quotient.big_lines]
    all_colors = sorted(color_carriers)
    for i, c1 in enumerate(all_colors):
        js1 = set(color_carriers[c1])
        for c2 in all_colors[i + 1:]:
            js2 = color_carriers[c2]
            if js1.intersection(js2):
                continue  # both owned by one carrier
            if not any(
                member_sets[a] & member_sets[b] for a in js1 for b in js2
            ):
                return False  # no shared spread member provides an owner
    return True


@dataclass
class BoundWitness:
    """A verified complete coloring certifies k as a lower bound."""

    k: int
    kind: str  # "alpha" when also proper, else "psi"


def max_colors_lower_certificate(space: SpaceModel, col: Coloring) -> BoundWitness:
    """k as a lower bound for the achromatic or pseudoachromatic index."""
    report = is_complete(space, col, want_witnesses=False)
    if not report.complete:
        raise NotComplete(f"{report.missing_count} color pairs uncovered")
    proper = is_proper(space, col).proper
    return BoundWitness(k=col.k, kind="alpha" if proper else "psi")


def relabel_colors(col: Coloring, perm: dict[int, int]) -> Coloring:
    """Apply a color permutation (dict over 1..k)."""
    return Coloring(k=col.k, assignment=[perm[c] for c in col.assignment])


def permute_lines(col: Coloring, line_perm) -> Coloring:
    """Coloring after a line relabeling: new line l gets the color of its preimage."""
    inverse = [0] * len(line_perm)
    for src, dst in enumerate(line_perm):
        inverse[dst] = src
    return Coloring(k=col.k, assignment=[col.assignment[inverse[l]] for l in range(len(line_perm))])
