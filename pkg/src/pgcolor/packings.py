"""Line packings: exact-cover backtracking for PG(3,q) packings containing a
prescribed spread, the exhaustive PG(3,2) spread census used as a test
oracle, and the per-carrier packing structure of PG(5,q).

The search replaces the classical algebraic packing construction: the
prescribed spread is pre-placed, then the remaining lines are partitioned
into spreads by depth-first search.  Each new spread is rooted at the
smallest unassigned line; inside a spread the branch point is the uncovered
point with the fewest compatible lines, ties broken by smallest id.  All
orders are fixed, so identical inputs and budgets yield identical packings.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import BudgetExhausted, NotDim3, NotRegular, StructureInvalid, UnsupportedSize
from .geometry import SpaceModel, Subspace, build_space, gaussian_coeff, sub_model
from .spreads import (
    QuotientGeometry,
    Spread,
    geometric_spread,
    is_regular_spread,
    is_spread,
    line_spread_from_ids,
    quotient_geometry,
)

DEFAULT_BUDGET = 50_000_000


@dataclass
class Packing:
    """A partition of the full line set into line spreads."""

    spreads: list[Spread]
    line_to_spread: list[int]


@dataclass
class PackingCheck:
    ok: bool
    violation: str | None = None


def is_packing(space: SpaceModel, spreads) -> PackingCheck:
    """Are these spreads, and do they cover every line exactly once?"""
    for idx, sp in enumerate(spreads):
        check = is_spread(space.v, sp.members)
        if not check.ok:
            return PackingCheck(False, f"element {idx} is not a spread: {check.violation}")
    seen: dict[int, int] = {}
    for idx, sp in enumerate(spreads):
        for l in sp.line_ids:
            if l in seen:
                return PackingCheck(
                    False, f"line {l} covered by spreads {seen[l]} and {idx}"
                )
            seen[l] = idx
    if len(seen) != space.num_lines:
        missing = next(l for l in range(space.num_lines) if l not in seen)
        return PackingCheck(False, f"line {missing} not covered")
    return PackingCheck(True)


class _SpreadPartitioner:
    """DFS over partitions of the available lines of PG(3,q) into spreads."""

    def __init__(self, space: SpaceModel, budget: int):
        self.space = space
        self.masks = space.line_mask
        self.lines_at = space.point_to_lines
        self.full = (1 << space.v) - 1
        self.budget = budget
        self.nodes = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(nodes=self.nodes)

    def _spreads_through(self, root: int, avail: int):
        """Yield every spread of available lines containing the root line."""
        masks = self.masks
        lines_at = self.lines_at
        v = self.space.v
        full = self.full
        spread = [root]

        def extend(covered: int):
            self._tick()
            if covered == full:
                yield tuple(spread)
                return
            best_cands = None
            for p in range(v):
                if covered >> p & 1:
                    continue
                cands = [
                    l
                    for l in lines_at[p]
                    if avail >> l & 1 and not masks[l] & covered
                ]
                if best_cands is None or len(cands) < len(best_cands):
                    best_cands = cands
                    if not cands:
                        return
                    if len(cands) == 1:
                        break
            for l in best_cands:
                spread.append(l)
                yield from extend(covered | masks[l])
                spread.pop()

        yield from extend(masks[root])

    def partition(self, avail: int, remaining: int):
        """First partition of the available lines into the given spread count."""
        self._tick()
        if remaining == 0:
            return [] if avail == 0 else None
        root = (avail & -avail).bit_length() - 1
        for spread in self._spreads_through(root, avail & ~(1 << root)):
            used = 0
            for l in spread:
                used |= 1 << l
            rest = self.partition(avail & ~used, remaining - 1)
            if rest is not None:
                return [spread] + rest
        return None


def packing_containing_spread(
    space: SpaceModel,
    sp: Spread,
    budget: int = DEFAULT_BUDGET,
    skip_regularity_check: bool = False,
) -> Packing:
    """A packing of PG(3,q) whose first spread is the prescribed regular one.

    Deterministic given the line ordering; raises BudgetExhausted when the
    node limit runs out (inconclusive, not a disproof).
    """
    if space.n != 3:
        raise NotDim3(f"packings are searched in PG(3,q), got n={space.n}")
    if not skip_regularity_check and not is_regular_spread(space, sp):
        raise NotRegular("prescribed spread is not regular")

    total = gaussian_coeff(3, 1, space.q)
    avail = (1 << space.num_lines) - 1
    for l in sp.line_ids:
        avail &= ~(1 << l)

    searcher = _SpreadPartitioner(space, budget)
    rest = searcher.partition(avail, total - 1)
    if rest is None:
        raise StructureInvalid("no packing extends the prescribed spread")

    spreads = [line_spread_from_ids(space, sorted(sp.line_ids))]
    spreads += [line_spread_from_ids(space, list(ids)) for ids in rest]
    line_to_spread = [0] * space.num_lines
    for idx, s in enumerate(spreads):
        for l in s.line_ids:
            line_to_spread[l] = idx
    check = is_packing(space, spreads)
    assert check.ok, check.violation
    return Packing(spreads=spreads, line_to_spread=line_to_spread)


def enumerate_spreads(space: SpaceModel) -> list[tuple[int, ...]]:
    """Every line spread of PG(3,2), by plain backtracking over point cover.

    Kept independent of the packing search so it can serve as an oracle.
    """
    if space.n != 3 or space.q != 2:
        raise UnsupportedSize("exhaustive spread census is supported for PG(3,2) only")
    masks = space.line_mask
    full = (1 << space.v) - 1
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def rec(covered: int) -> None:
        if covered == full:
            out.append(tuple(chosen))
            return
        p = ((~covered) & -(~covered)).bit_length() - 1
        for l in space.point_to_lines[p]:
            if not masks[l] & covered:
                chosen.append(l)
                rec(covered | masks[l])
                chosen.pop()

    rec(0)
    return out


# ---------------------------------------------------------------------------
# The PG(5,q) packing structure: one packing per large line, built around the
# induced regular spreads of a geometric line spread.
# ---------------------------------------------------------------------------

@dataclass
class CarrierPacking:
    """A large line's carrier with its packing; spread 0 is the induced one."""

    carrier: Subspace
    member_indices: tuple[int, ...]
    spreads: list[list[int]]  # global line ids, spread 0 = induced spread


@dataclass
class PackingStructure5:
    """Geometric line spread of PG(5,q) plus a packing of every carrier.

    Every line of the space appears exactly once in the base spread together
    with the non-induced spreads of the carrier packings.
    """

    base_spread: Spread
    quotient: QuotientGeometry
    carriers: list[CarrierPacking]


_WORKER_SPACE: dict[int, SpaceModel] = {}


def _local_packing_task(args):
    q, prescribed, budget = args
    if q not in _WORKER_SPACE:
        _WORKER_SPACE[q] = build_space(3, q)
    local = _WORKER_SPACE[q]
    sp = line_spread_from_ids(local, list(prescribed))
    packing = packing_containing_spread(local, sp, budget=budget, skip_regularity_check=True)
    return prescribed, [tuple(s.line_ids) for s in packing.spreads]


def build_packing_structure5(
    space: SpaceModel, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> PackingStructure5:
    """Build the per-carrier packing structure of PG(5,q)."""
    if space.n != 5:
        raise ValueError(f"packing structure needs PG(5,q), got n={space.n}")
    base = geometric_spread(space, 1)
    quo = quotient_geometry(space, base)
    local_template = build_space(3, space.q)

    prescriptions = []
    carrier_maps = []
    for bl in quo.big_lines:
        _, g2lp, _, g2ll, l2gl = sub_model(space, bl.carrier, local=local_template)
        local_ids = tuple(sorted(g2ll[base.line_ids[mi]] for mi in bl.member_indices))
        prescriptions.append(local_ids)
        carrier_maps.append(l2gl)
        local_sp = line_spread_from_ids(local_template, list(local_ids))
        if not is_regular_spread(local_template, local_sp):
            raise NotRegular("induced spread of a carrier is not regular")

    cache: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    todo = sorted(set(prescriptions) - set(cache))
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            args = [(space.q, pres, budget) for pres in todo]
            for pres, local_spreads in pool.map(_local_packing_task, args):
                cache[pres] = local_spreads
    else:
        for pres in todo:
            _, local_spreads = _local_packing_task((space.q, pres, budget))
            cache[pres] = local_spreads

    carriers: list[CarrierPacking] = []
    for bl, pres, l2gl in zip(quo.big_lines, prescriptions, carrier_maps):
        local_spreads = cache[pres]
        assert local_spreads[0] == pres
        global_spreads = [sorted(l2gl[l] for l in s) for s in local_spreads]
        carriers.append(
            CarrierPacking(
                carrier=bl.carrier,
                member_indices=bl.member_indices,
                spreads=global_spreads,
            )
        )

    structure = PackingStructure5(base_spread=base, quotient=quo, carriers=carriers)
    verify_structure5(space, structure)
    return structure


def verify_structure5(space: SpaceModel, structure: PackingStructure5) -> None:
    """Exact-once cover: base spread plus all non-induced carrier spreads."""
    count = [0] * space.num_lines
    for l in structure.base_spread.line_ids:
        count[l] += 1
    for cp in structure.carriers:
        for s in cp.spreads[1:]:
            for l in s:
                count[l] += 1
    bad = [l for l, c in enumerate(count) if c != 1]
    if bad:
        raise StructureInvalid(
            f"{len(bad)} lines not covered exactly once (first: {bad[0]}, count {count[bad[0]]})"
        )
    expected_spreads = gaussian_coeff(3, 1, space.q)
    for cp in structure.carriers:
        if len(cp.spreads) != expected_spreads:
            raise StructureInvalid("carrier packing has the wrong spread count")
