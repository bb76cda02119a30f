"""t-spreads of PG(n,q): field-reduction construction, reguli, regularity,
geometric spreads, induced spreads and the quotient geometry of large
points and large lines.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

from .errors import DivisibilityError, NotDim3, NotGeometric, NotInduced, NotSkew
from .fields import ext_field
from .geometry import SpaceModel, Subspace, gaussian_coeff, span, sub_model

REGULARITY_SAMPLE = 1000
REGULARITY_SEED = 20240  # fixed seed for sampled triple checks above q=3


@dataclass
class Spread:
    """A partition of the point set into t-subspaces.

    ``line_ids`` is filled for line spreads whose members are lines of the
    ambient model.  ``reduction_coords`` records, for spreads built by field
    reduction, the GF(q^(t+1)) coordinate vector of the large point each
    member came from.
    """

    t: int
    members: list[Subspace]
    member_of: dict[int, int]
    line_ids: list[int] | None = None
    reduction_coords: list[tuple[int, ...]] | None = None

    def __len__(self) -> int:
        return len(self.members)


@dataclass
class SpreadCheck:
    ok: bool
    violation: str | None = None


def is_spread(space_points: int, members) -> SpreadCheck:
    """Do the subspaces partition a point set of the given size?

    Reports the first violation found scanning points in id order.
    """
    dims = {m.dim for m in members}
    if len(dims) > 1:
        return SpreadCheck(False, f"members have mixed dimensions {sorted(dims)}")
    owner = {}
    for idx, m in enumerate(members):
        for p in m.point_ids:
            if p in owner:
                return SpreadCheck(
                    False, f"point {p} covered by members {owner[p]} and {idx}"
                )
            owner[p] = idx
    if len(owner) != space_points:
        missing = next(p for p in range(space_points) if p not in owner)
        return SpreadCheck(False, f"point {missing} not covered")
    return SpreadCheck(True)


def geometric_spread(space: SpaceModel, t: int) -> Spread:
    """The field-reduction t-spread of PG(n,q).

    Points of PG(s, q^(t+1)) with s = (n+1)/(t+1) - 1 expand to the members:
    each large point is the set of GF(q)-points obtained by expanding its
    scalar multiples through the extension coordinate map.
    """
    n, q = space.n, space.q
    m = t + 1
    if (n + 1) % m:
        raise DivisibilityError(f"t+1={m} does not divide n+1={n + 1}")
    s = (n + 1) // m - 1
    ext = ext_field(space.field, m)
    F = ext.field

    big_points: list[tuple[int, ...]] = []
    for pivot in range(s + 1):
        head = (0,) * pivot + (1,)
        for tail in product(range(F.q), repeat=s - pivot):
            big_points.append(head + tail)
    big_points.sort()

    members: list[Subspace] = []
    member_of: dict[int, int] = {}
    line_ids: list[int] | None = [] if t == 1 else None
    for w in big_points:
        vectors = []
        for lam in range(1, F.q):
            scaled = tuple(F.mul(lam, wi) for wi in w)
            expanded = []
            for wi in scaled:
                expanded.extend(ext.coords(wi))
            vectors.append(tuple(expanded))
        member = space.make_subspace(vectors)
        assert member.dim == t
        idx = len(members)
        members.append(member)
        for p in member.point_ids:
            member_of[p] = idx
        if line_ids is not None:
            line_ids.append(space.line_id(member.point_ids[0], member.point_ids[1]))

    expected = (q ** (n + 1) - 1) // (q ** m - 1)
    assert len(members) == expected
    check = is_spread(space.v, members)
    assert check.ok, check.violation
    return Spread(
        t=t,
        members=members,
        member_of=member_of,
        line_ids=line_ids,
        reduction_coords=big_points,
    )


def line_spread_from_ids(space: SpaceModel, line_ids) -> Spread:
    """Wrap existing model lines as a (claimed) line spread; validated by caller."""
    members = [space.lines[l] for l in line_ids]
    member_of = {}
    for idx, mem in enumerate(members):
        for p in mem.point_ids:
            member_of[p] = idx
    return Spread(t=1, members=members, member_of=member_of, line_ids=list(line_ids))


def regulus(space: SpaceModel, l1: int, l2: int, l3: int) -> tuple[int, ...]:
    """The unique regulus of PG(3,q) through three pairwise skew lines.

    Computed by double transversal search: collect all lines meeting the
    three inputs, then all lines meeting every one of those transversals.
    """
    if space.n != 3:
        raise NotDim3(f"regulus needs PG(3,q), got n={space.n}")
    masks = space.line_mask
    trio = (l1, l2, l3)
    for a, b in combinations(trio, 2):
        if a == b or masks[a] & masks[b]:
            raise NotSkew(f"lines {a} and {b} are not skew")
    transversals = [
        l
        for l in range(space.num_lines)
        if masks[l] & masks[l1] and masks[l] & masks[l2] and masks[l] & masks[l3]
    ]
    assert len(transversals) == space.q + 1
    out = [
        l
        for l in range(space.num_lines)
        if all(masks[l] & masks[tr] for tr in transversals)
    ]
    assert len(out) == space.q + 1
    assert set(trio) <= set(out)
    return tuple(out)


def opposite_regulus(space: SpaceModel, reg) -> tuple[int, ...]:
    """The transversal family of a regulus (covers the same q+1 squared points)."""
    masks = space.line_mask
    out = [
        l for l in range(space.num_lines) if all(masks[l] & masks[r] for r in reg)
    ]
    assert len(out) == space.q + 1
    return tuple(out)


def is_regular_spread(space: SpaceModel, sp: Spread) -> bool:
    """Is the line spread of PG(3,q) closed under reguli of member triples?

    Exhaustive over all triples for q <= 3; a fixed-seed sample of
    REGULARITY_SAMPLE triples beyond that.
    """
    if space.n != 3:
        raise NotDim3(f"regular spreads live in PG(3,q), got n={space.n}")
    if sp.t != 1:
        return False
    ids = sp.line_ids or [space.line_id_of_subspace(m) for m in sp.members]
    id_set = set(ids)
    triples = list(combinations(sorted(ids), 3))
    if space.q > 3 and len(triples) > REGULARITY_SAMPLE:
        rng = random.Random(REGULARITY_SEED)
        triples = rng.sample(triples, REGULARITY_SAMPLE)
    for trio in triples:
        if not set(regulus(space, *trio)) <= id_set:
            return False
    return True


def is_geometric_spread(space: SpaceModel, sp: Spread) -> bool:
    """Does the spread induce a spread in the span of any two members?

    Walks every unordered pair of members once; pairs already known to lie in
    a common span are skipped, so only one span per large line is computed.
    """
    members = sp.members
    n_mem = len(members)
    done: set[tuple[int, int]] = set()
    for i in range(n_mem):
        for j in range(i + 1, n_mem):
            if (i, j) in done:
                continue
            carrier = span(space, members[i], members[j])
            carrier_pts = set(carrier.point_ids)
            inside = []
            for k, mem in enumerate(members):
                hit = sum(1 for p in mem.point_ids if p in carrier_pts)
                if hit == len(mem.point_ids):
                    inside.append(k)
                elif hit:
                    return False
            for a, b in combinations(inside, 2):
                done.add((a, b))
    return True


def induced_spread(space: SpaceModel, sp: Spread, carrier: Subspace) -> Spread:
    """Members of the spread contained in the carrier, as a spread of it."""
    carrier_pts = set(carrier.point_ids)
    members = []
    for mem in sp.members:
        hit = sum(1 for p in mem.point_ids if p in carrier_pts)
        if hit == len(mem.point_ids):
            members.append(mem)
        elif hit:
            raise NotInduced("a member meets the carrier partially")
    covered = set()
    for mem in members:
        covered.update(mem.point_ids)
    if covered != carrier_pts:
        raise NotInduced("contained members do not cover the carrier")
    member_of = {}
    line_ids: list[int] | None = [] if sp.t == 1 else None
    for idx, mem in enumerate(members):
        for p in mem.point_ids:
            member_of[p] = idx
        if line_ids is not None:
            line_ids.append(space.line_id(mem.point_ids[0], mem.point_ids[1]))
    return Spread(t=sp.t, members=members, member_of=member_of, line_ids=line_ids)


@dataclass
class BigLine:
    """A large line of the quotient geometry: member indices plus the carrier."""

    member_indices: tuple[int, ...]
    carrier: Subspace


@dataclass
class QuotientGeometry:
    """Large points and large lines of a geometric t-spread.

    For a geometric spread these satisfy the axioms of PG(s, q^(t+1)) where
    s = (n+1)/(t+1) - 1.  ``iso_coords`` maps large points to coordinate
    vectors over GF(q^(t+1)) when the spread came from field reduction.
    """

    s: int
    order: int
    big_points: tuple[int, ...]
    big_lines: list[BigLine]
    point_big_lines: list[tuple[int, ...]]
    iso_coords: list[tuple[int, ...]] | None = None


def quotient_geometry(space: SpaceModel, sp: Spread) -> QuotientGeometry:
    """Build the quotient geometry, verifying the geometric property on the way."""
    n, q = space.n, space.q
    m = sp.t + 1
    s = (n + 1) // m - 1
    order = q**m
    members = sp.members
    n_mem = len(members)

    big_lines: list[BigLine] = []
    pair_line: dict[tuple[int, int], int] = {}
    for i in range(n_mem):
        for j in range(i + 1, n_mem):
            if (i, j) in pair_line:
                continue
            carrier = span(space, members[i], members[j])
            carrier_pts = set(carrier.point_ids)
            inside = []
            for k, mem in enumerate(members):
                hit = sum(1 for p in mem.point_ids if p in carrier_pts)
                if hit == len(mem.point_ids):
                    inside.append(k)
                elif hit:
                    raise NotGeometric(
                        f"member {k} meets the span of members ({i},{j}) partially"
                    )
            bl = len(big_lines)
            big_lines.append(BigLine(member_indices=tuple(inside), carrier=carrier))
            for a, b in combinations(inside, 2):
                pair_line[(a, b)] = bl

    assert len(big_lines) == gaussian_coeff(s + 1, 2, order)
    per_line = gaussian_coeff(2, 1, order)
    for bl in big_lines:
        assert len(bl.member_indices) == per_line

    p2l: list[list[int]] = [[] for _ in range(n_mem)]
    for idx, bl in enumerate(big_lines):
        for mi in bl.member_indices:
            p2l[mi].append(idx)

    return QuotientGeometry(
        s=s,
        order=order,
        big_points=tuple(range(n_mem)),
        big_lines=big_lines,
        point_big_lines=[tuple(x) for x in p2l],
        iso_coords=sp.reduction_coords,
    )


def induced_local_spread(space: SpaceModel, sp: Spread, carrier: Subspace):
    """Induced line spread of a carrier, mapped into a fresh PG(3,q) model.

    Returns (local model, maps, local spread line ids sorted, global line ids
    in the same order).
    """
    ind = induced_spread(space, sp, carrier)
    local, g2lp, l2gp, g2ll, l2gl = sub_model(space, carrier)
    local_ids = sorted(g2ll[g] for g in ind.line_ids)
    global_ids = [l2gl[l] for l in local_ids]
    return local, g2ll, l2gl, local_ids, global_ids
