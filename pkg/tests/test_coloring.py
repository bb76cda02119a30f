import random

import pytest

from pgcolor.coloring import (
    Coloring,
    completeness_via_bigline_owners,
    is_complete,
    is_proper,
    max_colors_lower_certificate,
    owner_colors,
    relabel_colors,
    validate_coloring,
)
from pgcolor.construction import carrier_color_sets
from pgcolor.errors import NotComplete, OwnerClaimFalse
from pgcolor.pg32 import all_null_polarities, conjugate_coloring

from oracles import naive_complete

SEED = 20240


def one_color(space):
    return Coloring(k=1, assignment=[1] * space.num_lines)


def all_distinct(space):
    return Coloring(k=space.num_lines, assignment=list(range(1, space.num_lines + 1)))


def test_validate(pg32):
    validate_coloring(pg32, one_color(pg32))
    with pytest.raises(ValueError):
        validate_coloring(pg32, Coloring(k=2, assignment=[1] * 35))  # color 2 unused
    with pytest.raises(ValueError):
        validate_coloring(pg32, Coloring(k=1, assignment=[1] * 34))


def test_owner_colors(pg32, frame32, coloring18):
    assert owner_colors(pg32, one_color(pg32), 0) == {1}
    distinct = all_distinct(pg32)
    for p in range(pg32.v):
        owned = owner_colors(pg32, distinct, p)
        assert owned == {l + 1 for l in pg32.point_to_lines[p]}
        assert len(owned) == 7
    # in the 18-class coloring, D owns exactly the colors of classes 5 and 6
    assert owner_colors(pg32, coloring18, frame32.point("D")) == {5, 6}


def test_is_proper(pg32, pg52, coloring52):
    assert is_proper(pg32, all_distinct(pg32)).proper
    rep = is_proper(pg32, one_color(pg32))
    assert not rep.proper
    assert rep.violation_count > 0 and rep.violations
    l1, l2, p = rep.violations[0]
    assert pg32.line_mask[l1] & pg32.line_mask[l2] & (1 << p)
    # the constructed PG(5,2) coloring is proper
    assert is_proper(pg52, coloring52).proper


def test_proper_iff_classes_partial_spreads(pg32, coloring18):
    rep = is_proper(pg32, coloring18)
    assert not rep.proper  # class 5 (AA'D, OED) shares the point D
    five = [l for l, c in enumerate(coloring18.assignment) if c == 5]
    assert pg32.line_mask[five[0]] & pg32.line_mask[five[1]]


def test_is_complete(pg22, pg32, pg52, coloring52, coloring18):
    # singleton colors on PG(3,2) are not complete: skew pairs exist
    rep = is_complete(pg32, all_distinct(pg32))
    assert not rep.complete
    c1, c2 = rep.missing_pairs[0]
    assert not pg32.line_mask[c1 - 1] & pg32.line_mask[c2 - 1]
    # a plane has no skew lines: one color per line is complete
    assert is_complete(pg22, all_distinct(pg22)).complete
    assert is_complete(pg32, coloring18).complete
    assert is_complete(pg52, coloring52).complete


def test_complete_witnesses(pg32, coloring18):
    rep = is_complete(pg32, coloring18)
    assert len(rep.pair_witness) == 18 * 17 // 2
    assignment = coloring18.assignment
    for (c1, c2), p in rep.pair_witness.items():
        owned = {assignment[l] for l in pg32.point_to_lines[p]}
        assert c1 in owned and c2 in owned


def test_complete_matches_naive_reference(pg32):
    # 100 random colorings with a fixed seed against the pairwise reference
    rng = random.Random(SEED)
    for _ in range(100):
        k = rng.randint(2, 20)
        assignment = [rng.randint(1, k) for _ in range(pg32.num_lines)]
        used = sorted(set(assignment))
        relabel = {c: i + 1 for i, c in enumerate(used)}
        col = Coloring(k=len(used), assignment=[relabel[c] for c in assignment])
        fast = is_complete(pg32, col).complete
        slow = naive_complete(pg32.v, pg32.point_to_lines, col.assignment, col.k)
        assert fast == slow


def test_owner_pairset_equivalence(pg32, coloring18):
    # completeness equals covering all pairs by per-point owner sets
    from itertools import combinations

    pairs = set()
    for p in range(pg32.v):
        owned = sorted(owner_colors(pg32, coloring18, p))
        pairs.update(combinations(owned, 2))
    assert len(pairs) == 18 * 17 // 2
    assert is_complete(pg32, coloring18).complete


def test_relabeling_preserves_verdicts(pg32, coloring18):
    rng = random.Random(SEED + 1)
    perm = list(range(1, 19))
    rng.shuffle(perm)
    mapping = {c: perm[c - 1] for c in range(1, 19)}
    relabeled = relabel_colors(coloring18, mapping)
    assert is_complete(pg32, relabeled).complete == is_complete(pg32, coloring18).complete
    assert is_proper(pg32, relabeled).proper == is_proper(pg32, coloring18).proper


def test_conjugation_preserves_completeness(pg32, coloring18):
    pol = all_null_polarities(pg32)[0]
    conj = conjugate_coloring(coloring18, pol)
    assert is_complete(pg32, conj).complete
    # applying the polarity twice gives a collineation; verdicts persist
    twice = conjugate_coloring(conj, pol)
    assert is_complete(pg32, twice).complete
    # a constant coloring stays constant
    const = conjugate_coloring(one_color(pg32), pol)
    assert const.assignment == [1] * 35


def test_bigline_owner_route(pg52, structure52, coloring52):
    sets = carrier_color_sets(pg52, structure52, coloring52)
    assert completeness_via_bigline_owners(pg52, coloring52, structure52.quotient, sets)
    # the union covers all colors, so this certifies completeness
    assert set().union(*sets) == set(range(1, coloring52.k + 1))
    # a claimed set with an absent color must fail the owner check
    bad = [set(s) for s in sets]
    bad[0] = bad[0] | {coloring52.k + 1}
    broken = Coloring(k=coloring52.k + 1, assignment=list(coloring52.assignment))
    with pytest.raises(OwnerClaimFalse):
        completeness_via_bigline_owners(pg52, broken, structure52.quotient, bad)


def test_bigline_owner_disjoint_sets_cover_via_shared_member(pg52, structure52, coloring52):
    # two carriers with disjoint claimed color sets are still covered because
    # the claimed pairs meet at the shared spread member
    quo = structure52.quotient
    sets = carrier_color_sets(pg52, structure52, coloring52)
    only = [set() for _ in sets]
    # colors private to carrier 0 and to carrier 1 (drop everything shared)
    only[0] = sets[0] - sets[1]
    only[1] = sets[1] - sets[0]
    assert only[0] and only[1]
    assert completeness_via_bigline_owners(pg52, coloring52, quo, only)
    shared = set(quo.big_lines[0].member_indices) & set(quo.big_lines[1].member_indices)
    assert len(shared) == 1


def test_max_colors_lower_certificate(pg32, pg52, coloring18, coloring52):
    w18 = max_colors_lower_certificate(pg32, coloring18)
    assert w18.k == 18 and w18.kind == "psi"  # complete but not proper
    w127 = max_colors_lower_certificate(pg52, coloring52)
    assert w127.k == 127 and w127.kind == "alpha"
    w1 = max_colors_lower_certificate(pg32, one_color(pg32))
    assert w1.k == 1 and w1.kind == "psi"
    with pytest.raises(NotComplete):
        max_colors_lower_certificate(pg32, all_distinct(pg32))


def test_reports_cap_listed_violations(pg52):
    rep = is_proper(pg52, one_color(pg52))
    assert len(rep.violations) == 100  # listing capped
    assert rep.violation_count > 100   # but the count is exact
    distinct = all_distinct(pg52)
    crep = is_complete(pg52, distinct, want_witnesses=False)
    assert len(crep.missing_pairs) == 100
    assert crep.missing_count > 100


def test_min_proper_plane_colorings_are_complete(pg22, pg23):
    # a proper coloring of a plane with chi' = v colors (one per line, since
    # all lines pairwise meet) is complete
    for plane in (pg22, pg23):
        col = all_distinct(plane)
        assert is_proper(plane, col).proper
        assert is_complete(plane, col).complete
