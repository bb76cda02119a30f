import math
from collections import Counter

import pytest

from pgcolor.bounds import (
    alpha_lower_value,
    bounds_row,
    bounds_table,
    check_lower_bound_inequality,
    counting_incidence_check,
    point_count,
    psi_upper_details,
    psi_upper_value,
    shape_index,
)
from pgcolor.coloring import is_complete, is_proper
from pgcolor.construction import lower_bound_coloring
from pgcolor.errors import ShapeError, StructureInvalid


def test_coloring_pg52(pg52, coloring52):
    assert coloring52.k == 127 == (2**7 - 1) // (2 - 1)
    assert is_proper(pg52, coloring52).proper
    assert is_complete(pg52, coloring52, want_witnesses=False).complete


def test_coloring_pg52_class_shapes(coloring52):
    # (q^2+q)*(q^4+q^2+1) classes of one carrier spread each, plus the base
    hist = Counter(len(c) for c in coloring52.color_classes())
    assert hist == {5: 126, 21: 1}
    assert 126 == (2**2 + 2) * (2**4 + 2**2 + 1)


def test_coloring_pg52_naive_completeness_route(pg52, coloring52):
    from oracles import naive_complete

    assert naive_complete(
        pg52.v, pg52.point_to_lines, coloring52.assignment, coloring52.k
    )


def test_coloring_classes_are_partial_spreads(pg52, coloring52):
    for cls in coloring52.color_classes():
        for i in range(len(cls)):
            for j in range(i + 1, len(cls)):
                assert not pg52.line_mask[cls[i]] & pg52.line_mask[cls[j]]


@pytest.mark.slow
def test_coloring_pg53():
    from pgcolor.coloring import completeness_via_bigline_owners
    from pgcolor.construction import carrier_color_sets
    from pgcolor.geometry import build_space
    from pgcolor.packings import build_packing_structure5

    space = build_space(5, 3)
    structure = build_packing_structure5(space)
    col = lower_bound_coloring(space, structure)
    assert col.k == 1093 == (3**7 - 1) // (3 - 1)
    assert space.num_lines == 11011
    assert is_proper(space, col).proper
    assert is_complete(space, col, want_witnesses=False).complete
    hist = Counter(len(c) for c in col.color_classes())
    assert hist == {10: 1092, 91: 1}
    sets = carrier_color_sets(space, structure, col)
    assert completeness_via_bigline_owners(space, col, structure.quotient, sets)


def test_structure_mismatch_rejected(pg32, structure52):
    with pytest.raises(StructureInvalid):
        lower_bound_coloring(pg32, structure52)


def test_shape_index():
    assert shape_index(5) == 1
    assert shape_index(11) == 2
    assert shape_index(23) == 3
    for bad in (2, 3, 4, 6, 7, 10, 12):
        with pytest.raises(ShapeError):
            shape_index(bad)


def test_alpha_lower_values():
    assert alpha_lower_value(5, 2) == 127
    assert alpha_lower_value(5, 3) == 1093
    assert alpha_lower_value(11, 2) == 2**15 - 1 == 32767
    with pytest.raises(ShapeError):
        alpha_lower_value(7, 2)


def test_color_count_identity():
    # (s-r)N + r = (q^(n+t+1)-1)/(q-1) at n=5, t=1 in exact integers
    for q in (2, 3, 4, 5):
        s_minus_r = q * (q + 1)
        N = q**4 + q**2 + 1
        assert s_minus_r * N + 1 == (q**7 - 1) // (q - 1) == alpha_lower_value(5, q)


def test_psi_upper_values():
    assert psi_upper_value(3, 2) == 27
    assert psi_upper_value(2, 2) == 7  # exact on the Fano plane
    assert psi_upper_value(5, 2) == 246
    assert psi_upper_value(2, 3) == 14
    with pytest.raises(ValueError):
        psi_upper_value(1, 2)


def test_psi_upper_never_rounds_up():
    for n in range(2, 8):
        for q in (2, 3, 4, 5):
            v = point_count(n, q)
            value = psi_upper_value(n, q)
            # value <= sqrt(v)*(v-1)/q < value+1, checked in exact integers
            assert value**2 * q**2 <= v * (v - 1) ** 2
            assert (value + 1) ** 2 * q**2 > v * (v - 1) ** 2


def test_psi_upper_quadratic_root():
    det = psi_upper_details(3, 2)
    v, r = 15, 7
    assert det.quadratic_root == (1 + math.sqrt(1 + 4 * v * r * (r - 1))) / 2
    assert det.quadratic_root <= math.sqrt(v) * r + 1e-9


def test_counting_incidence_check():
    assert counting_incidence_check(3, 2, 19)   # 315 >= 171: cannot exclude 19
    assert not counting_incidence_check(3, 2, 28)  # 315 < 378
    assert counting_incidence_check(2, 2, 7)    # 21 >= 21, tight
    with pytest.raises(ValueError):
        counting_incidence_check(3, 2, 0)


def test_lower_bound_inequality():
    assert check_lower_bound_inequality(5, 2)
    assert check_lower_bound_inequality(5, 3)
    assert check_lower_bound_inequality(5, 5)
    assert check_lower_bound_inequality(11, 2)
    with pytest.raises(ShapeError):
        check_lower_bound_inequality(6, 2)


def test_lower_bound_inequality_values():
    # c_5 * v^h / q at (5,2): about 62.6, well under 127
    h = 7 / 5
    c5 = 2.0**-h
    assert abs(c5 - 0.379) < 1e-3
    bound = c5 * 63**h / 2
    assert 62 < bound < 63
    assert bound <= alpha_lower_value(5, 2)
    bound3 = c5 * 364**h / 3
    assert bound3 <= alpha_lower_value(5, 3)


def test_bounds_rows():
    row52 = bounds_row(5, 2)
    assert row52.v == 63 and row52.r == 31
    assert row52.lower_alpha == 127 and row52.upper_psi == 246
    assert row52.chromatic_upper == 63
    assert abs(row52.h - 1.4) < 1e-12

    row32 = bounds_row(3, 2)
    assert row32.lower_alpha is None and row32.upper_psi == 27

    row23 = bounds_row(2, 3)
    assert row23.upper_psi == 14 and row23.plane_exact == 13


def test_bounds_table_monotone_sanity():
    for row in bounds_table(range(2, 8), (2, 3, 4, 5)):
        assert row.chromatic_upper <= row.upper_psi
        assert row.r * row.q == row.v - 1
        if row.lower_alpha is not None:
            assert row.lower_alpha <= row.upper_psi
