from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cremeq.linalg import (
    determinant,
    echelon_with_transform,
    invert_unimodular,
    solve_exact,
)


def F(rows):
    return [[Fraction(v) for v in row] for row in rows]


def test_echelon_transform_reproduces_rows():
    rows = F([[2, 1, 3], [4, 2, 7], [0, 1, 1]])
    ech, T = echelon_with_transform(rows)
    for i in range(3):
        recon = [
            sum(T[i][j] * rows[j][k] for j in range(3)) for k in range(3)
        ]
        assert recon == ech[i]


def test_echelon_is_forward_only():
    # the second row keeps its dependence on the first: no back-substitution
    rows = F([[1, 1, 0], [0, 1, 5]])
    ech, T = echelon_with_transform(rows)
    assert ech[0] == [Fraction(1), Fraction(1), Fraction(0)]
    assert ech[1] == [Fraction(0), Fraction(1), Fraction(5)]
    assert T[0][0] == 1 and T[0][1] == 0


def test_echelon_empty():
    ech, T = echelon_with_transform([])
    assert ech == [] and T == []


@given(
    st.lists(
        st.lists(st.integers(-6, 6), min_size=3, max_size=3),
        min_size=1,
        max_size=4,
    )
)
def test_echelon_transform_invariant(raw):
    rows = F(raw)
    ech, T = echelon_with_transform(rows)
    m = len(rows)
    for i in range(m):
        recon = [sum(T[i][j] * rows[j][k] for j in range(m)) for k in range(3)]
        assert recon == ech[i]
    # leading entries move strictly right among the nonzero rows
    leads = []
    for row in ech:
        lead = next((j for j, v in enumerate(row) if v != 0), None)
        if lead is not None:
            leads.append(lead)
    assert leads == sorted(leads) and len(set(leads)) == len(leads)


def test_solve_exact_unique():
    status, xs = solve_exact([[2, 0], [0, 3]], [4, 9])
    assert status == "unique"
    assert xs == [Fraction(2), Fraction(3)]


def test_solve_exact_overdetermined_consistent_is_unique():
    status, xs = solve_exact([[1, 0], [0, 1], [1, 1]], [1, 2, 3])
    assert status == "unique"
    assert xs == [Fraction(1), Fraction(2)]


def test_solve_exact_inconsistent():
    status, xs = solve_exact([[1, 1], [2, 2]], [1, 3])
    assert status == "inconsistent" and xs is None


def test_solve_exact_underdetermined():
    status, xs = solve_exact([[1, 1]], [1])
    assert status == "underdetermined" and xs is None


def test_solve_exact_fractional_solution():
    status, xs = solve_exact([[2]], [1])
    assert status == "unique" and xs == [Fraction(1, 2)]


def test_determinant_values():
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([[1, 0], [0, 1]]) == 1
    assert determinant([[1, 2], [2, 4]]) == 0


def test_invert_unimodular():
    inv = invert_unimodular([[1, 1], [0, 1]])
    assert inv == [[1, -1], [0, 1]]


def test_invert_unimodular_rejects_det_2():
    with pytest.raises(ValueError, match="unimodular"):
        invert_unimodular([[2, 0], [0, 1]])


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3))
def test_determinant_matches_cofactor_expansion(m):
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    by_hand = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    assert determinant(m) == by_hand
