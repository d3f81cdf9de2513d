"""Symmetric function engine: expansions, conversions, pairings."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratcat.partitions import conjugate, partitions_of, z_lambda
from ratcat.qt import LaurentQT
from ratcat.symfunc import (
    SymExpansion,
    basis_convert,
    cauchy_slices,
    expand_fundamental,
    h_poly,
    hall_inner,
    hook_length_dim,
    kostka,
    omega,
    p_poly,
    schur_principal_special,
    single,
    varpoly_to_m,
)


def test_fundamental_small():
    f = expand_fundamental(2, set(), 2)
    assert f.terms == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    g = expand_fundamental(2, {1}, 2)
    assert g.terms == {(1, 1): 1}
    with pytest.raises(ValueError):
        expand_fundamental(3, set(), 2)  # too few variables


def test_fundamental_no_descents_is_h():
    for n in (1, 2, 3, 4):
        assert expand_fundamental(n, set(), n).terms == h_poly(n, n).terms


def test_fundamental_squarefree_coefficient():
    for n in (2, 3, 4):
        for bits in range(1 << (n - 1)):
            S = {j for j in range(1, n) if bits >> (j - 1) & 1}
            f = expand_fundamental(n, S, n)
            assert f.coeff((1,) * n) == 1


def test_varpoly_to_m():
    assert varpoly_to_m(h_poly(2, 2), 2).as_dict() == {
        (2,): LaurentQT.const(1),
        (1, 1): LaurentQT.const(1),
    }
    assert varpoly_to_m(p_poly(2, 2), 2).as_dict() == {(2,): LaurentQT.const(1)}


def test_varpoly_to_m_rejects_asymmetric():
    from ratcat.symfunc import VarPoly

    with pytest.raises(ValueError):
        varpoly_to_m(VarPoly(2, {(2, 0): 1}), 2)


def test_kostka():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (1, 1, 1)) == 1
    assert kostka((1, 1), (2,)) == 0
    for lam in partitions_of(5):
        assert kostka(lam, lam) == 1


def test_basis_examples():
    assert basis_convert(single(2, "h", (1, 1)), "s") == (
        single(2, "s", (2,)) + single(2, "s", (1, 1))
    )
    assert basis_convert(single(2, "p", (2,)), "s") == (
        single(2, "s", (2,)) + single(2, "s", (1, 1)).scale(-1)
    )
    f = single(2, "s", (2,)).scale(2) + single(2, "s", (1, 1))
    assert basis_convert(f, "h") == single(2, "h", (2,)) + single(2, "h", (1, 1))


def test_round_trips():
    rng = random.Random(7)
    for deg in (2, 3, 4, 5, 6):
        for basis in "mhps":
            f = SymExpansion.build(
                deg, basis,
                {lam: rng.randint(-3, 3) for lam in partitions_of(deg)},
            )
            for target in "mhps":
                assert basis_convert(basis_convert(f, target), basis) == f


def test_hall_inner_dualities():
    for n in (2, 3, 4):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                s = hall_inner(single(n, "s", lam), single(n, "s", mu))
                assert s == LaurentQT.const(1 if lam == mu else 0)
                p = hall_inner(single(n, "p", lam), single(n, "p", mu))
                want = z_lambda(lam) if lam == mu else 0
                assert p == LaurentQT.const(want)
    assert hall_inner(single(2, "h", (2,)), single(2, "m", (2,))) == LaurentQT.const(1)


def test_hall_inner_degree_mismatch():
    with pytest.raises(ValueError):
        hall_inner(single(2, "m", (2,)), single(3, "m", (3,)))


def test_omega():
    for n in (2, 3, 4, 5):
        for lam in partitions_of(n):
            assert omega(single(n, "s", lam)) == single(n, "s", conjugate(lam))
    assert omega(single(3, "p", (1, 1, 1))) == single(3, "p", (1, 1, 1))


@settings(max_examples=20)
@given(st.integers(2, 5), st.data())
def test_omega_involution(deg, data):
    coeffs = {
        lam: data.draw(st.integers(-2, 2)) for lam in partitions_of(deg)
    }
    f = SymExpansion.build(deg, "s", coeffs)
    assert omega(omega(f)) == f


def test_schur_principal_special():
    assert schur_principal_special((2,), 3) == 6
    for b in (1, 2, 4):
        assert schur_principal_special((1,) * b, b) == 1
    # ell(lam) > b gives zero
    assert schur_principal_special((1, 1, 1), 2) == 0


def test_hook_length_dim():
    assert hook_length_dim((2, 2)) == 2
    assert hook_length_dim((3, 1)) == 3
    total = sum(hook_length_dim(lam) ** 2 for lam in partitions_of(5))
    assert total == 120


def test_cauchy_identity():
    for n in (1, 2, 3, 4, 5):
        hm, pp, ss = cauchy_slices(n)
        assert hm.terms == pp.terms
        assert pp.terms == ss.terms


def test_json_round_trip():
    f = single(3, "s", (2, 1), LaurentQT.q() + LaurentQT.t())
    assert SymExpansion.from_json(f.to_json()) == f
