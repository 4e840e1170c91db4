import pytest
from hypothesis import given, strategies as st

from asmtspp import partitions as pt
from asmtspp.errors import DomainError, ResourceGuardError
from asmtspp.exactring import VarSet
from asmtspp.identity import ring, route_definition
from asmtspp.schur import (
    generalized_bialternant,
    schur,
    schur_expand,
    schur_generalized,
    ssyt,
    ssyt_oracle,
)

X3 = VarSet(["x1", "x2", "x3"])


def test_schur_examples():
    x1, x2, x3 = X3.gens()
    assert schur((1, 1), 3) == x1 * x2 + x1 * x3 + x2 * x3
    assert schur((2, 2, 2), 3) == (x1 * x2 * x3) ** 2
    assert schur((2, 1, 1), 3) == ssyt_oracle((2, 1, 1), 3)
    assert len(list(ssyt((2, 1, 1), 3))) == 3
    with pytest.raises(DomainError):
        schur((1, 1, 1, 1), 3)


def test_ssyt_oracle_examples():
    x1, x2, x3 = X3.gens()
    x12 = VarSet(["x1", "x2"])
    assert ssyt_oracle((1,), 2) == x12.gen("x1") + x12.gen("x2")
    assert ssyt_oracle((2, 1, 1, 1), 3).is_zero()
    assert ssyt_oracle((1, 1), 3) == x1 * x2 + x1 * x3 + x2 * x3
    assert len(list(ssyt((1, 1), 3))) == 3
    with pytest.raises(ResourceGuardError):
        ssyt_oracle((7, 6), 3)


@pytest.mark.parametrize("n", range(1, 5))
def test_bialternant_equals_tableaux(n):
    for lam in pt.partitions_in_box(3, 3):
        lam = pt.trim(lam)
        if len(lam) > n:
            assert ssyt_oracle(lam, n).is_zero()
            continue
        assert schur(lam, n) == ssyt_oracle(lam, n), lam


def test_schur_generalized_examples():
    assert schur_generalized((0, 2), 2) == (-1, (1, 1))
    assert schur_generalized((1, 2), 2) == (0, None)
    assert schur_generalized((2, 1, 0), 3) == (1, (2, 1))


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.integers(0, 4), min_size=n, max_size=n)))
def test_straightening_matches_bialternant(L):
    n = len(L)
    sign, lam = schur_generalized(L, n)
    direct = generalized_bialternant(L, n)
    if sign == 0:
        assert direct.is_zero()
    else:
        assert direct == schur(lam, n).scale(sign)


def test_schur_expand_examples():
    r2 = ring(2)
    u, v, x1, x2 = r2.gens()
    exp = schur_expand(v + u * x1 * x2)
    uv = VarSet(["u", "v"])
    assert exp.coefficients == {(): uv.gen("v"), (1, 1): uv.gen("u")}
    x12 = VarSet(["x1", "x2"])
    assert {k: c.render() for k, c in schur_expand(schur((2, 1), 2, x12)).coefficients.items()} == {(2, 1): "1"}
    with pytest.raises(DomainError):
        schur_expand(r2.gen("x1"))


def test_schur_expand_n3_display():
    exp = schur_expand(route_definition(3))
    uv = VarSet(["u", "v"])
    u, v = uv.gens()
    assert exp.coefficients == {
        (): v ** 3,
        (1, 1): u * v ** 2,
        (1, 1, 1): u * (1 - u - v) * v,
        (2, 1, 1): u ** 2 * v,
        (2, 2, 2): u ** 3,
    }
    assert exp.factored((1, 1, 1)) == (1, 1, 1, 1)
    assert exp.reconstruct(ring(3)) == route_definition(3)


@given(st.dictionaries(
    st.sampled_from([pt.trim(lam) for lam in pt.partitions_in_box(3, 3)]),
    st.integers(-5, 5).filter(bool),
    max_size=5,
))
def test_schur_expand_roundtrip(coeffs):
    vs = VarSet(["x1", "x2", "x3"])
    p = vs.zero()
    for lam, c in coeffs.items():
        p = p + schur(lam, 3).scale(c)
    exp = schur_expand(p, vs.names)
    assert {lam: c.constant_value() for lam, c in exp.coefficients.items()} == coeffs
