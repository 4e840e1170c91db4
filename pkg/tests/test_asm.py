import itertools
from math import comb

import pytest

from asmtspp import asm
from asmtspp.errors import DomainError, ResourceGuardError

PAPER_EXAMPLE = ((0, 1, 0, 0), (1, -1, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0))


def brute_force_asms(n):
    out = []
    for flat in itertools.product((-1, 0, 1), repeat=n * n):
        a = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
        if asm.is_asm(a):
            out.append(a)
    return out


def test_enumerate_examples():
    assert list(asm.enumerate_asms(1)) == [((1,),)]
    assert len(list(asm.enumerate_asms(3))) == 7
    assert len(list(asm.enumerate_asms(4))) == 42
    with pytest.raises(ResourceGuardError):
        list(asm.enumerate_asms(8))
    with pytest.raises(DomainError):
        list(asm.enumerate_asms(0))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumerate_matches_filter(n):
    # product over {-1,0,1} in that order is already lexicographic
    assert list(asm.enumerate_asms(n)) == brute_force_asms(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_is_valid_sorted_and_counted(n):
    mats = list(asm.enumerate_asms(n))
    assert all(asm.is_asm(a) for a in mats)
    flat = [sum(a, ()) for a in mats]
    assert flat == sorted(flat) and len(set(flat)) == len(flat)
    assert len(mats) == asm.product_formula(n)


def test_product_formula_values():
    assert [asm.product_formula(n) for n in range(1, 8)] == [1, 2, 7, 42, 429, 7436, 218348]


def test_stats_examples():
    assert asm.stats(PAPER_EXAMPLE) == asm.AsmStats(1, 3, 2, 2)
    for n in range(1, 6):
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        assert asm.stats(ident) == asm.AsmStats(0, 0, comb(n, 2), 1)
    anti = ((0, 0, 1), (0, 1, 0), (1, 0, 0))
    assert asm.stats(anti) == asm.AsmStats(0, 3, 0, 3)


@pytest.mark.parametrize("n", range(1, 6))
def test_stats_invariants(n):
    for a in asm.enumerate_asms(n):
        s = asm.stats(a)
        assert s == asm.stats_dense(a)
        assert s.minus_count + s.inv + s.inv_c == comb(n, 2)


def test_generating_polynomial_examples():
    assert asm.generating_polynomial(1) == 1
    u, v, z = asm.UVZ.gens()
    assert asm.generating_polynomial(2) == v + u * z
    g3 = asm.generating_polynomial(3)
    from asmtspp.exactring import substitute, VarSet
    assert substitute(g3, {"u": 1, "v": 1, "z": 1}, VarSet([])) == 7
    assert g3.coefficient({"u": 1, "v": 1, "z": 1}) == 1


def test_t_reindex_examples():
    u, v, z = asm.UVZ.gens()
    t, zz = asm.TZ.gens()
    assert asm.t_reindex(v + u * z, 2) == 1 + zz
    r3 = asm.t_reindex(asm.generating_polynomial(3), 3)
    assert r3.coefficient({"t": 1, "z": 1}) == 1
    r4 = asm.t_reindex(asm.generating_polynomial(4), 4)
    assert sum(c for _, c in r4.terms()) == 42
    with pytest.raises(DomainError):
        asm.t_reindex(u ** 2, 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_t_reindex_matches_brute_force(n):
    r = asm.t_reindex(asm.generating_polynomial(n), n)
    binned = asm.minus_top_counts(n)
    assert {(m, c + 1): k for (m, c), k in r.as_dict().items()} == dict(binned)
    assert sum(binned.values()) == asm.product_formula(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_two_enumeration(n):
    assert asm.t_enumeration(n, 2) == 2 ** comb(n, 2)


def test_csv_rows_aggregate():
    rows = asm.csv_rows(3)
    assert sum(r[-1] for r in rows) == 7
    assert all(r[0] == 3 for r in rows)
