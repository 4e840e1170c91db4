import random
from math import comb

import pytest

from asmtspp import identity as ident
from asmtspp import partitions as pt
from asmtspp import tspp
from asmtspp.errors import DomainError, ResourceGuardError, VerificationFailure
from asmtspp.exactring import VarSet, antisymmetrize
from asmtspp.schur import factor_uwv


def test_small_routes():
    vs = ident.ring(1)
    assert ident.route_definition(1) == vs.const(1)
    vs = ident.ring(2)
    u, v, x1, x2 = vs.gens()
    for p in (ident.route_definition(2), ident.route_determinant(2),
              ident.route_tspp(2, "per_tspp"), ident.route_tspp(2, "per_lambda")):
        assert p == v + u * x1 * x2


def test_orientation_is_calibrated():
    assert ident.vandermonde_orientation() in ("ascending", "descending")
    flipped = "ascending" if ident.vandermonde_orientation() == "descending" else "descending"
    assert ident.route_determinant(2, flipped) == -ident.route_definition(2)


@pytest.mark.parametrize("n", [3, 4])
def test_routes_agree(n):
    a = ident.route_definition(n)
    assert a == ident.route_determinant(n)
    assert a == ident.route_determinant(n, method="bareiss")
    assert a == ident.route_tspp(n, "per_tspp") == ident.route_tspp(n, "per_lambda")


def test_route_guards():
    with pytest.raises(ResourceGuardError):
        ident.route_definition(8)
    with pytest.raises(DomainError):
        ident.route_definition(0)
    with pytest.raises(DomainError):
        ident.route_tspp(2, "sideways")


def test_coeff_determinant_examples():
    u, v = tspp.UV.gens()
    assert ident.coeff_determinant((), 3) == v ** 3
    assert ident.coeff_determinant((1, 0, 0), 3) == 0
    assert ident.coeff_determinant((2, 1, 1), 3) == u ** 2 * v


@pytest.mark.parametrize("n", range(1, 5))
def test_coeff_determinant_box(n):
    balanced = set(map(pt.trim, pt.enumerate_modified_balanced(n)))
    for lam in pt.partitions_in_box(n, n):
        c = ident.coeff_determinant(lam, n)
        lam = pt.trim(lam)
        if lam in balanced:
            w = tspp.omega(lam, n)
            assert factor_uwv(c) == (tspp.lgv_count(lam), w.alpha, w.beta, w.gamma)
        else:
            assert c == 0


@pytest.mark.parametrize("n", range(2, 5))
def test_recursion(n):
    seen = 0
    for lam in pt.partitions_in_box(n, n - 1):
        rhs = ident.recursion_rhs(lam, n)
        if rhs is None:
            continue
        seen += 1
        assert ident.coeff_determinant(lam, n) == rhs
    assert seen


def test_recursion_precondition():
    assert ident.recursion_rhs((2, 2, 0), 3) is None


def test_lemma_tiny():
    vs = VarSet(["c", "X"])
    c, X = vs.gens()
    r1 = ident.lemma_check(X, c, 1)
    assert r1.equal
    r2 = ident.lemma_check(X, c, 2)
    assert r2.equal
    out = VarSet(["c", "X1", "X2"])
    c, X1, X2 = out.gens()
    assert r2.lhs == (X1 - c) * (X2 - c) * (X2 - X1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lemma_pair(n):
    f, g = ident.lemma_pair()
    assert ident.lemma_check(f, g, n).equal


def test_lemma_random():
    rng = random.Random(7)
    vs = VarSet(["X"])
    X = vs.gen("X")
    for _ in range(6):
        f = sum((X ** k).scale(rng.randint(-3, 3)) for k in range(4)) + vs.zero()
        g = sum((X ** k).scale(rng.randint(-3, 3)) for k in range(4)) + vs.zero()
        for n in (2, 3):
            assert ident.lemma_check(f, g, n).equal


def test_lemma_detects_a_wrong_side():
    f, g = ident.lemma_pair()
    res = ident.lemma_check(f, g, 2)
    vs = res.rhs.varset
    assert res.rhs != antisymmetrize(vs.const(1), ["X1", "X2"])


def test_lemma_guard():
    f, g = ident.lemma_pair()
    with pytest.raises(ResourceGuardError):
        ident.lemma_check(f, g, 6)


@pytest.mark.parametrize("n", range(1, 5))
def test_verify_main(n):
    report = ident.verify_main(n)
    assert report.passed, report.failures
    assert sum(row["lgv"] for row in report.expansion) == [1, 2, 5, 16][n - 1]
    for row in report.expansion:
        assert row["factored"]["unit"] == row["lgv"]
        f = row["factored"]
        assert f["alpha"] + f["beta"] + f["gamma"] == comb(n, 2)


def test_theorem_convention_fails_at_three():
    report = ident.verify_main(3, convention="theorem")
    assert not report.passed
    assert report.failures[0]["monomial"]
    with pytest.raises(VerificationFailure):
        report.raise_for_failure()


def test_theorem_convention_only_agrees_at_one():
    assert ident.verify_main(1, convention="theorem").passed
    assert not ident.verify_main(2, convention="theorem").passed


@pytest.mark.parametrize("n", range(1, 5))
def test_verify_refined(n):
    report = ident.verify_refined(n)
    assert report.passed, report.failures
    assert report.refined["total"] == [1, 2, 7, 42][n - 1]
    assert report.refined["two_enumeration"] == 2 ** comb(n, 2)


def test_report_json_is_stable():
    a = ident.verify_main(3).to_json()
    b = ident.verify_main(3, threads=2).to_json()
    assert a == b
    assert set(a) >= {"n", "routes", "equal", "expansion", "refined", "omega_convention"}
    assert all(r["millis"] is None for r in a["routes"].values())


def test_first_difference():
    vs = VarSet(["a"])
    a = vs.gen("a")
    assert ident.first_difference(a, a) is None
    d = ident.first_difference(a ** 2 + a, a)
    assert d == {"monomial": {"a": 2}, "left": 1, "right": 0}
