"""Four routes to A_n(u, v; x) and the checks that tie them together."""

from __future__ import annotations

import hashlib
import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Sequence

from . import asm as asm_mod
from . import partitions as pt
from . import tspp as tspp_mod
from .errors import DomainError, ResourceGuardError, VerificationFailure
from .exactring import (
    PolyMatrix,
    Polynomial,
    VarSet,
    antisymmetrize,
    determinant,
    divide_by_vandermonde,
    embed,
    substitute,
)
from .schur import factor_uwv, schur, schur_expand, xnames

DEFINITION_MAX_N = 7
LEMMA_MAX_N = 5
ROUTES = ("definition", "determinant", "tspp_per_tspp", "tspp_per_lambda")


@lru_cache(maxsize=None)
def ring(n: int) -> VarSet:
    """u, v, x1..xn"""
    return VarSet(["u", "v", *xnames(n)])


def _check_n(n: int, limit: int, extended: bool, what: str):
    if n < 1:
        raise DomainError("n must be a positive integer")
    if n > limit and not extended:
        raise ResourceGuardError(f"{what} limited to n <= {limit}; pass extended=True to override")


def numerator(n: int) -> Polynomial:
    """prod_i x_i^(i-1) * prod_{i<j} (v + (1-u-v) x_i + u x_i x_j)"""
    vs = ring(n)
    u, v = vs.gen("u"), vs.gen("v")
    xs = vs.gens(*xnames(n))
    f = vs.const(1)
    for i, x in enumerate(xs):
        f = f * x ** i
    for i, j in itertools.combinations(range(n), 2):
        f = f * (v + (1 - u - v) * xs[i] + u * xs[i] * xs[j])
    return f


def route_definition(n: int, extended: bool = False) -> Polynomial:
    """Antisymmetrize the numerator and divide exactly by prod_{i<j} (x_j - x_i)."""
    _check_n(n, DEFINITION_MAX_N, extended, "definition route")
    names = xnames(n)
    return divide_by_vandermonde(antisymmetrize(numerator(n), names), names, descending=False)


def p_poly(j: int, vs: VarSet, x: str) -> Polynomial:
    """p_j(x) = sum_{k<j} x^k (-1 + u + v - u x)^k v^(j-1-k)"""
    u, v, X = vs.gen("u"), vs.gen("v"), vs.gen(x)
    inner = -1 + u + v - u * X
    total = vs.zero()
    for k in range(j):
        total = total + X ** k * inner ** k * v ** (j - 1 - k)
    return total


def determinant_matrix(n: int) -> PolyMatrix:
    """(x_i^(n-j) p_j(x_i)) for 1 <= i, j <= n."""
    vs = ring(n)
    names = xnames(n)
    return PolyMatrix(vs, [[vs.gen(x) ** (n - j) * p_poly(j, vs, x) for j in range(1, n + 1)] for x in names])


@lru_cache(maxsize=None)
def vandermonde_orientation() -> str:
    """Pick the Vandermonde orientation for the determinant route from the n = 2 case.

    Returns ``"descending"`` for prod_{i<j} (x_i - x_j) or ``"ascending"`` for
    prod_{i<j} (x_j - x_i), whichever reproduces the definition route at n = 2.
    """
    det = determinant(determinant_matrix(2))
    target = route_definition(2)
    names = xnames(2)
    for orientation in ("descending", "ascending"):
        q = divide_by_vandermonde(det, names, descending=orientation == "descending")
        if q == target:
            return orientation
    raise VerificationFailure("neither Vandermonde orientation reproduces A_2")


def route_determinant(n: int, orientation: str | None = None, method: str = "cofactor") -> Polynomial:
    """det(x_i^(n-j) p_j(x_i)) divided by the Vandermonde product.

    Row i involves only x_i, so the memoized cofactor expansion multiplies
    polynomials in disjoint variables and beats fraction-free elimination here.
    """
    _check_n(n, DEFINITION_MAX_N, True, "determinant route")
    orientation = orientation or vandermonde_orientation()
    det = determinant(determinant_matrix(n), method=method)
    return divide_by_vandermonde(det, xnames(n), descending=orientation == "descending")


def route_tspp(n: int, mode: str = "per_tspp", convention: str = "section4", extended: bool = False) -> Polynomial:
    """sum over TSPPs T in the (n-1)-box of omega_{pi(T)} s_{pi(T)}(x).

    ``per_lambda`` groups the sum by partition, using the LGV count as the
    multiplicity, and never enumerates a TSPP.
    """
    if n < 1:
        raise DomainError("n must be a positive integer")
    vs = ring(n)
    terms: dict[tuple[int, ...], Polynomial] = {}

    def term(lam):
        if lam not in terms:
            w = tspp_mod.omega(lam, n, convention).polynomial
            terms[lam] = embed(w, vs) * schur(lam, n, vs)
        return terms[lam]

    total = vs.zero()
    if mode == "per_tspp":
        for t in tspp_mod.enumerate_tspps(n - 1, extended):
            total = total + term(pt.trim(tspp_mod.pi(t, n)))
    elif mode == "per_lambda":
        for lam in pt.enumerate_modified_balanced(n):
            mult = tspp_mod.lgv_count(lam)
            if mult:
                total = total + term(lam).scale(mult)
    else:
        raise DomainError(f"unknown mode {mode!r}")
    return total


# ----------------------------------------------------------------------------
# coefficients via the m_{i,j} determinant


def m_entry(part: int, i: int, j: int) -> Polynomial:
    """m_{i,j}(part) for 1-based i, j."""
    vs = tspp_mod.UV
    u, v = vs.gens()
    w = 1 - u - v
    total = vs.zero()
    for k in range(j):
        low = part + j - i - k
        if low < 0 or low > k:
            continue
        total = total + (u ** low * w ** (k - low) * v ** (j - 1 - k)).scale((-1) ** k * comb(k, low))
    return total


@lru_cache(maxsize=None)
def _coeff_cached(lam: tuple[int, ...], n: int) -> Polynomial:
    rows = [[m_entry(lam[i - 1], i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return determinant(PolyMatrix(tspp_mod.UV, rows, n_cols=n))


def coeff_determinant(lam: Sequence[int], n: int) -> Polynomial:
    """Coefficient of s_lambda in A_n as det(m_{i,j}(lambda_i)), a polynomial in u, v.

    Any partition with at most n parts is accepted; outside the modified
    balanced ones the value is 0.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    return _coeff_cached(pt.pad(lam, n), n)


def recursion_rhs(lam: Sequence[int], n: int) -> Polynomial | None:
    """Right-hand side of the first-column recursion for c_lambda at size n.

    sum over f in {0,1}^l of u^|f| (1-u-v)^(l-|f|) v^(n-1-l) c_mu at size n-1,
    mu = (lam_1 - f_1, ..., lam_l - f_l, lam_{l+2}, ..., lam_n); terms whose mu
    is not a partition vanish.  Returns None unless lam_{l+1} = l.
    """
    lam = pt.pad(lam, n)
    l = pt.durfee(lam)
    if l >= n or lam[l] != l:
        return None
    vs = tspp_mod.UV
    u, v = vs.gens()
    w = 1 - u - v
    total = vs.zero()
    for f in itertools.product((0, 1), repeat=l):
        mu = tuple(lam[i] - f[i] for i in range(l)) + lam[l + 1:]
        if not pt.is_partition(mu):
            continue
        k = sum(f)
        total = total + u ** k * w ** (l - k) * v ** (n - 1 - l) * coeff_determinant(mu, n - 1)
    return total


# ----------------------------------------------------------------------------
# antisymmetrizer-to-determinant lemma


@dataclass
class LemmaResult:
    n: int
    equal: bool
    lhs: Polynomial
    rhs: Polynomial


def lemma_check(f: Polynomial, g: Polynomial, n: int, var: str = "X", extended: bool = False) -> LemmaResult:
    """Compare det(f(X_i)^j - g(X_i)^j) with asym[prod_{i<=j} (f(X_j) - g(X_i))].

    ``f`` and ``g`` are polynomials in ``var`` (other variables act as coefficients).
    """
    _check_n(n, LEMMA_MAX_N, extended, "lemma check")
    if f.varset != g.varset:
        raise DomainError("f and g must share a VarSet")
    coeff_names = [name for name in f.varset.names if name != var]
    names = [f"{var}{i}" for i in range(1, n + 1)]
    vs = VarSet([*coeff_names, *names])
    fs = [substitute(f, {var: vs.gen(x)}, vs) for x in names]
    gs = [substitute(g, {var: vs.gen(x)}, vs) for x in names]
    # row i only involves X_i, so cofactor expansion wins over elimination (see route_determinant)
    lhs = determinant(PolyMatrix(vs, [[fs[i] ** j - gs[i] ** j for j in range(1, n + 1)] for i in range(n)]),
                      method="cofactor")
    prod = vs.const(1)
    for i in range(n):
        for j in range(i, n):
            prod = prod * (fs[j] - gs[i])
    rhs = antisymmetrize(prod, names)
    return LemmaResult(n, lhs == rhs, lhs, rhs)


def lemma_pair() -> tuple[Polynomial, Polynomial]:
    """f(X) = uX and g(X) = -(1-u-v) - vX."""
    vs = VarSet(["u", "v", "X"])
    u, v, X = vs.gens()
    return u * X, -(1 - u - v) - v * X


# ----------------------------------------------------------------------------
# verification


def poly_hash(p: Polynomial) -> str:
    return hashlib.sha256(p.render().encode()).hexdigest()


def first_difference(p: Polynomial, q: Polynomial) -> dict | None:
    diff = p - q
    if diff.is_zero():
        return None
    exps, _ = diff.leading_term()
    mono = {name: e for name, e in zip(p.varset.names, exps) if e}
    return {"monomial": mono, "left": p.coefficient(exps), "right": q.coefficient(exps)}


@dataclass
class RouteResult:
    name: str
    polynomial: Polynomial
    millis: float

    @property
    def hash(self) -> str:
        return poly_hash(self.polynomial)


@dataclass
class VerificationReport:
    n: int
    kind: str = "main"
    routes: dict[str, RouteResult] = field(default_factory=dict)
    equalities: dict[str, bool] = field(default_factory=dict)
    expansion: list[dict] = field(default_factory=list)
    refined: dict = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    omega_convention: str = "section4"
    vandermonde: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures and all(self.equalities.values())

    def to_json(self, timings: bool = False) -> dict:
        return {
            "n": self.n,
            "kind": self.kind,
            "routes": {
                name: {"hash": r.hash, "millis": round(r.millis, 3) if timings else None}
                for name, r in self.routes.items()
            },
            "equal": all(self.equalities.values()),
            "equalities": self.equalities,
            "expansion": self.expansion,
            "refined": self.refined,
            "failures": self.failures,
            "omega_convention": self.omega_convention,
            "vandermonde": self.vandermonde,
            "pass": self.passed,
        }

    def raise_for_failure(self):
        if not self.passed:
            raise VerificationFailure(f"n={self.n}: {self.failures[:1]}")


def _run_route(args) -> tuple[str, Polynomial, float]:
    name, n, convention, extended = args
    start = time.perf_counter()
    if name == "definition":
        p = route_definition(n, extended)
    elif name == "determinant":
        p = route_determinant(n)
    elif name == "tspp_per_tspp":
        p = route_tspp(n, "per_tspp", convention, extended)
    elif name == "tspp_per_lambda":
        p = route_tspp(n, "per_lambda", convention, extended)
    else:
        raise DomainError(f"unknown route {name!r}")
    return name, p, (time.perf_counter() - start) * 1000


def compute_routes(n: int, names: Sequence[str] = ROUTES, convention: str = "section4",
                   extended: bool = False, threads: int = 1) -> dict[str, RouteResult]:
    """Evaluate the requested routes; with threads > 1 they run in worker processes."""
    for name in names:
        if name not in ROUTES:
            raise DomainError(f"unknown route {name!r}; choose from {', '.join(ROUTES)}")
    jobs = [(name, n, convention, extended) for name in names]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as pool:
            results = list(pool.map(_run_route, jobs))
    else:
        results = [_run_route(job) for job in jobs]
    return {name: RouteResult(name, p, ms) for name, p, ms in results}


def verify_main(n: int, convention: str = "section4", extended: bool = False,
                routes: Sequence[str] = ROUTES, threads: int = 1) -> VerificationReport:
    """Check that all routes agree and that the Schur expansion has the predicted coefficients."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    report = VerificationReport(n, "main", omega_convention=convention, vandermonde=vandermonde_orientation())
    report.routes = compute_routes(n, routes, convention, extended, threads)
    names = list(report.routes)
    base = report.routes[names[0]].polynomial
    for other in names[1:]:
        key = f"{names[0]}={other}"
        q = report.routes[other].polynomial
        report.equalities[key] = base == q
        diff = first_difference(base, q)
        if diff is not None:
            report.failures.append({"check": key, **diff})

    expansion = schur_expand(base, xnames(n))
    support = set(expansion.coefficients)
    predicted = {lam for lam in pt.enumerate_modified_balanced(n) if tspp_mod.lgv_count(lam)}
    report.equalities["support=modified_balanced"] = support == predicted
    if support != predicted:
        report.failures.append({
            "check": "support",
            "missing": [list(lam) for lam in sorted(predicted - support)],
            "extra": [list(lam) for lam in sorted(support - predicted)],
        })
    rows = []
    for lam in sorted(support | predicted, key=lambda lam: pt.pad(lam, n)):
        c = expansion.get(lam, tspp_mod.UV.zero())
        c = embed(c, tspp_mod.UV) if c else tspp_mod.UV.zero()
        cdet = coeff_determinant(lam, n)
        mult = tspp_mod.lgv_count(lam) if pt.is_modified_balanced(lam, n) else 0
        fac = factor_uwv(c)
        ok = c == cdet
        if not ok:
            report.failures.append({"check": "coeff_determinant", "partition": list(lam),
                                    "expansion": c.render(), "determinant": cdet.render()})
        if mult:
            om = tspp_mod.omega(lam, n, convention)
            expected = (mult, om.alpha, om.beta, om.gamma)
            if fac != expected:
                report.failures.append({"check": "factored_weight", "partition": list(lam),
                                        "found": fac, "expected": expected})
        rows.append({
            "partition": list(pt.pad(lam, n)),
            "frobenius": str(pt.to_frobenius(lam)),
            "coefficient": c.render(),
            "factored": None if fac is None else dict(zip(("unit", "alpha", "beta", "gamma"), fac)),
            "lgv": mult,
            "coeff_determinant_match": ok,
        })
    report.expansion = rows
    return report


def specialize_top_row(p: Polynomial, n: int) -> Polynomial:
    """A_n(u, v; z, 1, ..., 1) as a polynomial in u, v, z."""
    target = asm_mod.UVZ
    assignment: dict[str, Polynomial | int] = {"x1": target.gen("z")}
    for name in xnames(n)[1:]:
        assignment[name] = 1
    return substitute(p, assignment, target)


def verify_refined(n: int, extended: bool = False, polynomial: Polynomial | None = None) -> VerificationReport:
    """Compare A_n(u, v; z, 1, ..., 1) with the brute-force ASM statistics."""
    report = VerificationReport(n, "refined", vandermonde=vandermonde_orientation())
    start = time.perf_counter()
    p = polynomial if polynomial is not None else route_definition(n, extended)
    report.routes["definition"] = RouteResult("definition", p, (time.perf_counter() - start) * 1000)

    special = specialize_top_row(p, n)
    table = asm_mod.stats_table(n, extended)
    gen = asm_mod.generating_polynomial(n, table=table)
    report.equalities["uvz_table"] = special == gen
    diff = first_difference(special, gen)
    if diff is not None:
        mono = diff["monomial"]
        report.failures.append({"check": "uvz_table", "a": mono.get("u", 0), "b": mono.get("v", 0),
                                "i": mono.get("z", 0) + 1, "polynomial": diff["left"], "asms": diff["right"]})

    tz = asm_mod.t_reindex(special, n)
    binned = asm_mod.minus_top_counts(n, table=table)
    tz_table = {(m, c + 1): k for (m, c), k in tz.as_dict().items()}
    report.equalities["t_table"] = tz_table == dict(binned)
    if tz_table != dict(binned):
        bad = sorted(set(tz_table) ^ set(binned) | {k for k in tz_table if tz_table.get(k) != binned.get(k)})
        report.failures.append({"check": "t_table", "minus_count_top_col": list(bad[0])})

    total = sum(table.values())
    two_enum = sum(c * 2 ** s.minus_count for s, c in table.items())
    report.equalities["total=product_formula"] = total == asm_mod.product_formula(n)
    report.equalities["two_enumeration"] = two_enum == 2 ** comb(n, 2)
    report.refined = {
        "total": total,
        "product_formula": asm_mod.product_formula(n),
        "two_enumeration": two_enum,
        "uvz_terms": [
            {"a": e[0], "b": e[1], "i": e[2] + 1, "count": c} for e, c in sorted(special.as_dict().items())
        ],
        "minus_top": [
            {"minus_count": m, "top_col": i, "count": c} for (m, i), c in sorted(binned.items())
        ],
    }
    return report
