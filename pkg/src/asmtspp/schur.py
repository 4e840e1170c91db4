"""Schur polynomials: bialternant formula, straightening, tableau oracle, expansion."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from . import partitions as parts_mod
from .errors import DomainError, ResourceGuardError, StructuralError
from .exactring import (
    PolyMatrix,
    Polynomial,
    VarSet,
    determinant,
    divide_by_vandermonde,
    embed,
    exact_divide,
    extract_coefficients,
    permutation_sign,
    substitute,
)

SSYT_MAX_SIZE = 12
SSYT_MAX_VARS = 5


def xnames(n: int, prefix: str = "x") -> list[str]:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def bialternant_matrix(exponents: Sequence[int], varset: VarSet, names: Sequence[str]) -> PolyMatrix:
    """Matrix (x_i ** exponents[j])."""
    return PolyMatrix(varset, [[varset.monomial({x: e}) for e in exponents] for x in names])


@lru_cache(maxsize=None)
def _schur_cached(lam: tuple[int, ...], n: int) -> Polynomial:
    names = xnames(n)
    vs = VarSet(names)
    lam_p = parts_mod.pad(lam, n)
    exps = [lam_p[j] + n - 1 - j for j in range(n)]
    alt = determinant(bialternant_matrix(exps, vs, names), method="cofactor")
    return divide_by_vandermonde(alt, names, descending=True)


def schur(lam: Sequence[int], n: int, varset: VarSet | None = None) -> Polynomial:
    """s_lambda(x1..xn) as the bialternant quotient det(x_i^(lam_j+n-j)) / prod_{i<j}(x_i - x_j)."""
    lam = parts_mod.check_partition(lam)
    if len(lam) > n:
        raise DomainError(f"partition {lam} has more than {n} parts")
    p = _schur_cached(lam, n)
    return p if varset is None else embed(p, varset)


def schur_generalized(L: Sequence[int], n: int) -> tuple[int, tuple[int, ...] | None]:
    """Straighten s_L for an arbitrary non-negative sequence L of length n.

    Returns ``(0, None)`` when two shifted exponents collide, otherwise
    ``(sign, lambda)`` with s_L = sign * s_lambda.
    """
    L = tuple(L)
    if len(L) != n:
        raise StructuralError(f"sequence {L} must have length {n}")
    exps = [L[j] + n - 1 - j for j in range(n)]
    sign = permutation_sign([-e for e in exps])
    if not sign:
        return 0, None
    srt = sorted(exps, reverse=True)
    lam = tuple(srt[k] - (n - 1 - k) for k in range(n))
    return sign, parts_mod.trim(lam)


def generalized_bialternant(L: Sequence[int], n: int) -> Polynomial:
    """det(x_i^(L_j+n-j)) / prod_{i<j}(x_i - x_j) computed directly, without straightening."""
    names = xnames(n)
    vs = VarSet(names)
    exps = [L[j] + n - 1 - j for j in range(n)]
    alt = determinant(bialternant_matrix(exps, vs, names), method="cofactor")
    return divide_by_vandermonde(alt, names, descending=True)


def ssyt(lam: Sequence[int], n: int):
    """Yield semistandard tableaux of shape lam with entries in 1..n, as tuples of rows."""
    lam = parts_mod.trim(lam)
    cells = [(r, c) for r, row in enumerate(lam) for c in range(row)]
    filling: dict[tuple[int, int], int] = {}

    def rec(idx):
        if idx == len(cells):
            yield tuple(tuple(filling[(r, c)] for c in range(row)) for r, row in enumerate(lam))
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for val in range(lo, n + 1):
            filling[(r, c)] = val
            yield from rec(idx + 1)
        filling.pop((r, c), None)

    yield from rec(0)


def ssyt_oracle(lam: Sequence[int], n: int, varset: VarSet | None = None) -> Polynomial:
    """Schur polynomial as the content generating function of semistandard tableaux."""
    lam = parts_mod.check_partition(lam)
    if sum(lam) > SSYT_MAX_SIZE or n > SSYT_MAX_VARS:
        raise ResourceGuardError(f"tableau oracle limited to |lambda| <= {SSYT_MAX_SIZE}, n <= {SSYT_MAX_VARS}")
    names = xnames(n)
    vs = VarSet(names)
    counts: dict[tuple[int, ...], int] = {}
    for t in ssyt(lam, n):
        content = [0] * n
        for row in t:
            for val in row:
                content[val - 1] += 1
        key = tuple(content)
        counts[key] = counts.get(key, 0) + 1
    p = vs.from_dict(counts)
    return p if varset is None else embed(p, varset)


# ----------------------------------------------------------------------------
# expansion into Schur polynomials


@dataclass
class SchurExpansion:
    """Coefficients c_lambda with p = sum_lambda c_lambda * s_lambda(x1..xn)."""

    n: int
    coefficients: dict[tuple[int, ...], Polynomial] = field(default_factory=dict)

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, lam):
        return self.coefficients[parts_mod.trim(lam)]

    def get(self, lam, default=None):
        return self.coefficients.get(parts_mod.trim(lam), default)

    def partitions(self) -> list[tuple[int, ...]]:
        return sorted(self.coefficients, key=lambda lam: parts_mod.pad(lam, self.n))

    def reconstruct(self, varset: VarSet) -> Polynomial:
        total = varset.zero()
        for lam, c in self.coefficients.items():
            total = total + embed(c, varset) * schur(lam, self.n, varset)
        return total

    def factored(self, lam) -> tuple[int, int, int, int] | None:
        return factor_uwv(self[lam])

    def to_json(self) -> list[dict]:
        out = []
        for lam in self.partitions():
            c = self.coefficients[lam]
            fac = factor_uwv(c)
            out.append({
                "partition": list(parts_mod.pad(lam, self.n)),
                "frobenius": str(parts_mod.to_frobenius(lam)),
                "coefficient": c.render(),
                "factored": None if fac is None else dict(zip(("unit", "alpha", "beta", "gamma"), fac)),
            })
        return out


def is_symmetric(p: Polynomial, names: Sequence[str]) -> bool:
    for a, b in zip(names, names[1:]):
        swapped = substitute(p, {a: p.varset.gen(b), b: p.varset.gen(a)}, p.varset)
        if swapped != p:
            return False
    return True


def schur_expand(p: Polynomial, names: Sequence[str] | None = None) -> SchurExpansion:
    """Peel off graded-lex leading monomials until nothing is left.

    ``names`` are the symmetric variables (default: every variable of the
    form x1, x2, ... present in the VarSet); all other variables end up in
    the coefficients.
    """
    if names is None:
        names = [v for v in p.varset.names if v.startswith("x") and v[1:].isdigit()]
    names = list(names)
    n = len(names)
    if not is_symmetric(p, names):
        raise DomainError("polynomial is not symmetric in " + ",".join(names))
    table = extract_coefficients(p, names)
    rest_vs = next(iter(table.values())).varset if table else VarSet(
        [v for v in p.varset.names if v not in set(names)])
    result: dict[tuple[int, ...], Polynomial] = {}
    while table:
        lead = max(table, key=lambda e: (sum(e), e))
        if any(a < b for a, b in zip(lead, lead[1:])):
            raise RuntimeError(f"leading exponent {lead} not weakly decreasing; input is not symmetric")
        c = table[lead]
        lam = parts_mod.trim(lead)
        result[lam] = c
        for exps, k in schur(lam, n).as_dict().items():
            cur = table.get(exps)
            new = (cur if cur is not None else rest_vs.zero()) - c.scale(k)
            if new:
                table[exps] = new
            else:
                table.pop(exps, None)
    return SchurExpansion(n, result)


def factor_uwv(c: Polynomial, u: str = "u", v: str = "v") -> tuple[int, int, int, int] | None:
    """Write c as unit * u^alpha * (1-u-v)^beta * v^gamma, or return None."""
    if c.is_zero():
        return None
    vs = c.varset
    if not {u, v} <= set(vs.names) or c.variables() - {u, v}:
        return None
    iu, iv = vs.index(u), vs.index(v)
    terms = c.terms()
    alpha = min(e[iu] for e, _ in terms)
    gamma = min(e[iv] for e, _ in terms)
    rest = exact_divide(c, vs.monomial({u: alpha, v: gamma}))
    beta = rest.degree()
    unit = rest.coefficient([0] * len(vs))
    w = 1 - vs.gen(u) - vs.gen(v)
    if unit == 0 or rest != (w ** beta).scale(unit):
        return None
    return unit, alpha, beta, gamma
