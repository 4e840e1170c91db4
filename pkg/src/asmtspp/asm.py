"""Exhaustive enumeration of alternating sign matrices and their inversion statistics."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, NamedTuple

from .errors import DomainError, ResourceGuardError
from .exactring import Polynomial, VarSet

MAX_N = 7

Asm = tuple[tuple[int, ...], ...]

UVZ = VarSet(["u", "v", "z"])
TZ = VarSet(["t", "z"])


class AsmStats(NamedTuple):
    minus_count: int
    inv: int
    inv_c: int
    top_col: int


def product_formula(n: int) -> int:
    """prod_{i=0}^{n-1} (3i+1)! / (n+i)!"""
    num = 1
    den = 1
    for i in range(n):
        num *= factorial(3 * i + 1)
        den *= factorial(n + i)
    return num // den


def is_asm(a) -> bool:
    n = len(a)
    if any(len(row) != n for row in a):
        return False
    lines = [list(row) for row in a] + [[a[i][j] for i in range(n)] for j in range(n)]
    for line in lines:
        if any(x not in (-1, 0, 1) for x in line):
            return False
        nz = [x for x in line if x]
        if sum(nz) != 1 or nz[0] != 1:
            return False
        if any(x == y for x, y in zip(nz, nz[1:])):
            return False
    return True


@lru_cache(maxsize=None)
def _rows_for(colsums: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Admissible next rows for the given column partial sums, in lexicographic order.

    Each entry is (row, new column sums).  A +1 may only sit over a partial
    sum of 0 and a -1 over a partial sum of 1; along the row non-zero
    entries alternate starting and ending with +1.
    """
    n = len(colsums)
    out = []

    def rec(j, expect, row):
        if j == n:
            if expect == -1:
                out.append((tuple(row), tuple(c + r for c, r in zip(colsums, row))))
            return
        if expect == -1 and colsums[j] == 1:
            row.append(-1)
            rec(j + 1, 1, row)
            row.pop()
        row.append(0)
        rec(j + 1, expect, row)
        row.pop()
        if expect == 1 and colsums[j] == 0:
            row.append(1)
            rec(j + 1, -1, row)
            row.pop()

    rec(0, 1, [])
    return tuple(out)


def enumerate_asms(n: int, extended: bool = False) -> Iterator[Asm]:
    """All n x n ASMs in row-major lexicographic order of the flattened entries."""
    if n < 1:
        raise DomainError("ASM size must be at least 1")
    if n > MAX_N and not extended:
        raise ResourceGuardError(f"ASM enumeration limited to n <= {MAX_N}; pass extended=True to override")

    def rec(colsums, rows):
        if len(rows) == n:
            yield tuple(rows)
            return
        for row, nxt in _rows_for(colsums):
            rows.append(row)
            yield from rec(nxt, rows)
            rows.pop()

    # after k rows the partial column sums are 0/1 with k ones, so every prefix extends
    yield from rec((0,) * n, [])


def stats(a: Asm) -> AsmStats:
    """(number of -1s, inv, inv', top-row column) by the defining double sums.

    inv  = sum over i' < i, j' <= j of a[i'][j] * a[i][j']
    inv' = sum over i' < i, j <= j' of a[i'][j] * a[i][j']
    Terms with a zero factor vanish, so only non-zero entries are visited.
    """
    n = len(a)
    nz = [(i, j, x) for i, row in enumerate(a) for j, x in enumerate(row) if x]
    inv = inv_c = 0
    for i1, j1, x1 in nz:
        for i2, j2, x2 in nz:
            if i1 < i2:
                if j2 <= j1:
                    inv += x1 * x2
                if j1 <= j2:
                    inv_c += x1 * x2
    minus = sum(1 for _, _, x in nz if x < 0)
    top = a[0].index(1) + 1
    if minus + inv + inv_c != comb(n, 2):
        raise AssertionError(f"statistics {(minus, inv, inv_c)} do not sum to C({n},2)")
    return AsmStats(minus, inv, inv_c, top)


def stats_dense(a: Asm) -> AsmStats:
    """Same statistics by looping over every index quadruple (slow reference)."""
    n = len(a)
    inv = inv_c = 0
    for ip in range(n):
        for i in range(ip + 1, n):
            for j in range(n):
                for jp in range(n):
                    prod = a[ip][j] * a[i][jp]
                    if jp <= j:
                        inv += prod
                    if j <= jp:
                        inv_c += prod
    minus = sum(row.count(-1) for row in a)
    return AsmStats(minus, inv, inv_c, a[0].index(1) + 1)


def stats_table(n: int, extended: bool = False) -> Counter:
    """Counter over AsmStats for all n x n ASMs."""
    return Counter(stats(a) for a in enumerate_asms(n, extended))


def generating_polynomial(n: int, extended: bool = False, table: Counter | None = None) -> Polynomial:
    """sum over ASMs of u^inv v^inv' z^(top_col - 1)."""
    table = table if table is not None else stats_table(n, extended)
    counts: Counter = Counter()
    for s, c in table.items():
        counts[(s.inv, s.inv_c, s.top_col - 1)] += c
    return UVZ.from_dict(counts)


def t_reindex(p: Polynomial, n: int) -> Polynomial:
    """Map u^a v^b z^c to t^(C(n,2)-a-b) z^c, i.e. t^C(n,2) * p(1/t, 1/t; z)."""
    if p.varset != UVZ:
        p = _as_uvz(p)
    top = comb(n, 2)
    counts: Counter = Counter()
    for (a, b, c), coeff in p.terms():
        if a + b > top:
            raise DomainError(f"monomial u^{a} v^{b} has degree above C({n},2)={top}")
        counts[(top - a - b, c)] += coeff
    return TZ.from_dict(counts)


def _as_uvz(p: Polynomial) -> Polynomial:
    extra = set(p.variables()) - {"u", "v", "z"}
    if extra:
        raise DomainError(f"expected a polynomial in u, v, z; found {sorted(extra)}")
    idx = [p.varset.index(name) if name in p.varset else None for name in ("u", "v", "z")]
    return UVZ.from_dict({tuple(e[i] if i is not None else 0 for i in idx): c for e, c in p.terms()})


def minus_top_counts(n: int, extended: bool = False, table: Counter | None = None) -> Counter:
    """ASM counts keyed by (minus_count, top_col)."""
    table = table if table is not None else stats_table(n, extended)
    out: Counter = Counter()
    for s, c in table.items():
        out[(s.minus_count, s.top_col)] += c
    return out


def t_enumeration(n: int, t: int, extended: bool = False) -> int:
    """sum over ASMs of t^(number of -1 entries)."""
    return sum(c * t ** s.minus_count for s, c in stats_table(n, extended).items())


def csv_rows(n: int, extended: bool = False) -> list[tuple[int, int, int, int, int, int]]:
    """(n, top_col, minus_count, inv, inv_c, count), sorted."""
    table = stats_table(n, extended)
    return sorted((n, s.top_col, s.minus_count, s.inv, s.inv_c, c) for s, c in table.items())
