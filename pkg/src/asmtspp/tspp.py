"""Totally symmetric plane partitions, their diagonal profile and the associated weights."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from . import partitions as pt
from .errors import DomainError, ResourceGuardError
from .exactring import PolyMatrix, Polynomial, VarSet, determinant

MAX_N = 6
CONVENTIONS = ("section4", "theorem")

UV = VarSet(["u", "v"])
_EMPTY = VarSet([])


@dataclass(frozen=True)
class Tspp:
    """A TSPP in an (n, n, n)-box.

    ``ideal`` holds the cubes (i, j, k) with i <= j <= k; every other cube
    is a coordinate permutation of one of these.
    """

    n: int
    ideal: frozenset
    matrix: tuple[tuple[int, ...], ...]

    @classmethod
    def from_ideal(cls, n: int, ideal) -> "Tspp":
        ideal = frozenset(ideal)
        rows = tuple(
            tuple(sum(1 for k in range(1, n + 1) if tuple(sorted((i, j, k))) in ideal) for j in range(1, n + 1))
            for i in range(1, n + 1)
        )
        return cls(n, ideal, rows)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "Tspp":
        n = len(matrix)
        rows = tuple(tuple(int(x) for x in row) for row in matrix)
        if not is_plane_partition(rows, n) or not is_totally_symmetric(rows):
            raise DomainError(f"{rows} is not a totally symmetric plane partition in an ({n},{n},{n})-box")
        ideal = frozenset(
            (i, j, k)
            for i in range(1, n + 1) for j in range(i, n + 1) for k in range(j, n + 1)
            if rows[i - 1][j - 1] >= k
        )
        return cls(n, ideal, rows)

    @property
    def size(self) -> int:
        return sum(map(sum, self.matrix))

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.matrix[i][i] for i in range(self.n))


def cube_set(matrix) -> set[tuple[int, int, int]]:
    return {(i + 1, j + 1, k) for i, row in enumerate(matrix) for j, h in enumerate(row) for k in range(1, h + 1)}


def is_plane_partition(matrix, n: int) -> bool:
    if len(matrix) != n or any(len(row) != n for row in matrix):
        return False
    for i in range(n):
        for j in range(n):
            x = matrix[i][j]
            if not 0 <= x <= n:
                return False
            if i + 1 < n and matrix[i + 1][j] > x:
                return False
            if j + 1 < n and matrix[i][j + 1] > x:
                return False
    return True


def is_totally_symmetric(matrix) -> bool:
    cubes = cube_set(matrix)
    return all(tuple(c[p] for p in perm) in cubes for c in cubes for perm in itertools.permutations(range(3)))


def fundamental_domain(n: int) -> list[tuple[int, int, int]]:
    """Cubes with i <= j <= k in a linear extension of the componentwise order."""
    cells = [(i, j, k) for i in range(1, n + 1) for j in range(i, n + 1) for k in range(j, n + 1)]
    cells.sort(key=lambda c: (sum(c), c))
    return cells


def _lower_covers(c):
    i, j, k = c
    out = []
    if i > 1:
        out.append((i - 1, j, k))
    if j > i:
        out.append((i, j - 1, k))
    if k > j:
        out.append((i, j, k - 1))
    return out


def enumerate_tspps(n: int, extended: bool = False) -> Iterator[Tspp]:
    """Every TSPP in the (n, n, n)-box, via order ideals of the fundamental domain."""
    if n < 0:
        raise DomainError("box size must be non-negative")
    if n > MAX_N and not extended:
        raise ResourceGuardError(f"TSPP enumeration limited to n <= {MAX_N}; pass extended=True to override")
    cells = fundamental_domain(n)
    covers = [_lower_covers(c) for c in cells]
    chosen: set = set()

    def rec(idx):
        if idx == len(cells):
            yield Tspp.from_ideal(n, chosen)
            return
        yield from rec(idx + 1)
        if all(c in chosen for c in covers[idx]):
            chosen.add(cells[idx])
            yield from rec(idx + 1)
            chosen.discard(cells[idx])

    yield from rec(0)


def brute_force_tspps(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Filter every plane partition in the (n, n, n)-box for total symmetry (small n only)."""
    if n > 3:
        raise ResourceGuardError("brute-force TSPP filter limited to n <= 3")
    out = []
    cells = [(i, j) for i in range(n) for j in range(n)]
    grid = [[0] * n for _ in range(n)]

    def rec(idx):
        if idx == len(cells):
            rows = tuple(tuple(r) for r in grid)
            if is_totally_symmetric(rows):
                out.append(rows)
            return
        i, j = cells[idx]
        hi = n
        if i:
            hi = min(hi, grid[i - 1][j])
        if j:
            hi = min(hi, grid[i][j - 1])
        for h in range(hi + 1):
            grid[i][j] = h
            rec(idx + 1)
        grid[i][j] = 0

    rec(0)
    return out


def diag_partition(t: Tspp) -> tuple[int, ...]:
    """Conjugate of the diagonal entries: the profile of the diagonal cross-section."""
    return pt.conjugate(pt.trim(t.diagonal()))


def pi(t: Tspp, n: int | None = None) -> tuple[int, ...]:
    """Modified balanced partition of size n = box + 1, obtained by lengthening every leg by one."""
    n = t.n + 1 if n is None else n
    f = pt.to_frobenius(diag_partition(t))
    lam = pt.from_frobenius(pt.FrobeniusForm(f.arms, tuple(b + 1 for b in f.legs)))
    return pt.pad(lam, n)


@dataclass(frozen=True)
class Omega:
    alpha: int
    beta: int
    gamma: int
    convention: str = "section4"

    @property
    def polynomial(self) -> Polynomial:
        u, v = UV.gens()
        return u ** self.alpha * (1 - u - v) ** self.beta * v ** self.gamma

    def as_dict(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "gamma": self.gamma}


def omega(lam: Sequence[int], n: int, convention: str = "section4") -> Omega:
    """Weight u^alpha (1-u-v)^beta v^gamma attached to a modified balanced partition of size n.

    With lam = (A | B) in Frobenius form:

    * ``section4``: alpha = sum(A+1), beta = sum(B-1-A), gamma = C(n,2) - sum(B);
    * ``theorem``: the same with gamma read off the diagonal legs b = B - 1,
      i.e. gamma = C(n,2) - sum(B-1).  Kept to reproduce the discrepancy.
    """
    if convention not in CONVENTIONS:
        raise DomainError(f"unknown omega convention {convention!r}")
    if not pt.is_modified_balanced(lam, n):
        raise DomainError(f"{pt.trim(lam)} is not a modified balanced partition of size {n}")
    f = pt.to_frobenius(lam)
    alpha = sum(a + 1 for a in f.arms)
    beta = sum(b - 1 - a for a, b in zip(f.arms, f.legs))
    if convention == "section4":
        gamma = comb(n, 2) - sum(f.legs)
    else:
        gamma = comb(n, 2) - sum(b - 1 for b in f.legs)
    if gamma < 0:
        raise DomainError(f"negative v-exponent for {pt.trim(lam)} at n={n}")
    return Omega(alpha, beta, gamma, convention)


def lgv_count(lam: Sequence[int]) -> int:
    """det(C(b_j - 1, a_i)) over the Frobenius coordinates (a | b) of lam."""
    f = pt.to_frobenius(lam)
    if any(a >= b for a, b in zip(f.arms, f.legs)):
        raise DomainError(f"{pt.trim(lam)} is not modified balanced")
    rows = [[comb(b - 1, a) for b in f.legs] for a in f.arms]
    return determinant(PolyMatrix(_EMPTY, rows, n_cols=f.rank), method="cofactor").constant_value()


def histogram_by_pi(n: int, extended: bool = False) -> Counter:
    """Number of TSPPs in the (n-1)-box with each value of pi (trimmed partitions)."""
    if n < 1:
        raise DomainError("n must be at least 1")
    return Counter(pt.trim(pi(t, n)) for t in enumerate_tspps(n - 1, extended))


def to_json(t: Tspp, convention: str = "section4") -> dict:
    n = t.n + 1
    lam = pi(t, n)
    return {
        "matrix": [list(r) for r in t.matrix],
        "diag": list(diag_partition(t)),
        "pi": list(lam),
        "pi_frobenius": str(pt.to_frobenius(lam)),
        "omega": omega(lam, n, convention).as_dict(),
    }
