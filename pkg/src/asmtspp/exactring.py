"""Sparse multivariate polynomials with arbitrary-precision integer coefficients.

Monomials are stored as packed integers: every variable owns a 16-bit field
(the first variable in the most significant position) and the total degree
sits above all fields.  With this layout

* multiplying monomials is integer addition, and
* comparing keys as integers is graded lexicographic order in the
  variable order of the :class:`VarSet`.

Total degree is capped at ``2**15 - 1`` so that a guard bit per field stays
free for the monomial divisibility test.
"""

from __future__ import annotations

import heapq
import itertools
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import DivisibilityError, StructuralError

BITS = 16
FIELD_MASK = (1 << BITS) - 1
MAX_DEGREE = (1 << (BITS - 1)) - 1


class VarSet:
    """An ordered, immutable tuple of variable names."""

    __slots__ = ("names", "_index", "_deg_shift", "_guard", "_unit")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise StructuralError(f"duplicate variable names in {names}")
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}
        k = len(names)
        self._deg_shift = BITS * k
        self._guard = sum(1 << (BITS * i + BITS - 1) for i in range(k))
        self._unit = tuple((1 << (BITS * (k - 1 - i))) | (1 << (BITS * k)) for i in range(k))

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, VarSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarSet({', '.join(self.names)})"

    def __contains__(self, name):
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise StructuralError(f"variable {name!r} not in {self!r}") from None

    def pack(self, exps: Sequence[int]) -> int:
        if len(exps) != len(self.names):
            raise StructuralError(f"exponent vector {tuple(exps)} has wrong length for {self!r}")
        key = 0
        deg = 0
        for e in exps:
            if e < 0:
                raise StructuralError("negative exponents are not representable")
            key = (key << BITS) | e
            deg += e
        if deg > MAX_DEGREE:
            raise OverflowError(f"total degree {deg} exceeds {MAX_DEGREE}")
        return key | (deg << self._deg_shift)

    def unpack(self, key: int) -> tuple[int, ...]:
        k = len(self.names)
        return tuple((key >> (BITS * (k - 1 - i))) & FIELD_MASK for i in range(k))

    def unit_key(self, name: str) -> int:
        """Packed key of the monomial consisting of the single variable ``name``."""
        return self._unit[self.index(name)]

    def degree_of_key(self, key: int) -> int:
        return key >> self._deg_shift

    def divides_key(self, small: int, big: int) -> bool:
        g = self._guard
        return ((big | g) - small) & g == g and (big >> self._deg_shift) >= (small >> self._deg_shift)

    # constructors

    def zero(self) -> "Polynomial":
        return Polynomial._raw(self, {})

    def const(self, c: int) -> "Polynomial":
        return Polynomial._raw(self, {0: int(c)} if c else {})

    def gen(self, name: str) -> "Polynomial":
        return Polynomial._raw(self, {self.unit_key(name): 1})

    def gens(self, *names: str) -> list["Polynomial"]:
        return [self.gen(name) for name in (names or self.names)]

    def monomial(self, exps: Sequence[int] | Mapping[str, int], coeff: int = 1) -> "Polynomial":
        if isinstance(exps, Mapping):
            vec = [0] * len(self.names)
            for name, e in exps.items():
                vec[self.index(name)] = e
            exps = vec
        return Polynomial._raw(self, {self.pack(exps): int(coeff)} if coeff else {})

    def from_dict(self, terms: Mapping[Sequence[int], int]) -> "Polynomial":
        out: dict[int, int] = {}
        for exps, c in terms.items():
            key = self.pack(exps)
            out[key] = out.get(key, 0) + int(c)
        return Polynomial(self, out)


class Polynomial:
    """Immutable polynomial over a :class:`VarSet`.

    Equality is equality of the term maps; zero coefficients are never stored.
    Plain Python integers are accepted wherever a polynomial operand is expected.
    """

    __slots__ = ("varset", "_terms", "_hash")

    def __init__(self, varset: VarSet, terms: Mapping[int, int] | None = None):
        self.varset = varset
        self._terms = {k: c for k, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, varset: VarSet, terms: dict[int, int]) -> "Polynomial":
        # trusted constructor: terms already free of zeros and owned by the result
        p = object.__new__(cls)
        p.varset = varset
        p._terms = terms
        p._hash = None
        return p

    # inspection

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise StructuralError("polynomial is not a constant")
        return self._terms.get(0, 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return self.varset.degree_of_key(max(self._terms))

    def degree_in(self, name: str) -> int:
        shift = BITS * (len(self.varset) - 1 - self.varset.index(name))
        return max(((k >> shift) & FIELD_MASK for k in self._terms), default=-1)

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        """(exponent vector, coefficient) pairs, leading term first in graded lex order."""
        unpack = self.varset.unpack
        return [(unpack(k), self._terms[k]) for k in sorted(self._terms, reverse=True)]

    def as_dict(self) -> dict[tuple[int, ...], int]:
        unpack = self.varset.unpack
        return {unpack(k): c for k, c in self._terms.items()}

    def leading_term(self) -> tuple[tuple[int, ...], int]:
        if not self._terms:
            raise StructuralError("zero polynomial has no leading term")
        k = max(self._terms)
        return self.varset.unpack(k), self._terms[k]

    def coefficient(self, exps: Sequence[int] | Mapping[str, int]) -> int:
        if isinstance(exps, Mapping):
            vec = [0] * len(self.varset)
            for name, e in exps.items():
                vec[self.varset.index(name)] = e
            exps = vec
        return self._terms.get(self.varset.pack(exps), 0)

    def variables(self) -> set[str]:
        vs = self.varset
        used = set()
        for exps, _ in self.terms():
            used.update(vs.names[i] for i, e in enumerate(exps) if e)
        return used

    # arithmetic

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.varset != self.varset:
                raise StructuralError(f"variable sets differ: {self.varset!r} vs {other.varset!r}")
            return other
        if isinstance(other, int):
            return self.varset.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for k, c in b.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return Polynomial._raw(self.varset, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.varset, {k: -c for k, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) - c
            if s:
                out[k] = s
            else:
                del out[k]
        return Polynomial._raw(self.varset, out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return self.varset.zero()
        if self.degree() + other.degree() > MAX_DEGREE:
            raise OverflowError("product exceeds the supported total degree")
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return Polynomial._raw(self.varset, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise StructuralError("polynomial powers need a non-negative integer exponent")
        result = self.varset.const(1)
        base = self
        # repeated multiplication keeps one operand small, which is cheaper for sparse inputs
        for _ in range(e):
            result = result * base
        return result

    def scale(self, c: int) -> "Polynomial":
        if not c:
            return self.varset.zero()
        return Polynomial._raw(self.varset, {k: v * c for k, v in self._terms.items()})

    def shift(self, key: int, coeff: int = 1) -> "Polynomial":
        """Multiply by the monomial with packed key ``key`` times ``coeff``."""
        if not coeff:
            return self.varset.zero()
        return Polynomial._raw(self.varset, {k + key: v * coeff for k, v in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_constant() and self._terms.get(0, 0) == other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.varset == other.varset and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.varset, frozenset(self._terms.items())))
        return self._hash

    # rendering

    def render(self) -> str:
        """Canonical text: terms in descending graded lex order, explicit signs."""
        if not self._terms:
            return "0"
        names = self.varset.names
        unpack = self.varset.unpack
        parts = []
        for i, k in enumerate(sorted(self._terms, reverse=True)):
            c = self._terms[k]
            factors = []
            for name, e in zip(names, unpack(k)):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Polynomial({self.render()})"


def arith(op: str, p: Polynomial, q) -> Polynomial:
    """Dispatch one of ``add``, ``sub``, ``mul``, ``pow``."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "pow":
        return p ** q
    raise StructuralError(f"unknown operation {op!r}")


# ----------------------------------------------------------------------------
# exact division


def exact_divide(p: Polynomial, d: Polynomial) -> Polynomial:
    """Return ``q`` with ``q * d == p``; raise :class:`DivisibilityError` otherwise."""
    d = p._coerce(d)
    if d is NotImplemented:
        raise StructuralError("divisor must be a polynomial or integer")
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if len(d) == 1:
        return _divide_by_term(p, d)
    var = _unit_linear_variable(d)
    if var is not None:
        return _divide_linear(p, d, var)
    return _divide_general(p, d)


def _divide_by_term(p: Polynomial, d: Polynomial) -> Polynomial:
    vs = p.varset
    (dk, dc), = d._terms.items()
    q: dict[int, int] = {}
    rem: dict[int, int] = {}
    for k, c in p._terms.items():
        if vs.divides_key(dk, k) and c % dc == 0:
            q[k - dk] = c // dc
        else:
            rem[k] = c
    if rem:
        raise DivisibilityError("non-zero remainder", Polynomial._raw(vs, rem))
    return Polynomial._raw(vs, q)


def _unit_linear_variable(d: Polynomial):
    # a variable y with d = A*y + B, A = +-1, B free of y
    vs = d.varset
    for name in vs.names:
        shift = BITS * (len(vs) - 1 - vs.index(name))
        unit = vs.unit_key(name)
        top = [(k, c) for k, c in d._terms.items() if (k >> shift) & FIELD_MASK]
        if len(top) == 1 and top[0][0] == unit and top[0][1] in (1, -1):
            return name
    return None


def _divide_linear(p: Polynomial, d: Polynomial, name: str) -> Polynomial:
    """Synthetic division by A*y + B with A = +-1, working univariately in y."""
    vs = p.varset
    shift = BITS * (len(vs) - 1 - vs.index(name))
    ykey = vs.unit_key(name)
    a = d._terms[ykey]
    b = [(k, c) for k, c in d._terms.items() if k != ykey]

    layers: dict[int, dict[int, int]] = {}
    for k, c in p._terms.items():
        e = (k >> shift) & FIELD_MASK
        layers.setdefault(e, {})[k - e * ykey] = c
    if not layers:
        return vs.zero()
    top = max(layers)
    q: dict[int, int] = {}
    carry: dict[int, int] = {}  # q_k, the quotient layer just produced
    for e in range(top, -1, -1):
        cur = layers.get(e, {})
        if carry:
            cur = dict(cur)
            get = cur.get
            for bk, bc in b:
                for qk, qc in carry.items():
                    kk = qk + bk
                    s = get(kk, 0) - bc * qc
                    if s:
                        cur[kk] = s
                    else:
                        cur.pop(kk, None)
        if e == 0:
            if cur:
                raise DivisibilityError("non-zero remainder", Polynomial._raw(vs, cur))
            break
        carry = {k: c * a for k, c in cur.items()} if a == -1 else cur
        off = (e - 1) * ykey
        for k, c in carry.items():
            q[k + off] = c
    return Polynomial._raw(vs, q)


def _divide_general(p: Polynomial, d: Polynomial) -> Polynomial:
    """Leading-term division by a single divisor; exact iff the remainder is zero."""
    vs = p.varset
    lk = max(d._terms)
    lc = d._terms[lk]
    tail = [(k, c) for k, c in d._terms.items() if k != lk]
    rem = dict(p._terms)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    q: dict[int, int] = {}
    left: dict[int, int] = {}
    while heap:
        k = -heapq.heappop(heap)
        c = rem.pop(k, 0)
        if not c:
            continue
        # drop duplicate heap entries for the same key
        while heap and -heap[0] == k:
            heapq.heappop(heap)
        if vs.divides_key(lk, k) and c % lc == 0:
            qk, qc = k - lk, c // lc
            q[qk] = qc
            for tk, tc in tail:
                kk = qk + tk
                s = rem.get(kk, 0) - qc * tc
                if s:
                    if kk not in rem:
                        heapq.heappush(heap, -kk)
                    rem[kk] = s
                else:
                    rem.pop(kk, None)
        else:
            left[k] = c
    if left:
        raise DivisibilityError("non-zero remainder", Polynomial._raw(vs, left))
    return Polynomial._raw(vs, q)


# ----------------------------------------------------------------------------
# antisymmetrizer


@lru_cache(maxsize=None)
def signed_permutations(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All permutations of range(n) in lexicographic order, paired with their signs."""
    out = []
    for perm in itertools.permutations(range(n)):
        out.append((perm, permutation_sign(perm)))
    return tuple(out)


def permutation_sign(seq: Sequence) -> int:
    """Sign of the permutation sorting ``seq`` ascending; 0 if entries repeat."""
    n = len(seq)
    inv = 0
    for i in range(n):
        for j in range(i + 1, n):
            if seq[i] == seq[j]:
                return 0
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv & 1 else 1


def antisymmetrize(p: Polynomial, names: Sequence[str]) -> Polynomial:
    """Signed sum of ``p`` over all permutations of the variables ``names``."""
    vs = p.varset
    names = list(names)
    if len(set(names)) != len(names):
        raise StructuralError("antisymmetrized variables must be distinct")
    m = len(names)
    shifts = [BITS * (len(vs) - 1 - vs.index(name)) for name in names]
    units = [vs.unit_key(name) for name in names]

    # group terms into orbits keyed by (rest of monomial, strictly decreasing exponents)
    orbits: dict[tuple[int, tuple[int, ...]], int] = {}
    for k, c in p._terms.items():
        exps = [(k >> s) & FIELD_MASK for s in shifts]
        sign = permutation_sign([-e for e in exps])
        if not sign:
            continue
        rest = k - sum(e * u for e, u in zip(exps, units))
        key = (rest, tuple(sorted(exps, reverse=True)))
        orbits[key] = orbits.get(key, 0) + sign * c

    out: dict[int, int] = {}
    perms = signed_permutations(m)
    for (rest, mu), c in orbits.items():
        if not c:
            continue
        placed = [[e * u for u in units] for e in mu]
        for perm, sgn in perms:
            # exponent mu[i] lands on variable perm[i]
            kk = rest
            for i, j in enumerate(perm):
                kk += placed[i][j]
            out[kk] = out.get(kk, 0) + sgn * c
    return Polynomial._raw(vs, {k: c for k, c in out.items() if c})


# ----------------------------------------------------------------------------
# substitution and coefficient extraction


def substitute(p: Polynomial, assignment: Mapping[str, "Polynomial | int"], target: VarSet | None = None) -> Polynomial:
    """Ring homomorphism sending each variable to its image in ``target``.

    Variables without an assignment map to the variable of the same name in
    ``target``; a missing name there is a structural error.
    """
    if target is None:
        target = next((v.varset for v in assignment.values() if isinstance(v, Polynomial)), p.varset)
    for name in assignment:
        if name not in p.varset:
            raise StructuralError(f"assigned variable {name!r} not in {p.varset!r}")
    images: list[Polynomial] = []
    for name in p.varset.names:
        if name in assignment:
            img = assignment[name]
            if isinstance(img, Polynomial):
                if img.varset != target:
                    raise StructuralError(f"image of {name!r} lives over {img.varset!r}, expected {target!r}")
            else:
                img = target.const(int(img))
        elif name in target:
            img = target.gen(name)
        else:
            raise StructuralError(f"variable {name!r} unassigned and absent from {target!r}")
        images.append(img)

    vs = p.varset
    k = len(vs)
    fields = [BITS * (k - 1 - i) for i in range(k)]
    if all(len(img) <= 1 for img in images):
        mono = [next(iter(img._terms.items()), None) for img in images]
        out: dict[int, int] = {}
        for key, c in p._terms.items():
            kk = 0
            cc = c
            for i, s in enumerate(fields):
                e = (key >> s) & FIELD_MASK
                if not e:
                    continue
                m = mono[i]
                if m is None:
                    cc = 0
                    break
                kk += e * m[0]
                cc *= m[1] ** e
            if cc:
                out[kk] = out.get(kk, 0) + cc
        return Polynomial(target, out)

    powers: list[dict[int, Polynomial]] = [{0: target.const(1)} for _ in range(k)]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = power(i, e - 1) * images[i]
        return cache[e]

    result = target.zero()
    for key, c in p._terms.items():
        term = target.const(c)
        for i, s in enumerate(fields):
            e = (key >> s) & FIELD_MASK
            if e:
                term = term * power(i, e)
        result = result + term
    return result


def extract_coefficients(p: Polynomial, names: Sequence[str]) -> dict[tuple[int, ...], Polynomial]:
    """Split ``p`` by its exponent pattern in ``names``.

    Values are polynomials over a VarSet of the remaining variables (same order).
    """
    vs = p.varset
    idx = [vs.index(name) for name in names]
    rest_names = [name for name in vs.names if name not in set(names)]
    rest_vs = VarSet(rest_names)
    rest_idx = [vs.index(name) for name in rest_names]
    groups: dict[tuple[int, ...], dict[int, int]] = {}
    for key, c in p._terms.items():
        exps = vs.unpack(key)
        pattern = tuple(exps[i] for i in idx)
        rk = rest_vs.pack([exps[i] for i in rest_idx])
        groups.setdefault(pattern, {})[rk] = c
    return {pat: Polynomial._raw(rest_vs, terms) for pat, terms in groups.items()}


def embed(p: Polynomial, target: VarSet) -> Polynomial:
    """Re-express ``p`` over a VarSet containing all of its variables."""
    if p.varset == target:
        return p
    idx = [target.index(name) for name in p.varset.names]
    out = {}
    for key, c in p._terms.items():
        vec = [0] * len(target)
        for i, e in zip(idx, p.varset.unpack(key)):
            vec[i] = e
        out[target.pack(vec)] = c
    return Polynomial._raw(target, out)


def vandermonde(vs: VarSet, names: Sequence[str], descending: bool = True) -> Polynomial:
    """prod_{i<j} (x_i - x_j) if ``descending`` else prod_{i<j} (x_j - x_i)."""
    result = vs.const(1)
    for i, j in itertools.combinations(range(len(names)), 2):
        a, b = vs.gen(names[i]), vs.gen(names[j])
        result = result * (a - b if descending else b - a)
    return result


def divide_by_vandermonde(p: Polynomial, names: Sequence[str], descending: bool = True) -> Polynomial:
    """Exact division by a Vandermonde product, one linear factor at a time."""
    vs = p.varset
    for i, j in itertools.combinations(range(len(names)), 2):
        a, b = vs.gen(names[i]), vs.gen(names[j])
        p = exact_divide(p, a - b if descending else b - a)
    return p


# ----------------------------------------------------------------------------
# matrices and determinants


class PolyMatrix:
    """Row-major matrix of polynomials over one VarSet."""

    __slots__ = ("varset", "n_rows", "n_cols", "entries")

    def __init__(self, varset: VarSet, rows: Sequence[Sequence["Polynomial | int"]], n_cols: int | None = None):
        self.varset = varset
        self.n_rows = len(rows)
        self.n_cols = len(rows[0]) if rows else (n_cols or 0)
        entries = []
        for row in rows:
            if len(row) != self.n_cols:
                raise StructuralError("ragged matrix rows")
            for x in row:
                if isinstance(x, Polynomial):
                    if x.varset != varset:
                        raise StructuralError("matrix entries must share one VarSet")
                    entries.append(x)
                else:
                    entries.append(varset.const(int(x)))
        self.entries = tuple(entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.n_cols + j]

    def rows(self) -> list[list[Polynomial]]:
        return [list(self.entries[i * self.n_cols:(i + 1) * self.n_cols]) for i in range(self.n_rows)]


def determinant(m: PolyMatrix, method: str = "auto") -> Polynomial:
    """Exact determinant.

    ``method`` is ``"cofactor"`` (Laplace expansion memoized on column subsets),
    ``"bareiss"`` (fraction-free elimination) or ``"auto"`` (bareiss from 4x4 up).
    """
    if m.n_rows != m.n_cols:
        raise StructuralError(f"determinant of a non-square {m.n_rows}x{m.n_cols} matrix")
    n = m.n_rows
    if n == 0:
        return m.varset.const(1)
    if method == "auto":
        method = "bareiss" if n >= 4 else "cofactor"
    if method == "cofactor":
        return _det_cofactor(m)
    if method == "bareiss":
        return _det_bareiss(m)
    raise StructuralError(f"unknown determinant method {method!r}")


def _det_cofactor(m: PolyMatrix) -> Polynomial:
    n = m.n_rows
    rows = m.rows()
    # minors[mask] = det of the last popcount(mask) rows restricted to the columns in mask
    minors: dict[int, Polynomial] = {0: m.varset.const(1)}
    for r in range(n - 1, -1, -1):
        size = n - r
        nxt: dict[int, Polynomial] = {}
        for mask in _masks(n, size):
            acc = m.varset.zero()
            pos = 0
            for c in range(n):
                if not mask >> c & 1:
                    continue
                entry = rows[r][c]
                sub = minors.get(mask ^ (1 << c))
                if entry and sub:
                    term = entry * sub
                    acc = acc - term if pos & 1 else acc + term
                pos += 1
            if acc:
                nxt[mask] = acc
        minors = nxt
    return minors.get((1 << n) - 1, m.varset.zero())


def _masks(n, size):
    for combo in itertools.combinations(range(n), size):
        yield sum(1 << c for c in combo)


def _det_bareiss(m: PolyMatrix) -> Polynomial:
    n = m.n_rows
    a = m.rows()
    sign = 1
    prev = m.varset.const(1)
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return m.varset.zero()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = exact_divide(num, prev) if num else num
            a[i][k] = m.varset.zero()
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


# ----------------------------------------------------------------------------
# parsing


def parse_polynomial(text: str, varset: VarSet) -> Polynomial:
    """Parse an integer polynomial expression such as ``-(1-u-v) - v*X``.

    Only integer literals, variables of ``varset``, unary +/-, binary + - *
    and ``**``/``^`` with non-negative integer exponents are accepted.
    """
    import ast

    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise StructuralError(f"cannot parse polynomial {text!r}: {exc.msg}") from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return varset.const(node.value)
        if isinstance(node, ast.Name):
            return varset.gen(node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = ev(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = ev(node.right)
                if not exp.is_constant() or exp.constant_value() < 0:
                    raise StructuralError("exponents must be non-negative integer literals")
                return ev(node.left) ** exp.constant_value()
            ops = {ast.Add: "add", ast.Sub: "sub", ast.Mult: "mul"}
            op = ops.get(type(node.op))
            if op:
                return arith(op, ev(node.left), ev(node.right))
        raise StructuralError(f"unsupported syntax in polynomial {text!r}")

    return ev(tree)
