"""Integer partitions, Frobenius coordinates, modified balanced partitions and Dyck paths."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .errors import DomainError, StructuralError


def trim(parts: Sequence[int]) -> tuple[int, ...]:
    """Drop trailing zeros."""
    parts = tuple(parts)
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def pad(parts: Sequence[int], size: int) -> tuple[int, ...]:
    parts = trim(parts)
    if len(parts) > size:
        raise DomainError(f"partition {parts} has more than {size} non-zero parts")
    return parts + (0,) * (size - len(parts))


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 0 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def check_partition(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if not is_partition(parts):
        raise StructuralError(f"{parts} is not a weakly decreasing sequence of non-negative integers")
    return trim(parts)


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    parts = trim(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def durfee(parts: Sequence[int]) -> int:
    """Side length of the Durfee square."""
    return sum(1 for i, p in enumerate(trim(parts), start=1) if p >= i)


@dataclass(frozen=True)
class FrobeniusForm:
    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self):
        if len(self.arms) != len(self.legs):
            raise StructuralError("Frobenius arms and legs must have equal length")
        for seq in (self.arms, self.legs):
            if any(a <= b for a, b in zip(seq, seq[1:])) or any(x < 0 for x in seq):
                raise StructuralError(f"Frobenius coordinates must be strictly decreasing and non-negative: {self}")

    @property
    def rank(self) -> int:
        return len(self.arms)

    def __str__(self):
        return "(" + ",".join(map(str, self.arms)) + "|" + ",".join(map(str, self.legs)) + ")"


def to_frobenius(parts: Sequence[int]) -> FrobeniusForm:
    parts = trim(parts)
    conj = conjugate(parts)
    l = durfee(parts)
    return FrobeniusForm(tuple(parts[i] - i - 1 for i in range(l)), tuple(conj[i] - i - 1 for i in range(l)))


def from_frobenius(form: FrobeniusForm, size: int | None = None) -> tuple[int, ...]:
    """Partition with the given Frobenius coordinates, zero-padded to ``size`` parts if given."""
    if not isinstance(form, FrobeniusForm):
        form = FrobeniusForm(tuple(form[0]), tuple(form[1]))
    l = form.rank
    rows = [form.arms[i] + i + 1 for i in range(l)]
    # rows below the Durfee square: row r (0-based, r >= l) has #{i : legs[i] + i >= r} cells
    depth = form.legs[0] + 1 if l else 0
    for r in range(l, depth):
        rows.append(sum(1 for i in range(l) if form.legs[i] + i >= r))
    parts = trim(rows)
    return pad(parts, size) if size is not None else parts


def parse_frobenius(text: str) -> FrobeniusForm:
    m = re.fullmatch(r"\s*\(([\d,\s]*)\|([\d,\s]*)\)\s*", text)
    if not m:
        raise StructuralError(f"cannot parse Frobenius form {text!r}")

    def nums(s):
        s = s.strip()
        return tuple(int(x) for x in s.split(",")) if s else ()

    return FrobeniusForm(nums(m.group(1)), nums(m.group(2)))


def parse_partition(text: str) -> tuple[int, ...]:
    """Comma-separated parts ("3,2,2,1") or Frobenius syntax ("(2,0|4,2)")."""
    text = text.strip()
    if text.startswith("("):
        return from_frobenius(parse_frobenius(text))
    if text in ("", "0", "-"):
        return ()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise StructuralError(f"cannot parse partition {text!r}") from None
    return check_partition(parts)


def format_partition(parts: Sequence[int]) -> str:
    return ",".join(map(str, parts)) if parts else "()"


def is_modified_balanced(parts: Sequence[int], n: int) -> bool:
    parts = trim(parts)
    if len(parts) > n:
        return False
    if parts and parts[0] > n - 1:
        return False
    f = to_frobenius(parts)
    return all(a < b for a, b in zip(f.arms, f.legs))


def partitions_in_box(rows: int, cols: int) -> Iterator[tuple[int, ...]]:
    """Padded partitions with ``rows`` parts each at most ``cols``, lexicographic order."""

    def rec(prefix, bound, left):
        if not left:
            yield tuple(prefix)
            return
        for p in range(0, bound + 1):
            prefix.append(p)
            yield from rec(prefix, p, left - 1)
            prefix.pop()

    # generate weakly decreasing sequences; lexicographic on the padded list
    out = list(rec([], cols, rows))
    out.sort()
    yield from out


def enumerate_modified_balanced(n: int) -> list[tuple[int, ...]]:
    """All modified balanced partitions of size ``n``, trimmed, lexicographic on the padded list."""
    if n < 0:
        raise DomainError("size must be non-negative")
    if n == 0:
        return [()]
    return [trim(p) for p in partitions_in_box(n, n - 1) if is_modified_balanced(p, n)]


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


# ----------------------------------------------------------------------------
# Dyck paths, written as strings over {N, E}


def is_dyck(path: str) -> bool:
    height = 0
    for step in path:
        if step == "N":
            height += 1
        elif step == "E":
            height -= 1
        else:
            return False
        if height < 0:
            return False
    return height == 0


def dyck_paths(n: int) -> Iterator[str]:
    def rec(prefix, up, down):
        if up == n and down == n:
            yield "".join(prefix)
            return
        if up < n:
            prefix.append("N")
            yield from rec(prefix, up + 1, down)
            prefix.pop()
        if down < up:
            prefix.append("E")
            yield from rec(prefix, up, down + 1)
            prefix.pop()

    yield from rec([], 0, 0)


def dyck_encode(parts: Sequence[int], n: int) -> str:
    parts = trim(parts)
    if not is_modified_balanced(parts, n):
        raise DomainError(f"{parts} is not a modified balanced partition of size {n}")
    f = to_frobenius(parts)
    l = f.rank
    if l == 0:
        return "N" * n + "E" * n
    a, b = f.arms, f.legs
    steps = ["N" * b[l - 1], "E" * (a[l - 1] + 1)]
    for i in range(l - 2, -1, -1):
        steps.append("N" * (b[i] - b[i + 1]))
        steps.append("E" * (a[i] - a[i + 1]))
    steps.append("N" * (n - b[0]))
    steps.append("E" * (n - a[0] - 1))
    return "".join(steps)


def runs(path: str) -> list[tuple[str, int]]:
    out: list[tuple[str, int]] = []
    for step in path:
        if out and out[-1][0] == step:
            out[-1] = (step, out[-1][1] + 1)
        else:
            out.append((step, 1))
    return out


def dyck_decode(path: str) -> tuple[int, ...]:
    """Inverse of :func:`dyck_encode`; the size is the semilength of ``path``."""
    if not is_dyck(path):
        raise StructuralError(f"{path!r} is not a Dyck path")
    n = len(path) // 2
    if n == 0:
        return ()
    blocks = runs(path)
    # a Dyck path alternates N-runs and E-runs, starting with N and ending with E
    ups = [c for s, c in blocks if s == "N"]
    rights = [c for s, c in blocks if s == "E"]
    l = len(ups) - 1
    if l == 0:
        return ()
    legs = [0] * l
    arms = [0] * l
    legs[l - 1] = ups[0]
    arms[l - 1] = rights[0] - 1
    for t in range(1, l):
        i = l - 1 - t
        legs[i] = legs[i + 1] + ups[t]
        arms[i] = arms[i + 1] + rights[t]
    return from_frobenius(FrobeniusForm(tuple(arms), tuple(legs)))


def format_dyck(path: str) -> str:
    """Run-length form, e.g. ``N2 E1 N2 E2 N1 E2``."""
    return " ".join(f"{s}{c}" for s, c in runs(path))
