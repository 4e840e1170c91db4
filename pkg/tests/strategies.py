"""Shared hypothesis strategies and brute-force oracles for the test suite."""

import itertools

from hypothesis import strategies as st

from asmtspp.exactring import VarSet

ABC = VarSet(["a", "b", "c"])


@st.composite
def polynomials(draw, varset=ABC, max_terms=5, max_exp=3, max_coeff=6):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        exps = tuple(draw(st.integers(0, max_exp)) for _ in varset.names)
        terms[exps] = draw(st.integers(-max_coeff, max_coeff))
    return varset.from_dict(terms)


def leibniz(rows, one):
    """Determinant as the signed sum over permutations (independent oracle)."""
    n = len(rows)
    total = one - one
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = one
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        total = total - term if inv % 2 else total + term
    return total
