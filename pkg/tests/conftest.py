"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the code paths they are used to
check: interval counting goes through the generic order relation only,
and the short h-vector oracle expands the defining polynomial sum by
plain convolution instead of the binomial closed form.
"""

from fractions import Fraction

import pytest

from cubary import CubicalComplex, FVector
from cubary.corpus import default_corpus


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


def brute_force_interval_fvector(K: CubicalComplex) -> tuple[int, ...]:
    """f-vector of the subdivision by counting poset intervals directly.

    Walks every ordered pair through K.leq; never touches the cover
    bookkeeping that subdivide() uses.
    """
    counts = [0] * (K.dim + 1)
    n = len(K)
    for b in range(n):
        for a in range(n):
            if K.leq(a, b):
                counts[K.dims[b] - K.dims[a]] += 1
    return tuple(counts)


def _convolve(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def expand_hsc_oracle(f: FVector) -> tuple[int, ...]:
    """Short h-vector via direct expansion of sum_j f_j (2x)^j (1-x)^(d-1-j)."""
    d = f.d
    total = [Fraction(0)] * d
    for j, fj in enumerate(f.entries):
        term = [Fraction(fj)]
        for _ in range(j):
            term = _convolve(term, [Fraction(0), Fraction(2)])
        for _ in range(d - 1 - j):
            term = _convolve(term, [Fraction(1), Fraction(-1)])
        for i, c in enumerate(term):
            total[i] += c
    assert all(c.denominator == 1 for c in total)
    return tuple(int(c) for c in total)
