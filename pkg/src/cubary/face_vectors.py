"""f-vectors, short and long cubical h-vectors, and the exact integer
identities relating them.

Throughout, a complex of dimension dim has d = dim + 1, the f-vector has
length d, the short h-vector length d, and the long h-vector length d+1
with leading entry 2^(d-1). All arithmetic is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .complex_core import CubicalComplex
from .polytools import RatPoly, Scalar


def _exact_entries(entries) -> tuple:
    out = []
    for x in entries:
        if isinstance(x, Fraction) and x.denominator == 1:
            x = int(x)
        if not isinstance(x, (int, Fraction)) or isinstance(x, bool):
            raise TypeError(f"vector entries must be exact, got {type(x).__name__}")
        out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class FVector:
    """Face counts (f_0, ..., f_{d-1}); d = len(entries)."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("f-vector must have length >= 1")
        if any(not isinstance(x, int) or x < 0 for x in entries):
            raise ValueError("f-vector entries must be nonnegative integers")
        if entries[-1] < 1:
            raise ValueError("top face count f_{d-1} must be positive")

    @property
    def d(self) -> int:
        return len(self.entries)

    def polynomial(self) -> RatPoly:
        return RatPoly(self.entries)


@dataclass(frozen=True)
class ShortHVector:
    """Short cubical h-vector (h_0, ..., h_{d-1}).

    Entries are integers for every actual complex; exact rationals are
    tolerated so transform outputs on non-realizable input stay
    representable.
    """

    entries: tuple[Scalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", _exact_entries(self.entries))
        if not self.entries:
            raise ValueError("short h-vector must have length >= 1")

    @property
    def d(self) -> int:
        return len(self.entries)

    def polynomial(self) -> RatPoly:
        return RatPoly(self.entries)


@dataclass(frozen=True)
class LongHVector:
    """Long cubical h-vector (h_0, ..., h_d); h_0 is pinned to 2^(d-1)."""

    entries: tuple[Scalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", _exact_entries(self.entries))
        if len(self.entries) < 2:
            raise ValueError("long h-vector must have length >= 2")
        if self.entries[0] != 2 ** (self.d - 1):
            raise ValueError(
                f"long h-vector must start with 2^(d-1) = {2 ** (self.d - 1)}, "
                f"got {self.entries[0]}"
            )

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    def polynomial(self) -> RatPoly:
        return RatPoly(self.entries)


def f_vector(K: CubicalComplex) -> FVector:
    """Exact face counts of K by dimension."""
    counts = [0] * (K.dim + 1)
    for d in K.dims:
        counts[d] += 1
    return FVector(tuple(counts))


def hsc_from_f(f: FVector) -> ShortHVector:
    """Short h-vector: h_i = sum_{j<=i} C(d-1-j, d-1-i) (-1)^(i-j) 2^j f_j.

    Equivalently the coefficient vector of
    sum_j f_j (2x)^j (1-x)^(d-1-j).
    """
    d = f.d
    h = []
    for i in range(d):
        s = 0
        for j in range(i + 1):
            s += math.comb(d - 1 - j, d - 1 - i) * (-1) ** (i - j) * 2**j * f.entries[j]
        h.append(s)
    return ShortHVector(tuple(h))


def f_from_hsc(h: ShortHVector) -> FVector:
    """Invert hsc_from_f: f_j = 2^(-j) sum_{i<=j} C(d-1-i, d-1-j) h_i.

    Raises ValueError at the first index where the result is not a
    nonnegative integer, which signals that h is not the short h-vector
    of any cubical complex.
    """
    d = h.d
    f = []
    for j in range(d):
        s = sum(math.comb(d - 1 - i, d - 1 - j) * h.entries[i] for i in range(j + 1))
        fj = Fraction(s, 2**j)
        if fj.denominator != 1 or fj < 0:
            raise ValueError(f"entry f_{j} = {fj} is not a nonnegative integer")
        f.append(int(fj))
    return FVector(tuple(f))


def hc_from_hsc(h: ShortHVector) -> LongHVector:
    """Long h-vector via the recursion h_{i+1}^c = h_i^sc - h_i^c,
    started at h_0^c = 2^(d-1).

    The alternating-sum closed form
    h_i^c = sum_{j<i} (-1)^(i+j-1) h_j^sc + (-1)^i 2^(d-1)
    is recomputed independently and must agree entrywise.
    """
    d = h.d
    hc: list[Scalar] = [2 ** (d - 1)]
    for i in range(d):
        hc.append(h.entries[i] - hc[i])
    for i in range(1, d + 1):
        closed = sum(
            (-1) ** (i + j - 1) * h.entries[j] for j in range(i)
        ) + (-1) ** i * 2 ** (d - 1)
        if closed != hc[i]:
            raise RuntimeError(
                f"long h-vector recursion and closed form disagree at index "
                f"{i}: {hc[i]} vs {closed}"
            )
    return LongHVector(tuple(hc))


def hsc_from_hc(h: LongHVector) -> ShortHVector:
    """Collapse a long h-vector: h_i^sc = h_i^c + h_{i+1}^c."""
    return ShortHVector(
        tuple(h.entries[i] + h.entries[i + 1] for i in range(h.d))
    )


def euler_reduced(f: FVector) -> int:
    """Reduced Euler characteristic: -1 + sum (-1)^i f_i."""
    return -1 + sum((-1) ** i * fi for i, fi in enumerate(f.entries))


def check_long_short_identity(f: FVector) -> bool:
    """Verify (1+x) h^c(x) = 2^(d-1) + x h^sc(x) + 2^(d-1) (-x)^(d+1) chi~
    as exact polynomials, with every quantity derived from f."""
    d = f.d
    hsc = hsc_from_f(f)
    hc = hc_from_hsc(hsc)
    chi = euler_reduced(f)
    lhs = RatPoly((1, 1)) * hc.polynomial()
    rhs = (
        RatPoly((2 ** (d - 1),))
        + RatPoly.x() * hsc.polynomial()
        + 2 ** (d - 1) * chi * RatPoly((0, -1)) ** (d + 1)
    )
    return lhs == rhs


def summary(K: CubicalComplex) -> dict:
    """JSON-ready vector summary: d, f, hsc, hc, reduced Euler characteristic."""
    f = f_vector(K)
    hsc = hsc_from_f(f)
    hc = hc_from_hsc(hsc)
    return {
        "d": f.d,
        "f": list(f.entries),
        "hsc": list(hsc.entries),
        "hc": list(hc.entries),
        "euler_reduced": euler_reduced(f),
    }
