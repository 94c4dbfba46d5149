"""Coefficient matrices for the h-vector transforms under cubical
barycentric subdivision, applied without constructing the subdivision,
plus iterate closed forms and limit distances.

The short-transform matrix B(d) is d x d with column j holding the
coefficients of (3x+1)^j (x+3)^(d-1-j) / 2^(d-1). The long-transform
matrix C(d) is (d+1) x (d+1); its columns come from three column
generating functions, and the construction is cross-checked against two
independent formulations before anything is returned.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .face_vectors import FVector, LongHVector, ShortHVector, hsc_from_hc
from .polytools import RatPoly, Scalar, mobius_transform


@dataclass(frozen=True)
class CoeffMatrix:
    """Exact rational transform matrix, entries[i][j], kind "B" or "C"."""

    kind: str
    d: int
    entries: tuple[tuple[Scalar, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def apply(self, vec) -> tuple[Scalar, ...]:
        """Matrix-vector product over exact rationals."""
        if len(vec) != self.size:
            raise ValueError(f"vector length {len(vec)} != {self.size}")
        out = []
        for row in self.entries:
            s = sum(a * x for a, x in zip(row, vec))
            if isinstance(s, Fraction) and s.denominator == 1:
                s = int(s)
            out.append(s)
        return tuple(out)

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(row[j] for row in self.entries)

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "d": self.d,
            "entries": [[str(Fraction(x)) for x in row] for row in self.entries],
        }


def _columns_to_rows(cols: list[tuple], size: int) -> tuple:
    return tuple(tuple(col[i] for col in cols) for i in range(size))


@lru_cache(maxsize=None)
def b_matrix(d: int) -> CoeffMatrix:
    """Short h-vector transform matrix for complexes with d = dim + 1."""
    if d < 1:
        raise ValueError("d must be >= 1")
    half = Fraction(1, 2 ** (d - 1))
    cols = []
    for j in range(d):
        p = RatPoly((1, 3)) ** j * RatPoly((3, 1)) ** (d - 1 - j) * half
        cols.append(p.padded(d))
    return CoeffMatrix("B", d, _columns_to_rows(cols, d))


@lru_cache(maxsize=None)
def c_matrix(d: int) -> CoeffMatrix:
    """Long h-vector transform matrix for complexes with d = dim + 1.

    Built from the per-column closed forms (the j=0 and j=d cases divide
    exactly by 1+x), then required to agree with (a) alternating sums
    over the B matrix and (b) a grid evaluation of the bivariate
    generating function. Disagreement means an implementation bug and
    raises RuntimeError.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    entries = _c_closed_forms(d)
    alt = _c_alternating_sums(d)
    if alt != entries:
        raise RuntimeError(
            f"C({d}) closed forms disagree with alternating sums over B"
        )
    _check_c_bivariate(d, entries)
    return CoeffMatrix("C", d, entries)


def _c_closed_forms(d: int) -> tuple:
    one_plus_x = RatPoly((1, 1))
    x = RatPoly.x()
    cols = []
    # j = 0: (x (x+3)^(d-1) / 2^(d-1) + 1) / (1+x)
    num = x * RatPoly((3, 1)) ** (d - 1) * Fraction(1, 2 ** (d - 1)) + 1
    cols.append(num.exact_div(one_plus_x).padded(d + 1))
    # 1 <= j <= d-1: x (3x+1)^(j-1) (x+3)^(d-1-j) / 2^(d-3)
    scale = Fraction(2) ** (3 - d)
    for j in range(1, d):
        p = x * RatPoly((1, 3)) ** (j - 1) * RatPoly((3, 1)) ** (d - 1 - j) * scale
        cols.append(p.padded(d + 1))
    # j = d: (x (3x+1)^(d-1) / 2^(d-1) + x^(d+1)) / (1+x)
    num = x * RatPoly((1, 3)) ** (d - 1) * Fraction(1, 2 ** (d - 1)) + x ** (d + 1)
    cols.append(num.exact_div(one_plus_x).padded(d + 1))
    return _columns_to_rows(cols, d + 1)


def _c_alternating_sums(d: int) -> tuple:
    """C entries from alternating sums of B columns (B(d,k,d) taken as 0)."""
    B = b_matrix(d)

    def b(k: int, j: int) -> Scalar:
        return 0 if j == d else B.entries[k][j]

    rows = []
    for i in range(d + 1):
        row = []
        for j in range(d + 1):
            if i == 0:
                row.append(1 if j == 0 else 0)
                continue
            s = sum(
                (-1) ** (i + k - 1) * (b(k, j) + (b(k, j - 1) if j >= 1 else 0))
                for k in range(i)
            )
            if j == 0:
                s += (-1) ** i
            row.append(int(s) if isinstance(s, Fraction) and s.denominator == 1 else s)
        rows.append(tuple(row))
    return tuple(rows)


def _check_c_bivariate(d: int, entries: tuple) -> None:
    """Compare sum_{i,j} C[i][j] x^i y^j with its bivariate generating
    function on a grid large enough to separate polynomials of the
    degrees involved (x-degree <= d+2, y-degree <= d+1 after clearing
    the two denominators), at points where neither denominator vanishes.
    """
    for x in range(1, d + 4):
        xp3 = Fraction(x + 3)
        x3p1 = Fraction(3 * x + 1)
        for y in range(2, d + 4):
            lhs = sum(
                entries[i][j] * Fraction(x) ** i * Fraction(y) ** j
                for i in range(d + 1)
                for j in range(d + 1)
            )
            rhs = (
                Fraction(1 + x ** (d + 1) * y**d, 1 + x)
                + Fraction(x * y) * Fraction(2) ** (3 - d)
                * (xp3 ** (d - 1) - x3p1 ** (d - 1) * y ** (d - 1))
                / (xp3 - x3p1 * y)
                + Fraction(x, 2 ** (d - 1) * (1 + x))
                * (xp3 ** (d - 1) + x3p1 ** (d - 1) * y**d)
            )
            if lhs != rhs:
                raise RuntimeError(
                    f"C({d}) disagrees with its bivariate generating function "
                    f"at x={x}, y={y}"
                )


def f_of_subdivision(f: FVector) -> FVector:
    """f-vector of the subdivision: f_i' = 2^i sum_{j>=i} C(j,i) f_j.

    Exact integers; equivalent to substituting 1+2x into the
    f-polynomial.
    """
    d = f.d
    return FVector(
        tuple(
            2**i * sum(comb(j, i) * f.entries[j] for j in range(i, d))
            for i in range(d)
        )
    )


def _warn_if_fractional(entries, what: str) -> None:
    if any(isinstance(x, Fraction) for x in entries):
        warnings.warn(
            f"{what} produced non-integer entries; the input vector is not "
            f"realizable as a cubical h-vector",
            RuntimeWarning,
            stacklevel=3,
        )


def hsc_of_subdivision(h: ShortHVector) -> ShortHVector:
    """Short h-vector of the subdivision, via the B matrix alone."""
    out = b_matrix(h.d).apply(h.entries)
    _warn_if_fractional(out, "hsc_of_subdivision")
    return ShortHVector(out)


def hc_of_subdivision(h: LongHVector) -> LongHVector:
    """Long h-vector of the subdivision, via the C matrix alone."""
    out = c_matrix(h.d).apply(h.entries)
    _warn_if_fractional(out, "hc_of_subdivision")
    return LongHVector(out)


def hsc_poly_of_iterate(h: ShortHVector, n: int) -> RatPoly:
    """Short h-polynomial after n subdivisions, in closed form.

    Substitutes ((2^n+1)x + 2^n-1) / ((2^n-1)x + 2^n+1) into the
    polynomial of h, clears denominators to degree d-1, and scales by
    2^-(d-1). For n=0 this is the identity; for n=1 it matches one
    application of the B matrix.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    d = h.d
    a, b = 2**n + 1, 2**n - 1
    p = mobius_transform(h.polynomial(), a, b, b, a, d - 1)
    return p * Fraction(1, 2 ** (d - 1))


def limit_distance_hsc(h: ShortHVector, f_top: int, n: int) -> Fraction:
    """Max-norm distance between the 2^-n(d-1)-scaled level-n short
    h-polynomial and its coefficientwise limit f_top * (x+1)^(d-1)."""
    d = h.d
    if sum(h.entries) != 2 ** (d - 1) * f_top:
        raise ValueError(
            f"f_top={f_top} inconsistent with h: sum(h) = {sum(h.entries)} "
            f"!= 2^(d-1) * f_top = {2 ** (d - 1) * f_top}"
        )
    scaled = hsc_poly_of_iterate(h, n) * Fraction(1, 2 ** (n * (d - 1)))
    target = f_top * RatPoly((1, 1)) ** (d - 1)
    return _max_coeff_distance(scaled, target, d)


def limit_distance_hc(h: LongHVector, f_top: int, euler: int, n: int) -> Fraction:
    """Max-norm distance between the 2^-n(d-1)-scaled level-n long
    h-polynomial and its limit f_top * x * (x+1)^(d-2).

    The level-n long polynomial is recovered from the level-n short one
    through (1+x) h^c(x) = 2^(d-1) + x h^sc(x) + 2^(d-1) (-x)^(d+1) chi~,
    divided exactly by 1+x.
    """
    d = h.d
    if d < 2:
        raise ValueError("long h-vector limits need d >= 2")
    if h.entries[-1] != (-2) ** (d - 1) * euler:
        raise ValueError(
            f"euler={euler} inconsistent with h: h_d = {h.entries[-1]} "
            f"!= (-2)^(d-1) * euler = {(-2) ** (d - 1) * euler}"
        )
    hsc = hsc_from_hc(h)
    if sum(hsc.entries) != 2 ** (d - 1) * f_top:
        raise ValueError(
            f"f_top={f_top} inconsistent with h: derived short h-vector "
            f"sums to {sum(hsc.entries)}, expected {2 ** (d - 1) * f_top}"
        )
    hc_n = hc_poly_of_iterate(hsc, euler, n)
    scaled = hc_n * Fraction(1, 2 ** (n * (d - 1)))
    target = f_top * RatPoly.x() * RatPoly((1, 1)) ** (d - 2)
    return _max_coeff_distance(scaled, target, d + 1)


def hc_poly_of_iterate(hsc: ShortHVector, euler: int, n: int) -> RatPoly:
    """Long h-polynomial after n subdivisions, from the short iterate."""
    d = hsc.d
    rhs = (
        RatPoly((2 ** (d - 1),))
        + RatPoly.x() * hsc_poly_of_iterate(hsc, n)
        + 2 ** (d - 1) * euler * RatPoly((0, -1)) ** (d + 1)
    )
    return rhs.exact_div(RatPoly((1, 1)))


def _max_coeff_distance(p: RatPoly, q: RatPoly, length: int) -> Fraction:
    pc, qc = p.padded(length), q.padded(length)
    return max((abs(Fraction(a - b)) for a, b in zip(pc, qc)), default=Fraction(0))
