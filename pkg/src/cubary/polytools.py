"""Exact rational polynomial arithmetic, Moebius-composed substitutions,
Sturm-based real root counting, and vector shape predicates.

Everything here is exact: coefficients are Python ints or
``fractions.Fraction`` and no floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def _exact(x) -> Scalar:
    """Coerce to int or Fraction; integral Fractions become ints."""
    if isinstance(x, bool):
        raise TypeError("bool is not a polynomial coefficient")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class RatPoly:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficients are stored constant-term first with no trailing zeros;
    the zero polynomial has an empty coefficient tuple and degree -1.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_exact(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    @classmethod
    def x(cls) -> "RatPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, n: int) -> tuple:
        """Coefficients c_0..c_{n-1}, zero-padded; fails if degree >= n."""
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit in {n} slots")
        return self.coeffs + (0,) * (n - len(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(
            self.coeff(i) + other.coeff(i) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly(c * other for c in self.coeffs)
        if not isinstance(other, RatPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = RatPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd, dv = len(rem) - 1, other.degree
        lead = Fraction(other.leading())
        quot = [0] * max(dd - dv + 1, 0)
        for k in range(dd - dv, -1, -1):
            c = rem[dv + k]
            if c == 0:
                continue
            q = _exact(c / lead)
            quot[k] = q
            for j, b in enumerate(other.coeffs):
                rem[j + k] -= q * b
        return RatPoly(quot), RatPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "RatPoly") -> "RatPoly":
        """Divide, requiring a zero remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"inexact polynomial division: remainder {r}")
        return q

    def __call__(self, t: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return _exact(acc) if isinstance(acc, Fraction) else acc

    def derivative(self) -> "RatPoly":
        return RatPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            parts.append(str(c) if i == 0 else f"{c}*x^{i}" if i > 1 else f"{c}*x")
        return " + ".join(parts) if parts else "0"

    def json_coeffs(self) -> list:
        """Coefficients as rational strings in lowest terms, for JSON."""
        return [str(Fraction(c)) for c in self.coeffs]

    def __repr__(self):
        return f"RatPoly({list(self.coeffs)!r})"


def _as_poly(p) -> RatPoly:
    if isinstance(p, RatPoly):
        return p
    if isinstance(p, (int, Fraction)):
        return RatPoly((p,))
    raise TypeError(f"cannot treat {type(p).__name__} as a polynomial")


def mobius_transform(p: RatPoly, a: int, b: int, c: int, e: int, m: int) -> RatPoly:
    """Expand (c*x + e)^m * p((a*x + b) / (c*x + e)) exactly.

    Equals sum_k p_k (a*x + b)^k (c*x + e)^(m-k); requires m >= deg(p) so
    every term clears its denominator.
    """
    if m < p.degree:
        raise ValueError(f"m={m} is smaller than deg(p)={p.degree}")
    num = RatPoly((b, a))
    den = RatPoly((e, c))
    acc = RatPoly()
    for k, pk in enumerate(p.coeffs):
        if pk == 0:
            continue
        acc = acc + pk * num**k * den ** (m - k)
    return acc


def poly_gcd(p: RatPoly, q: RatPoly) -> RatPoly:
    """Monic gcd (a nonzero constant is returned as 1)."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a * Fraction(1, Fraction(a.leading()))


def square_free_part(p: RatPoly) -> RatPoly:
    """p divided by gcd(p, p'); has the same roots, all simple."""
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free part")
    if p.degree == 0:
        return RatPoly((1,))
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g)


def sturm_chain(p: RatPoly) -> list[RatPoly]:
    """Sturm sequence p, p', then negated Euclidean remainders."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append(-r)
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _sign(x: Scalar) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a * b < 0)


def real_root_count(p: RatPoly) -> int:
    """Number of distinct real roots of p, counted exactly.

    Uses the Sturm chain of the square-free part of p; the sign variation
    difference is taken between -infinity and +infinity, read off from
    leading coefficients. No numeric root finding is involved.
    """
    if p.is_zero():
        raise ValueError("root count of the zero polynomial is undefined")
    q = square_free_part(p)
    if q.degree == 0:
        return 0
    chain = sturm_chain(q)
    at_neg = [_sign(f.leading()) * (-1) ** f.degree for f in chain]
    at_pos = [_sign(f.leading()) for f in chain]
    return _variations(at_neg) - _variations(at_pos)


def is_real_rooted(p: RatPoly) -> bool:
    """True iff every complex root of p is real (multiplicities allowed).

    A polynomial has only real roots exactly when its square-free part
    does, so distinct-root counting suffices. Nonzero constants are
    vacuously real-rooted.
    """
    if p.is_zero():
        raise ValueError("real-rootedness of the zero polynomial is undefined")
    q = square_free_part(p)
    return real_root_count(q) == q.degree


def rational_roots(p: RatPoly) -> list[Fraction]:
    """All distinct rational roots of p, ascending.

    Candidate search over divisors of the cleared constant and leading
    coefficients; every candidate is confirmed by exact evaluation.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    # strip factors of x, then clear denominators to integer coefficients
    roots = set()
    coeffs = list(p.coeffs)
    if coeffs and coeffs[0] == 0:
        roots.add(Fraction(0))
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
    if len(coeffs) > 1:
        lcm = 1
        for c in coeffs:
            if isinstance(c, Fraction):
                lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in coeffs]
        for pn in _divisors(abs(ints[0])):
            for qd in _divisors(abs(ints[-1])):
                for cand in (Fraction(pn, qd), Fraction(-pn, qd)):
                    if p(cand) == 0:
                        roots.add(cand)
    return sorted(roots)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int) -> list[int]:
    out = []
    k = 1
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            out.append(n // k)
        k += 1
    return sorted(set(out))


def shape_predicates(v: Sequence[Scalar]) -> dict:
    """Nonnegativity, symmetry (palindrome), and unimodality of a vector."""
    n = len(v)
    nonnegative = all(x >= 0 for x in v)
    symmetric = all(v[i] == v[n - 1 - i] for i in range(n))
    i = 0
    while i + 1 < n and v[i] <= v[i + 1]:
        i += 1
    while i + 1 < n and v[i] >= v[i + 1]:
        i += 1
    unimodal = i == n - 1 or n == 0
    return {"nonnegative": nonnegative, "symmetric": symmetric, "unimodal": unimodal}
