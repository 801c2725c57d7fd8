"""Exact 2x2 linear algebra over the rationals and real quadratic extensions.

Matrices carry :class:`fractions.Fraction` entries, so products, traces and
determinants are exact.  Spectral radii and Moebius fixed points live in
fields Q(sqrt(d)) and are represented by :class:`QuadraticNumber`, with exact
sign-based comparisons even across different radicands.  Only final scalar
outputs (logs, decimal renderings) are floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple, Union

__all__ = [
    "Mat2Q",
    "QuadraticNumber",
    "ProjectivePoint",
    "SpectralClass",
    "Hyperbolic",
    "Parabolic",
    "mat2",
    "word_product",
    "spectral_radius",
    "fixed_points",
    "gamma_coeff",
    "hs_norm_sq",
    "make_generator",
    "mobius_image",
    "sqrt_fraction",
    "spectral_class",
]

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                 59, 61, 67, 71, 73, 79, 83, 89, 97]


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def _reduce_radicand(d: int) -> Tuple[int, int]:
    """Write sqrt(d) = f * sqrt(d0) with d0 free of small square factors.

    Returns (f, d0); d0 == 0 signals that d was a perfect square with root f.
    Full square-free reduction would need a factorization; pulling out small
    prime squares plus a perfect-square check keeps common radicands canonical
    while comparisons stay exact regardless.
    """
    if d < 0:
        raise ValueError("radicand must be non-negative")
    r = math.isqrt(d)
    if r * r == d:
        return r, 0
    f = 1
    for p in _SMALL_PRIMES:
        p2 = p * p
        while d % p2 == 0:
            d //= p2
            f *= p
    r = math.isqrt(d)
    if r * r == d:
        return f * r, 0
    return f, d


def _sign_one_surd(p: Fraction, q: Fraction, d: int) -> int:
    """Exact sign of p + q*sqrt(d) for d >= 0."""
    if d:
        r = math.isqrt(d)
        if r * r == d:
            return _sgn(p + q * r)
    if d == 0 or q == 0:
        return _sgn(p)
    if p == 0:
        return _sgn(q)
    sp, sq = _sgn(p), _sgn(q)
    if sp == sq:
        return sp
    lhs = p * p
    rhs = q * q * d
    if lhs == rhs:
        return 0
    return sp if lhs > rhs else sq


class QuadraticNumber:
    """Exact real number p + q*sqrt(d) with rational p, q and integer d >= 0.

    Values over different radicands compare exactly by isolating the radical
    and squaring; no floating point enters any ordering decision.
    """

    __slots__ = ("p", "q", "d")

    def __init__(self, p, q=0, d: int = 0):
        p = Fraction(p)
        q = Fraction(q)
        d = int(d)
        if d < 0:
            raise ValueError("radicand must be non-negative")
        if d == 0 or q == 0:
            p, q, d = p, Fraction(0), 0
        else:
            f, d0 = _reduce_radicand(d)
            if d0 == 0:
                p, q, d = p + q * f, Fraction(0), 0
            else:
                q, d = q * f, d0
        self.p, self.q, self.d = p, q, d

    # -- basic predicates ---------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.d == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"not rational: {self!r}")
        return self.p

    # -- arithmetic (within one field, or with rationals) --------------------

    def _coerce(self, other) -> "QuadraticNumber":
        if isinstance(other, QuadraticNumber):
            return other
        return QuadraticNumber(Fraction(other))

    def _same_field(self, other: "QuadraticNumber") -> int:
        if self.d and other.d and self.d != other.d:
            raise TypeError(f"mixed radicands: {self.d} vs {other.d}")
        return self.d or other.d

    def __add__(self, other):
        o = self._coerce(other)
        d = self._same_field(o)
        return QuadraticNumber(self.p + o.p, self.q + o.q, d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        d = self._same_field(o)
        return QuadraticNumber(self.p - o.p, self.q - o.q, d)

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __mul__(self, other):
        o = self._coerce(other)
        d = self._same_field(o)
        return QuadraticNumber(
            self.p * o.p + self.q * o.q * d, self.p * o.q + self.q * o.p, d
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        d = self._same_field(o)
        denom = o.p * o.p - o.q * o.q * d
        if denom == 0:
            raise ZeroDivisionError("division by zero quadratic number")
        num = self * QuadraticNumber(o.p, -o.q, d)
        return QuadraticNumber(num.p / denom, num.q / denom, num.d or d)

    def __rtruediv__(self, other):
        return self._coerce(other).__truediv__(self)

    def __neg__(self):
        return QuadraticNumber(-self.p, -self.q, self.d)

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.p, -self.q, self.d)

    # -- exact comparisons ----------------------------------------------------

    def _compare(self, other) -> int:
        o = self._coerce(other)
        if self.d == o.d:
            return _sign_one_surd(self.p - o.p, self.q - o.q, self.d)
        a = self.p - o.p
        b, db = self.q, self.d
        c, dc = -o.q, o.d
        if b == 0:
            return _sign_one_surd(a, c, dc)
        if c == 0:
            return _sign_one_surd(a, b, db)
        sb, sc = _sgn(b), _sgn(c)
        if sb == sc:
            t_sign = sb
        else:
            lhs = b * b * db
            rhs = c * c * dc
            t_sign = 0 if lhs == rhs else (sb if lhs > rhs else sc)
        if a == 0:
            return t_sign
        if t_sign == 0:
            return _sgn(a)
        if _sgn(a) == t_sign:
            return t_sign
        p2 = a * a - b * b * db - c * c * dc
        q2 = Fraction(-2) * b * c
        return _sgn(a) * _sign_one_surd(p2, q2, db * dc)

    def __eq__(self, other):
        if isinstance(other, (QuadraticNumber, int, Fraction)):
            return self._compare(other) == 0
        return NotImplemented

    def __lt__(self, other):
        return self._compare(other) < 0

    def __le__(self, other):
        return self._compare(other) <= 0

    def __gt__(self, other):
        return self._compare(other) > 0

    def __ge__(self, other):
        return self._compare(other) >= 0

    __hash__ = None  # equal values may carry different field data

    def sign(self) -> int:
        return _sign_one_surd(self.p, self.q, self.d)

    # -- numeric views --------------------------------------------------------

    def __float__(self) -> float:
        if self.d == 0:
            return float(self.p)
        # Rational approximation of sqrt(d) to ~1e-17 relative error keeps the
        # conversion overflow-free for arbitrarily large radicands.
        scale = 10 ** 17
        approx = Fraction(math.isqrt(self.d * scale * scale), scale)
        return float(self.p + self.q * approx)

    def to_json(self) -> dict:
        return {
            "p": f"{self.p.numerator}/{self.p.denominator}",
            "q": f"{self.q.numerator}/{self.q.denominator}",
            "d": self.d,
            "decimal": float(self),
        }

    def __repr__(self) -> str:
        if self.d == 0:
            return f"QuadraticNumber({self.p})"
        return f"QuadraticNumber({self.p} + {self.q}*sqrt({self.d}))"


def sqrt_fraction(x) -> QuadraticNumber:
    """Exact square root of a non-negative rational."""
    f = Fraction(x)
    if f < 0:
        raise ValueError("square root of negative rational")
    return QuadraticNumber(0, Fraction(1, f.denominator), f.numerator * f.denominator)


@dataclass(frozen=True)
class Mat2Q:
    """2x2 matrix with exact rational entries [[a, b], [c, d]]."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    @classmethod
    def identity(cls) -> "Mat2Q":
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    @classmethod
    def from_rows(cls, rows) -> "Mat2Q":
        (a, b), (c, d) = rows
        return mat2(a, b, c, d)

    @property
    def trace(self) -> Fraction:
        return self.a + self.d

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    @property
    def is_identity(self) -> bool:
        return self == Mat2Q.identity()

    @property
    def is_scalar(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def __mul__(self, other):
        if isinstance(other, Mat2Q):
            return Mat2Q(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        s = Fraction(other)
        return Mat2Q(self.a * s, self.b * s, self.c * s, self.d * s)

    def __rmul__(self, other):
        s = Fraction(other)
        return Mat2Q(self.a * s, self.b * s, self.c * s, self.d * s)

    def __add__(self, other: "Mat2Q") -> "Mat2Q":
        return Mat2Q(self.a + other.a, self.b + other.b,
                     self.c + other.c, self.d + other.d)

    def __sub__(self, other: "Mat2Q") -> "Mat2Q":
        return Mat2Q(self.a - other.a, self.b - other.b,
                     self.c - other.c, self.d - other.d)

    def __neg__(self) -> "Mat2Q":
        return Mat2Q(-self.a, -self.b, -self.c, -self.d)

    def transpose(self) -> "Mat2Q":
        return Mat2Q(self.a, self.c, self.b, self.d)

    def inverse(self) -> "Mat2Q":
        det = self.det
        if det == 0:
            raise ZeroDivisionError("singular matrix")
        return Mat2Q(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def power(self, k: int) -> "Mat2Q":
        if k < 0:
            return self.inverse().power(-k)
        out = Mat2Q.identity()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def entries(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def to_json(self) -> list:
        def enc(x: Fraction):
            return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        return [[enc(self.a), enc(self.b)], [enc(self.c), enc(self.d)]]

    @classmethod
    def from_json(cls, rows) -> "Mat2Q":
        return cls.from_rows(rows)

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def mat2(a, b, c, d) -> Mat2Q:
    """Build a matrix, coercing entries (ints, strings 'p/q', floats) exactly."""
    return Mat2Q(Fraction(a), Fraction(b), Fraction(c), Fraction(d))


class SpectralClass(Enum):
    """Spectral type after scaling to determinant one."""

    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"
    ELLIPTIC = "elliptic"
    IDENTITY = "identity"


def spectral_class(x: Mat2Q) -> SpectralClass:
    """Classify by comparing trace^2 with 4*det; exact, scale-invariant."""
    if x.det <= 0:
        raise ValueError("positive determinant required")
    if x.is_scalar:
        return SpectralClass.IDENTITY
    t2 = x.trace * x.trace
    d4 = 4 * x.det
    if t2 > d4:
        return SpectralClass.HYPERBOLIC
    if t2 == d4:
        return SpectralClass.PARABOLIC
    return SpectralClass.ELLIPTIC


@dataclass(frozen=True)
class ProjectivePoint:
    """A point of the projective line: a quadratic number or infinity."""

    value: Optional[QuadraticNumber] = None  # None encodes infinity

    @classmethod
    def infinity(cls) -> "ProjectivePoint":
        return cls(None)

    @classmethod
    def of(cls, x) -> "ProjectivePoint":
        if isinstance(x, ProjectivePoint):
            return x
        if isinstance(x, QuadraticNumber):
            return cls(x)
        return cls(QuadraticNumber(Fraction(x)))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            other = ProjectivePoint.of(other)
        if self.is_infinite or other.is_infinite:
            return self.is_infinite and other.is_infinite
        return self.value == other.value

    __hash__ = None

    def __float__(self) -> float:
        if self.is_infinite:
            return math.inf
        return float(self.value)

    def __repr__(self) -> str:
        return "ProjectivePoint(inf)" if self.is_infinite else f"ProjectivePoint({self.value!r})"


INFINITY = ProjectivePoint.infinity()


def mobius_image(m: Mat2Q, pt: ProjectivePoint) -> ProjectivePoint:
    """Image of a projective point under the Moebius action x -> (ax+b)/(cx+d)."""
    pt = ProjectivePoint.of(pt)
    if pt.is_infinite:
        if m.c == 0:
            return INFINITY
        return ProjectivePoint(QuadraticNumber(m.a / m.c))
    z = pt.value
    den = z * m.c + m.d
    if den.sign() == 0:
        return INFINITY
    num = z * m.a + m.b
    return ProjectivePoint(num / den)


def word_product(pair, w: str, limit: Optional[int] = 64) -> Mat2Q:
    """Product A_{i1} * ... * A_{in} for the word w = i1...in, left to right.

    The empty word gives the identity.  ``limit`` caps the word length (exact
    entries grow geometrically); pass ``None`` to disable.
    """
    a, b = _as_matrices(pair)
    if limit is not None and len(w) > limit:
        raise ValueError(f"word length {len(w)} exceeds limit {limit}")
    out = Mat2Q.identity()
    for ch in w:
        if ch == "0":
            out = out * a
        elif ch == "1":
            out = out * b
        else:
            raise ValueError(f"not a binary word: {w!r}")
    return out


def _as_matrices(pair) -> Tuple[Mat2Q, Mat2Q]:
    if isinstance(pair, tuple):
        a, b = pair
        return a, b
    return pair.A, pair.B


def spectral_radius(x: Mat2Q) -> QuadraticNumber:
    """Largest absolute eigenvalue, exactly.

    Real spectrum: (|tr| + sqrt(tr^2 - 4 det)) / 2.  Complex spectrum
    (tr^2 < 4 det): sqrt(det).
    """
    t = x.trace
    disc = t * t - 4 * x.det
    if disc < 0:
        return sqrt_fraction(x.det)
    root = sqrt_fraction(disc)
    return (QuadraticNumber(abs(t)) + root) / 2


@dataclass(frozen=True)
class Hyperbolic:
    """Attracting and repelling fixed points of a hyperbolic Moebius action."""

    attracting: ProjectivePoint
    repelling: ProjectivePoint


@dataclass(frozen=True)
class Parabolic:
    """The unique fixed point of a parabolic Moebius action."""

    point: ProjectivePoint


def fixed_points(x: Mat2Q) -> Union[Hyperbolic, Parabolic]:
    """Exact projective fixed points of the Moebius action of ``x``.

    Requires real spectrum (rejects elliptic input).  Works for any positive
    determinant; the attracting point is the root where |c z + d| exceeds
    sqrt(det), equivalently the eigenvalue of larger modulus.
    """
    if x.det <= 0:
        raise ValueError("positive determinant required")
    t = x.trace
    disc = t * t - 4 * x.det
    if disc < 0:
        raise ValueError(f"elliptic matrix has no real fixed points: {x}")
    if x.is_scalar:
        raise ValueError("scalar matrix acts as the identity")

    if x.c == 0:
        finite = (
            None
            if x.a == x.d
            else ProjectivePoint(QuadraticNumber(x.b / (x.d - x.a)))
        )
        if disc == 0:
            return Parabolic(INFINITY if finite is None else finite)
        # Infinity pairs with the eigenvalue a.
        if abs(x.a) > abs(x.d):
            return Hyperbolic(INFINITY, finite)
        return Hyperbolic(finite, INFINITY)

    if disc == 0:
        p = ProjectivePoint(QuadraticNumber((x.a - x.d) / (2 * x.c)))
        return Parabolic(p)

    root = sqrt_fraction(disc)
    base = QuadraticNumber((x.a - x.d) / (2 * x.c))
    offs = root / (2 * x.c)
    plus = ProjectivePoint(base + offs)
    minus = ProjectivePoint(base - offs)
    # cz + d at the roots equals (tr +- sqrt(disc)) / 2; the attracting root
    # takes the sign of the trace.
    if t > 0:
        return Hyperbolic(plus, minus)
    return Hyperbolic(minus, plus)


def gamma_coeff(x: Mat2Q, k: int) -> Fraction:
    """Chebyshev-style power coefficient for determinant-one matrices.

    With G(0) = 0, G(1) = 1 and G(k+1) = tr(x) * G(k) - G(k-1), the identity
    x^k = G(k) * x - G(k-1) * I holds exactly for every k >= 1.
    """
    if x.det != 1:
        raise ValueError("gamma_coeff needs determinant one")
    if k < 0:
        raise ValueError("k must be non-negative")
    t = x.trace
    prev, cur = Fraction(-1), Fraction(0)  # G(-1), G(0)
    for _ in range(k):
        prev, cur = cur, t * cur - prev
    return cur


def hs_norm_sq(x: Mat2Q) -> Fraction:
    """Squared Hilbert-Schmidt norm: the exact sum of squared entries."""
    return x.a * x.a + x.b * x.b + x.c * x.c + x.d * x.d


def make_generator(kind: str, *params) -> Mat2Q:
    """Build a standard generator.

    ``make_generator("H", s, u, lam)``: the hyperbolic with attracting fixed
    point ``s > 0``, repelling ``u < 0`` and eigenvalue ``lam > 1`` (exact
    conjugated-diagonal form, determinant one).

    ``make_generator("P", x)``: lower unitriangular [[1, 0], [x, 1]], x > 0.
    ``make_generator("Pt", y)``: its transpose, y > 0.
    """
    if kind == "H":
        s, u, lam = (Fraction(p) for p in params)
        if lam <= 1:
            raise ValueError("eigenvalue must exceed 1")
        if not (u < 0 < s):
            raise ValueError("fixed points must satisfy u < 0 < s")
        span = s - u
        return Mat2Q(
            (s * lam - u / lam) / span,
            (s * u) * (1 / lam - lam) / span,
            (lam - 1 / lam) / span,
            (s / lam - u * lam) / span,
        )
    if kind == "P":
        (x,) = (Fraction(p) for p in params)
        if x <= 0:
            raise ValueError("parameter must be positive")
        return Mat2Q(Fraction(1), Fraction(0), x, Fraction(1))
    if kind == "Pt":
        (y,) = (Fraction(p) for p in params)
        if y <= 0:
            raise ValueError("parameter must be positive")
        return Mat2Q(Fraction(1), y, Fraction(0), Fraction(1))
    raise ValueError(f"unknown generator kind: {kind!r}")
