"""Classification of 2x2 matrix pairs by projective fixed-point geometry.

A pair (A, B) with positive determinants is *balanced* when, after scaling
each matrix into the determinant-one, trace >= 2 component, the pair is
simultaneously conjugate to one of three normal forms: two nested positive
hyperbolics (case h), a positive hyperbolic with a lower-unitriangular
parabolic (case m), or two opposed parabolics (case p).  Classification here
never constructs the conjugating matrix: it relies only on conjugation
invariants (exact cyclic order of fixed points and Moebius direction tests),
so the verdict is exact.  The conjugator itself is produced separately, in
floating point, for inspection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .mat2 import (
    INFINITY,
    Hyperbolic,
    Mat2Q,
    Parabolic,
    ProjectivePoint,
    QuadraticNumber,
    SpectralClass,
    fixed_points,
    mobius_image,
    spectral_class,
    word_product,
)

__all__ = [
    "MatrixPair",
    "NormalizedPair",
    "PairClass",
    "Arc",
    "ConeData",
    "ConjugationResult",
    "ConjugationError",
    "BalancedPairReport",
    "separates",
    "normalize_to_unimodular",
    "classify",
    "invariant_cones",
    "normal_form_conjugator",
    "balanced_pair_checks",
]


class PairClass(Enum):
    CO_PARALLEL = "co-parallel"          # case h
    MIXED = "mixed"                      # case m
    PARABOLIC_PAIR = "parabolic-pair"    # case p
    CROSSING = "crossing"
    SHARED_FIXED_POINT = "shared-fixed-point"
    ELLIPTIC = "elliptic"
    IDENTITY_COMPONENT = "identity-component"
    NOT_BALANCED = "not-balanced"

    @property
    def is_balanced(self) -> bool:
        return self in (PairClass.CO_PARALLEL, PairClass.MIXED,
                        PairClass.PARABOLIC_PAIR)

    @property
    def case_tag(self) -> Optional[str]:
        return {"co-parallel": "h", "mixed": "m", "parabolic-pair": "p"}.get(self.value)


@dataclass(frozen=True)
class MatrixPair:
    """An ordered pair of 2x2 rational matrices with positive determinants."""

    A: Mat2Q
    B: Mat2Q

    def __post_init__(self) -> None:
        if self.A.det <= 0 or self.B.det <= 0:
            raise ValueError("both determinants must be positive")

    def swapped(self) -> "MatrixPair":
        return MatrixPair(self.B, self.A)

    def matrices(self) -> Tuple[Mat2Q, Mat2Q]:
        return (self.A, self.B)

    @property
    def is_unimodular(self) -> bool:
        return self.A.det == 1 and self.B.det == 1

    def to_json(self) -> dict:
        return {"A": self.A.to_json(), "B": self.B.to_json()}

    @classmethod
    def from_json(cls, obj) -> "MatrixPair":
        return cls(Mat2Q.from_json(obj["A"]), Mat2Q.from_json(obj["B"]))


@dataclass(frozen=True)
class NormalizedPair:
    """Scalars pulling a pair into the determinant-one, trace >= 2 component.

    ``scale_a`` is sign / sqrt(det A), the sign chosen so the scaled trace is
    >= 2 (similarly ``scale_b``).  Exact scalars are available iff the
    determinant is a perfect rational square.
    """

    pair: MatrixPair
    scale_a: float
    scale_b: float
    exact_scale_a: Optional[Fraction]
    exact_scale_b: Optional[Fraction]

    def unit_matrices(self) -> Tuple[Mat2Q, Mat2Q]:
        """Exact unimodular representatives; needs exact scalars."""
        if self.exact_scale_a is None or self.exact_scale_b is None:
            raise ValueError("determinants are not perfect rational squares")
        return (self.exact_scale_a * self.pair.A, self.exact_scale_b * self.pair.B)

    def unit_floats(self) -> Tuple[List[List[float]], List[List[float]]]:
        out = []
        for m, s in ((self.pair.A, self.scale_a), (self.pair.B, self.scale_b)):
            out.append([[float(m.a) * s, float(m.b) * s],
                        [float(m.c) * s, float(m.d) * s]])
        return out[0], out[1]


def _exact_inv_sqrt(f: Fraction) -> Optional[Fraction]:
    num, den = f.numerator, f.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rd, rn)
    return None


def normalize_to_unimodular(pair: MatrixPair) -> Union[NormalizedPair, PairClass]:
    """Scalars making both matrices unimodular with trace >= 2, when possible.

    Returns ``PairClass.ELLIPTIC`` if either matrix has complex spectrum after
    scaling, ``PairClass.IDENTITY_COMPONENT`` if either is scalar.
    """
    scales_f: List[float] = []
    scales_e: List[Optional[Fraction]] = []
    for m in pair.matrices():
        cls = spectral_class(m)
        if cls is SpectralClass.IDENTITY:
            return PairClass.IDENTITY_COMPONENT
        if cls is SpectralClass.ELLIPTIC:
            return PairClass.ELLIPTIC
        sign = 1 if m.trace > 0 else -1
        scales_f.append(sign / math.sqrt(float(m.det)))
        exact = _exact_inv_sqrt(m.det)
        scales_e.append(sign * exact if exact is not None else None)
    return NormalizedPair(pair, scales_f[0], scales_f[1], scales_e[0], scales_e[1])


def separates(a: ProjectivePoint, b: ProjectivePoint,
              c: ProjectivePoint, d: ProjectivePoint) -> bool:
    """True iff the point pair {a, b} separates {c, d} on the projective line.

    All four points must be distinct; decided by exact comparisons, with the
    point at infinity handled by case analysis.
    """
    pts = [a, b, c, d]
    for i in range(4):
        for j in range(i + 1, 4):
            if pts[i] == pts[j]:
                raise ValueError("separation test needs four distinct points")
    if c.is_infinite or d.is_infinite:
        a, b, c, d = c, d, a, b
    if a.is_infinite or b.is_infinite:
        pivot = b if a.is_infinite else a
        return (c.value > pivot.value) != (d.value > pivot.value)
    lo, hi = (a.value, b.value) if a.value < b.value else (b.value, a.value)
    c_in = lo < c.value < hi
    d_in = lo < d.value < hi
    return c_in != d_in


def _same_component(x: ProjectivePoint, y: ProjectivePoint,
                    cut1: ProjectivePoint, cut2: ProjectivePoint) -> bool:
    """True iff x and y lie strictly in the same component of the line minus cuts."""
    if x == cut1 or x == cut2 or y == cut1 or y == cut2:
        return False
    if x == y:
        return True
    return not separates(cut1, cut2, x, y)


def _fixed_point_data(m: Mat2Q):
    return fixed_points(m)


def _points_of(fp) -> List[ProjectivePoint]:
    if isinstance(fp, Hyperbolic):
        return [fp.attracting, fp.repelling]
    return [fp.point]


def classify(pair: MatrixPair) -> PairClass:
    """Exact classification of a matrix pair.

    Degenerate outcomes first (elliptic factor, scalar factor, shared fixed
    point); then the balanced cases, crossing pairs, and direction mismatches
    are told apart by the cyclic order of the exact fixed points and Moebius
    direction tests.
    """
    norm = normalize_to_unimodular(pair)
    if isinstance(norm, PairClass):
        return norm

    fa = _fixed_point_data(pair.A)
    fb = _fixed_point_data(pair.B)
    for p in _points_of(fa):
        for q in _points_of(fb):
            if p == q:
                return PairClass.SHARED_FIXED_POINT

    if isinstance(fa, Hyperbolic) and isinstance(fb, Hyperbolic):
        sa, ua, sb, ub = fa.attracting, fa.repelling, fb.attracting, fb.repelling
        attractors_adjacent = not separates(sa, sb, ua, ub)
        if not attractors_adjacent:
            return PairClass.NOT_BALANCED
        chords_linked = separates(sa, ua, sb, ub)
        return PairClass.CROSSING if chords_linked else PairClass.CO_PARALLEL

    if isinstance(fa, Parabolic) and isinstance(fb, Parabolic):
        pa, pb = fa.point, fb.point
        img_a = mobius_image(pair.A, pb)
        img_b = mobius_image(pair.B, pa)
        if _same_component(img_a, img_b, pa, pb):
            return PairClass.PARABOLIC_PAIR
        return PairClass.NOT_BALANCED

    # one hyperbolic, one parabolic
    if isinstance(fa, Hyperbolic):
        hyp_m, hyp_fp, par_m, par_fp = pair.A, fa, pair.B, fb
    else:
        hyp_m, hyp_fp, par_m, par_fp = pair.B, fb, pair.A, fa
    s, u = hyp_fp.attracting, hyp_fp.repelling
    p = par_fp.point
    fwd = _in_arc(mobius_image(par_m, s), p, s, avoiding=u)
    bwd = _in_arc(mobius_image(par_m.inverse(), u), p, u, avoiding=s)
    if fwd != bwd:
        raise AssertionError(
            "direction tests at the attracting and repelling points disagree"
        )
    return PairClass.MIXED if fwd else PairClass.NOT_BALANCED


def _in_arc(x: ProjectivePoint, end1: ProjectivePoint, end2: ProjectivePoint,
            avoiding: ProjectivePoint) -> bool:
    """True iff x lies strictly inside the arc from end1 to end2 missing `avoiding`."""
    if x == end1 or x == end2:
        return False
    if x == avoiding:
        return False
    return separates(end1, end2, x, avoiding)


@dataclass(frozen=True)
class Arc:
    """An open arc of the projective line given by endpoints and an interior witness."""

    start: ProjectivePoint
    end: ProjectivePoint
    witness: ProjectivePoint

    def contains(self, x: ProjectivePoint, closed: bool = False) -> bool:
        if x == self.start or x == self.end:
            return closed
        if x == self.witness:
            return True
        return not separates(self.start, self.end, x, self.witness)


@dataclass(frozen=True)
class ConeData:
    """The forward- and backward-invariant arcs attached to a balanced pair.

    For a pair already in normal form these are the intervals (s1, s2) /
    (u2, u1) in case h, (0, s) / (u, 0) in case m and (0, inf) / (inf, 0)
    in case p, with endpoints ordered as written.
    """

    iplus: Arc
    iminus: Arc


def invariant_cones(pair: MatrixPair) -> ConeData:
    """Invariant arcs of a balanced pair, from exact fixed-point data."""
    cls = classify(pair)
    if not cls.is_balanced:
        raise ValueError(f"pair is not balanced: {cls.value}")

    fa = _fixed_point_data(pair.A)
    fb = _fixed_point_data(pair.B)

    if cls is PairClass.CO_PARALLEL:
        sa, ua = fa.attracting, fa.repelling
        sb, ub = fb.attracting, fb.repelling
        wplus = mobius_image(pair.A, sb)
        if wplus == sb:  # A fixes sb impossible (distinct); keep for clarity
            wplus = mobius_image(pair.B, sa)
        iplus = _ordered_arc(sa, sb, wplus)
        wminus = mobius_image(pair.A.inverse(), ub)
        iminus = _ordered_arc(ub, ua, wminus)
        return ConeData(iplus, iminus)

    if cls is PairClass.MIXED:
        if isinstance(fa, Hyperbolic):
            hyp_m, hyp_fp, par_m, par_fp = pair.A, fa, pair.B, fb
        else:
            hyp_m, hyp_fp, par_m, par_fp = pair.B, fb, pair.A, fa
        s, u = hyp_fp.attracting, hyp_fp.repelling
        p = par_fp.point
        iplus = Arc(p, s, mobius_image(par_m, s))
        iminus = Arc(u, p, mobius_image(par_m.inverse(), u))
        return ConeData(iplus, iminus)

    pa, pb = fa.point, fb.point
    iplus = Arc(pa, pb, mobius_image(pair.A, pb))
    iminus = Arc(pb, pa, mobius_image(pair.A.inverse(), pb))
    return ConeData(iplus, iminus)


def _ordered_arc(e1: ProjectivePoint, e2: ProjectivePoint,
                 witness: ProjectivePoint) -> Arc:
    """Arc with finite endpoints listed in increasing order when possible."""
    if not e1.is_infinite and not e2.is_infinite and e2.value < e1.value:
        e1, e2 = e2, e1
    return Arc(e1, e2, witness)


# ---------------------------------------------------------------------------
# Floating-point normal-form conjugator
# ---------------------------------------------------------------------------


class ConjugationError(ValueError):
    """Raised when no candidate conjugator validates the normal-form inequalities."""


@dataclass(frozen=True)
class ConjugationResult:
    T: List[List[float]]
    image_a: List[List[float]]
    image_b: List[List[float]]
    case: str                      # "h", "m" or "p"
    swapped: bool                  # True if roles of A and B were exchanged


_INF = math.inf


def _f(pt: ProjectivePoint) -> float:
    return float(pt)


def _mob_apply(m, z: float) -> float:
    (a, b), (c, d) = m
    if math.isinf(z):
        return _INF if c == 0 else a / c
    den = c * z + d
    if den == 0:
        return _INF
    return (a * z + b) / den


def _mob_to_01inf(z1: float, z2: float, z3: float):
    """Matrix of the Moebius map sending (z1, z2, z3) to (0, 1, inf)."""
    if math.isinf(z1):
        return [[0.0, z2 - z3], [1.0, -z3]]
    if math.isinf(z2):
        return [[1.0, -z1], [1.0, -z3]]
    if math.isinf(z3):
        return [[1.0, -z1], [0.0, z2 - z1]]
    return [[z2 - z3, -z1 * (z2 - z3)], [z2 - z1, -z3 * (z2 - z1)]]


def _mob_inv(m):
    (a, b), (c, d) = m
    return [[d, -b], [-c, a]]


def _mob_mul(m, n):
    (a, b), (c, d) = m
    (e, f0), (g, h) = n
    return [[a * e + b * g, a * f0 + b * h], [c * e + d * g, c * f0 + d * h]]


def _mob_from_triples(src, dst):
    return _mob_mul(_mob_inv(_mob_to_01inf(*dst)), _mob_to_01inf(*src))


def _conj(t, m):
    return _mob_mul(_mob_mul(t, m), _mob_inv(t))


def _normalize_unit(m):
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    s = 1.0 / math.sqrt(abs(det))
    out = [[x * s for x in row] for row in m]
    if out[0][0] + out[1][1] < 0:
        out = [[-x for x in row] for row in out]
    return out


def _max_abs_diff(m, n) -> float:
    return max(abs(m[i][j] - n[i][j]) for i in range(2) for j in range(2))


def _h_form(s: float, u: float, lam: float):
    span = s - u
    return [
        [(s * lam - u / lam) / span, s * u * (1 / lam - lam) / span],
        [(lam - 1 / lam) / span, (s / lam - u * lam) / span],
    ]


def _validate_h(na, nb, tol: float) -> Optional[str]:
    failures = []
    for name, m in (("A", na), ("B", nb)):
        tr = m[0][0] + m[1][1]
        if tr <= 2 + tol:
            failures.append(f"{name}: trace {tr:.12g} not > 2")
    if failures:
        return "; ".join(failures)
    pts = []
    for m in (na, nb):
        tr = m[0][0] + m[1][1]
        disc = math.sqrt(tr * tr - 4)
        s = (m[0][0] - m[1][1] + disc) / (2 * m[1][0])
        u = (m[0][0] - m[1][1] - disc) / (2 * m[1][0])
        lam = (tr + disc) / 2
        pts.append((s, u, lam))
    (s1, u1, l1), (s2, u2, l2) = pts
    checks = [
        (u2 < u1 - tol, f"u2 < u1 fails: {u2:.12g} vs {u1:.12g}"),
        (u1 < -tol, f"u1 < 0 fails: {u1:.12g}"),
        (s1 > tol, f"s1 > 0 fails: {s1:.12g}"),
        (s2 > s1 + tol, f"s1 < s2 fails: {s1:.12g} vs {s2:.12g}"),
    ]
    for ok, msg in checks:
        if not ok:
            failures.append(msg)
    if failures:
        return "; ".join(failures)
    if _max_abs_diff(na, _h_form(s1, u1, l1)) > tol:
        failures.append("A is not in conjugated-diagonal form")
    if _max_abs_diff(nb, _h_form(s2, u2, l2)) > tol:
        failures.append("B is not in conjugated-diagonal form")
    return "; ".join(failures) if failures else None


def _validate_m(nh, np_, tol: float) -> Optional[str]:
    failures = []
    x = np_[1][0]
    if abs(np_[0][0] - 1) > tol or abs(np_[1][1] - 1) > tol or abs(np_[0][1]) > tol:
        failures.append("parabolic is not lower unitriangular")
    if x <= tol:
        failures.append(f"parabolic parameter {x:.12g} not > 0")
    tr = nh[0][0] + nh[1][1]
    if tr <= 2 + tol:
        failures.append(f"hyperbolic trace {tr:.12g} not > 2")
    else:
        disc = math.sqrt(tr * tr - 4)
        s = (nh[0][0] - nh[1][1] + disc) / (2 * nh[1][0])
        u = (nh[0][0] - nh[1][1] - disc) / (2 * nh[1][0])
        lam = (tr + disc) / 2
        if not (u < -tol < tol < s):
            failures.append(f"fixed points not split by 0: u={u:.12g}, s={s:.12g}")
        elif _max_abs_diff(nh, _h_form(s, u, lam)) > tol:
            failures.append("hyperbolic is not in conjugated-diagonal form")
    return "; ".join(failures) if failures else None


def _validate_p(na, nb, tol: float) -> Optional[str]:
    failures = []
    if abs(na[0][0] - 1) > tol or abs(na[1][1] - 1) > tol or abs(na[0][1]) > tol:
        failures.append("first matrix is not lower unitriangular")
    elif na[1][0] <= tol:
        failures.append(f"first parameter {na[1][0]:.12g} not > 0")
    if abs(nb[0][0] - 1) > tol or abs(nb[1][1] - 1) > tol or abs(nb[1][0]) > tol:
        failures.append("second matrix is not upper unitriangular")
    elif nb[0][1] <= tol:
        failures.append(f"second parameter {nb[0][1]:.12g} not > 0")
    return "; ".join(failures) if failures else None


def normal_form_conjugator(pair: MatrixPair, tol: float = 1e-9) -> ConjugationResult:
    """A floating-point conjugator pulling a balanced pair into normal form.

    Candidates are built from the exact fixed points (triple maps, plus a
    point-to-infinity construction for case h); each candidate is validated by
    conjugating the unimodular-scaled matrices and checking the defining
    inequalities within ``tol``.  Raises :class:`ConjugationError` describing
    the failed inequalities if no candidate validates.
    """
    cls = classify(pair)
    if not cls.is_balanced:
        raise ValueError(f"pair is not balanced: {cls.value}")
    norm = normalize_to_unimodular(pair)
    assert isinstance(norm, NormalizedPair)
    ua_f, ub_f = norm.unit_floats()

    fa = _fixed_point_data(pair.A)
    fb = _fixed_point_data(pair.B)

    failures = []

    if cls is PairClass.CO_PARALLEL:
        sa, ua = _f(fa.attracting), _f(fa.repelling)
        sb, ub = _f(fb.attracting), _f(fb.repelling)
        for (s_in, u_in, mi, mo, s_out, u_out, swapped) in (
            (sa, ua, ua_f, ub_f, sb, ub, False),
            (sb, ub, ub_f, ua_f, sa, ua, True),
        ):
            cands = [_mob_from_triples((u_out, u_in, s_in), (-2.0, -1.0, 1.0))]
            zeta = _arc_point_outside(s_out, u_out, (s_in, u_in))
            if zeta is not None:
                cands.append(_zeta_normalizer(zeta, u_in, s_in))
            for t in cands:
                na = _normalize_unit(_conj(t, mi))
                nb = _normalize_unit(_conj(t, mo))
                err = _validate_h(na, nb, tol)
                if err is None:
                    if swapped:
                        na, nb = nb, na
                    return ConjugationResult(t, na, nb, "h", swapped)
                failures.append(err)

    elif cls is PairClass.MIXED:
        if isinstance(fa, Hyperbolic):
            hyp_fp, par_fp = fa, fb
            mh, mp, swapped = ua_f, ub_f, False
        else:
            hyp_fp, par_fp = fb, fa
            mh, mp, swapped = ub_f, ua_f, True
        s, u = _f(hyp_fp.attracting), _f(hyp_fp.repelling)
        p = _f(par_fp.point)
        for dst in ((0.0, -1.0, 1.0), (0.0, 1.0, -1.0)):
            t = _mob_from_triples((p, u, s), dst)
            nh = _normalize_unit(_conj(t, mh))
            np_ = _normalize_unit(_conj(t, mp))
            err = _validate_m(nh, np_, tol)
            if err is None:
                ia, ib = (np_, nh) if swapped else (nh, np_)
                return ConjugationResult(t, ia, ib, "m", swapped)
            failures.append(err)

    else:  # PARABOLIC_PAIR
        pa, pb = _f(fa.point), _f(fb.point)
        for (p0, pinf, ma, mb, amat, swapped) in (
            (pa, pb, ua_f, ub_f, pair.A, False),
            (pb, pa, ub_f, ua_f, pair.B, True),
        ):
            anchor = _f(mobius_image(amat, ProjectivePoint.of(_to_exact(pinf, fa, fb))))
            t = _mob_from_triples((p0, pinf, anchor), (0.0, _INF, 1.0))
            na = _normalize_unit(_conj(t, ma))
            nb = _normalize_unit(_conj(t, mb))
            err = _validate_p(na, nb, tol)
            if err is None:
                ia, ib = (nb, na) if swapped else (na, nb)
                return ConjugationResult(t, ia, ib, "p", swapped)
            failures.append(err)

    raise ConjugationError(
        "no candidate conjugator satisfied the normal-form inequalities "
        f"(classifier said {cls.value}): " + " | ".join(failures)
    )


def _arc_point_outside(a: float, b: float, inner: Tuple[float, float]) -> Optional[float]:
    """A float strictly inside the arc between a and b missing both inner points.

    Returns ``math.inf`` when the unbounded arc qualifies, ``None`` when the
    inner points straddle the cut (not co-parallel geometry).
    """
    if math.isinf(a) or math.isinf(b):
        p = b if math.isinf(a) else a
        above = sum(1 for z in inner if z > p)
        if above == 2:
            return p - 1.0 - abs(p)
        if above == 0:
            return p + 1.0 + abs(p)
        return None
    lo, hi = (a, b) if a < b else (b, a)
    inside = sum(1 for z in inner if lo < z < hi)
    if inside == 2:
        return math.inf
    if inside == 0:
        return (lo + hi) / 2.0
    return None


def _zeta_normalizer(zeta: float, u_in: float, s_in: float):
    """Send zeta to infinity, then pin the inner fixed points to -1 and 1.

    With zeta chosen in the outer arc, the composite places the outer fixed
    points beyond -1 and 1 on opposite sides, which is exactly the nested
    normal-form configuration (a slope-reversing affine handles orientation
    automatically).
    """
    inv = [[1.0, 0.0], [0.0, 1.0]] if math.isinf(zeta) else [[0.0, -1.0], [1.0, -zeta]]
    up = _mob_apply(inv, u_in)
    sp = _mob_apply(inv, s_in)
    alpha = 2.0 / (sp - up)
    beta = -1.0 - alpha * up
    return _mob_mul([[alpha, beta], [0.0, 1.0]], inv)


# ---------------------------------------------------------------------------
# Exact sanity suite for balanced pairs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BalancedPairReport:
    """Exact product checks available for every balanced unimodular pair."""

    products_in_component: bool     # all short products have trace >= 2
    mixed_products_hyperbolic: bool
    subpairs_balanced: bool         # (X, AB) and (X, BA) stay balanced
    product_pair_crossing: bool     # (AB, BA) is a crossing pair
    trace_inequality: bool          # tr((AB)^2) > tr(A^2 B^2)

    @property
    def all_pass(self) -> bool:
        return all(
            (self.products_in_component, self.mixed_products_hyperbolic,
             self.subpairs_balanced, self.product_pair_crossing,
             self.trace_inequality)
        )


def balanced_pair_checks(pair: MatrixPair, max_len: int = 8) -> BalancedPairReport:
    """Run the exact structural checks that characterize balanced pairs."""
    if not pair.is_unimodular:
        raise ValueError("checks need determinant-one matrices")
    cls = classify(pair)
    if not cls.is_balanced:
        raise ValueError(f"pair is not balanced: {cls.value}")

    a, b = pair.matrices()
    in_comp = True
    mixed_hyp = True
    stack = [("", Mat2Q.identity())]
    for length in range(1, max_len + 1):
        new = []
        for w, m in stack:
            for ch, g in (("0", a), ("1", b)):
                wm = (w + ch, m * g)
                new.append(wm)
        stack = new
        for w, m in stack:
            if m.trace < 2 or m.is_identity:
                in_comp = False
            if w.count("0") and w.count("1") and m.trace * m.trace <= 4 * m.det:
                mixed_hyp = False

    ab, ba = a * b, b * a
    sub_ok = True
    for x in (a, b):
        for y in (ab, ba):
            if not classify(MatrixPair(x, y)).is_balanced:
                sub_ok = False
    crossing = classify(MatrixPair(ab, ba)) is PairClass.CROSSING
    lhs = (ab * ab).trace
    rhs = (a * a * b * b).trace
    return BalancedPairReport(in_comp, mixed_hyp, sub_ok, crossing, lhs > rhs)
