"""Membership in 2E(Q) and rank-lower-bound certificates.

The workhorse is exact point halving.  For a target T = (t, *) the
x-coordinates of every R with 2R = T are the roots of a quartic with
integer coefficients, so rational root extraction plus an exact square
test decides T in 2E(Q) unconditionally.  With trivial torsion, E(Q)/2E(Q)
is an elementary abelian 2-group of order 2^rank; exhibiting enough
independent nonzero classes therefore bounds the rank from below.

For the family curves there is a second, congruence-based route for the
three canonical targets (x' = 0, m, -m) under m = 2 (mod 32); it is
replayed and recorded as corroborating evidence whenever it applies, but
every certificate rests on the halving route, which needs no hypotheses.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import polys
from .arith import rational_sqrt
from .curves import INFINITY, Curve, Point, _add_raw, add, is_on_curve
from .errors import InfinityTarget, PointNotOnCurve
from .family import (
    CanonicalPoints,
    FamilyParams,
    build_family_curve,
    canonical_points,
    validate_hypotheses,
)
from .torsion import TorsionReport, nagell_lutz_torsion


@dataclass(frozen=True)
class HalvingQuartic:
    """Primitive integer quartic whose roots are the x-coordinates of the
    half-points of source_point."""

    coefficients: tuple[int, int, int, int, int]  # ascending degree
    source_point: Point


def halving_quartic(curve: Curve, target: Point) -> HalvingQuartic:
    """Quartic in x with roots exactly the x(R) for 2R = target.

    Setting x(2R) = t in the duplication formula and clearing denominators
    gives, for t = tn/td in lowest terms,

        td x^4 - 4 tn x^3 - 2 b td x^2 - (8 c td + 4 b tn) x + (b^2 td - 4 c tn)

    which is then divided by its content.  For an integral target on a
    family curve the raw form is already primitive (leading coefficient 1).
    """
    if target.is_infinity:
        raise InfinityTarget("halves of O are the rational 2-torsion points")
    if not is_on_curve(curve, target):
        raise PointNotOnCurve(f"{target} is not on the curve")
    tn, td = target.x.numerator, target.x.denominator
    b, c = curve.b, curve.c
    raw = [
        b * b * td - 4 * c * tn,
        -(8 * c * td + 4 * b * tn),
        -2 * b * td,
        -4 * tn,
        td,
    ]
    prim = polys.primitive_part(raw)
    return HalvingQuartic(tuple(prim), target)  # type: ignore[arg-type]


def two_torsion_points(curve: Curve) -> list[Point]:
    """Rational points of order dividing 2 (excluding O): integer roots of
    the cubic with y = 0.  Rational 2-torsion abscissas are integral
    because the cubic is monic."""
    return [Point(x, 0) for x in polys.integer_roots([curve.c, curve.b, 0, 1])]


def _halves_from_roots(curve: Curve, target: Point, roots) -> list[Point]:
    """Lift quartic roots to points and keep the honest halves."""
    found = []
    for x in roots:
        y = rational_sqrt(curve.rhs(x))
        if y is None:
            continue
        for cand in (Point(x, y), Point(x, -y)):
            if _add_raw(curve, cand, cand) == target and cand not in found:
                found.append(cand)
    return sorted(found, key=lambda p: (p.x, p.y))


def halving_preimages(curve: Curve, target: Point) -> list[Point]:
    """All rational R with 2R = target, in deterministic order.

    Every half of the target (including translates of one half by rational
    2-torsion) has its x-coordinate among the quartic's roots, so rational
    root extraction is complete; each root is lifted to y by an exact
    square test and kept only when double(R) reproduces the target
    exactly.  Empty result means target is not in 2E(Q).
    """
    quartic = halving_quartic(curve, target)
    roots = polys.rational_roots(list(quartic.coefficients))
    return _halves_from_roots(curve, target, roots)


# ---------------------------------------------------------------------------
# Congruence route for the canonical family targets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CongruenceEvidence:
    """Record of a residue argument ruling the target out of 2E(Q)."""

    target_label: str  # "base" | "shifted" | "combined"
    modulus: int
    detail: str


def _congruence_route(params: FamilyParams, target: Point) -> CongruenceEvidence | None:
    """Replay the residue obstruction when the target is canonical and
    m = 2 (mod 32); None when the route does not apply.

    base (x' = 0): 2C = base forces (x^2 + m^2)^2 = 8 x (pqr)^2, so
        x = 2k^2.  Even k collides with m^4 = 16 (mod 32); odd k makes the
        cleared identity 16k^8 + m^4 + 8 k^4 m^2 - 16 k^2 (pqr)^2 nonzero
        mod 32 for every odd residue k.
    shifted (x' = m): substituting x = m + 2s gives
        (2s^2 - m^2)^2 = (pqr)^2 (4s + 3m); 4s + 3m = 2 (mod 4) is never a
        square.
    combined (x' = -m): the same substitution gives a quartic in s that
        reduces mod 8 to 2s^4 - 2s(pqr)^2 - (pqr)^2, nonzero for every
        residue s.
    """
    m, d = params.m, params.pqr
    if m % 32 != 2 or target.is_infinity:
        return None
    if target.x == 0:
        if (m**4) % 32 != 16:
            return None
        bad = [
            k
            for k in range(1, 32, 2)
            if (16 * k**8 + m**4 + 8 * k**4 * m * m - 16 * k * k * d * d) % 32 == 0
        ]
        if bad:
            return None
        return CongruenceEvidence(
            "base",
            32,
            "x = 2k^2 with k even contradicts m^4 = 16 (mod 32); "
            "all 16 odd residues k fail the cleared identity mod 32",
        )
    if target.x == params.m:
        if all((4 * s + 3 * m) % 4 in (2, 3) for s in range(4)):
            return CongruenceEvidence(
                "shifted",
                4,
                "4s + 3m = 2 (mod 4) for every s, never a perfect square",
            )
        return None
    if target.x == -params.m:
        if all((2 * s**4 - 2 * s * d * d - d * d) % 8 != 0 for s in range(8)):
            return CongruenceEvidence(
                "combined",
                8,
                "2s^4 - 2s(pqr)^2 - (pqr)^2 != 0 (mod 8) for every residue s",
            )
        return None
    return None


# ---------------------------------------------------------------------------
# Class verdicts and certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassVerdict:
    """Evidence that a point's class in E(Q)/2E(Q) is (non)zero.

    nonzero is None only when factoring inside root extraction gave up,
    which never happens at desk scale; a None verdict poisons any
    certificate that would have used it.
    """

    point: Point
    nonzero: bool | None
    quartic: tuple[int, ...] | None
    quartic_roots: tuple[Fraction, ...] | None
    preimages: tuple[Point, ...] | None
    congruence: CongruenceEvidence | None

    @property
    def conclusive(self) -> bool:
        return self.nonzero is not None


def class_is_nonzero(
    curve: Curve, point: Point, params: FamilyParams | None = None
) -> ClassVerdict:
    """Decide [point] != 0 in E(Q)/2E(Q) by exhaustive halving, with the
    congruence replay recorded too whenever it applies."""
    if point.is_infinity:
        return ClassVerdict(point, False, None, None, (INFINITY,), None)
    if not is_on_curve(curve, point):
        raise PointNotOnCurve(f"{point} is not on the curve")
    quartic = halving_quartic(curve, point)
    roots = tuple(polys.rational_roots(list(quartic.coefficients)))
    preimages = tuple(_halves_from_roots(curve, point, roots))
    congruence = _congruence_route(params, point) if params is not None else None
    nonzero = len(preimages) == 0
    if congruence is not None:
        assert nonzero, "congruence route and halving route disagree"
    return ClassVerdict(point, nonzero, quartic.coefficients, roots, preimages, congruence)


@dataclass(frozen=True)
class ProbePoint:
    """A candidate third generator with the four class checks that certify
    independence from the canonical pair."""

    point: Point
    class_c: ClassVerdict
    class_c_base: ClassVerdict
    class_c_shifted: ClassVerdict
    class_c_combined: ClassVerdict

    @property
    def independent(self) -> bool:
        return all(
            v.nonzero is True
            for v in (self.class_c, self.class_c_base, self.class_c_shifted, self.class_c_combined)
        )


@dataclass(frozen=True)
class RankCertificate:
    """Self-contained, re-checkable evidence for a Mordell-Weil rank bound.

    rank_lower_bound = 2 requires trivial torsion plus all three canonical
    classes nonzero; with trivial torsion alone the shifted point already
    has infinite order, giving bound 1.  A successful probe point raises
    the bound to 3.
    """

    params: FamilyParams
    hypotheses_all_ok: bool
    torsion: TorsionReport
    points: CanonicalPoints
    class_base: ClassVerdict
    class_shifted: ClassVerdict
    class_combined: ClassVerdict
    classes_distinct: bool
    rank_lower_bound: int
    probe_height: int | None = None
    probe_points: tuple[ProbePoint, ...] = ()

    @property
    def torsion_trivial(self) -> bool:
        return self.torsion.is_trivial


def _derive_bound(
    torsion_trivial: bool,
    base: ClassVerdict,
    shifted: ClassVerdict,
    combined: ClassVerdict,
) -> tuple[bool, int]:
    """(classes_distinct, rank bound) from the three class verdicts.

    Distinctness follows from nonzeroness of the pairwise sums: with
    [base] != 0, [shifted] != 0 and [base + shifted] != 0, the four classes
    {0, [base], [shifted], [base+shifted]} form a subgroup of order 4.
    """
    all_nonzero = all(v.nonzero is True for v in (base, shifted, combined))
    if torsion_trivial and all_nonzero:
        return True, 2
    if torsion_trivial:
        # the shifted point is rational and not O; trivial torsion forces
        # infinite order, hence rank >= 1
        return False, 1
    return False, 0


def rank_ge2_certificate(params: FamilyParams, num_primes: int = 5) -> RankCertificate:
    """Run the full torsion + three-class pipeline for one parameter set."""
    curve = build_family_curve(params)
    torsion = nagell_lutz_torsion(curve, params, num_primes)
    pts = canonical_points(params)
    base = class_is_nonzero(curve, pts.base, params)
    shifted = class_is_nonzero(curve, pts.shifted, params)
    combined = class_is_nonzero(curve, pts.combined, params)
    distinct, bound = _derive_bound(torsion.is_trivial, base, shifted, combined)
    return RankCertificate(
        params=params,
        hypotheses_all_ok=validate_hypotheses(params).all_ok,
        torsion=torsion,
        points=pts,
        class_base=base,
        class_shifted=shifted,
        class_combined=combined,
        classes_distinct=distinct,
        rank_lower_bound=bound,
    )


def search_points(curve: Curve, height_bound: int, den_bound: int = 2) -> list[Point]:
    """Rational points with x = u/v^2, |u| <= height_bound * v^2, v <= den_bound.

    Exhaustive exact-square search; v = 1 is the integral sweep.  Points
    are returned with positive y (the negative is redundant for class
    arithmetic since [P] = [-P]).
    """
    found: list[Point] = []
    seen_x = set()
    for v in range(1, den_bound + 1):
        vv = v * v
        for u in range(-height_bound * vv, height_bound * vv + 1):
            x = Fraction(u, vv)
            if x in seen_x:
                continue
            fy = curve.rhs(x)
            if fy < 0:
                continue
            y = rational_sqrt(fy)
            if y is None:
                continue
            seen_x.add(x)
            found.append(Point(x, y))
    return sorted(found, key=lambda p: (p.x, p.y))


def rank_ge3_probe(
    params: FamilyParams,
    height_bound: int,
    num_primes: int = 5,
    den_bound: int = 2,
    base_certificate: RankCertificate | None = None,
) -> RankCertificate:
    """Search for a third independent generator below a height bound.

    For each discovered point C outside the span-obvious set, independence
    of {[base], [shifted], [C]} is certified by all four classes [C],
    [C + base], [C + shifted], [C + base + shifted] being nonzero; together
    with the order-4 subgroup from the rank-2 certificate that exhibits a
    subgroup of order 8 in E(Q)/2E(Q), hence rank >= 3.
    """
    cert = base_certificate or rank_ge2_certificate(params, num_primes)
    curve = build_family_curve(params)
    pts = cert.points
    known_x = {pts.base.x, pts.shifted.x, pts.combined.x}
    probes: list[ProbePoint] = []
    if height_bound >= 1:
        for cand in search_points(curve, height_bound, den_bound):
            if cand.x in known_x or cand.y == 0:
                continue
            combos = {
                "c": cand,
                "c_base": add(curve, cand, pts.base),
                "c_shifted": add(curve, cand, pts.shifted),
                "c_combined": add(curve, cand, pts.combined),
            }
            verdicts = {}
            for label, pt in combos.items():
                if pt.is_infinity:
                    verdicts[label] = ClassVerdict(pt, False, None, None, (INFINITY,), None)
                else:
                    verdicts[label] = class_is_nonzero(curve, pt, params)
            probes.append(
                ProbePoint(
                    cand,
                    verdicts["c"],
                    verdicts["c_base"],
                    verdicts["c_shifted"],
                    verdicts["c_combined"],
                )
            )
    bound = cert.rank_lower_bound
    if bound >= 2 and any(p.independent for p in probes):
        bound = 3
    return RankCertificate(
        params=cert.params,
        hypotheses_all_ok=cert.hypotheses_all_ok,
        torsion=cert.torsion,
        points=cert.points,
        class_base=cert.class_base,
        class_shifted=cert.class_shifted,
        class_combined=cert.class_combined,
        classes_distinct=cert.classes_distinct,
        rank_lower_bound=bound,
        probe_height=height_bound,
        probe_points=tuple(probes),
    )
