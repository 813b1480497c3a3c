import random
from fractions import Fraction

import pytest

from ecrank.curves import INFINITY, Curve, Point, add, double, negate, scalar_mul
from ecrank.descent import (
    ClassVerdict,
    _derive_bound,
    class_is_nonzero,
    halving_preimages,
    halving_quartic,
    rank_ge2_certificate,
    rank_ge3_probe,
    search_points,
    two_torsion_points,
)
from ecrank.errors import InfinityTarget, PointNotOnCurve
from ecrank.family import FamilyParams, build_family_curve, canonical_points
from ecrank import polys

M2_PARAMS = FamilyParams(2, 3, 7, 11)
M2_CURVE = build_family_curve(M2_PARAMS)
PTS = canonical_points(M2_PARAMS)


def test_halving_quartic_family_shape():
    """For an integral target on a family curve the primitive quartic is
    monic with the expected closed-form coefficients."""
    m, d = M2_PARAMS.m, M2_PARAMS.pqr
    for target in (PTS.base, PTS.shifted, PTS.combined):
        t = int(target.x)
        q = halving_quartic(M2_CURVE, target)
        assert q.coefficients == (
            m**4 - 4 * d * d * t,
            4 * m * m * t - 8 * d * d,
            2 * m * m,
            -4 * t,
            1,
        )
        assert q.source_point == target


def test_halving_quartic_rational_target_is_primitive():
    target = double(M2_CURVE, PTS.shifted)
    q = halving_quartic(M2_CURVE, target)
    assert polys.content(list(q.coefficients)) == 1
    assert q.coefficients[-1] > 0


def test_halving_preimages_canonical_points_empty():
    assert halving_preimages(M2_CURVE, PTS.base) == []
    assert halving_preimages(M2_CURVE, PTS.shifted) == []
    assert halving_preimages(M2_CURVE, PTS.combined) == []


def test_halving_preimages_recovers_constructed_half():
    target = double(M2_CURVE, PTS.shifted)
    halves = halving_preimages(M2_CURVE, target)
    assert PTS.shifted in halves
    for r in halves:
        assert double(M2_CURVE, r) == target


def test_halving_infinity_and_off_curve():
    with pytest.raises(InfinityTarget):
        halving_preimages(M2_CURVE, INFINITY)
    with pytest.raises(PointNotOnCurve):
        halving_preimages(M2_CURVE, Point(1, 1))


def test_halving_with_rational_two_torsion():
    """With full rational 2-torsion, a double has four rational halves
    (the point and its three 2-torsion translates); all must be found."""
    curve = Curve(-25, 0)  # y^2 = x^3 - 25x: rank 1, torsion (Z/2)^2
    assert set(two_torsion_points(curve)) == {Point(-5, 0), Point(0, 0), Point(5, 0)}
    p = Point(-4, 6)
    target = double(curve, p)
    halves = halving_preimages(curve, target)
    assert halves == [
        Point(-4, 6),
        Point(Fraction(-5, 9), Fraction(-100, 27)),
        Point(Fraction(25, 4), Fraction(75, 8)),
        Point(45, -300),
    ]
    for r in halves:
        assert double(curve, r) == target
    # the translate structure: halves differ from p by rational 2-torsion
    for r in halves:
        diff = add(curve, r, negate(curve, p))
        assert diff.is_infinity or diff in two_torsion_points(curve)


def test_halving_round_trip_integral_target_parity():
    """Constructed case where an integral point is itself a double: every
    preimage of the integral target must have integer x with x = m (mod 2)."""
    params = FamilyParams(1890, 3, 5, 7)  # pqr = 105 divides m: 2B is integral
    curve = build_family_curve(params)
    pts = canonical_points(params)
    target = double(curve, pts.shifted)
    assert target.x.denominator == 1, "construction guarantees an integral double"
    halves = halving_preimages(curve, target)
    assert pts.shifted in halves
    for r in halves:
        assert r.x.denominator == 1
        assert (int(r.x) - params.m) % 2 == 0


def test_class_is_nonzero_canonical():
    for target in PTS:
        verdict = class_is_nonzero(M2_CURVE, target, M2_PARAMS)
        assert verdict.nonzero is True
        assert verdict.preimages == ()
        assert verdict.congruence is not None  # m = 2 (mod 32): replay applies
    labels = [
        class_is_nonzero(M2_CURVE, t, M2_PARAMS).congruence.target_label for t in PTS
    ]
    assert labels == ["base", "shifted", "combined"]


def test_class_zero_for_constructed_double():
    twob = double(M2_CURVE, PTS.shifted)
    verdict = class_is_nonzero(M2_CURVE, twob, M2_PARAMS)
    assert verdict.nonzero is False
    assert PTS.shifted in verdict.preimages
    assert class_is_nonzero(M2_CURVE, INFINITY).nonzero is False


def test_route_agreement_on_hypothesis_grid():
    """Wherever the congruence route applies its verdict must match the
    unconditional halving route (the halving route is authoritative)."""
    for m in (2, 34, 66):
        for trip in ((3, 5, 7), (5, 7, 11)):
            params = FamilyParams(m, *trip)
            curve = build_family_curve(params)
            for target in canonical_points(params):
                v = class_is_nonzero(curve, target, params)
                if v.congruence is not None:
                    assert v.nonzero is True


def test_derive_bound_logic_paths():
    nz = ClassVerdict(PTS.base, True, None, None, (), None)
    zero = ClassVerdict(PTS.base, False, None, None, (PTS.base,), None)
    inconclusive = ClassVerdict(PTS.base, None, None, None, None, None)
    assert _derive_bound(True, nz, nz, nz) == (True, 2)
    # [base] = [shifted] would force [combined] = 0: bound falls back to 1
    assert _derive_bound(True, nz, nz, zero) == (False, 1)
    assert _derive_bound(True, zero, nz, nz) == (False, 1)
    assert _derive_bound(False, nz, nz, nz) == (False, 0)
    assert _derive_bound(True, nz, nz, inconclusive) == (False, 1)


def test_rank_certificate_worked_example():
    cert = rank_ge2_certificate(M2_PARAMS)
    assert cert.rank_lower_bound == 2
    assert cert.torsion_trivial and cert.classes_distinct
    assert cert.hypotheses_all_ok
    assert cert.class_base.congruence is not None


def test_rank_certificate_outside_hypotheses_still_two():
    """m = 6 fails both congruence hypotheses, so the replay route is
    unavailable; the halving route alone still certifies rank >= 2."""
    cert = rank_ge2_certificate(FamilyParams(6, 5, 7, 11))
    assert not cert.hypotheses_all_ok
    assert cert.class_base.congruence is None
    assert cert.rank_lower_bound == 2


def test_search_points_finds_canonical_x():
    pts = search_points(M2_CURVE, 500)
    xs = {p.x for p in pts}
    assert {Fraction(-2), Fraction(0), Fraction(2)} <= xs


def test_probe_height_zero_is_noop():
    cert = rank_ge3_probe(M2_PARAMS, 0)
    assert cert.probe_points == ()
    assert cert.rank_lower_bound == 2
    assert cert.probe_height == 0


def test_probe_worked_example_finds_no_third_generator():
    cert = rank_ge3_probe(M2_PARAMS, 500)
    assert cert.rank_lower_bound == 2
    assert all(not p.independent for p in cert.probe_points)


def test_probe_positive_control_rank_three():
    """(m, p, q, r) = (34, 3, 5, 7) carries integral points at x = -38 and
    x = 47 whose four class checks all pass: a full rank >= 3 certificate."""
    params = FamilyParams(34, 3, 5, 7)
    curve = build_family_curve(params)
    assert Point(-38, 9).y ** 2 == curve.rhs(Point(-38, 9).x)
    cert = rank_ge3_probe(params, 50, den_bound=1)
    assert cert.rank_lower_bound == 3
    independents = [p.point for p in cert.probe_points if p.independent]
    assert Point(-38, 9) in independents and Point(47, 246) in independents


def test_probe_positive_control_small_m():
    """A rank >= 3 member exists even at m = 2: {p,q,r} = {3,5,13}."""
    cert = rank_ge3_probe(FamilyParams(2, 3, 5, 13), 50, den_bound=1)
    assert cert.rank_lower_bound == 3
    independents = [p.point for p in cert.probe_points if p.independent]
    assert Point(-25, 150) in independents and Point(27, 240) in independents


def test_probe_synthetic_dependent_point_fails():
    """C = base + 2*shifted lies in the span of the canonical classes:
    [C + base] = [2 base + 2 shifted] = 0, so the four-class test must fail."""
    curve = M2_CURVE
    c = add(curve, PTS.base, scalar_mul(curve, 2, PTS.shifted))
    v_c = class_is_nonzero(curve, c, M2_PARAMS)
    v_mix = class_is_nonzero(curve, add(curve, c, PTS.base), M2_PARAMS)
    assert v_c.nonzero is True  # [C] = [base] != 0
    assert v_mix.nonzero is False  # halves exist: C + base = 2(base + shifted)
    assert len(v_mix.preimages) > 0


def test_substitution_expansions_match_closed_forms():
    """Rederive the x = m + 2s substitutions behind the congruence route
    symbolically and compare with the closed forms the replay relies on.

    shifted target (x' = m):   (x^2+m^2)^2 - 8xD^2 - 4m f(x)
        = 4[(2s^2 - m^2)^2 - D^2 (4s + 3m)]
    combined target (x' = -m): (x^2+m^2)^2 - 8xD^2 + 4m f(x)
        = 4[4s^4 + 16ms^3 + 20m^2 s^2 + 8m^3 s - 4D^2 s + m^4 - mD^2]
    """
    for m, trip in ((2, (3, 7, 11)), (34, (3, 5, 7)), (66, (5, 7, 13))):
        params = FamilyParams(m, *trip)
        d = params.pqr
        x = [m, 2]  # x = m + 2s as a polynomial in s
        x2 = polys.mul(x, x)
        x3 = polys.mul(x2, x)
        f = polys.add(polys.add(x3, polys.scale(x, -m * m)), [d * d])
        lhs_core = polys.add(
            polys.mul(polys.add(x2, [m * m]), polys.add(x2, [m * m])),
            polys.scale(x, -8 * d * d),
        )
        shifted_lhs = polys.normalize(polys.add(lhs_core, polys.scale(f, -4 * m)))
        shifted_rhs = polys.scale(
            [m**4 - 3 * m * d * d, -4 * d * d, -4 * m * m, 0, 4], 4
        )
        assert shifted_lhs == polys.normalize(shifted_rhs)
        combined_lhs = polys.normalize(polys.add(lhs_core, polys.scale(f, 4 * m)))
        combined_rhs = polys.scale(
            [m**4 - m * d * d, 8 * m**3 - 4 * d * d, 20 * m * m, 16 * m, 4], 4
        )
        assert combined_lhs == polys.normalize(combined_rhs)


def test_halving_round_trip_fuzz():
    rng = random.Random(99)
    pool_primes = [3, 5, 7, 11, 13, 17, 19, 23]
    checked = 0
    while checked < 40:
        m = rng.choice([2, 34, 66, 98, 130, 162, 194])
        trip = tuple(sorted(rng.sample(pool_primes, 3)))
        params = FamilyParams(m, *trip)
        curve = build_family_curve(params)
        pts = canonical_points(params)
        coeffs = (rng.randint(-1, 1), rng.randint(-1, 1))
        p = add(
            curve,
            scalar_mul(curve, coeffs[0], pts.base),
            scalar_mul(curve, coeffs[1], pts.shifted),
        )
        if p.is_infinity or p.y == 0:
            continue
        target = double(curve, p)
        halves = halving_preimages(curve, target)
        assert p in halves
        for r in halves:
            assert double(curve, r) == target
        checked += 1
