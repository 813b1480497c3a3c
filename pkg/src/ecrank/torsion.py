"""Torsion certification by three independent routes.

1. Reduction bound: the torsion group injects into E(F_ell) for every odd
   prime ell of good reduction, so its order divides the gcd of the counts.
2. Nagell-Lutz enumeration: rational torsion points on an integral model
   are integral with y = 0 or y^2 | Delta; each candidate is order-tested
   up to 12, the largest order a rational point can have.
3. Division polynomials: a rational point of exact order n has integral
   x-coordinate that is a root of psi_n, so "psi_n has no integer root"
   certifies that no order-n point exists.  Orders 2, 3, 5, 7 are the only
   prime orders a rational torsion point can have, so clearing all four
   already forces the group to be trivial.

A fourth, family-specific route replays the congruence arguments that rule
out each prime order under hypotheses on m mod 3 / 4 / 8; its verdicts are
recorded alongside but certification never rests on it alone.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import polys
from .arith import divisors, factorize, square_divisor_root
from .curves import INFINITY, Curve, Point, _add_raw, discriminant, scalar_mul
from .errors import UnsupportedOrder
from .family import FamilyParams
from .reduction import count_points, good_odd_primes, reduce_curve

# A rational point of finite order has order at most 12, and the possible
# group orders are 1..10, 12 and 16 (the last from the Z/2 x Z/8 shape).
MAX_POINT_ORDER = 12
ADMISSIBLE_GROUP_ORDERS = frozenset({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16})

SUPPORTED_ORDERS = (2, 3, 5, 7)


def torsion_order_bound(
    curve: Curve, num_primes: int, primes: list[int] | None = None
) -> tuple[int, list[tuple[int, int]]]:
    """gcd of #E(F_ell) over odd good primes, with per-prime evidence.

    By default the first `num_primes` odd primes of good reduction are
    used; an explicit prime list can be supplied instead (bad entries are
    skipped).  The torsion order divides the returned gcd.
    """
    if primes is None:
        if num_primes < 1:
            raise ValueError("num_primes must be at least 1")
        primes = good_odd_primes(curve, num_primes)
    bound = 0
    evidence = []
    for ell in primes:
        rc = reduce_curve(curve, ell)
        if not rc.is_good or ell == 2:
            continue
        n = count_points(rc)
        evidence.append((ell, n))
        bound = gcd(bound, n)
    return bound, evidence


# ---------------------------------------------------------------------------
# Division polynomials
# ---------------------------------------------------------------------------


def _psi(curve: Curve, n: int) -> tuple[list[int], int]:
    """Standard division polynomial via the double-index recursion.

    Returns (g, e) with psi_n = g(x) * y^e, e in {0, 1}: every even power
    of y is replaced by f = x^3 + bx + c, so g has integer coefficients.
    Indices are computed lazily; only what the requested n needs is built.
    """
    b, c = curve.b, curve.c
    f = [c, b, 0, 1]
    table: dict[int, tuple[list[int], int]] = {
        0: ([], 0),
        1: ([1], 0),
        2: ([2], 1),
        3: ([-b * b, 12 * c, 6 * b, 0, 3], 0),
        4: (polys.scale([-(b**3) - 8 * c * c, -4 * b * c, -5 * b * b, 20 * c, 5 * b, 0, 1], 4), 1),
    }

    def reduce_y(g: list[int], e: int) -> tuple[list[int], int]:
        while e >= 2:
            g, e = polys.mul(g, f), e - 2
        return g, e

    def psi(k: int) -> tuple[list[int], int]:
        if k in table:
            return table[k]
        m, odd = divmod(k, 2)
        if odd:
            # psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
            a, ea = psi(m + 2)
            bm, em = psi(m)
            cm, ec = psi(m - 1)
            dm, ed = psi(m + 1)
            t1, e1 = reduce_y(polys.mul(a, polys.mul(bm, polys.mul(bm, bm))), ea + 3 * em)
            t2, e2 = reduce_y(polys.mul(cm, polys.mul(dm, polys.mul(dm, dm))), ec + 3 * ed)
            assert e1 == e2 == 0, "odd-index psi must be y-free"
            out = polys.normalize(polys.add(t1, polys.scale(t2, -1))), 0
        else:
            # psi_{2m} = (psi_m / 2y) (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2)
            g, eg = psi(m)
            a, ea = psi(m + 2)
            cm, ec = psi(m - 1)
            dm, ed = psi(m - 2)
            em_, ee = psi(m + 1)
            t1, e1 = reduce_y(polys.mul(a, polys.mul(cm, cm)), ea + 2 * ec)
            t2, e2 = reduce_y(polys.mul(dm, polys.mul(em_, em_)), ed + 2 * ee)
            assert e1 == e2, "mismatched y-parity inside even-index recursion"
            prod = polys.mul(g, polys.add(t1, polys.scale(t2, -1)))
            assert all(co % 2 == 0 for co in prod)
            half = [co // 2 for co in prod]
            total_e = eg + e1 - 1  # the /(2y) removes one power of y
            if total_e == -1:
                # y^-1 = y / f: the product is divisible by f exactly
                half, total_e = polys.divide_exact(half, f), 1
            assert total_e == 1, "even-index psi must carry a single power of y"
            out = polys.normalize(half), 1
        table[k] = out
        return out

    return psi(n)


def division_polynomial(curve: Curve, n: int) -> list[int]:
    """Integer polynomial in x whose roots are the x-coordinates of the
    nontrivial n-torsion.

    n = 2 returns x^3 + bx + c (2-torsion is exactly y = 0); n in {3, 5, 7}
    returns psi_n from the standard recursion.  Other orders are out of
    scope: combined with the reduction bound they are never needed to pin
    down a rational torsion group.
    """
    if n not in SUPPORTED_ORDERS:
        raise UnsupportedOrder(f"order {n} not supported (expected one of {SUPPORTED_ORDERS})")
    if n == 2:
        return [curve.c, curve.b, 0, 1]
    g, e = _psi(curve, n)
    assert e == 0 and polys.degree(g) == (n * n - 1) // 2
    return g


@dataclass(frozen=True)
class RootVerdict:
    order: int
    has_integer_root: bool
    roots: tuple[int, ...]

    @property
    def certifies_no_point(self) -> bool:
        """No integer root means no rational point of this exact order:
        a torsion point would have integral x (Nagell-Lutz) and that x
        would be a root."""
        return not self.has_integer_root


def division_poly_has_integer_root(curve: Curve, n: int) -> RootVerdict:
    roots = tuple(polys.integer_roots(division_polynomial(curve, n)))
    return RootVerdict(n, bool(roots), roots)


# ---------------------------------------------------------------------------
# Congruence obstructions for the family curves
# ---------------------------------------------------------------------------

OBSTRUCTED = "obstructed"
NOT_OBSTRUCTED = "not_obstructed"
HYPOTHESIS_NOT_MET = "hypothesis_not_met"


@dataclass(frozen=True)
class ObstructionVerdict:
    order: int
    status: str  # OBSTRUCTED | NOT_OBSTRUCTED | HYPOTHESIS_NOT_MET
    reason: str

    @property
    def obstructed(self) -> bool:
        return self.status == OBSTRUCTED


def congruence_obstruction(params: FamilyParams, n: int) -> ObstructionVerdict:
    """Replay the residue argument that rules out a point of exact order n.

    order 2: an order-2 point is integral with y = 0, so its x divides
        (pqr)^2; all 54 signed divisor candidates are tested against the
        cubic.  No congruence hypothesis is involved.
    order 3: needs m != 0 (mod 3).  The quartic whose integer roots carry
        3-torsion x-coordinates reduces mod 3 to the constant -m^4, checked
        to be nonzero for every residue of x.
    order 5: needs m = 2 (mod 4).  Both parity branches of the mod-4
        reduction of the 4P = -P coordinate identity must close: even x
        forces m = 0 (mod 4); odd x forces (1 + m^2)^8 = 0 (mod 4).
    order 7: needs m = 2 (mod 8).  Even x forces m = 0 (mod 4); odd x
        reduces the 6P = -P identity to a unit times
        4(3 - m^2)^2 (1 + m^2)^6 + (1 + m^2)^8 mod 8, checked nonzero.
    """
    m, d = params.m, params.pqr
    if n == 2:
        for div in divisors({params.p: 2, params.q: 2, params.r: 2}):
            for x in (div, -div):
                if x**3 - m * m * x + d * d == 0:
                    return ObstructionVerdict(
                        2, NOT_OBSTRUCTED, f"x = {x} is an integral 2-torsion abscissa"
                    )
        return ObstructionVerdict(
            2, OBSTRUCTED, "no divisor +-x of (pqr)^2 satisfies x^3 - m^2 x + (pqr)^2 = 0"
        )
    if n == 3:
        if m % 3 == 0:
            return ObstructionVerdict(3, HYPOTHESIS_NOT_MET, f"m = {m} is divisible by 3")
        quartic = [-(m**4), 12 * d * d, -6 * m * m, 0, 3]
        assert all(polys.evaluate(quartic, x) % 3 != 0 for x in range(3))
        return ObstructionVerdict(
            3, OBSTRUCTED, "3-torsion quartic is = -m^4 != 0 (mod 3) for every x"
        )
    if n == 5:
        if m % 4 != 2:
            return ObstructionVerdict(5, HYPOTHESIS_NOT_MET, f"m = {m} is not 2 (mod 4)")
        even_branch = m % 4 != 0  # even x would force m = 0 (mod 4)
        odd_branch = (1 + m * m) ** 8 % 4 != 0  # odd x forces this to vanish
        assert even_branch and odd_branch
        return ObstructionVerdict(
            5, OBSTRUCTED, "both parity branches of the mod-4 reduction close"
        )
    if n == 7:
        if m % 8 != 2:
            return ObstructionVerdict(7, HYPOTHESIS_NOT_MET, f"m = {m} is not 2 (mod 8)")
        even_branch = m % 4 != 0
        odd_value = (1 + m * m) ** 16 * (
            4 * (3 - m * m) ** 2 * (1 + m * m) ** 6 + (1 + m * m) ** 8
        )
        odd_branch = odd_value % 8 != 0
        assert even_branch and odd_branch
        return ObstructionVerdict(
            7, OBSTRUCTED, "both parity branches of the mod-8 reduction close"
        )
    raise UnsupportedOrder(f"order {n} not supported (expected one of {SUPPORTED_ORDERS})")


# ---------------------------------------------------------------------------
# Nagell-Lutz enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TorsionReport:
    bound_from_reduction: int
    primes_used: tuple[tuple[int, int], ...]
    integral_candidates: tuple[Point, ...]
    torsion_order: int
    generators: tuple[Point, ...]
    structure: str
    obstructions: tuple[ObstructionVerdict, ...]

    @property
    def is_trivial(self) -> bool:
        return self.torsion_order == 1


def _point_order(curve: Curve, p: Point) -> int | None:
    """Exact order if at most MAX_POINT_ORDER, else None (infinite order)."""
    q = p
    for n in range(1, MAX_POINT_ORDER + 1):
        if q.is_infinity:
            return n
        q = _add_raw(curve, q, p)
    return None


def integral_torsion_candidates(curve: Curve) -> list[Point]:
    """Nagell-Lutz candidate set: integral points with y = 0 or y^2 | Delta.

    Every rational torsion point is among these, so the candidate list is a
    complete search space; the converse fails (a candidate can have
    infinite order) and is settled by the order test.
    """
    candidates: set[Point] = set()
    for x in polys.integer_roots([curve.c, curve.b, 0, 1]):
        candidates.add(Point(x, 0))
    y_max = square_divisor_root(factorize(discriminant(curve)))
    for y in divisors(factorize(y_max)):
        for x in polys.integer_roots([curve.c - y * y, curve.b, 0, 1]):
            candidates.add(Point(x, y))
            candidates.add(Point(x, -y))
    return sorted(candidates, key=str)


def torsion_points(curve: Curve) -> list[tuple[Point, int]]:
    """All rational torsion points with their orders, via Nagell-Lutz.

    Order-testing each candidate up to the Mazur cap recovers the full
    group; no multiple beyond 12 is ever computed.
    """
    found = [(INFINITY, 1)]
    for pt in integral_torsion_candidates(curve):
        order = _point_order(curve, pt)
        if order is not None and order > 1:
            found.append((pt, order))
    return found


def _group_structure(
    curve: Curve, points: list[tuple[Point, int]]
) -> tuple[str, tuple[Point, ...]]:
    """Structure string and generators from the full point/order list.

    Over Q the torsion group is cyclic or Z/2 x Z/2n, so one point of
    maximal order plus (in the non-cyclic case) a 2-torsion point outside
    the cyclic part always generates.
    """
    size = len(points)
    if size == 1:
        return "trivial", ()
    max_pt, max_order = max(points, key=lambda po: (po[1], str(po[0])))
    if max_order == size:
        return f"Z/{size}", (max_pt,)
    assert size == 2 * max_order and max_order % 2 == 0, "impossible rational torsion shape"
    inside = scalar_mul(curve, max_order // 2, max_pt)  # the one 2-torsion in <max_pt>
    extra = min(
        (pt for pt, o in points if o == 2 and pt != inside),
        key=str,
    )
    return f"Z/2 x Z/{max_order}", (max_pt, extra)


def nagell_lutz_torsion(
    curve: Curve,
    params: FamilyParams | None = None,
    num_primes: int = 5,
) -> TorsionReport:
    """Full torsion report: reduction bound, candidate enumeration, exact
    order tests, group structure, and (for family parameters) the
    congruence-obstruction verdicts."""
    bound, evidence = torsion_order_bound(curve, num_primes)
    candidates = integral_torsion_candidates(curve)
    points = [(INFINITY, 1)]
    for pt in candidates:
        pt_order = _point_order(curve, pt)
        if pt_order is not None and pt_order > 1:
            points.append((pt, pt_order))
    order = len(points)
    assert order in ADMISSIBLE_GROUP_ORDERS, f"inadmissible torsion order {order}"
    assert bound % order == 0, "torsion order must divide the reduction bound"
    structure, generators = _group_structure(curve, points)
    obstructions: tuple[ObstructionVerdict, ...] = ()
    if params is not None:
        obstructions = tuple(congruence_obstruction(params, n) for n in SUPPORTED_ORDERS)
        for verdict in obstructions:
            if verdict.obstructed:
                assert all(o != verdict.order for _, o in points[1:]), (
                    f"order-{verdict.order} point found despite congruence obstruction"
                )
    return TorsionReport(
        bound_from_reduction=bound,
        primes_used=tuple(evidence),
        integral_candidates=tuple(candidates),
        torsion_order=order,
        generators=generators,
        structure=structure,
        obstructions=obstructions,
    )
