#!/usr/bin/env python3
"""Reduction modulo small primes and exact point counts.

Reduces a family curve at the first few primes, classifies each reduction
as good or bad by exact divisibility of the discriminant, counts points
with the quadratic-character sum, and double-checks every count against
brute-force enumeration and the Hasse window.
"""
from ecrank import (
    Curve,
    FamilyParams,
    build_family_curve,
    count_points,
    discriminant,
    naive_point_count,
    reduce_curve,
)
from ecrank.reduction import hasse_interval

params = FamilyParams(2, 3, 7, 11)
curve = build_family_curve(params)
print(f"curve: y^2 = x^3 + ({curve.b})x + {curve.c}")
print("discriminant:", discriminant(curve))
print()

print(" ell | reduction | b, c mod ell | #E(F_ell) | enumeration | Hasse window")
for ell in (2, 3, 5, 7, 11, 13, 17, 19):
    rc = reduce_curve(curve, ell)
    if rc.is_good:
        n = count_points(rc)
        brute = naive_point_count(rc.b_mod, rc.c_mod, ell)
        lo, hi = hasse_interval(ell)
        ok = "ok" if (n == brute and lo <= n <= hi) else "MISMATCH"
        print(
            f"  {ell:3d} | good      | {rc.b_mod:3d}, {rc.c_mod:3d}     |"
            f"  {n:4d}     |  {brute:4d}       | [{lo}, {hi}] {ok}"
        )
    else:
        print(f"  {ell:3d} | bad       | {rc.b_mod:3d}, {rc.c_mod:3d}     |   --      |   --        | --")
print()
print("bad primes are exactly the divisors of the discriminant;")
print("2 always divides it because of the factor 16 in the definition.")
print()

print("counts depend only on the residues, so distinct curves can agree:")
for b, c, ell in ((0, 1, 5), (-1, 1, 5), (0, 4, 7), (0, 2, 7)):
    rc = reduce_curve(Curve(b, c), ell)
    print(f"  y^2 = x^3 + ({b})x + {c} over F_{ell}: {count_points(rc)} points")
