"""Machine-checkable curve records, their serialization, and sweeps.

A record is one JSON object with a fixed field order.  Every integer that
can grow without bound (parameters, coefficients, discriminants, counts,
coordinates) is serialized as a decimal string so arbitrary precision
survives any parser; small structural fields (schema version, flags, the
rank bound) stay plain JSON numbers.  Identical inputs produce
byte-identical lines except for the "timings" field, which recheck
ignores.  Sweeps stream records in lexicographic (m, p, q, r) order,
optionally through a process pool, and can resume an interrupted run by
counting the records already on disk.
"""
from __future__ import annotations

import json
import multiprocessing
import os
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .arith import is_prime
from .curves import Point, discriminant
from .descent import (
    ClassVerdict,
    CongruenceEvidence,
    ProbePoint,
    RankCertificate,
    rank_ge2_certificate,
    rank_ge3_probe,
)
from .errors import NotPrime, PrimeIsTwo
from .family import FamilyParams, build_family_curve, validate_hypotheses
from .torsion import TorsionReport

SCHEMA_VERSION = 1

CSV_HEADER = "m,p,q,r,discriminant,torsion_order,rank_lower_bound,probe_independent"


@dataclass(frozen=True)
class SweepSpec:
    """Full description of a sweep; records are a function of this alone."""

    m_values: tuple[int, ...]
    prime_pool: tuple[int, ...]
    height_bound: int = 10_000
    num_reduction_primes: int = 5
    den_bound: int = 2
    probe: bool = True
    require_hypotheses: bool = False
    output_path: str | None = None
    output_format: str = "jsonl"  # "jsonl" | "csv"

    def __post_init__(self):
        if not self.prime_pool:
            raise ValueError("prime pool must not be empty")
        if len(self.prime_pool) < 3:
            raise ValueError("prime pool needs at least three primes")
        if self.output_format not in ("jsonl", "csv"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        for p in self.prime_pool:
            if p == 2:
                raise PrimeIsTwo("prime pool entries must be odd")
            if not is_prime(p):
                raise NotPrime(f"prime pool entry {p} is not prime")
        if self.require_hypotheses:
            bad = [m for m in self.m_values if m % 32 != 2]
            if bad:
                raise ValueError(f"hypothesis mode requires m = 2 (mod 32); offending m: {bad}")

    def combos(self) -> list[tuple[int, int, int, int]]:
        out = []
        for m in sorted(set(self.m_values)):
            for trip in combinations(sorted(set(self.prime_pool)), 3):
                out.append((m,) + trip)
        return out


# ---------------------------------------------------------------------------
# Serialization helpers
# ---------------------------------------------------------------------------


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _point_obj(p: Point | None):
    if p is None or p.is_infinity:
        return None
    return {"x": _frac_str(p.x), "y": _frac_str(p.y)}


def _congruence_obj(ev: CongruenceEvidence | None):
    if ev is None:
        return None
    return {"target": ev.target_label, "modulus": ev.modulus, "detail": ev.detail}


def _class_obj(v: ClassVerdict):
    return {
        "point": _point_obj(v.point),
        "nonzero": v.nonzero,
        "quartic": [str(c) for c in v.quartic] if v.quartic is not None else None,
        "quartic_roots": [_frac_str(r) for r in v.quartic_roots]
        if v.quartic_roots is not None
        else None,
        "preimages": [_point_obj(p) for p in v.preimages] if v.preimages is not None else None,
        "congruence": _congruence_obj(v.congruence),
    }


def _torsion_obj(t: TorsionReport):
    return {
        "order": str(t.torsion_order),
        "structure": t.structure,
        "bound_from_reduction": str(t.bound_from_reduction),
        "reduction_counts": [[str(ell), str(n)] for ell, n in t.primes_used],
        "integral_candidates": [_point_obj(p) for p in t.integral_candidates],
        "generators": [_point_obj(p) for p in t.generators],
        "obstructions": [
            {"order": o.order, "status": o.status, "reason": o.reason} for o in t.obstructions
        ],
    }


def _probe_point_obj(pp: ProbePoint):
    return {
        "point": _point_obj(pp.point),
        "independent": pp.independent,
        "classes": {
            "c": _class_obj(pp.class_c),
            "c_base": _class_obj(pp.class_c_base),
            "c_shifted": _class_obj(pp.class_c_shifted),
            "c_combined": _class_obj(pp.class_c_combined),
        },
    }


def certificate_to_record(
    cert: RankCertificate,
    *,
    reduction_primes: int,
    probe: bool,
    height_bound: int,
    den_bound: int,
    timings: dict[str, float] | None = None,
) -> dict:
    params = cert.params
    curve = build_family_curve(params)
    hyp = validate_hypotheses(params)
    record = {
        "schema": SCHEMA_VERSION,
        "params": {
            "m": str(params.m),
            "p": str(params.p),
            "q": str(params.q),
            "r": str(params.r),
        },
        "options": {
            "reduction_primes": reduction_primes,
            "probe": probe,
            "height_bound": height_bound,
            "den_bound": den_bound,
        },
        "curve": {"b": str(curve.b), "c": str(curve.c)},
        "discriminant": str(discriminant(curve)),
        "hypotheses": {
            "mod3_ok": hyp.mod3_ok,
            "mod2k_ok": hyp.mod2k_ok,
            "coprime_ok": hyp.coprime_ok,
            "primes_ok": hyp.primes_ok,
            "all_ok": hyp.all_ok,
            "k_witness": params.k_witness,  # null means every k works (m == 2)
        },
        "torsion": _torsion_obj(cert.torsion),
        "rank": {
            "torsion_trivial": cert.torsion_trivial,
            "classes": {
                "base": _class_obj(cert.class_base),
                "shifted": _class_obj(cert.class_shifted),
                "combined": _class_obj(cert.class_combined),
            },
            "classes_distinct": cert.classes_distinct,
            "rank_lower_bound": cert.rank_lower_bound,
        },
        "probe": None
        if cert.probe_height is None
        else {
            "height_bound": str(cert.probe_height),
            "points_found": len(cert.probe_points),
            "independent_found": any(p.independent for p in cert.probe_points),
            "points": [_probe_point_obj(p) for p in cert.probe_points],
        },
        "timings": timings or {},
    }
    return record


def build_curve_record(
    params: FamilyParams,
    *,
    reduction_primes: int = 5,
    probe: bool = True,
    height_bound: int = 10_000,
    den_bound: int = 2,
) -> dict:
    """Run the full pipeline on one parameter set and package the result."""
    t0 = time.perf_counter()
    cert = rank_ge2_certificate(params, reduction_primes)
    t1 = time.perf_counter()
    if probe:
        cert = rank_ge3_probe(
            params, height_bound, reduction_primes, den_bound, base_certificate=cert
        )
    t2 = time.perf_counter()
    timings = {
        "rank_certificate_s": round(t1 - t0, 6),
        "probe_s": round(t2 - t1, 6),
        "total_s": round(t2 - t0, 6),
    }
    return certificate_to_record(
        cert,
        reduction_primes=reduction_primes,
        probe=probe,
        height_bound=height_bound,
        den_bound=den_bound,
        timings=timings,
    )


def record_to_line(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"), sort_keys=False)


def record_to_csv_row(record: dict) -> str:
    probe = record.get("probe")
    return ",".join(
        [
            record["params"]["m"],
            record["params"]["p"],
            record["params"]["q"],
            record["params"]["r"],
            record["discriminant"],
            record["torsion"]["order"],
            str(record["rank"]["rank_lower_bound"]),
            str(bool(probe and probe["independent_found"])).lower(),
        ]
    )


def canonical_comparable(record: dict) -> str:
    """Serialized form with the timings field removed; equality of these
    strings is what recheck and the determinism tests assert."""
    stripped = {k: v for k, v in record.items() if k != "timings"}
    return json.dumps(stripped, separators=(",", ":"), sort_keys=False)


def params_from_record(record: dict) -> FamilyParams:
    p = record["params"]
    return FamilyParams(int(p["m"]), int(p["p"]), int(p["q"]), int(p["r"]))


def recheck_record(record: dict) -> bool:
    """Re-derive every verdict from the raw parameters and options; True
    iff the recomputation reproduces the record exactly (timings aside)."""
    try:
        params = params_from_record(record)
        opts = record["options"]
        fresh = build_curve_record(
            params,
            reduction_primes=int(opts["reduction_primes"]),
            probe=bool(opts["probe"]),
            height_bound=int(opts["height_bound"]),
            den_bound=int(opts["den_bound"]),
        )
    except Exception:
        return False
    return canonical_comparable(fresh) == canonical_comparable(record)


# ---------------------------------------------------------------------------
# Sweep engine
# ---------------------------------------------------------------------------


def _sweep_worker(args) -> str:
    (m, p, q, r), opts = args
    record = build_curve_record(
        FamilyParams(m, p, q, r),
        reduction_primes=opts["reduction_primes"],
        probe=opts["probe"],
        height_bound=opts["height_bound"],
        den_bound=opts["den_bound"],
    )
    return record_to_line(record)


def run_sweep(spec: SweepSpec, threads: int = 1, progress=None) -> list[str]:
    """Execute a sweep, returning the jsonl lines in combo order.

    When spec.output_path is set, lines are appended as they complete
    (single writer); a partial file from an earlier run is detected by
    line count and those combos are skipped.  Worker processes share
    nothing; ordering is restored by the pool's ordered imap.
    """
    combos = spec.combos()
    opts = {
        "reduction_primes": spec.num_reduction_primes,
        "probe": spec.probe,
        "height_bound": spec.height_bound,
        "den_bound": spec.den_bound,
    }
    skip = 0
    existing: list[str] = []
    out_path = spec.output_path
    if out_path and os.path.exists(out_path):
        with open(out_path, "r", encoding="utf-8") as fh:
            existing = [ln.rstrip("\n") for ln in fh if ln.strip()]
        skip = len(existing)
        if spec.output_format == "csv" and skip:
            skip -= 1  # header line
    todo = combos[skip:]
    jobs = [(combo, opts) for combo in todo]
    lines: list[str] = []

    def emit(line: str, fh) -> None:
        lines.append(line)
        if fh is not None:
            if spec.output_format == "csv":
                fh.write(record_to_csv_row(json.loads(line)) + "\n")
            else:
                fh.write(line + "\n")
            fh.flush()
        if progress is not None:
            progress(len(lines) + skip, len(combos))

    fh = None
    try:
        if out_path:
            fh = open(out_path, "a", encoding="utf-8")
            if spec.output_format == "csv" and skip == 0:
                fh.write(CSV_HEADER + "\n")
        if threads <= 1 or len(jobs) <= 1:
            for job in jobs:
                emit(_sweep_worker(job), fh)
        else:
            with multiprocessing.Pool(processes=threads) as pool:
                for line in pool.imap(_sweep_worker, jobs, chunksize=1):
                    emit(line, fh)
    finally:
        if fh is not None:
            fh.close()
    return lines
