"""Command-line reports: json / csv / md output, golden-table data, scan cache.

Grammar (one subcommand per verified statement):

    bihindex torus {index|spectrum|scan}
    bihindex circle index
    bihindex legendre {verify|index|descartes}
    bihindex reduced {sphere|ellipsoid|torus|bessel|conformal}
    bihindex noncompact {stable|hessian|counterexample}

Exit codes: 0 success, 1 usage error, 2 verification failure.  Reports are
deterministic: identical invocations produce byte-identical output (floats
are rounded to 12 significant digits before rendering, JSON keys sorted,
scan rows ordered by k).
"""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import math
import os
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from . import __version__
from .bumps import PolynomialBump
from .circle import circle_index_nullity, circle_index_nullity_by_matrices
from .legendre import (
    CharpolyMismatchError,
    descartes_lemma_check,
    legendre_index_nullity,
    verify_p5_factorization,
)
from .noncompact import (
    COUNTEREXAMPLE_PHASE,
    COUNTEREXAMPLE_SECTION,
    CubicPhase,
    counterexample_value,
    hessian_form,
    i2_pairing,
    integrand_min,
    is_strictly_stable,
)
from .reduced import (
    DegenerateThresholdError,
    ReducedProblem,
    bessel_nullity_check,
    conformal_hessian,
    reduced_index_nullity,
    reduced_index_torus,
)
from .scan import ScanRow, conjecture_scan, scan_row_with_pairs
from .torus import index_nullity, spectrum

SCHEMA_VERSION = 1
CACHE_FILE = "torus_scan.jsonl"
CACHE_ENV = "BIHINDEX_CACHE_DIR"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1 with one-line diagnostics
        raise UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    """A fully resolved invocation; equal configs yield byte-identical reports."""

    command: str
    parameters: tuple[tuple[str, object], ...]
    format: str
    output: str | None
    cache_dir: str | None
    workers: int

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        skip = {"group", "command", "format", "output", "cache_dir", "workers"}
        params = tuple(
            sorted((k, v) for k, v in vars(args).items() if k not in skip)
        )
        return cls(
            command=f"{args.group} {args.command}",
            parameters=params,
            format=args.format,
            output=args.output,
            cache_dir=args.cache_dir,
            workers=args.workers,
        )


# -- deterministic rendering -----------------------------------------------------

def _round_floats(obj: Any) -> Any:
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def render_json(report: dict) -> str:
    return json.dumps(_round_floats(report), sort_keys=True, indent=2) + "\n"


def render_csv(report: dict) -> str:
    rows = report["results"].get("csv_rows")
    header = report["results"].get("csv_header")
    if rows is None or header is None:
        raise UsageError(f"no csv rendering for command {report['command']!r}")
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(str(_round_floats(x)) for x in row) + "\n")
    return buf.getvalue()


def render_md(report: dict) -> str:
    rows = report["results"].get("csv_rows")
    header = report["results"].get("csv_header")
    if rows is None or header is None:
        raise UsageError(f"no md rendering for command {report['command']!r}")
    out = [f"### {report['command']}", ""]
    out.append("| " + " | ".join(header) + " |")
    out.append("|" + "|".join(["---"] * len(header)) + "|")
    for row in rows:
        out.append("| " + " | ".join(str(_round_floats(x)) for x in row) + " |")
    out.append("")
    return "\n".join(out)


RENDERERS = {"json": render_json, "csv": render_csv, "md": render_md}


def make_report(command: str, inputs: dict, results: dict, anchor: str) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "version": __version__,
        "command": command,
        "inputs": inputs,
        "results": results,
        "paper_anchor": anchor,
    }


# -- scan cache -------------------------------------------------------------------

class CacheError(RuntimeError):
    pass


@dataclass
class ScanCache:
    """Append-only JSON-lines cache of conjecture-scan rows.

    The first line is a header carrying the format version and scan bound;
    each record stores (k, f, g, index, nullity), a digest of the sorted
    negative-pair list, and three sampled (m, n, sign) probes.  Loading a
    record recomputes one probe's discriminant sign as a spot revalidation.
    """

    path: str
    rng: random.Random | None = None

    HEADER = {"schema": SCHEMA_VERSION, "kind": "torus-scan", "bound": "m^2+n^2 < 9*k^2"}

    def _rng(self) -> random.Random:
        return self.rng if self.rng is not None else random.Random()

    @staticmethod
    def _digest(neg_pairs: list[tuple[int, int]]) -> str:
        h = hashlib.sha256()
        for m, n in neg_pairs:
            h.update(f"{m},{n};".encode())
        return h.hexdigest()

    def _record_for(self, k: int) -> dict:
        from .torus import discriminant, enumeration_bound, int_sign

        row, neg, zero = scan_row_with_pairs(k)
        rng = self._rng()
        bound = enumeration_bound(k)
        probes = []
        for _ in range(3):
            while True:
                m = rng.randint(1, int(math.isqrt(bound - 1)))
                n_cap = math.isqrt(bound - m * m - 1) if bound - m * m - 1 >= 1 else 0
                if n_cap >= 1:
                    n = rng.randint(1, n_cap)
                    break
            probes.append([m, n, int_sign(discriminant(k, m, n))])
        return {
            "k": row.k,
            "f": row.f,
            "g": row.g,
            "index": row.index,
            "nullity": row.nullity,
            "neg_digest": self._digest(neg),
            "zero_pairs": [list(p) for p in zero],
            "probes": probes,
        }

    def load(self) -> dict[int, ScanRow]:
        from .torus import discriminant, int_sign

        if not os.path.exists(self.path):
            return {}
        rows: dict[int, ScanRow] = {}
        rng = self._rng()
        with open(self.path, encoding="utf-8") as fh:
            header = json.loads(fh.readline())
            if header.get("schema") != SCHEMA_VERSION or header.get("kind") != "torus-scan":
                raise CacheError(f"unrecognized cache header in {self.path}")
            for line in fh:
                if not line.strip():
                    continue
                rec = json.loads(line)
                m, n, sign = rec["probes"][rng.randrange(len(rec["probes"]))]
                if int_sign(discriminant(rec["k"], m, n)) != sign:
                    raise CacheError(
                        f"cache revalidation failed at k={rec['k']}, probe ({m},{n})"
                    )
                rows[rec["k"]] = ScanRow(
                    k=rec["k"], f=rec["f"], g=rec["g"], index=rec["index"], nullity=rec["nullity"]
                )
        return rows

    def append(self, ks: list[int]) -> list[dict]:
        new = not os.path.exists(self.path)
        records = []
        with open(self.path, "a", encoding="utf-8") as fh:
            if new:
                fh.write(json.dumps(self.HEADER, sort_keys=True) + "\n")
            for k in ks:
                rec = self._record_for(k)
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
                records.append(rec)
        return records


# -- argument plumbing -------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv", "md"), default="json")
    p.add_argument("--output", default=None, help="write the report to this file")
    p.add_argument("--cache-dir", default=None, help=f"scan cache dir (or ${CACHE_ENV})")
    p.add_argument("--workers", type=int, default=1)


def _parse_rational(text: str, name: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{name} must be an exact rational like 3, 1/2 or 0.25: {exc}")


def _parse_phase(text: str) -> CubicPhase:
    parts = text.split(",")
    if len(parts) != 4:
        raise UsageError("--phase needs four comma-separated rationals a,b,c,d")
    a, b, c, d = (_parse_rational(t.strip(), "--phase entry") for t in parts)
    return CubicPhase(a, b, c, d)


def build_parser() -> _Parser:
    p = _Parser(prog="bihindex", description=__doc__)
    p.add_argument("--version", action="version", version=f"bihindex {__version__}")
    groups = p.add_subparsers(dest="group", required=True)

    torus = groups.add_parser("torus").add_subparsers(dest="command", required=True)
    t_index = torus.add_parser("index", help="exact index/nullity for one k")
    t_index.add_argument("--k", type=int, required=True)
    _add_common(t_index)
    t_spec = torus.add_parser("spectrum", help="merged spectrum up to a Laplace level")
    t_spec.add_argument("--k", type=int, required=True)
    t_spec.add_argument("--lambda-max", type=int, default=None,
                        help="Laplace level cap (default 4*k^2, covering all nonpositive branches)")
    _add_common(t_spec)
    t_scan = torus.add_parser("scan", help="nullity-conjecture scan for k=1..k-max")
    t_scan.add_argument("--k-max", type=int, required=True)
    _add_common(t_scan)

    circle = groups.add_parser("circle").add_subparsers(dest="command", required=True)
    c_index = circle.add_parser("index")
    c_index.add_argument("--k", type=int, required=True)
    c_index.add_argument("--check-matrices", action="store_true",
                         help="also recount via Sturm on the block charpolys")
    _add_common(c_index)

    leg = groups.add_parser("legendre").add_subparsers(dest="command", required=True)
    l_verify = leg.add_parser("verify", help="block symmetry + charpoly == quintic^4")
    l_verify.add_argument("--m", type=int, required=True)
    l_verify.add_argument("--n", type=int, required=True)
    _add_common(l_verify)
    l_index = leg.add_parser("index", help="index 11 / nullity 18 ledger")
    _add_common(l_index)
    l_desc = leg.add_parser("descartes", help="six-sign certificate over a range")
    l_desc.add_argument("--m", type=int, default=50, help="range bound for m")
    l_desc.add_argument("--n", type=int, default=50, help="range bound for n")
    _add_common(l_desc)

    red = groups.add_parser("reduced").add_subparsers(dest="command", required=True)
    r_sphere = red.add_parser("sphere")
    r_sphere.add_argument("--n-dim", type=int, required=True)
    r_sphere.add_argument("--radius", type=str, required=True)
    _add_common(r_sphere)
    r_ell = red.add_parser("ellipsoid")
    r_ell.add_argument("--n-dim", type=int, required=True)
    r_ell.add_argument("--radius", type=str, required=True)
    r_ell.add_argument("--b", type=str, required=True)
    _add_common(r_ell)
    r_torus = red.add_parser("torus")
    r_torus.add_argument("--k", type=int, required=True)
    _add_common(r_torus)
    r_bessel = red.add_parser("bessel")
    _add_common(r_bessel)
    r_conf = red.add_parser("conformal")
    _add_common(r_conf)

    non = groups.add_parser("noncompact").add_subparsers(dest="command", required=True)
    n_stable = non.add_parser("stable")
    n_stable.add_argument("--phase", type=str, default=None,
                          help="cubic coefficients a,b,c,d as exact rationals")
    _add_common(n_stable)
    n_hess = non.add_parser("hessian")
    n_hess.add_argument("--phase", type=str, default=None)
    _add_common(n_hess)
    n_cx = non.add_parser("counterexample")
    _add_common(n_cx)
    return p


# -- command implementations ---------------------------------------------------------

def _cmd_torus_index(args) -> tuple[dict, int]:
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    r = index_nullity(args.k)
    results = {
        "k": r.k,
        "f": r.f,
        "g": r.g,
        "index": r.index,
        "nullity": r.nullity,
        "negative_pairs": [list(p) for p in r.negative_pairs],
        "zero_pairs": [list(p) for p in r.zero_pairs],
        "csv_header": ["k", "f", "g", "index", "nullity"],
        "csv_rows": [[r.k, r.f, r.g, r.index, r.nullity]],
    }
    return make_report("torus index", {"k": args.k}, results, "torus-index-table"), EXIT_OK


def _cmd_torus_spectrum(args) -> tuple[dict, int]:
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    lam_max = args.lambda_max if args.lambda_max is not None else 4 * args.k * args.k
    merged = spectrum(args.k, lam_max)
    rows = [
        [str(e.eigenvalue), float(e.eigenvalue), e.multiplicity, ";".join(e.branches)]
        for e in merged
    ]
    results = {
        "lambda_max": lam_max,
        "entries": [
            {
                "value_exact": str(e.eigenvalue),
                "value_float": float(e.eigenvalue),
                "multiplicity": e.multiplicity,
                "branches": list(e.branches),
            }
            for e in merged
        ],
        "csv_header": ["value_exact", "value_float", "multiplicity", "branches"],
        "csv_rows": rows,
    }
    inputs = {"k": args.k, "lambda_max": lam_max}
    return make_report("torus spectrum", inputs, results, "torus-eigenvalue-catalog"), EXIT_OK


def _resolve_cache_dir(args) -> str | None:
    return args.cache_dir or os.environ.get(CACHE_ENV)


def _cmd_torus_scan(args) -> tuple[dict, int]:
    if args.k_max < 1:
        raise UsageError("--k-max must be >= 1")
    cache_dir = _resolve_cache_dir(args)
    rows: dict[int, ScanRow] = {}
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        cache = ScanCache(os.path.join(cache_dir, CACHE_FILE))
        rows = {k: r for k, r in cache.load().items() if k <= args.k_max}
        missing = [k for k in range(1, args.k_max + 1) if k not in rows]
        if missing:
            cache.append(missing)
            rows.update({k: r for k, r in cache.load().items() if k <= args.k_max})
    else:
        rows = {r.k: r for r in conjecture_scan(args.k_max, workers=max(1, args.workers))}
    ordered = [rows[k] for k in sorted(rows)]
    flagged = [r.k for r in ordered if r.flagged]
    results = {
        "k_max": args.k_max,
        "all_nullity_five": not flagged,
        "flagged_k": flagged,
        "csv_header": ["k", "f", "g", "index", "nullity"],
        "csv_rows": [[r.k, r.f, r.g, r.index, r.nullity] for r in ordered],
    }
    inputs = {"k_max": args.k_max, "workers": args.workers, "cache_dir": cache_dir}
    code = EXIT_OK if (not flagged or args.k_max > 1500) else EXIT_VERIFICATION
    if flagged:
        code = EXIT_VERIFICATION
    return make_report("torus scan", inputs, results, "torus-nullity-conjecture"), code


def _cmd_circle_index(args) -> tuple[dict, int]:
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    idx, nul = circle_index_nullity(args.k)
    results = {
        "k": args.k,
        "index": idx,
        "nullity": nul,
        "csv_header": ["k", "index", "nullity"],
        "csv_rows": [[args.k, idx, nul]],
    }
    code = EXIT_OK
    if args.check_matrices:
        idx2, nul2 = circle_index_nullity_by_matrices(args.k)
        results["matrix_counts"] = {"index": idx2, "nullity": nul2}
        if (idx2, nul2) != (idx, nul):
            code = EXIT_VERIFICATION
    return make_report("circle index", {"k": args.k}, results, "circle-index-formula"), code


def _cmd_legendre_verify(args) -> tuple[dict, int]:
    if args.m < 1 or args.n < 1:
        raise UsageError("--m and --n must be >= 1 (interior blocks)")
    try:
        rep = verify_p5_factorization(args.m, args.n)
    except CharpolyMismatchError as exc:
        results = {"matched": False, "detail": str(exc)}
        return (
            make_report("legendre verify", {"m": args.m, "n": args.n}, results,
                        "legendre-charpoly-quintic-power"),
            EXIT_VERIFICATION,
        )
    results = {
        "matched": True,
        "block_order": rep.block_order,
        "quintic_coefficients": list(rep.quintic.coeffs),
        "csv_header": ["m", "n", "block_order", "matched"],
        "csv_rows": [[args.m, args.n, rep.block_order, True]],
    }
    return (
        make_report("legendre verify", {"m": args.m, "n": args.n}, results,
                    "legendre-charpoly-quintic-power"),
        EXIT_OK,
    )


def _cmd_legendre_index(args) -> tuple[dict, int]:
    led = legendre_index_nullity()
    families = ["constant", "axis-m", "axis-n", "interior-1-1", "interior-2-1"]
    rows = [
        [fam, i, nu]
        for fam, i, nu in zip(families, led.index_split, led.nullity_split)
    ]
    rows.append(["total", led.index, led.nullity])
    results = {
        "index": led.index,
        "nullity": led.nullity,
        "index_split": list(led.index_split),
        "nullity_split": list(led.nullity_split),
        "split_matches_cited": led.split_matches_cited,
        "axis_scans": {"m": led.axis_m_scanned_to, "n": led.axis_n_scanned_to},
        "csv_header": ["family", "index", "nullity"],
        "csv_rows": rows,
    }
    code = EXIT_OK if (led.index, led.nullity) == (11, 18) else EXIT_VERIFICATION
    return make_report("legendre index", {}, results, "legendre-index-11-nullity-18"), code


def _cmd_legendre_descartes(args) -> tuple[dict, int]:
    if args.m < 3 or args.n < 3:
        raise UsageError("range bounds must be >= 3")
    rep = descartes_lemma_check(args.m, args.n)
    results = {
        "checked": rep.checked,
        "violations": [list(v) for v in rep.violations],
        "sturm_confirmed": rep.sturm_confirmed,
        "csv_header": ["m_max", "n_max", "checked", "violations", "sturm_confirmed"],
        "csv_rows": [[rep.m_max, rep.n_max, rep.checked, len(rep.violations), rep.sturm_confirmed]],
    }
    code = EXIT_OK if not rep.violations and rep.sturm_confirmed else EXIT_VERIFICATION
    return (
        make_report("legendre descartes", {"m_max": args.m, "n_max": args.n}, results,
                    "legendre-descartes-certificate"),
        code,
    )


def _cmd_reduced_sphere(args) -> tuple[dict, int]:
    if args.n_dim < 2:
        raise UsageError("--n-dim must be >= 2")
    radius = _parse_rational(args.radius, "--radius")
    try:
        problem = ReducedProblem(n=args.n_dim, radius=radius)
        idx, nul = reduced_index_nullity(problem)
    except (DegenerateThresholdError, ValueError) as exc:
        raise UsageError(str(exc))
    results = {
        "index": idx,
        "nullity": nul,
        "threshold_fourth_power": str(problem.quartic_constant()),
        "csv_header": ["n", "radius", "index", "nullity"],
        "csv_rows": [[args.n_dim, str(radius), idx, nul]],
    }
    inputs = {"n_dim": args.n_dim, "radius": str(radius)}
    return make_report("reduced sphere", inputs, results, "reduced-index-floor-formula"), EXIT_OK


def _cmd_reduced_ellipsoid(args) -> tuple[dict, int]:
    if args.n_dim < 2:
        raise UsageError("--n-dim must be >= 2")
    radius = _parse_rational(args.radius, "--radius")
    b = _parse_rational(args.b, "--b")
    try:
        problem = ReducedProblem(n=args.n_dim, radius=radius, b=b)
        idx, nul = reduced_index_nullity(problem)
    except (DegenerateThresholdError, ValueError) as exc:
        raise UsageError(str(exc))
    results = {
        "index": idx,
        "nullity": nul,
        "critical_latitude": problem.critical_latitude(),
        "threshold_fourth_power": str(problem.quartic_constant()),
        "csv_header": ["n", "radius", "b", "index", "nullity"],
        "csv_rows": [[args.n_dim, str(radius), str(b), idx, nul]],
    }
    inputs = {"n_dim": args.n_dim, "radius": str(radius), "b": str(b)}
    return (
        make_report("reduced ellipsoid", inputs, results, "reduced-ellipsoid-floor-formula"),
        EXIT_OK,
    )


def _cmd_reduced_torus(args) -> tuple[dict, int]:
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    idx, nul = reduced_index_torus(args.k)
    results = {
        "index_reduced": idx,
        "nullity_reduced": nul,
        "csv_header": ["k", "index_reduced", "nullity_reduced"],
        "csv_rows": [[args.k, idx, nul]],
    }
    return make_report("reduced torus", {"k": args.k}, results, "reduced-torus-index"), EXIT_OK


def _cmd_reduced_bessel(args) -> tuple[dict, int]:
    rep = bessel_nullity_check()
    results = {
        "derivatives_at_zero": list(rep.derivatives_at_zero),
        "ratio_mean": rep.ratio_mean,
        "ratio_spread": rep.ratio_spread,
        "fourth_derivative_normalized": rep.fourth_derivative_normalized,
        "fourth_derivative_target": rep.fourth_derivative_target,
        "all_ok": rep.all_ok,
        "csv_header": ["quantity", "value"],
        "csv_rows": [
            ["d1_at_0", rep.derivatives_at_zero[0]],
            ["d2_at_0", rep.derivatives_at_zero[1]],
            ["d3_at_0", rep.derivatives_at_zero[2]],
            ["ratio_mean", rep.ratio_mean],
            ["ratio_spread", rep.ratio_spread],
            ["d4_normalized", rep.fourth_derivative_normalized],
            ["d4_target", rep.fourth_derivative_target],
        ],
    }
    code = EXIT_OK if rep.all_ok else EXIT_VERIFICATION
    return make_report("reduced bessel", {}, results, "bessel-nullity-direction"), code


def _cmd_reduced_conformal(args) -> tuple[dict, int]:
    bump = PolynomialBump.make(center=0.0, halfwidth=1.0, power=6)
    value = conformal_hessian(bump)
    results = {
        "test_function": "polynomial bump (1-u^2)^6 on [-1, 1]",
        "hessian": value,
        "positive": value > 0,
        "csv_header": ["test_function", "hessian", "positive"],
        "csv_rows": [["(1-u^2)^6", value, value > 0]],
    }
    code = EXIT_OK if value > 0 else EXIT_VERIFICATION
    return make_report("reduced conformal", {}, results, "conformal-diffeo-stability"), code


_CANONICAL_PHASES = ("0,1,0,0", "1,0,1,0", "1,0,-2,0")


def _cmd_noncompact_stable(args) -> tuple[dict, int]:
    texts = [args.phase] if args.phase else list(_CANONICAL_PHASES)
    rows = []
    for text in texts:
        phase = _parse_phase(text)
        verdict = is_strictly_stable(phase)
        wmin = integrand_min(phase)
        rows.append(
            [str(phase.a), str(phase.b), str(phase.c), str(phase.d),
             verdict.value, str(wmin)]
        )
    results = {
        "phases": [
            {"a": r[0], "b": r[1], "c": r[2], "d": r[3],
             "stability": r[4], "integrand_min": r[5]}
            for r in rows
        ],
        "csv_header": ["a", "b", "c", "d", "stability", "integrand_min"],
        "csv_rows": rows,
    }
    inputs = {"phase": args.phase}
    return (
        make_report("noncompact stable", inputs, results, "noncompact-stability-certificate"),
        EXIT_OK,
    )


def _cmd_noncompact_hessian(args) -> tuple[dict, int]:
    phase = _parse_phase(args.phase) if args.phase else COUNTEREXAMPLE_PHASE
    value = hessian_form(phase, COUNTEREXAMPLE_SECTION)
    pairing = i2_pairing(phase, COUNTEREXAMPLE_SECTION)
    agree = abs(value - pairing) <= 1e-6 * max(abs(value), 1.0)
    results = {
        "section": "normal cos^6 bump on a half-period",
        "hessian": value,
        "operator_pairing": pairing,
        "integration_by_parts_agrees": agree,
        "csv_header": ["a", "b", "c", "d", "hessian", "operator_pairing"],
        "csv_rows": [[str(phase.a), str(phase.b), str(phase.c), str(phase.d), value, pairing]],
    }
    code = EXIT_OK if agree else EXIT_VERIFICATION
    return make_report("noncompact hessian", {"phase": args.phase}, results,
                       "noncompact-hessian-form"), code


def _cmd_noncompact_counterexample(args) -> tuple[dict, int]:
    value = counterexample_value()
    ok = -3.547 <= value <= -3.527
    results = {
        "value": value,
        "window": [-3.547, -3.527],
        "within_window": ok,
        "csv_header": ["value", "window_lo", "window_hi", "within_window"],
        "csv_rows": [[value, -3.547, -3.527, ok]],
    }
    code = EXIT_OK if ok else EXIT_VERIFICATION
    return make_report("noncompact counterexample", {}, results,
                       "noncompact-counterexample-value"), code


_HANDLERS = {
    ("torus", "index"): _cmd_torus_index,
    ("torus", "spectrum"): _cmd_torus_spectrum,
    ("torus", "scan"): _cmd_torus_scan,
    ("circle", "index"): _cmd_circle_index,
    ("legendre", "verify"): _cmd_legendre_verify,
    ("legendre", "index"): _cmd_legendre_index,
    ("legendre", "descartes"): _cmd_legendre_descartes,
    ("reduced", "sphere"): _cmd_reduced_sphere,
    ("reduced", "ellipsoid"): _cmd_reduced_ellipsoid,
    ("reduced", "torus"): _cmd_reduced_torus,
    ("reduced", "bessel"): _cmd_reduced_bessel,
    ("reduced", "conformal"): _cmd_reduced_conformal,
    ("noncompact", "stable"): _cmd_noncompact_stable,
    ("noncompact", "hessian"): _cmd_noncompact_hessian,
    ("noncompact", "counterexample"): _cmd_noncompact_counterexample,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = RunConfig.from_args(args)
        handler = _HANDLERS[(args.group, args.command)]
        report, code = handler(args)
        text = RENDERERS[config.format](report)
    except UsageError as exc:
        print(f"bihindex: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CacheError as exc:
        print(f"bihindex: cache error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    if config.output:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
