"""Command-line front end: configuration ingestion, subcommand dispatch,
deterministic report emission.

Every subcommand prints one human-readable line per verdict and, with
--json PATH, writes a report whose body is byte-identical across runs
with the same manifest (the timestamp is the only varying field).  Exit
codes: 0 all checks passed, 1 at least one failed, 2 usage or input
error.
"""

import argparse
import json
import sys
from datetime import datetime, timezone

import numpy as np

from . import continuity, corpus, sequences, topology
from .alpha import (alpha_norm_membership, alpha_norm_nonmembership,
                    closed_form_standard, estimate_comparability_constant,
                    MEMBERSHIP, NONMEMBERSHIP)
from .config import ToleranceConfig, DEFAULT_CONFIG
from .errors import IFNLSError, SchemaError
from .spaces import (load_space, space_to_dict, verify_ifn_axioms,
                     verify_extended_conditions)
from .verdicts import summarize, PASS, FAIL, CONVERGES, DIVERGES

ARTIFACT_VERSION = "0.1.0"


def _parse_vector(text: str) -> list[float]:
    try:
        return [float(p) for p in text.split(",")]
    except ValueError as exc:
        raise SchemaError(f"bad vector {text!r}: {exc}") from exc


def _parse_points(text: str) -> list[list[float]]:
    return [_parse_vector(part) for part in text.split(";") if part.strip()]


def _parse_basis(text: str) -> list[list[float]]:
    return _parse_points(text)


def _entry(name: str, verdict) -> dict:
    """Normalize any verdict object into a named report entry."""
    d = verdict.to_dict()
    d["name"] = name
    return d


def _status_line(entry: dict) -> str:
    status = entry["status"]
    flat = {CONVERGES: PASS, DIVERGES: FAIL}.get(status, status)
    return f"[{flat.upper():12s}] {entry['name']} ({status})"


def build_report(command: str, verdicts: list[dict], seed: int,
                 space_spec: dict | None,
                 config: ToleranceConfig = DEFAULT_CONFIG) -> dict:
    deviations = sorted({note for v in verdicts for note in v.get("notes", [])})
    return {
        "manifest": {
            "command": command,
            "space_spec": space_spec,
            "config": config.to_dict(),
            "seed": seed,
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "artifact_version": ARTIFACT_VERSION,
        },
        "verdicts": verdicts,
        "summary": summarize(verdicts),
        "deviations": deviations,
    }


def report_body(report: dict) -> str:
    """The deterministic part of a report: everything but the timestamp."""
    clone = json.loads(json.dumps(report))
    clone["manifest"].pop("timestamp", None)
    return json.dumps(clone, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# Subcommand handlers; each returns (verdict entries, space spec or None)
# ---------------------------------------------------------------------------

def _cmd_verify_axioms(args):
    space = load_space(args.space)
    axioms = verify_ifn_axioms(space, args.samples, args.seed)
    extended = verify_extended_conditions(space, min(args.samples, 128),
                                          seed=args.seed)
    return [_entry("ifn_axioms", axioms),
            _entry("extended_conditions", extended)], space_to_dict(space)


def _cmd_alpha_norm(args):
    space = load_space(args.space)
    x = np.asarray(_parse_vector(args.vector))
    mem = alpha_norm_membership(space, x, args.alpha)
    non = alpha_norm_nonmembership(space, x, args.alpha)
    crisp_value = float(space.ifn.crisp(x))
    entries = []
    for family, result, oracle in (
            (MEMBERSHIP, mem,
             closed_form_standard(crisp_value, space.ifn.k, args.alpha,
                                  MEMBERSHIP)),
            (NONMEMBERSHIP, non,
             closed_form_standard(crisp_value, space.ifn.k, args.alpha,
                                  NONMEMBERSHIP))):
        status = PASS if abs(result.value - oracle) <= 1e-7 else FAIL
        entries.append({
            "name": f"alpha_norm_{family}", "status": status,
            "witness": {"alpha": args.alpha, "vector": x.tolist(),
                        "value": result.value,
                        "bracket": list(result.bracket),
                        "iterations": result.iterations,
                        "closed_form": oracle},
            "details": [], "notes": []})
    return entries, space_to_dict(space)


def _cmd_comparability(args):
    space = load_space(args.space)
    if args.basis:
        basis = _parse_basis(args.basis)
    else:
        basis = np.eye(space.dimension).tolist()
    estimate = estimate_comparability_constant(space, basis, args.alpha,
                                               args.samples, args.seed)
    entry = {"name": "comparability_constant", "status": PASS,
             "witness": {"alpha": args.alpha, "estimate": estimate,
                         "basis": basis, "samples": args.samples},
             "details": [], "notes": []}
    return [entry], space_to_dict(space)


def _cmd_analyze_sequence(args):
    space = load_space(args.space)
    seq = sequences.read_sequence_csv(args.sequence)
    if seq.dimension != space.dimension:
        raise SchemaError(
            f"sequence dimension {seq.dimension} does not match space "
            f"dimension {space.dimension}")
    entries = []
    if args.target is not None:
        target = np.asarray(_parse_vector(args.target))
        conv = sequences.check_convergence_to(space, seq, target)
        entries.append(_entry("convergence", conv))
        equiv = sequences.crisp_fuzzy_equivalence(space, seq, target,
                                                  p_max=args.p_max)
        entries.append(_entry("crisp_fuzzy_equivalence", equiv))
    cauchy = sequences.check_cauchy(space, seq, p_max=args.p_max)
    entries.append(_entry("cauchy", cauchy))
    bounded = sequences.check_bounded(space, seq)
    entries.append(_entry("bounded", bounded))
    return entries, space_to_dict(space)


def _cmd_check_set(args):
    space = load_space(args.space)
    sampled = topology.load_set(args.set)
    if sampled.dimension != space.dimension:
        raise SchemaError(
            f"set dimension {sampled.dimension} does not match space "
            f"dimension {space.dimension}")
    entries = [_entry("set_bounded",
                      topology.check_set_bounded(space, sampled)),
               _entry("compactness",
                      topology.compactness_verdict(space, sampled))]
    if args.closure_point is not None:
        x = np.asarray(_parse_vector(args.closure_point))
        entries.append(_entry("closure_membership",
                              topology.closure_membership(space, sampled, x)))
    return entries, space_to_dict(space)


def _cmd_check_continuity(args):
    space = load_space(args.space)
    codomain = load_space(args.codomain) if args.codomain else space
    smap = continuity.builtin_map(args.map, space, codomain)
    points = _parse_points(args.at)
    entries = []
    for point in points:
        tag = ",".join(repr(v) for v in point)
        seq_v = continuity.check_sequential_ifc_at(smap, point, seed=args.seed)
        strong_v = continuity.check_strong_ifc_at(smap, point, seed=args.seed)
        ifc_v = continuity.check_ifc_at(smap, point, seed=args.seed)
        entries.append(_entry(f"sequential_ifc@({tag})", seq_v))
        entries.append(_entry(f"strong_ifc@({tag})", strong_v))
        entries.append(_entry(f"ifc@({tag})", ifc_v))
    entries.append(_entry(
        "strong_implies_sequential",
        continuity.verify_strong_implies_sequential(smap, points,
                                                    seed=args.seed)))
    entries.append(_entry(
        "ifc_sequential_agreement",
        continuity.verify_ifc_sequential_agreement(smap, points,
                                                   seed=args.seed)))
    return entries, space_to_dict(space)


def _cmd_corpus(args):
    seq = corpus.generate_corpus(args.kind, args.length, args.dimension,
                                 args.seed)
    text = sequences.write_sequence_csv(seq)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    limit = corpus.known_limit(args.kind, args.dimension, args.seed)
    entry = {"name": "corpus", "status": PASS,
             "witness": {"kind": args.kind, "label": seq.label,
                         "length": seq.length, "dimension": seq.dimension,
                         "known_limit": None if limit is None
                         else [float(v) for v in limit],
                         "out": args.out},
             "details": [], "notes": []}
    return [entry], None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ifnls",
        description="Verification suites for intuitionistic fuzzy normed "
                    "linear spaces")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, space=True):
        if space:
            p.add_argument("--space", required=True,
                           help="path to the space-spec JSON")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--json", dest="json_path", default=None,
                       help="also write the JSON report here")

    p = sub.add_parser("verify-axioms",
                       help="sampled check of the defining conditions")
    common(p)
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(handler=_cmd_verify_axioms)

    p = sub.add_parser("alpha-norm",
                       help="extract both level norms of a vector")
    common(p)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--vector", required=True,
                   help="comma-separated coordinates")
    p.set_defaults(handler=_cmd_alpha_norm)

    p = sub.add_parser("comparability",
                       help="estimate the coefficient comparability constant")
    common(p)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--basis", default=None,
                   help="semicolon-separated vectors, e.g. '1,0;0,1'")
    p.set_defaults(handler=_cmd_comparability)

    p = sub.add_parser("analyze-sequence",
                       help="convergence / Cauchy / boundedness diagnostics")
    common(p)
    p.add_argument("--sequence", required=True, help="path to the CSV prefix")
    p.add_argument("--target", default=None,
                   help="claimed limit, comma-separated")
    p.add_argument("--p-max", type=int, default=3)
    p.set_defaults(handler=_cmd_analyze_sequence)

    p = sub.add_parser("check-set",
                       help="boundedness / compactness of a point sample")
    common(p)
    p.add_argument("--set", required=True, help="path to the set JSON")
    p.add_argument("--closure-point", default=None,
                   help="test this point for closure membership")
    p.set_defaults(handler=_cmd_check_set)

    p = sub.add_parser("check-continuity",
                       help="the three continuity notions at given points")
    common(p)
    p.add_argument("--map", required=True,
                   help="identity | scale:<c> | step | example33")
    p.add_argument("--at", required=True,
                   help="semicolon-separated base points")
    p.add_argument("--codomain", default=None,
                   help="space-spec JSON for the codomain (default: domain)")
    p.set_defaults(handler=_cmd_check_continuity)

    p = sub.add_parser("corpus", help="emit a deterministic test sequence")
    common(p, space=False)
    p.add_argument("--kind", required=True, choices=corpus.KINDS)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--dimension", type=int, default=1)
    p.add_argument("--out", default=None, help="write the CSV here")
    p.set_defaults(handler=_cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        entries, space_spec = args.handler(args)
    except (SchemaError, IFNLSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2

    report = build_report(args.command, entries, args.seed, space_spec)
    for entry in entries:
        print(_status_line(entry))
    summary = report["summary"]
    print(f"summary: {summary['pass']} pass, {summary['fail']} fail, "
          f"{summary['inconclusive']} inconclusive")
    if args.json_path:
        body = report_body(report)
        full = json.loads(body)
        full["manifest"]["timestamp"] = report["manifest"]["timestamp"]
        with open(args.json_path, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(full, indent=2, sort_keys=True) + "\n")
    return 0 if summary["fail"] == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
