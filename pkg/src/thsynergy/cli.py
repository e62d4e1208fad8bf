"""Command-line front end.

Subcommands:
    validate  strict scan of a firm CSV, listing every defect with its line
    compute   full region report as JSON (decomposition, entropies, ratios,
              domestic-vs-foreign chi-square over technology groups)
    sweep     synthetic foreign-share sweep written as CSV
    chisq     standalone 2 x k homogeneity test

Exit codes: 0 success, 1 validation failure, 2 usage error, 3 I/O error.

Reports embed their run manifest without a timestamp so identical inputs
and flags produce byte-identical output; the wall clock lives only in the
`<output>.manifest.json` sidecar. No environment variable affects results.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass
from datetime import datetime, timezone

from . import __version__
from .cube import build_cube
from .decomp import region_report
from .infotheory import entropy_profile
from .ingest import (
    ClassificationConfig,
    classify_all,
    load_config,
    parse_firm_records,
    parse_share,
    validate_firm_csv,
)
from .stats import DegenerateTable, chi_square_homogeneity, ownership_tech_table
from .synthlab import SynthParams, sweep_foreign_share

_LOG_BASES = {"2": 2.0, "e": 2.718281828459045, "10": 10.0}


@dataclass(frozen=True)
class RunManifest:
    command: str
    inputs: tuple[str, ...]
    config_hash: str
    version: str
    seed: int | None = None

    def to_dict(self, timestamp: str | None = None) -> dict:
        out: dict = {
            "command": self.command,
            "inputs": list(self.inputs),
            "config_hash": self.config_hash,
            "version": self.version,
        }
        if self.seed is not None:
            out["seed"] = self.seed
        if timestamp is not None:
            out["timestamp"] = timestamp
        return out


def config_digest(settings: dict) -> str:
    canon = json.dumps(settings, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode("utf-8")).hexdigest()[:16]


def _write_sidecar(output_path: str, manifest: RunManifest, extra: dict | None = None) -> None:
    payload = manifest.to_dict(timestamp=datetime.now(timezone.utc).isoformat())
    if extra:
        payload.update(extra)
    with open(output_path + ".manifest.json", "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def _load_effective_config(args) -> ClassificationConfig:
    config = load_config(args.config) if args.config else ClassificationConfig()
    if args.foreign_cutoff is not None:
        config = ClassificationConfig(
            foreign_cutoff=parse_share(args.foreign_cutoff),
            size_bin_edges=config.size_bin_edges,
            nace_map=config.nace_map,
        )
    return config


def _config_settings(config: ClassificationConfig, log_base: str | None = None) -> dict:
    settings = {
        "foreign_cutoff": config.foreign_cutoff,
        "size_bin_edges": list(config.size_bin_edges),
        "nace_map": {str(k): v for k, v in sorted(config.nace_map.items())},
    }
    if log_base is not None:
        settings["log_base"] = log_base
    return settings


# --- subcommands ------------------------------------------------------------

def cmd_validate(args) -> int:
    try:
        config = _load_effective_config(args)
        with open(args.input, "rb") as fh:
            rows, issues = validate_firm_csv(fh, config=config)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"{rows} data row(s), {len(issues)} issue(s)")
    for line, message in issues:
        print(f"  line {line}: {message}")
    return 1 if issues else 0


def cmd_compute(args) -> int:
    try:
        config = _load_effective_config(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    base = _LOG_BASES[args.log_base]

    try:
        with open(args.input, "rb") as fh:
            rows, issues = validate_firm_csv(fh, config=config)
        if issues:
            print(f"{rows} data row(s), {len(issues)} issue(s)", file=sys.stderr)
            for line, message in issues:
                print(f"  line {line}: {message}", file=sys.stderr)
            return 1
        with open(args.input, "rb") as fh:
            records = parse_firm_records(fh)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3

    firms = classify_all(records, config)
    report = region_report(firms, base=base)
    cube = build_cube(firms)
    profile = entropy_profile(cube, base=base)

    categories, table = ownership_tech_table(cube)
    try:
        chi = chi_square_homogeneity(table)
        chi_block: dict = {
            "categories": list(categories),
            "statistic": chi.statistic,
            "dof": chi.dof,
            "p_value": chi.p_value,
        }
    except DegenerateTable as exc:
        chi_block = {"undefined_reason": str(exc)}

    manifest = RunManifest(
        command="compute",
        inputs=(args.input,),
        config_hash=config_digest(_config_settings(config, args.log_base)),
        version=__version__,
    )
    document = {
        "schema_version": 1,
        "log_base": args.log_base,
        "report": report.to_dict(),
        "entropy": {
            "h_g": profile.h_g,
            "h_o": profile.h_o,
            "h_t": profile.h_t,
            "h_go": profile.h_go,
            "h_gt": profile.h_gt,
            "h_ot": profile.h_ot,
            "h_got": profile.h_got,
        },
        "chi_square_domestic_vs_foreign": chi_block,
        "manifest": manifest.to_dict(),
    }
    text = json.dumps(document, indent=2) + "\n"
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
            _write_sidecar(args.output, manifest)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 3
    else:
        sys.stdout.write(text)
    return 0


def cmd_sweep(args) -> int:
    try:
        shares = [float(part) for part in args.shares.split(",") if part.strip() != ""]
    except ValueError:
        print(f"error: cannot parse --shares {args.shares!r}", file=sys.stderr)
        return 2
    try:
        params = SynthParams(
            n_firms=args.firms,
            n_municipalities=args.municipalities,
            n_size_classes=args.size_classes,
            n_tech_groups=args.tech_groups,
            coupling=args.coupling,
            turnover_law=args.turnover_law,
            lognormal_mu=args.mu,
            lognormal_sigma=args.sigma,
            seed=args.seed,
        )
        curve = sweep_foreign_share(params, shares)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    manifest = RunManifest(
        command="sweep",
        inputs=(),
        config_hash=config_digest({
            "n_firms": params.n_firms,
            "n_municipalities": params.n_municipalities,
            "n_size_classes": params.n_size_classes,
            "n_tech_groups": params.n_tech_groups,
            "coupling": params.coupling,
            "turnover_law": params.turnover_law,
            "lognormal_mu": params.lognormal_mu,
            "lognormal_sigma": params.lognormal_sigma,
            "shares": shares,
        }),
        version=__version__,
        seed=params.seed,
    )
    violations = curve.synergy_share_violations()
    try:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            curve.to_csv(fh)
        _write_sidecar(args.output, manifest, extra={"synergy_share_violations": violations})
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    print(f"{len(curve.points)} point(s) written to {args.output}")
    print(f"synergy share monotonicity violations: {violations}")
    return 0


def cmd_chisq(args) -> int:
    rows = []
    try:
        for row_text in args.table.split(";"):
            rows.append([float(v) for v in row_text.split(",")])
    except ValueError:
        print(f"error: cannot parse table {args.table!r}", file=sys.stderr)
        return 2
    try:
        result = chi_square_homogeneity(rows)
    except DegenerateTable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"statistic={result.statistic:.6g} dof={result.dof} p_value={result.p_value:.6g}")
    return 0


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thsynergy",
        description="Ownership-split three-way information measures for firm registers.",
    )
    parser.add_argument("--version", action="version", version=f"thsynergy {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_classification_flags(p):
        p.add_argument("--config", help="key = value file overriding cutoff and size bins")
        p.add_argument("--foreign-cutoff", default=None,
                       help="ownership cutoff as fraction ('0.2') or percent ('20%%')")

    p_val = sub.add_parser("validate", help="scan a firm CSV and list every defect")
    p_val.add_argument("input", help="firm CSV path")
    add_classification_flags(p_val)
    p_val.set_defaults(func=cmd_validate)

    p_comp = sub.add_parser("compute", help="region report JSON from a firm CSV")
    p_comp.add_argument("input", help="firm CSV path")
    add_classification_flags(p_comp)
    p_comp.add_argument("--log-base", choices=sorted(_LOG_BASES), default="2")
    p_comp.add_argument("--output", help="report path (stdout when omitted); a .manifest.json sidecar is written next to it")
    p_comp.set_defaults(func=cmd_compute)

    p_sweep = sub.add_parser("sweep", help="synthetic foreign-share sweep to CSV")
    p_sweep.add_argument("--firms", type=int, default=500)
    p_sweep.add_argument("--municipalities", type=int, default=30)
    p_sweep.add_argument("--size-classes", type=int, default=8)
    p_sweep.add_argument("--tech-groups", type=int, default=10)
    p_sweep.add_argument("--coupling", type=float, default=0.5)
    p_sweep.add_argument("--turnover-law", choices=("uniform", "lognormal"), default="uniform")
    p_sweep.add_argument("--mu", type=float, default=16.0, help="lognormal mu")
    p_sweep.add_argument("--sigma", type=float, default=1.0, help="lognormal sigma")
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--shares", required=True, help="strictly increasing comma list in [0, 1]")
    p_sweep.add_argument("--output", required=True, help="curve CSV path")
    p_sweep.set_defaults(func=cmd_sweep)

    p_chi = sub.add_parser("chisq", help="2 x k homogeneity test on inline counts")
    p_chi.add_argument("table", help="rows separated by ';', counts by ',' (e.g. '10,20;20,10')")
    p_chi.set_defaults(func=cmd_chisq)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
