"""Command-line front end.

    hyperarr faces --builtin braid:3
    hyperarr salvetti --builtin coords --homology
    hyperarr check --builtin braid:4
    hyperarr presentation --builtin braid:3 --essentialize

Exit codes: 0 success, 1 a check failed, 2 input error, 3 precondition
(non-essential arrangement), 4 the arrangement is not reflection-symmetric.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from dataclasses import dataclass
from pathlib import Path

from . import io
from .arrangement import (
    DEFAULT_CAP,
    Arrangement,
    EnumerationCapError,
    braid_arrangement,
    coordinate_arrangement,
    dihedral_arrangement,
    sample_covectors,
)
from .groups import (
    GroupCapExceeded,
    NotReflectionSymmetry,
    check_transitive_free,
    reflection_group,
)
from .orbits import RankError, presentation, quotient_sal
from .salvetti import (
    NotEssentialError,
    build_salvetti,
    check_sal_complex_order_iso,
    embed_vertices,
    sal_homology,
)
from .signs import check_covector_axioms

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_SYMMETRY = 4

COMMANDS = ("faces", "salvetti", "check", "presentation")


@dataclass(frozen=True)
class RunConfig:
    command: str
    builtin: str | None = None
    input: Path | None = None
    faces_file: Path | None = None
    format: str = "json"
    cap: int = DEFAULT_CAP
    seed: int = 0
    essentialize: bool = False
    homology: bool = False
    output: Path | None = None


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def parse_builtin(name: str, essentialize: bool = False, cap: int = DEFAULT_CAP):
    kind, _, arg = name.partition(":")
    try:
        k = int(arg) if arg else None
    except ValueError:
        raise io.InputError(f"builtin {name!r}: parameter must be an integer") from None
    if kind == "braid":
        if k is None or k < 2:
            raise io.InputError("use braid:L with L >= 2")
        return braid_arrangement(k, essentialize=essentialize, cap=cap)
    if kind == "dihedral":
        if k is None or k < 2:
            raise io.InputError("use dihedral:m with m >= 2")
        return dihedral_arrangement(k)
    if kind == "coords":
        d = 2 if k is None else k
        if d < 1:
            raise io.InputError("coords:d needs d >= 1")
        return coordinate_arrangement(d)
    raise io.InputError(f"unknown builtin {name!r} (expected braid:L, dihedral:m or coords)")


def load(cfg: RunConfig):
    if cfg.cap < 1:
        raise io.InputError("--cap must be positive")
    if cfg.builtin is not None:
        A = parse_builtin(cfg.builtin, cfg.essentialize, cfg.cap)
    elif cfg.input is not None:
        A = io.load_arrangement(cfg.input, cfg.cap)
    else:
        raise io.InputError("give an arrangement with --builtin or --input")
    if isinstance(A, Arrangement) and A.cap != cfg.cap:
        A = dataclasses.replace(A, cap=cfg.cap)
    if A.n > cfg.cap:
        raise io.InputError(
            f"arrangement has {A.n} hyperplanes but the enumeration cap is {cfg.cap}; raise --cap"
        )
    return A


# -- commands --------------------------------------------------------------------


def cmd_faces(cfg: RunConfig) -> tuple[str, int]:
    P = load(cfg).faces()
    if cfg.format == "dot":
        return io.face_poset_to_dot(P), EXIT_OK
    if cfg.format == "text":
        lines = [str(X) for X in P.covectors]
        counts = P.counts_by_codim()
        lines.append(f"faces: {len(P)}")
        lines.append("by codim: " + ", ".join(f"{k}:{v}" for k, v in sorted(counts.items())))
        return "\n".join(lines) + "\n", EXIT_OK
    return io.dumps(io.face_poset_to_dict(P)), EXIT_OK


def cmd_salvetti(cfg: RunConfig) -> tuple[str, int]:
    A = load(cfg)
    if not A.essential:
        hint = " (pass --essentialize)" if cfg.builtin and cfg.builtin.startswith("braid") else ""
        raise NotEssentialError(f"arrangement is not essential{hint}")
    S = build_salvetti(A)
    if cfg.format == "dot":
        return io.sal_to_dot(S), EXIT_OK
    H = sal_homology(S) if cfg.homology else None
    if cfg.format == "text":
        lines = [f"cells: {len(S)}", "by dim: " + " ".join(str(c) for c in S.dim_histogram())]
        lines += [f"{row['pair']}  {row['complex_covector']}" for row in io.complex_covector_table(S)]
        if H is not None:
            lines.append("betti: " + " ".join(str(h.betti) for h in H))
            lines += [f"H{k} = {h}" for k, h in enumerate(H)]
        return "\n".join(lines) + "\n", EXIT_OK
    out = {
        "cells": len(S),
        "salvetti": io.sal_to_dict(S),
        "complex_covectors": io.complex_covector_table(S),
    }
    if A.geometric:
        out["embedded_vertices"] = io.embedded_vertices_to_list(embed_vertices(S))
    if H is not None:
        out["homology"] = io.homology_to_list(H)
        out["betti"] = [h.betti for h in H]
    return io.dumps(out), EXIT_OK


def _check_faces_file(cfg: RunConfig) -> tuple[dict, bool]:
    L = io.load_face_list(cfg.faces_file)
    report = check_covector_axioms(L)
    return {"axioms": report.as_dict()}, report.passed


def _check_arrangement(cfg: RunConfig) -> tuple[dict, bool]:
    A = load(cfg)
    P = A.faces()
    out: dict = {}
    axioms = check_covector_axioms(P.covectors)
    out["axioms"] = axioms.as_dict()
    ok = axioms.passed

    if A.geometric:
        sampled = sample_covectors(A, seed=cfg.seed)
        enumerated = set(P.covectors)
        missing = sorted(str(X) for X in enumerated - sampled)
        extra = sorted(str(X) for X in sampled - enumerated)
        oracle_ok = not extra and not missing
        out["sampling_oracle"] = {
            "passed": oracle_ok,
            "not_enumerated": extra,
            "not_sampled": missing,
        }
        ok = ok and oracle_ok

    S = build_salvetti(A)
    iso = check_sal_complex_order_iso(S, seed=cfg.seed)
    out["complex_covectors"] = {"passed": iso.passed, "witness": iso.witness}
    ok = ok and iso.passed

    try:
        W = reflection_group(A)
    except NotReflectionSymmetry as exc:
        out["group"] = {"passed": None, "skipped": str(exc)}
    else:
        g = check_transitive_free(W)
        out["group"] = {
            "passed": g.passed,
            "order": g.order,
            "chambers": g.chambers,
            "transitive": g.transitive,
            "free": g.free,
        }
        ok = ok and g.passed
        if A.essential:
            Q = quotient_sal(S, W)
            out["orbits"] = {"histogram": list(Q.histogram())}
    out["passed"] = ok
    return out, ok


def _flatten(report: dict) -> list[str]:
    lines = []
    for name, r in sorted(report.items()):
        if name == "passed":
            continue
        if name == "axioms":
            for ax, v in sorted(r.items()):
                status = "PASS" if v["passed"] else "FAIL"
                extra = f"  ({v['witness']})" if v["witness"] else ""
                lines.append(f"{ax}: {status}{extra}")
            continue
        if "passed" not in r:
            lines.append(f"{name}: " + " ".join(f"{k}={v}" for k, v in sorted(r.items())))
            continue
        p = r["passed"]
        status = "SKIP" if p is None else "PASS" if p else "FAIL"
        extra = ""
        if p is None:
            extra = f"  ({r['skipped']})"
        elif r.get("witness"):
            extra = f"  ({r['witness']})"
        lines.append(f"{name}: {status}{extra}")
    return lines


def cmd_check(cfg: RunConfig) -> tuple[str, int]:
    if cfg.faces_file is not None:
        report, ok = _check_faces_file(cfg)
    else:
        report, ok = _check_arrangement(cfg)
    report["passed"] = ok
    code = EXIT_OK if ok else EXIT_CHECK_FAILED
    if cfg.format == "text":
        lines = _flatten(report) + ["all checks passed" if ok else "some checks failed"]
        return "\n".join(lines) + "\n", code
    return io.dumps(report), code


def cmd_presentation(cfg: RunConfig) -> tuple[str, int]:
    A = load(cfg)
    W = reflection_group(A)
    P = presentation(A, W)
    if cfg.format == "text":
        return io.presentation_to_text(P), EXIT_OK
    out = io.presentation_to_dict(P)
    if A.essential:
        out["quotient"] = io.orbits_to_dict(quotient_sal(build_salvetti(A), W))
    return io.dumps(out), EXIT_OK


HANDLERS = {
    "faces": cmd_faces,
    "salvetti": cmd_salvetti,
    "check": cmd_check,
    "presentation": cmd_presentation,
}


# -- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperarr",
        description="Face posets, Salvetti complexes and Artin presentations of real arrangements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        src = p.add_mutually_exclusive_group(required=name != "check")
        src.add_argument("--builtin", metavar="NAME", help="braid:L, dihedral:m or coords[:d]")
        src.add_argument("--input", type=Path, metavar="FILE", help="arrangement JSON file")
        if name == "check":
            src.add_argument("--faces", type=Path, dest="faces_file", metavar="FILE",
                             help="check the covector axioms on a face list")
        default_format = "text" if name == "presentation" else "json"
        formats = ["json", "text"] if name in ("check", "presentation") else ["json", "dot", "text"]
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest number of hyperplanes to enumerate")
        p.add_argument("--seed", type=int, default=0, help="seed for the sampling checks")
        p.add_argument("--essentialize", action="store_true", help="use the essential form of braid:L")
        p.add_argument("--output", "-o", type=Path, help="write to FILE instead of standard output")
        if name == "salvetti":
            p.add_argument("--homology", action="store_true", help="include integral homology")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        builtin=args.builtin,
        input=args.input,
        faces_file=getattr(args, "faces_file", None),
        format=args.format,
        cap=args.cap,
        seed=args.seed,
        essentialize=args.essentialize,
        homology=getattr(args, "homology", False),
        output=args.output,
    )


def run(cfg: RunConfig) -> tuple[str, int]:
    try:
        return HANDLERS[cfg.command](cfg)
    except (io.InputError, EnumerationCapError, GroupCapExceeded) as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    except (NotEssentialError, RankError) as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from exc
    except NotReflectionSymmetry as exc:
        raise CliError(str(exc), EXIT_SYMMETRY) from exc


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = config_from_args(args)
    if cfg.command == "check" and cfg.builtin is None and cfg.input is None and cfg.faces_file is None:
        print("hyperarr check: give --builtin, --input or --faces", file=sys.stderr)
        return EXIT_INPUT
    try:
        text, code = run(cfg)
    except CliError as exc:
        print(f"hyperarr {cfg.command}: {exc}", file=sys.stderr)
        return exc.code
    if cfg.output is not None:
        cfg.output.write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
