"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain/precondition error,
3 verification mismatch, 4 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .characters import (
    DEFAULT_IDEMPOTENT_CAP,
    central_idempotent,
    character_table,
    mn_character,
)
from .combinatorics import (
    Partition,
    Permutation,
    SkewShape,
    class_representative,
    hook_dimension,
    partitions_of,
)
from .errors import DomainError, SymrepError
from .fock import DEFAULT_FOCK_CAP, FockVector, fock_character, lambda_op
from .linalg import float_str, frac_str
from .repforms import DEFAULT_TOLERANCE, jm_matrix, orthogonal_rep, seminormal_rep
from .symfunc import frobenius_expand, schur_poly
from .tableaux import standard_tableaux
from .verify import SUITES, run_suites

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_MISMATCH, EXIT_RESOURCE = 0, 1, 2, 3, 4


@dataclass(frozen=True)
class Config:
    float_tolerance: float = DEFAULT_TOLERANCE
    fock_cap: int = DEFAULT_FOCK_CAP
    idempotent_cap: int = DEFAULT_IDEMPOTENT_CAP
    output_format: str = "text"

    def __post_init__(self):
        if not self.float_tolerance > 0:
            raise DomainError("tolerance must be positive")
        if self.fock_cap < 1 or self.idempotent_cap < 1:
            raise DomainError("caps must be at least 1")
        if self.output_format not in ("text", "json", "csv"):
            raise DomainError(f"unknown output format {self.output_format!r}")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="symrep", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=["text", "json", "csv"], default=None, help="output format")
    parser.add_argument("--tol", type=float, default=None, help="float tolerance (env SYMREP_TOL)")
    parser.add_argument("--fock-cap", type=int, default=None, help="Fock degree cap (env SYMREP_FOCK_CAP)")
    parser.add_argument("--idempotent-cap", type=int, default=None)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("partitions", help="list partitions of N")
    p.add_argument("n", type=int)

    p = sub.add_parser("tableaux", help="standard tableaux of a (skew) shape")
    p.add_argument("lam", type=_partition)
    p.add_argument("--skew", type=_partition, default=Partition())

    p = sub.add_parser("dim", help="dimension of the irreducible module")
    p.add_argument("lam", type=_partition)

    p = sub.add_parser("chartable", help="character table of S_N")
    p.add_argument("n", type=int)
    p.add_argument("--format", dest="sub_format", choices=["text", "json", "csv"], default=None)

    p = sub.add_parser("chi", help="one character value")
    p.add_argument("lam", type=_partition)
    p.add_argument("rho", type=_partition)
    p.add_argument("--skew", type=_partition, default=Partition())
    p.add_argument("--method", choices=["mn", "trace", "fock", "all"], default="mn")

    p = sub.add_parser("rep", help="generator (or permutation) matrices")
    p.add_argument("lam", type=_partition)
    p.add_argument("--skew", type=_partition, default=Partition())
    p.add_argument("--form", choices=["seminormal", "orthogonal"], required=True)
    p.add_argument("--perm", default=None, help='one-line "2,1,3" or cycles "(1 2)"')

    p = sub.add_parser("jm", help="Jucys-Murphy matrix L_K in the seminormal basis")
    p.add_argument("lam", type=_partition)
    p.add_argument("k", type=int)

    p = sub.add_parser("schur", help="Schur polynomial S_lambda")
    p.add_argument("lam", type=_partition)

    p = sub.add_parser("frobenius", help="Schur expansion of P_rho")
    p.add_argument("rho", type=_partition)

    p = sub.add_parser("idempotent", help="central idempotent e_lambda in CS_N")
    p.add_argument("n", type=int)
    p.add_argument("lam", type=_partition)

    p = sub.add_parser("fock-apply", help="apply Lambda_K to the sum of v_lambda")
    p.add_argument("k", type=int)
    p.add_argument("lams", type=_partition, nargs="+")

    p = sub.add_parser("verify", help="run cross-validation suites")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    return parser


def _config(args, env) -> Config:
    tol = args.tol if args.tol is not None else float(env.get("SYMREP_TOL", DEFAULT_TOLERANCE))
    cap = args.fock_cap if args.fock_cap is not None else int(env.get("SYMREP_FOCK_CAP", DEFAULT_FOCK_CAP))
    fmt = getattr(args, "sub_format", None) or args.format or "text"
    icap = args.idempotent_cap if args.idempotent_cap is not None else DEFAULT_IDEMPOTENT_CAP
    return Config(tol, cap, icap, fmt)


def _emit(out, cfg: Config, text: str, payload=None):
    if cfg.output_format == "json" and payload is not None:
        out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _matrix_payload(m) -> list:
    if isinstance(m, np.ndarray):
        return [[float_str(x) for x in row] for row in m]
    return m.to_json()


def _matrix_text(m) -> str:
    if isinstance(m, np.ndarray):
        cells = [[float_str(x) for x in row] for row in m]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)
    return str(m)


def _chi_values(args, cfg: Config) -> dict[str, int]:
    shape = SkewShape(args.lam, args.skew)
    methods = ["mn", "trace", "fock"] if args.method == "all" else [args.method]
    values = {}
    for method in methods:
        if method == "mn":
            values["mn"] = mn_character(shape, args.rho)
        elif method == "trace":
            if args.rho.size != shape.size:
                raise DomainError(f"|{shape}| = {shape.size} but |rho| = {args.rho.size}")
            w = class_representative(args.rho)
            if shape.is_straight:
                values["trace"] = int(seminormal_rep(args.lam).matrix(w).trace())
            else:
                tr = float(np.trace(orthogonal_rep(shape).matrix(w)))
                if abs(tr - round(tr)) > cfg.float_tolerance:
                    raise SymrepError(f"orthogonal trace {tr} is not an integer within tolerance")
                values["trace"] = int(round(tr))
        else:
            values["fock"] = fock_character(args.lam, args.rho, max(cfg.fock_cap, args.lam.size), args.skew)
    return values


def _run(args, cfg: Config, out) -> int:
    cmd = args.command
    if cmd == "partitions":
        parts = partitions_of(args.n)
        _emit(out, cfg, "\n".join(str(p) for p in parts), [list(p) for p in parts])
    elif cmd == "tableaux":
        tabs = standard_tableaux(SkewShape(args.lam, args.skew))
        _emit(out, cfg, "\n\n".join(str(t) for t in tabs), [t.to_json() for t in tabs])
    elif cmd == "dim":
        d = hook_dimension(args.lam)
        _emit(out, cfg, str(d), {"partition": list(args.lam), "dim": str(d)})
    elif cmd == "chartable":
        table = character_table(args.n)
        if cfg.output_format == "csv":
            out.write(table.to_csv())
        else:
            _emit(out, cfg, str(table), table.to_json())
    elif cmd == "chi":
        values = _chi_values(args, cfg)
        text = " ".join(f"{k}={v}" for k, v in values.items())
        _emit(out, cfg, text, {k: str(v) for k, v in values.items()})
        if len(set(values.values())) > 1:
            sys.stderr.write("character methods disagree\n")
            return EXIT_MISMATCH
    elif cmd == "rep":
        shape = SkewShape(args.lam, args.skew)
        if args.form == "seminormal":
            if not shape.is_straight:
                raise DomainError("the seminormal form is built for straight shapes only")
            rep = seminormal_rep(args.lam)
        else:
            rep = orthogonal_rep(shape)
        basis = [t.content_vector() for t in rep.basis]
        if args.perm is not None:
            mats = {args.perm: rep.matrix(Permutation.parse(args.perm, rep.n))}
        else:
            mats = {f"s{k}": g for k, g in enumerate(rep.gens, 1)}
        text = "basis (content vectors): " + " ".join(str(b) for b in basis) + "\n"
        text += "\n".join(f"{name}:\n{_matrix_text(m)}" for name, m in mats.items())
        payload = {
            "shape": list(shape.outer),
            "inner": list(shape.inner),
            "form": args.form,
            "basis": [t.to_json() for t in rep.basis],
            "matrices": {name: _matrix_payload(m) for name, m in mats.items()},
        }
        _emit(out, cfg, text, payload)
    elif cmd == "jm":
        m = jm_matrix(seminormal_rep(args.lam), args.k)
        _emit(out, cfg, str(m), {"partition": list(args.lam), "k": args.k, "matrix": m.to_json()})
    elif cmd == "schur":
        poly = schur_poly(args.lam, max(cfg.fock_cap, args.lam.size))
        _emit(out, cfg, str(poly), poly.to_json())
    elif cmd == "frobenius":
        coeffs = frobenius_expand(args.rho, max(cfg.fock_cap, args.rho.size))
        text = "\n".join(f"{lam}: {c}" for lam, c in coeffs.items())
        _emit(out, cfg, text, [{"partition": list(lam), "coeff": str(c)} for lam, c in coeffs.items()])
    elif cmd == "idempotent":
        e = central_idempotent(args.n, args.lam, cfg.idempotent_cap)
        text = "\n".join(f"{d['coeff']} * [{','.join(map(str, d['perm']))}]" for d in e.to_json())
        _emit(out, cfg, text, e.to_json())
    elif cmd == "fock-apply":
        v = FockVector({lam: 1 for lam in args.lams}, cfg.fock_cap)
        w = lambda_op(args.k, v)
        _emit(out, cfg, str(w), w.to_json())
    elif cmd == "verify":
        names = sorted(SUITES) if args.suite == "all" else [args.suite]
        checks = run_suites(names, args.n, cfg.float_tolerance)
        failed = [c for c in checks if not c.ok]
        payload = [{"suite": c.suite, "check": c.name, "ok": c.ok, "detail": c.detail} for c in checks]
        summary = f"{len(checks) - len(failed)}/{len(checks)} checks passed"
        _emit(out, cfg, "\n".join(c.line() for c in checks) + "\n" + summary, payload)
        if failed:
            return EXIT_MISMATCH
    return EXIT_OK


def run(argv: Sequence[str] | None = None, out=None, env=None) -> int:
    out = out if out is not None else sys.stdout
    env = env if env is not None else os.environ
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        cfg = _config(args, env)
        return _run(args, cfg, out)
    except SymrepError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.exit_code
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))
