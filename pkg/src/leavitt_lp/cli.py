"""Command-line front end.

Sixteen subcommands cover the symbolic engine (normalize, mul, add,
star), the grading (project, shift), the core (expect, trace, avg), the
numerics (norm), the witness solver (witness, annihilate), and the
classification calculus (snat, k0, classify, obstruct). Elements are
read as expression text or as JSON (auto-detected on a leading '{');
`--json` switches output to the versioned JSON schema. Exit codes:
0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import jsonio
from .elements import LeavittElement
from .errors import LeavittError
from .exprparse import format_element, parse
from .gauge import project, shift_endo
from .invariants import (
    AlgebraDescriptor,
    GeneratorSequence,
    SupernaturalNumber,
    classify_iso,
    hom_obstruction,
    k0_contains,
    supernatural_of,
)
from .jsonio import SCHEMA
from .pnorm import NormConfig, NormInterval, PExponent, elem_norm, opnorm
from .scalars import format_scalar
from .uhf import expect_to_level, trace
from .witness import annihilating_word, witness
from .words import Word


@dataclass(frozen=True)
class Config:
    """Run configuration assembled from the common flags."""

    d: int = 2
    p: PExponent = PExponent(2)
    seed: int = 0
    restarts: int = 32
    max_iter: int = 10_000
    tol: float = 1e-10
    r_max: Optional[int] = None

    def norm_config(self) -> NormConfig:
        return NormConfig(
            seed=self.seed, restarts=self.restarts, max_iter=self.max_iter, tol=self.tol
        )


def _read_source(arg: Optional[str]) -> str:
    if arg is None or arg == "-":
        return sys.stdin.read()
    return arg


def _read_element(text: str, d: int) -> LeavittElement:
    text = text.strip()
    if text.startswith("{"):
        return jsonio.element_from_json(json.loads(text))
    return parse(text, d)


def _emit(payload: dict, as_json: bool, human: str) -> None:
    if as_json:
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True))
    else:
        print(human)


def _emit_element(a: LeavittElement, as_json: bool) -> None:
    _emit({"element": jsonio.element_to_json(a)}, as_json, format_element(a))


def _interval_payload(interval: NormInterval) -> dict:
    witness_list = None
    if interval.witness is not None:
        witness_list = [[z.real, z.imag] for z in interval.witness]
    return {
        "lower": interval.lower,
        "upper": interval.upper,
        "witness": witness_list,
        "method": interval.method,
        "converged": interval.converged,
        "notes": list(interval.notes),
    }


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="leavitt-lp",
        description="Exact Leavitt algebra calculator with lp norm estimates",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(sp, elements: int = 0, needs_p: bool = False):
        sp.add_argument("-d", type=int, default=2, help="alphabet size (default 2)")
        sp.add_argument("--json", action="store_true", help="emit JSON output")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--tol", type=float, default=1e-10)
        sp.add_argument("--restarts", type=int, default=32)
        sp.add_argument("--max-iter", type=int, default=10_000)
        sp.add_argument("--r-max", type=int, default=None)
        if needs_p:
            sp.add_argument("--p", type=str, default="2", help="exponent p (rational or inf)")
        for k in range(elements):
            sp.add_argument(
                "expr" if elements == 1 else f"expr{k + 1}",
                help="element expression or JSON ('-' reads stdin)",
            )
        return sp

    common(sub.add_parser("normalize", help="canonical form of an element"), 1)
    common(sub.add_parser("mul", help="product of two elements"), 2)
    common(sub.add_parser("add", help="sum of two elements"), 2)
    common(sub.add_parser("star", help="adjoint (s_j <-> t_j, conjugated scalars)"), 1)

    sp = common(sub.add_parser("project", help="degree component"), 1)
    sp.add_argument("--degree", type=int, required=True)

    sp = common(sub.add_parser("shift", help="shift endomorphism psi_r"), 1)
    sp.add_argument("--r", type=int, required=True)

    sp = common(sub.add_parser("expect", help="conditional expectation onto level m"), 1)
    sp.add_argument("--level", type=int, required=True)

    common(sub.add_parser("trace", help="normalized trace of a core element"), 1)

    sp = sub.add_parser("avg", help="signed-permutation group average of a matrix")
    sp.add_argument("matrix", nargs="?", default="-", help="core matrix JSON ('-' reads stdin)")
    sp.add_argument("--json", action="store_true")

    common(sub.add_parser("norm", help="lp operator norm enclosure"), 1, needs_p=True)

    common(sub.add_parser("witness", help="x, y with x a y = 1"), 1)

    sp = sub.add_parser("annihilate", help="marker-word annihilator for word pairs")
    sp.add_argument("pairs", nargs="?", default="-", help="JSON pair list ('-' reads stdin)")
    sp.add_argument("-d", type=int, default=2)
    sp.add_argument("--r-max", type=int, default=None)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("snat", help="supernatural number of a generator sequence")
    sp.add_argument("--seq", required=True, help='e.g. "2;3,4" (preperiod;period)')
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("k0", help="K0 membership of a rational")
    sp.add_argument("--n", help='supernatural number, e.g. "2^inf*3^2"')
    sp.add_argument("--seq", help="generator sequence alternative to --n")
    sp.add_argument("--contains", required=True, metavar="a/b")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("classify", help="isomorphism decision for two algebras")
    sp.add_argument("--p1", required=True)
    sp.add_argument("--n1", required=True)
    sp.add_argument("--p2", required=True)
    sp.add_argument("--n2", required=True)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("obstruct", help="homomorphism obstruction between exponents")
    sp.add_argument("--p1", required=True)
    sp.add_argument("--p2", required=True)
    sp.add_argument("--json", action="store_true")

    return top


def _config_from(args) -> Config:
    return Config(
        d=getattr(args, "d", 2),
        p=PExponent.parse(getattr(args, "p", "2")),
        seed=getattr(args, "seed", 0),
        restarts=getattr(args, "restarts", 32),
        max_iter=getattr(args, "max_iter", 10_000),
        tol=getattr(args, "tol", 1e-10),
        r_max=getattr(args, "r_max", None),
    )


def _run(args) -> int:
    cmd = args.command
    cfg = _config_from(args)
    if cmd in ("normalize", "star", "project", "shift", "expect", "trace", "witness", "norm"):
        if cmd == "norm":
            text = _read_source(args.expr).strip()
            if text.startswith("{") and "rows" in json.loads(text):
                mat = jsonio.corematrix_from_json(json.loads(text))
                import numpy as np

                M = np.array(
                    [[complex(z) for z in row] for row in mat.rows], dtype=complex
                )
                interval = opnorm(M, cfg.p, cfg.norm_config())
            else:
                a = _read_element(text, cfg.d)
                interval = elem_norm(a, cfg.p, cfg.norm_config())
            payload = _interval_payload(interval)
            human = f"[{interval.lower:.12g}, {interval.upper:.12g}] ({interval.method})"
            _emit(payload, args.json, human)
            return 0
        a = _read_element(_read_source(args.expr), cfg.d)
        if cmd == "normalize":
            _emit_element(a, args.json)
        elif cmd == "star":
            _emit_element(a.star(), args.json)
        elif cmd == "project":
            _emit_element(project(a, args.degree), args.json)
        elif cmd == "shift":
            _emit_element(shift_endo(a, args.r), args.json)
        elif cmd == "expect":
            _emit_element(expect_to_level(a, args.level), args.json)
        elif cmd == "trace":
            value = trace(a)
            _emit(
                {"trace": {"re": str(value.re), "im": str(value.im)}},
                args.json,
                format_scalar(value),
            )
        else:  # witness
            pair = witness(a, r_max=cfg.r_max)
            payload = {
                "x": jsonio.element_to_json(pair.x),
                "y": jsonio.element_to_json(pair.y),
                "check": format_element(pair.certificate),
            }
            human = (
                f"x = {format_element(pair.x)}\n"
                f"y = {format_element(pair.y)}\n"
                f"x a y = {format_element(pair.certificate)}"
            )
            _emit(payload, args.json, human)
        return 0

    if cmd in ("mul", "add"):
        a = _read_element(_read_source(args.expr1), cfg.d)
        b = _read_element(_read_source(args.expr2), cfg.d)
        out = a * b if cmd == "mul" else a + b
        _emit_element(out, args.json)
        return 0

    if cmd == "avg":
        obj = json.loads(_read_source(args.matrix))
        mat = jsonio.corematrix_from_json(obj)
        from .uhf import group_average

        result = group_average(mat, mat.side)
        payload = {"matrix": jsonio.corematrix_to_json(result.d, result.m, result.rows)}
        human = "\n".join(
            "  ".join(format_scalar(z) for z in row) for row in result.rows
        )
        _emit(payload, args.json, human)
        return 0

    if cmd == "annihilate":
        obj = json.loads(_read_source(args.pairs))
        pairs = [
            (Word(tuple(e["alpha"]), cfg.d), Word(tuple(e["beta"]), cfg.d)) for e in obj
        ]
        w = annihilating_word(pairs, r_max=cfg.r_max, d=cfg.d)
        _emit({"word": list(w.letters), "r": len(w)}, args.json, str(w))
        return 0

    if cmd == "snat":
        N = supernatural_of(GeneratorSequence.parse(args.seq))
        payload = {
            "exponents": {
                str(t): ("inf" if e == float("inf") else str(int(e)))
                for t, e in N.exponents
            }
        }
        _emit(payload, args.json, str(N))
        return 0

    if cmd == "k0":
        if bool(args.n) == bool(args.seq):
            raise LeavittError("give exactly one of --n or --seq")
        N = (
            SupernaturalNumber.parse(args.n)
            if args.n
            else supernatural_of(GeneratorSequence.parse(args.seq))
        )
        q = Fraction(args.contains)
        member = k0_contains(N, q)
        _emit(
            {"contains": member, "q": str(q), "N": str(N)},
            args.json,
            "yes" if member else "no",
        )
        return 0

    if cmd == "classify":
        a1 = AlgebraDescriptor(Fraction(args.p1), SupernaturalNumber.parse(args.n1))
        a2 = AlgebraDescriptor(Fraction(args.p2), SupernaturalNumber.parse(args.n2))
        iso = classify_iso(a1, a2)
        _emit(
            {"isomorphic": iso},
            args.json,
            "isomorphic" if iso else "not isomorphic",
        )
        return 0

    if cmd == "obstruct":
        verdict = hom_obstruction(Fraction(args.p1), Fraction(args.p2))
        _emit({"obstruction": verdict}, args.json, verdict)
        return 0

    raise AssertionError(f"unhandled command {cmd}")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except (LeavittError, ValueError, ZeroDivisionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
