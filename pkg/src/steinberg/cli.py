"""Command-line front end: ``steinberg {sp,st,trip,omega,verify,oracle} ...``.

Subsets of simple roots are comma-separated 1-based indices (``"1,3"``); the
empty string is the empty set and ``all`` is every simple root.  Cocharacters
are GL weights (``-1,0``) or simple-root pairings (``a:-1,0``).

Exit status: 0 on success, 1 on bad input, 2 when a verification fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .bundles import Cocharacter, dim_aut, trip_count
from .counts import group_order, nilcone_order, sp_count, st_count
from .oracle import (
    OracleBoundError,
    mask_from_type,
    oracle_group_order,
    oracle_nilcone,
    oracle_sp,
    oracle_st,
    oracle_trip,
    parse_type,
)
from .qalg import QPoly, eval_at, format_poly
from .rootsys import DatumError, ReductiveDatum, gl, parse_datum, sl
from .symfun import BiSymFunc, exp_side, omega_series
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------- argument parsing


def parse_subset(text: str, rank: int) -> int:
    text = text.strip()
    if text == "":
        return 0
    if text.lower() == "all":
        return (1 << rank) - 1
    mask = 0
    for part in text.split(","):
        try:
            i = int(part)
        except ValueError:
            raise UsageError(f"bad subset element {part!r}") from None
        if not 1 <= i <= rank:
            raise UsageError(f"simple root index {i} outside 1..{rank}")
        mask |= 1 << (i - 1)
    return mask


def format_subset(mask: int) -> str:
    return ",".join(str(i + 1) for i in range(mask.bit_length()) if (mask >> i) & 1)


def parse_mu(text: str, datum: ReductiveDatum) -> Cocharacter:
    text = text.strip()
    try:
        if text.startswith("a:"):
            body = text[2:]
            values = [int(x) for x in body.split(",")] if body else []
            mu = Cocharacter(tuple(values))
        else:
            if not datum.is_gl:
                raise UsageError("GL weights need a GL_n datum; use a:... pairings otherwise")
            values = [int(x) for x in text.split(",")]
            if len(values) != datum.torus_rank:
                raise UsageError(f"need {datum.torus_rank} weights, got {len(values)}")
            mu = Cocharacter.from_gl_weights(values)
    except ValueError as exc:
        raise UsageError(f"bad cocharacter {text!r}: {exc}") from None
    if len(mu.simple_pairings) != datum.semisimple_rank:
        raise UsageError(f"need {datum.semisimple_rank} pairings, got {len(mu.simple_pairings)}")
    if not mu.is_antidominant:
        raise UsageError(f"cocharacter {text!r} is not anti-dominant")
    return mu


def _datum(text: str) -> ReductiveDatum:
    try:
        datum = parse_datum(text)
        datum.check_supported()
    except DatumError as exc:
        raise UsageError(str(exc)) from None
    return datum


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--mu -1,0`` into ``--mu=-1,0`` so argparse does not see a flag."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok == "--mu":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--mu={nxt}")
        else:
            out.append(tok)
    return out


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=None)
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    p = _Parser(prog="steinberg", description="Point counts of Springer/Steinberg varieties over F_q.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("sp", parents=[common], help="|Sp_H(J)|")
    s.add_argument("datum")
    s.add_argument("--J", help="subset of simple roots; omit for the full table")

    s = sub.add_parser("st", parents=[common], help="|St_H(J1, J2)|")
    s.add_argument("datum")
    s.add_argument("--J1")
    s.add_argument("--J2")

    s = sub.add_parser("trip", parents=[common], help="[Trip_mu(J0, Jinf)]")
    s.add_argument("datum")
    s.add_argument("--mu", required=True)
    s.add_argument("--J0")
    s.add_argument("--Jinf")

    s = sub.add_parser("omega", parents=[common], help="Omega_n generating function")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--tmax", type=int, default=3)
    s.add_argument("--check-exp", action="store_true", help="compare with the plethystic side")

    s = sub.add_parser("verify", parents=[common], help="run cross-check suites")
    s.add_argument("--suite", default="all", choices=sorted(SUITES) + ["all"])
    s.add_argument("--n", type=int, help="degree bound (mellit, hnq, delta)")
    s.add_argument("--tmax", type=int, help="t truncation (mellit)")

    s = sub.add_parser("oracle", parents=[common], help="brute force over F_q vs formula")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--what", choices=("sp", "st", "trip", "group", "nilcone"), required=True)
    s.add_argument("--types", default="full,full", help="flag types: full, trivial or dims like 1/2")
    s.add_argument("--mu", help="GL weights for --what trip")
    s.add_argument("--det1", action="store_true", help="count SL_n instead of GL_n for --what group")
    return p


# ---------------------------------------------------------------- rendering


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


def _poly_out(p: QPoly, fmt: str) -> str:
    return format_poly(p) if fmt == "text" else _dump(p.to_json())


def _table(rows: list[tuple[str, ...]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _bisym_text(f: BiSymFunc) -> list[tuple[str, ...]]:
    rows = []
    for a, b in f.keys():
        c = f[(a, b)]
        if hasattr(c, "coeffs"):
            for k, ck in enumerate(c.coeffs):
                if not ck.is_zero():
                    rows.append((f"m{list(a)}(X)", f"m{list(b)}(Y)", f"t^{k}", str(ck)))
        elif not c.is_zero():
            rows.append((f"m{list(a)}(X)", f"m{list(b)}(Y)", str(c)))
    return rows


# ---------------------------------------------------------------- commands


def _cmd_sp(args, fmt):
    H = _datum(args.datum)
    r = H.semisimple_rank
    if args.J is not None:
        return _poly_out(sp_count(H, parse_subset(args.J, r)), fmt), EXIT_OK
    if fmt == "text":
        rows = [("J", "|Sp|")] + [(f"{{{format_subset(J)}}}", format_poly(sp_count(H, J))) for J in range(1 << r)]
        return _table(rows), EXIT_OK
    return _dump({str(J): sp_count(H, J).to_json() for J in range(1 << r)}), EXIT_OK


def _cmd_st(args, fmt):
    H = _datum(args.datum)
    r = H.semisimple_rank
    if args.J1 is not None and args.J2 is not None:
        J1, J2 = parse_subset(args.J1, r), parse_subset(args.J2, r)
        return _poly_out(st_count(H, J1, J2), fmt), EXIT_OK
    if (args.J1 is None) != (args.J2 is None):
        raise UsageError("give both --J1 and --J2, or neither for the full table")
    pairs = [(a, b) for a in range(1 << r) for b in range(1 << r)]
    if fmt == "text":
        rows = [("J1", "J2", "|St|")] + [
            (f"{{{format_subset(a)}}}", f"{{{format_subset(b)}}}", format_poly(st_count(H, a, b)))
            for a, b in pairs
        ]
        return _table(rows), EXIT_OK
    return _dump({f"{a},{b}": st_count(H, a, b).to_json() for a, b in pairs}), EXIT_OK


def _cmd_trip(args, fmt):
    H = _datum(args.datum)
    r = H.semisimple_rank
    mu = parse_mu(args.mu, H)
    if args.J0 is not None and args.Jinf is not None:
        value = trip_count(H, mu, parse_subset(args.J0, r), parse_subset(args.Jinf, r))
        return _poly_out(value, fmt), EXIT_OK
    if (args.J0 is None) != (args.Jinf is None):
        raise UsageError("give both --J0 and --Jinf, or neither for the full table")
    pairs = [(a, b) for a in range(1 << r) for b in range(1 << r)]
    dim, aut = dim_aut(H, mu)
    if fmt == "text":
        rows = [("J0", "Jinf", "[Trip]")] + [
            (f"{{{format_subset(a)}}}", f"{{{format_subset(b)}}}", format_poly(trip_count(H, mu, a, b)))
            for a, b in pairs
        ]
        return f"dim Aut = {dim}, |Aut| = {format_poly(aut)}\n" + _table(rows), EXIT_OK
    out = {
        "dim_aut": dim,
        "aut_order": aut.to_json(),
        "trip": {f"{a},{b}": trip_count(H, mu, a, b).to_json() for a, b in pairs},
    }
    return _dump(out), EXIT_OK


def _cmd_omega(args, fmt):
    if args.n < 1 or args.tmax < 0:
        raise UsageError("need n >= 1 and tmax >= 0")
    if args.n > 3:
        raise UsageError("omega is supported for n <= 3")
    omega = omega_series(args.n, args.tmax)[args.n]
    exp = exp_side(args.n, args.tmax)[args.n] if args.check_exp else None
    verdict = None if exp is None else ("PASS" if omega == exp else "FAIL")
    code = EXIT_FAILED if verdict == "FAIL" else EXIT_OK
    if fmt == "text":
        lines = [f"Omega_{args.n} (bundle side), t^0..t^{args.tmax}:", _table(_bisym_text(omega))]
        if exp is not None:
            lines += [f"Exp side, degree {args.n}:", _table(_bisym_text(exp)), verdict]
        return "\n".join(lines), code
    out = {"n": args.n, "tmax": args.tmax, "omega": omega.to_json()}
    if exp is not None:
        out["exp"] = exp.to_json()
        out["verdict"] = verdict
    return _dump(out), code


def _cmd_verify(args, fmt):
    kwargs = {}
    if args.suite == "mellit":
        if args.n is not None:
            kwargs["nmax"] = args.n
        if args.tmax is not None:
            kwargs["tmax"] = args.tmax
    elif args.suite in ("hnq", "delta") and args.n is not None:
        kwargs["nmax"] = args.n
    elif args.n is not None or args.tmax is not None:
        raise UsageError(f"--n/--tmax do not apply to suite {args.suite!r}")
    results = run_suite(args.suite, **kwargs)
    ok = all(r.ok for r in results)
    code = EXIT_OK if ok else EXIT_FAILED
    if fmt == "json":
        return _dump({"ok": ok, "results": [r.to_json() for r in results]}), code
    lines = [r.line() for r in results] + ["PASS" if ok else "FAIL"]
    return "\n".join(lines), code


def _cmd_oracle(args, fmt):
    n, q = args.n, args.q
    G = gl(n)
    try:
        type_texts = args.types.split(",")
        types = [parse_type(n, t) for t in type_texts]
        if args.what == "sp":
            o = oracle_sp(n, q, types[0])
            formula = sp_count(G, mask_from_type(n, types[0]))
        elif args.what == "st":
            if len(types) != 2:
                raise UsageError("--what st needs two flag types")
            o = oracle_st(n, q, types[0], types[1])
            formula = st_count(G, mask_from_type(n, types[0]), mask_from_type(n, types[1]))
        elif args.what == "trip":
            if args.mu is None or len(types) != 2:
                raise UsageError("--what trip needs --mu and two flag types")
            mu = parse_mu(args.mu, G)
            o = oracle_trip(n, q, mu.gl_weights, types[0], types[1])
            formula = trip_count(G, mu, mask_from_type(n, types[0]), mask_from_type(n, types[1]))
        elif args.what == "group":
            o = oracle_group_order(n, q, args.det1)
            formula = group_order(sl(n) if args.det1 else G)
        else:
            o = oracle_nilcone(n, q)
            formula = nilcone_order(G)
    except (OracleBoundError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    f = eval_at(formula, q)
    verdict = "PASS" if f == o else "FAIL"
    code = EXIT_OK if f == o else EXIT_FAILED
    if fmt == "json":
        out = {"oracle": o, "formula": f, "formula_poly": formula.to_json(), "verdict": verdict}
        return _dump(out), code
    return f"oracle  {o}\nformula {f}  ({format_poly(formula)} at q={q})\n{verdict}", code


COMMANDS = {
    "sp": _cmd_sp,
    "st": _cmd_st,
    "trip": _cmd_trip,
    "omega": _cmd_omega,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
}

# verification-style commands read best as PASS/FAIL lines by default
DEFAULT_FORMAT = {"verify": "text", "oracle": "text"}


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    """Parse ``argv`` and execute; returns (exit code, output text)."""
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_glue_negative_values(argv))
        fmt = args.format or DEFAULT_FORMAT.get(args.command, "json")
        text, code = COMMANDS[args.command](args, fmt)
    except UsageError as exc:
        return EXIT_USAGE, f"error: {exc}"
    except (DatumError, ValueError) as exc:
        return EXIT_USAGE, f"error: {exc}"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        return code, ""
    return code, text


def main(argv: Sequence[str] | None = None) -> int:
    code, text = run(argv)
    if text:
        stream = sys.stderr if code == EXIT_USAGE else sys.stdout
        print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
