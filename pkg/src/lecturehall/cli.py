"""Command-line front end.

Exit status: 0 on success, 2 when two routes that must agree do not
(bug or falsified identity), 1 on usage and cap errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import cone_oracle, contractibility, eulerian
from .errors import CapExceeded, NotDivisible
from .polynomial import IntPolynomial, render_plain
from .seqcore import DEFAULT_CAP, SignatureSeq

COMMANDS = ("poly", "quotient", "oracle", "contract", "classify", "lht", "cg")
EXIT_OK, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fibonacci(n: int) -> tuple[int, ...]:
    out = []
    a, b = 1, 1
    for _ in range(n):
        out.append(a)
        a, b = b, a + b
    return tuple(out)


def named_sequence(spec: str) -> SignatureSeq:
    """Parse ``5,3``, ``constant:k:n``, ``fibonacci:n`` or ``natural:n``."""
    spec = spec.strip()
    name, _, args = spec.partition(":")
    try:
        if not args:
            return SignatureSeq(tuple(int(v) for v in spec.split(",")))
        parts = [int(v) for v in args.split(":")]
        if name == "constant" and len(parts) == 2:
            k, n = parts
            entries = (k,) * n
        elif name == "fibonacci" and len(parts) == 1:
            entries = fibonacci(parts[0])
        elif name == "natural" and len(parts) == 1:
            entries = tuple(range(1, parts[0] + 1))
        else:
            raise ValueError
        return SignatureSeq(entries)
    except ValueError:
        raise ValueError(f"cannot parse sequence spec {spec!r}") from None


def _build_parser() -> _Parser:
    p = _Parser(prog="lecturehall",
                description="Inflated s-Eulerian polynomials and contractibility.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--seq", help="comma list or constant:k:n, fibonacci:n, natural:n")
    p.add_argument("--output", choices=("plain", "json"), default="plain")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--n", type=int, help="part count for lht, size for cg")
    p.add_argument("--nmax", type=int, help="largest N for the lht sweep")
    return p


def _dump(payload: dict) -> str:
    return json.dumps(payload, separators=(",", ":"))


def _witness_json(w):
    return None if w is None else [list(w[0].values), list(w[1].values)]


def _fmt_seq(e) -> str:
    return "(" + ",".join(map(str, e.values)) + ")"


def _cmd_poly(args, sig):
    q = eulerian.inflated_eulerian(sig, args.cap)
    return q, None


def _cmd_quotient(args, sig):
    direct = eulerian.quotient_polynomial(sig, args.cap)
    try:
        divided = eulerian.quotient_by_division(sig, args.cap)
    except NotDivisible:
        divided = None
    return direct, direct == divided


def _cmd_oracle(args, sig):
    stat_route = eulerian.inflated_eulerian(sig, args.cap)
    geometric = cone_oracle.oracle_inflated_eulerian(sig, args.cap)
    return stat_route, stat_route == geometric


def _verdicts_json(report):
    return {str(n): {"contractible": v.contractible,
                     "method_agreement": v.method_agreement,
                     "bruteforce": v.bruteforce, "fiber": v.fiber, "fast": v.fast,
                     "witness": _witness_json(v.witness)}
            for n, v in report.verdicts.items()}


def _verdict_lines(report):
    lines = []
    for n, v in report.verdicts.items():
        word = "contractible" if v.contractible else "not contractible"
        line = (f"n={n}: {word} (bruteforce={v.bruteforce} fiber={v.fiber} "
                f"fast={v.fast})")
        if v.witness is not None:
            line += f" witness e={_fmt_seq(v.witness[0])} e_bar={_fmt_seq(v.witness[1])}"
        lines.append(line)
    return lines


def _emit_polynomial(args, sig, q: IntPolynomial, agreement):
    if args.output == "json":
        payload = {"s": list(sig.entries), "command": args.command, "coeffs": list(q.coeffs)}
        if agreement is not None:
            payload["agreement"] = agreement
        print(_dump(payload))
    else:
        print(render_plain(q))
        if agreement is not None:
            print(f"agreement: {str(agreement).lower()}")


def _run_contract(args, sig, classify: bool) -> int:
    report = contractibility.classify_prefix(sig, args.cap)
    agreement = report.method_agreement and (report.shape_agreement or not classify)
    if args.output == "json":
        payload = {"s": list(sig.entries), "command": args.command,
                   "contractible": report.contractible,
                   "agreement": agreement,
                   "verdicts": _verdicts_json(report),
                   "witness": _witness_json(report.witness)}
        if classify:
            payload["shape"] = report.shape
            payload["drop_index"] = report.drop_index
        print(_dump(payload))
    else:
        for line in _verdict_lines(report):
            print(line)
        word = "contractible" if report.contractible else "not contractible"
        if classify:
            if report.shape == "drop":
                shape = f"drop at N={report.drop_index}"
            else:
                shape = report.shape or "none"
            print(f"prefix {sig}: {word}; shape: {shape}")
        else:
            print(f"prefix {sig}: {word}")
        print(f"agreement: {str(agreement).lower()}")
    return EXIT_OK if agreement else EXIT_DISAGREE


def _run_lht(args) -> int:
    if args.n is None or args.nmax is None:
        raise UsageError("lht needs --n and --nmax")
    rows = [(N, cone_oracle.count_lecture_hall(N, args.n), cone_oracle.count_odd_parts(N, args.n))
            for N in range(args.nmax + 1)]
    agreement = all(lh == odd for _, lh, odd in rows)
    if args.output == "json":
        print(_dump({"command": "lht", "n": args.n,
                     "table": [list(r) for r in rows], "agreement": agreement}))
    else:
        print("N\tLH\todd")
        for r in rows:
            print("\t".join(map(str, r)))
        print(f"agreement: {str(agreement).lower()}")
    return EXIT_OK if agreement else EXIT_DISAGREE


def _run_cg(args) -> int:
    if args.n is None:
        raise UsageError("cg needs --n")
    if args.n < 1:
        raise UsageError("--n must be positive")
    res = eulerian.chung_graham_identities(args.n)
    agreement = res["specialization"] and res.get("quotient_identity", True)
    if args.output == "json":
        print(_dump({"command": "cg", "n": args.n, **res, "agreement": agreement}))
    else:
        print(render_plain(IntPolynomial(tuple(res["coeffs"]))))
        for key in ("specialization", "quotient_identity", "unshifted_identity"):
            if key in res:
                print(f"{key}: {str(res[key]).lower()}")
        print(f"agreement: {str(agreement).lower()}")
    return EXIT_OK if agreement else EXIT_DISAGREE


def run(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        if args.cap < 1:
            raise UsageError("--cap must be >= 1")
        if args.command == "lht":
            return _run_lht(args)
        if args.command == "cg":
            return _run_cg(args)
        if args.seq is None:
            raise UsageError(f"{args.command} needs --seq")
        sig = named_sequence(args.seq)
        if args.command in ("contract", "classify"):
            return _run_contract(args, sig, classify=args.command == "classify")
        handler = {"poly": _cmd_poly, "quotient": _cmd_quotient, "oracle": _cmd_oracle}[args.command]
        q, agreement = handler(args, sig)
        _emit_polynomial(args, sig, q, agreement)
        return EXIT_OK if agreement in (None, True) else EXIT_DISAGREE
    except CapExceeded as exc:
        print(f"error: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
