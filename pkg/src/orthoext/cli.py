"""Command-line front end.

Exit codes: 0 success, 1 certified impossibility, 2 usage or I/O error,
3 search budget exceeded, 4 no constructive method applies, 5 internal
failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from . import census, clifford, completion, octonion
from .errors import BudgetExceeded, InternalFailure, OrthoError
from .intvec import IntVector, gram, parse_vectors, verify_ortho_set

EXIT_OK = 0
EXIT_IMPOSSIBLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_UNSUPPORTED = 4
EXIT_INTERNAL = 5

COMMANDS = (
    "complete",
    "partner",
    "enumerate",
    "classify",
    "diffset",
    "clifford-search",
    "cross7",
    "cross8",
    "verify",
)


class UsageError(Exception):
    pass


def parse_vector_file(path: str | os.PathLike) -> list[IntVector]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    return parse_vectors(text, source=str(path))


def parse_vec_arg(s: str) -> IntVector:
    return parse_vectors(s.replace(",", " "), source="--vec")[0]


def read_config(path: str) -> dict[str, str]:
    """``key = value`` lines; ``#`` starts a comment."""
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror or exc}") from None
    out = {}
    for lineno, line in enumerate(lines, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        k, v = line.split("=", 1)
        out[k.strip().replace("-", "_")] = v.strip()
    return out


def format_rows(vectors: Sequence[IntVector]) -> str:
    if not vectors:
        return ""
    width = max(len(str(c)) for v in vectors for c in v)
    return "".join(" ".join(str(c).rjust(width) for c in v) + "\n" for v in vectors)


def gram_line(vectors: Sequence[IntVector]) -> str:
    g = gram(vectors)
    n = g[0][0]
    diag = all(g[i][j] == (n if i == j else 0) for i in range(len(g)) for j in range(len(g)))
    return f"gram: {n}*I" if diag else f"gram: {g}"


def _common(p: argparse.ArgumentParser, top: bool = False) -> None:
    default = None if top else argparse.SUPPRESS
    p.add_argument("--json", action="store_true", default=default, help="emit a JSON object")
    p.add_argument("--budget", type=int, default=default, help="cap on N for exhaustive searches")
    p.add_argument("--threads", type=int, default=default, help="worker processes for census runs")
    p.add_argument("--config", default=default, help="key=value file with the same options")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthoext",
        description="Equal-norm orthogonal extensions of integer vector sets.",
    )
    _common(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("complete", help="extend an orthogonal equal-norm set")
    p.add_argument("--file", help="vector file (one vector per line)")
    p.add_argument("--vec", action="append", default=[], help='vector such as "4 5 6 7"; repeatable')
    _common(p)

    p = sub.add_parser("partner", help="exhaustive search for an equal-norm orthogonal vector")
    p.add_argument("--vec", required=True)
    _common(p)

    p = sub.add_parser("enumerate", help="canonical representations of N as a sum of d squares")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim", type=int, default=3)
    _common(p)

    p = sub.add_parser("classify", help="classify N for the d=3 extendability sets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cross-check", action="store_true")
    _common(p)

    p = sub.add_parser("diffset", help="N < limit extendable 1->2 but not 1->3 in Z^3")
    p.add_argument("--limit", type=int, required=True)
    _common(p)

    p = sub.add_parser("clifford-search", help="maximum V0 set for the even Clifford algebra")
    p.add_argument("--n", type=int, required=True)
    _common(p)

    p = sub.add_parser("cross7", help="7D cross product, optionally with K1, K2 scaling")
    p.add_argument("--v", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--k1", type=int)
    p.add_argument("--k2", type=int)
    _common(p)

    p = sub.add_parser("cross8", help="8D ternary cross product, optionally with K1, K2, K3")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--z", required=True)
    p.add_argument("--k", type=int, nargs=3, metavar=("K1", "K2", "K3"))
    _common(p)

    p = sub.add_parser("verify", help="check that a vector file is an orthogonal equal-norm set")
    p.add_argument("--file", required=True)
    _common(p)
    return parser


def _settings(args: argparse.Namespace) -> tuple[bool, int | None, int]:
    cfg = read_config(args.config) if getattr(args, "config", None) else {}
    try:
        use_json = args.json if args.json is not None else cfg.get("json", "").lower() in ("1", "true", "yes")
        budget = args.budget
        if budget is None and "budget" in cfg:
            budget = int(cfg["budget"])
        threads = args.threads
        if threads is None:
            threads = int(cfg.get("threads", 1))
    except ValueError as exc:
        raise UsageError(f"bad config value: {exc}") from None
    if threads < 1:
        raise UsageError("--threads must be at least 1")
    return use_json, budget, threads


class Outcome:
    def __init__(self, command, inp, status, code=EXIT_OK, result=None, added=None,
                 n_squared=None, reason=None, text=""):
        self.command, self.input, self.status, self.code = command, inp, status, code
        self.result, self.added, self.n_squared, self.reason = result, added, n_squared, reason
        self.text = text

    def to_json(self) -> dict:
        d = {"command": self.command, "input": self.input, "status": self.status}
        if self.added is not None:
            d["added"] = self.added
        else:
            d["result"] = self.result
        d["n_squared"] = self.n_squared
        if self.reason is not None:
            d["reason"] = self.reason
        return d


def _vl(vs) -> list[list[int]]:
    return [list(v) for v in vs]


_CODE = {
    completion.Status.COMPLETED: EXIT_OK,
    completion.Status.PARTIALLY_EXTENDED: EXIT_OK,
    completion.Status.IMPOSSIBLE: EXIT_IMPOSSIBLE,
    completion.Status.NOT_SUPPORTED: EXIT_UNSUPPORTED,
}


def cmd_complete(args, budget, threads) -> Outcome:
    vectors = []
    if args.file:
        vectors += parse_vector_file(args.file)
    vectors += [parse_vec_arg(s) for s in args.vec]
    if not vectors:
        raise UsageError("complete needs --file or --vec")
    res = completion.complete(vectors)
    lines = [f"# status: {res.status.value}"]
    if res.ok:
        body = format_rows(res.vectors)
        lines.append(body.rstrip("\n"))
        lines.append("# " + gram_line(res.vectors))
    else:
        lines.append(f"# reason: {res.explain()}")
    return Outcome(
        "complete", _vl(vectors), res.status.value, _CODE[res.status],
        added=_vl(res.added), n_squared=res.squared_norm,
        reason=None if res.ok else res.explain(), text="\n".join(lines) + "\n",
    )


def cmd_partner(args, budget, threads) -> Outcome:
    v = parse_vec_arg(args.vec)
    w = census.find_partner(v, budget)
    if w is None:
        reason = completion.REASON_TEXT[completion.Reason.NO_PARTNER]
        return Outcome("partner", list(v), "Impossible", EXIT_IMPOSSIBLE, result=None,
                       n_squared=v.norm2, reason=reason, text=f"# reason: {reason}\n")
    text = format_rows([v, w]) + "# " + gram_line([v, w]) + "\n"
    return Outcome("partner", list(v), "Found", result=list(w), n_squared=v.norm2, text=text)


def cmd_enumerate(args, budget, threads) -> Outcome:
    reps = census.enumerate_reps(args.n, args.dim, budget)
    text = f"# {len(reps)} canonical representation(s)\n" + format_rows([IntVector(r) for r in reps])
    return Outcome("enumerate", {"n": args.n, "dim": args.dim}, "OK",
                   result=[list(r) for r in reps], n_squared=args.n, text=text)


def cmd_classify(args, budget, threads) -> Outcome:
    rep = census.classify_N_d3(args.n, budget, cross_check=args.cross_check)
    lines = [
        f"N: {rep.N}",
        f"representations: {len(rep.reps_canonical)}",
        f"in C3(1,2): {rep.in_C3_12}",
        f"in C3(1,3): {rep.in_C3_13}",
        f"trivial: {rep.trivial}",
    ]
    for w in rep.witnesses.values():
        p = "none" if w.partner is None else str(w.partner)
        lines.append(f"  {w.rep} -> partner {p}")
    return Outcome("classify", {"n": args.n}, "OK", result=rep.to_dict(),
                   n_squared=args.n, text="\n".join(lines) + "\n")


def cmd_diffset(args, budget, threads) -> Outcome:
    ns = census.difference_set_d3(args.limit, budget, threads=threads)
    text = " ".join(map(str, ns)) + "\n"
    return Outcome("diffset", {"limit": args.limit}, "OK", result=ns, text=text)


def cmd_clifford_search(args, budget, threads) -> Outcome:
    v0 = clifford.search_max_v0(args.n)
    text = f"# |V0| = {len(v0)}\n" + "".join(str(v) + "\n" for v in v0)
    return Outcome("clifford-search", {"n": args.n}, "OK",
                   result=[str(v) for v in v0], text=text)


def cmd_cross7(args, budget, threads) -> Outcome:
    v, w = parse_vec_arg(args.v), parse_vec_arg(args.w)
    inp = {"v": list(v), "w": list(w)}
    if (args.k1 is None) != (args.k2 is None):
        raise UsageError("--k1 and --k2 go together")
    if args.k1 is not None:
        u = octonion.complete_d7_pair(v, w, args.k1, args.k2)
        n2 = v.norm2
    else:
        u = octonion.cross7(v, w)
        n2 = None
    return Outcome("cross7", inp, "OK", result=list(u), n_squared=n2, text=format_rows([u]))


def cmd_cross8(args, budget, threads) -> Outcome:
    x, y, z = (parse_vec_arg(s) for s in (args.x, args.y, args.z))
    inp = {"x": list(x), "y": list(y), "z": list(z)}
    if args.k:
        w = octonion.complete_d8_triple(x, y, z, *args.k)
        n2 = x.norm2
    else:
        w = octonion.cross8_ternary(x, y, z)
        n2 = None
    return Outcome("cross8", inp, "OK", result=list(w), n_squared=n2, text=format_rows([w]))


def cmd_verify(args, budget, threads) -> Outcome:
    vectors = parse_vector_file(args.file)
    try:
        s = verify_ortho_set(vectors)
    except (BudgetExceeded, InternalFailure):
        raise
    except OrthoError as exc:
        return Outcome("verify", _vl(vectors), "Invalid", EXIT_IMPOSSIBLE,
                       result=False, reason=str(exc), text=f"# invalid: {exc}\n")
    text = f"# valid: {len(s)} vectors in Z^{s.dim}\n# {gram_line(s.vectors)}\n"
    return Outcome("verify", _vl(vectors), "Valid", result=True,
                   n_squared=s.squared_norm, text=text)


HANDLERS = {
    "complete": cmd_complete,
    "partner": cmd_partner,
    "enumerate": cmd_enumerate,
    "classify": cmd_classify,
    "diffset": cmd_diffset,
    "clifford-search": cmd_clifford_search,
    "cross7": cmd_cross7,
    "cross8": cmd_cross8,
    "verify": cmd_verify,
}


def _emit(out, command, use_json, status, code, reason) -> int:
    if use_json:
        payload = {"command": command, "input": None, "status": status,
                   "result": None, "n_squared": None, "reason": reason}
        out.write(json.dumps(payload) + "\n")
    else:
        sys.stderr.write(f"orthoext: {reason}\n")
    return code


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    use_json = bool(args.json)
    try:
        use_json, budget, threads = _settings(args)
        outcome = HANDLERS[args.command](args, budget, threads)
    except UsageError as exc:
        return _emit(out, args.command, use_json, "UsageError", EXIT_USAGE, str(exc))
    except BudgetExceeded as exc:
        return _emit(out, args.command, use_json, "BudgetExceeded", EXIT_BUDGET, str(exc))
    except InternalFailure as exc:
        return _emit(out, args.command, use_json, "InternalFailure", EXIT_INTERNAL, str(exc))
    except OrthoError as exc:
        return _emit(out, args.command, use_json, "UsageError", EXIT_USAGE, str(exc))
    if use_json:
        out.write(json.dumps(outcome.to_json()) + "\n")
    else:
        out.write(outcome.text)
    return outcome.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
