"""Command-line front end. Machine output is one JSON object on stdout."""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from dataclasses import dataclass

from .b2m import InvariantError, build_b2m_any as build_b2m, match_nsun
from .cactus import NotCactus, build_b0_cactus, build_b1m_cactus, decompose_cactus, is_mc_free
from .embedding import NotOuterplanar, test_outerplanar
from .graph import Graph, GraphError, gen_named, gen_random, parse_graph
from .grid import EpgRepresentation, PathError, loads_representation, render, verify
from .maxouter import build_b0, build_b1, classify as classify_maxout, s3_centers, s3_witness
from .oracle import Inconclusive, OracleLimitError, Status, bend_number_exact, bounded_grid_search, is_interval

OK, NEGATIVE, USAGE, INPUT, INTERNAL = 0, 1, 2, 3, 4

FAMILIES = ("maximal-outerplanar", "nsun", "cactus", "outerplanar")
CLASSES = {"b0": (0, False), "b1": (1, False), "b1m": (1, True), "b2m": (2, True)}


@dataclass
class CliResult:
    exit_code: int
    stdout: str


class InputError(Exception):
    pass


class Negative(Exception):
    """A well-formed request whose answer is no; carries the JSON to print."""

    def __init__(self, doc: dict):
        super().__init__(doc.get("reason", ""))
        self.doc = doc


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


# ---------------------------------------------------------------- helpers


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e


def _load_graph(path: str) -> Graph:
    return parse_graph(_read_text(path))


def _load_rep(path: str) -> EpgRepresentation:
    try:
        return loads_representation(_read_text(path))
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: not JSON ({e.msg} at line {e.lineno})") from e


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as e:
        raise InputError(f"cannot write {path}: {e.strerror}") from e


def _maximal_outerplanar(g: Graph) -> bool:
    return g.n >= 3 and g.m == 2 * g.n - 3 and not isinstance(test_outerplanar(g), NotOuterplanar)


def detect_family(g: Graph) -> str | None:
    """Maximal outerplanar wins over cactus, since K3 is both."""
    if _maximal_outerplanar(g):
        return "maximal-outerplanar"
    if match_nsun(g) is not None:
        return "nsun"
    if g.n and not isinstance(decompose_cactus(g), NotCactus):
        return "cactus"
    if g.n and not isinstance(test_outerplanar(g), NotOuterplanar):
        return "outerplanar"
    return None


def _family(g: Graph, requested: str) -> str:
    if requested == "auto":
        fam = detect_family(g)
        if fam is None:
            raise InputError("graph is not outerplanar")
        return fam
    ok = {
        "maximal-outerplanar": _maximal_outerplanar,
        "nsun": lambda h: match_nsun(h) is not None,
        "cactus": lambda h: h.n > 0 and not isinstance(decompose_cactus(h), NotCactus),
        "outerplanar": lambda h: h.n > 0 and not isinstance(test_outerplanar(h), NotOuterplanar),
    }[requested]
    if not ok(g):
        raise InputError(f"graph is not {requested}")
    return requested


# ---------------------------------------------------------------- subcommands


def cmd_classify(args) -> dict:
    g = _load_graph(args.graph)
    fam = _family(g, args.family)
    doc = {"family": fam}
    if fam == "maximal-outerplanar":
        c = classify_maxout(g)
        doc.update(b=c.b, bm=c.bm)
        if c.b == 1:
            doc["obstruction"] = s3_witness(c.dual, s3_centers(c.dual)[0][0]).to_json()
        elif c.b == 2:
            asg = c.assignment
            doc["obstruction"] = {"kind": "NOT_M_FREE", "stage": asg.stage, "vertices": list(asg.vertices)}
    elif fam == "nsun":
        # suns from four centres on are outside B1 and inside the monotonic B2
        doc.update(b=2, bm=2)
    elif fam == "cactus":
        w = is_mc_free(g)
        if w is True:
            doc.update(b=0, bm=0)
        else:
            doc.update(b=1, bm=1, obstruction=w.to_json())
    else:
        # only upper bounds are known here, plus the exact zero level for small graphs
        if g.n <= 10 and is_interval(g):
            doc.update(b=0, bm=0)
        else:
            doc["bounds"] = {"b": 2, "bm": 2}
            if g.n <= 10:
                doc["interval"] = False
    return doc


def _build(g: Graph, cls: str) -> tuple:
    """(representation, k, monotonic) for the requested class."""
    if cls == "b2m":
        return build_b2m(g), 2, True
    fam = _family(g, "auto")
    if cls in ("min", "min-monotonic"):
        mono = cls == "min-monotonic"
        if fam == "maximal-outerplanar":
            c = classify_maxout(g)
            if c.b == 0:
                return build_b0(g, c.dual), 0, mono
            if not mono and c.b == 1:
                return build_b1(g, c.dual, c.assignment), 1, False
            return build_b2m(g), 2, mono
        if fam == "cactus":
            if is_mc_free(g) is True:
                return build_b0_cactus(g), 0, mono
            return build_b1m_cactus(g), 1, mono
        return build_b2m(g), 2, mono
    k, mono = CLASSES[cls]
    if fam == "nsun":
        raise Negative({"class": cls, "built": False, "reason": "graph is a sun with b=2, bm=2"})
    if fam == "maximal-outerplanar":
        c = classify_maxout(g)
        if c.b == 0:
            return build_b0(g, c.dual), k, mono
        if cls == "b1" and c.b == 1:
            return build_b1(g, c.dual, c.assignment), k, mono
        raise Negative({"class": cls, "built": False, "reason": f"graph has b={c.b}, bm={c.bm}"})
    if fam == "cactus":
        if cls == "b0":
            w = is_mc_free(g)
            if w is not True:
                raise Negative({"class": cls, "built": False, "reason": "cactus is not MC-free", "obstruction": w.to_json()})
            return build_b0_cactus(g), k, mono
        return build_b1m_cactus(g), k, mono
    raise InputError(f"no {cls} builder for general outerplanar graphs; use b2m")


def cmd_build(args) -> dict:
    g = _load_graph(args.graph)
    rep, k, mono = _build(g, args.cls)
    report = verify(g, rep, max_bends=k, require_monotonic=mono)
    if not report.passed:
        raise InvariantError(f"built {args.cls} representation fails verification")
    if args.output is None:
        return rep.to_json()
    _write(args.output, rep.dumps())
    return {"class": args.cls, "output": args.output, "maxBends": k, "monotonic": mono}


def cmd_verify(args) -> dict:
    g = _load_graph(args.graph)
    rep = _load_rep(args.rep)
    report = verify(g, rep, max_bends=args.max_bends, require_monotonic=args.monotonic)
    if not report.passed:
        raise Negative(report.to_json())
    return report.to_json()


def cmd_render(args):
    rep = _load_rep(args.rep)
    if args.format == "png":
        if args.output is None:
            raise InputError("png output needs -o")
        from .figures import render_png

        render_png(rep, args.output)
    else:
        doc = render(rep, args.format)
        if args.output is None:
            return doc
        _write(args.output, doc)
    return {"format": args.format, "output": args.output}


GEN = {
    "nsun": lambda a: gen_named("nsun", _need(a.n, "--n")),
    "cycle": lambda a: gen_named("cycle", _need(a.n, "--n")),
    "path": lambda a: gen_named("path", _need(a.n, "--n")),
    "m1": lambda a: gen_named("m1"),
    "m1l": lambda a: gen_named("m1_ell", _need(a.l, "--l")),
    "m2": lambda a: gen_named("m2"),
    "m3": lambda a: gen_named("m3"),
    "rand-maxout": lambda a: gen_random("maximal_outerplanar", _need(a.n, "--n"), a.seed),
    "rand-cactus": lambda a: gen_random("cactus", _need(a.n, "--n"), a.seed),
    "rand-outerplanar": lambda a: gen_random("connected_outerplanar", _need(a.n, "--n"), a.seed),
}


def _need(value, flag):
    if value is None:
        raise _UsageError(f"this family needs {flag}")
    return value


def cmd_gen(args):
    g = GEN[args.family](args)
    if args.output is None:
        return g.to_text()
    _write(args.output, g.to_text())
    return {"family": args.family, "output": args.output, "n": g.n, "m": g.m}


def cmd_oracle(args) -> dict:
    g = _load_graph(args.graph)
    if args.which == "exact":
        res = bend_number_exact(g, budget=args.budget)
        if isinstance(res, Inconclusive):
            raise Negative({"status": "INCONCLUSIVE", "k": res.k, "monotonic": res.monotonic})
        return {"b": res[0], "bm": res[1]}
    k, mono = CLASSES[args.which]
    out = bounded_grid_search(g, k, mono, bound=args.grid, budget=args.budget)
    if out.status is not Status.FOUND:
        raise Negative(out.to_json())
    return out.to_json()


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="outerepg", description="Bend-minimal EPG representations of outerplanar graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="bend numbers of a maximal outerplanar graph or cactus")
    c.add_argument("graph")
    c.add_argument("--family", choices=("auto",) + FAMILIES, default="auto")
    c.set_defaults(run=cmd_classify)

    b = sub.add_parser("build", help="construct a representation")
    b.add_argument("graph")
    b.add_argument("--class", dest="cls", required=True, choices=tuple(CLASSES) + ("min", "min-monotonic"))
    b.add_argument("-o", "--output")
    b.set_defaults(run=cmd_build)

    v = sub.add_parser("verify", help="check a representation against a graph")
    v.add_argument("graph")
    v.add_argument("rep")
    v.add_argument("--max-bends", type=int)
    v.add_argument("--monotonic", action="store_true")
    v.set_defaults(run=cmd_verify)

    r = sub.add_parser("render", help="draw a representation")
    r.add_argument("rep")
    r.add_argument("--format", choices=("svg", "ascii", "png"), default="svg")
    r.add_argument("-o", "--output")
    r.set_defaults(run=cmd_render)

    gen = sub.add_parser("gen", help="write a named or random graph")
    gen.add_argument("--family", required=True, choices=tuple(GEN))
    gen.add_argument("--n", type=int)
    gen.add_argument("--l", type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output")
    gen.set_defaults(run=cmd_gen)

    o = sub.add_parser("oracle", help="exhaustive small-graph searches")
    o.add_argument("which", choices=("b0", "b1", "b1m", "exact"))
    o.add_argument("graph")
    o.add_argument("--grid", type=int, help="grid side; defaults to 2n(k+1)")
    o.add_argument("--budget", type=int, default=10**7)
    o.set_defaults(run=cmd_oracle)
    return p


def _dump(doc) -> str:
    if isinstance(doc, str):
        return doc
    return json.dumps(doc, separators=(",", ":")) + "\n"


def run(argv: list) -> CliResult:
    err = io.StringIO()
    try:
        with contextlib.redirect_stderr(err):
            args = _parser().parse_args(argv)
    except _UsageError as e:
        return _fail(USAGE, f"usage error: {e}")
    except SystemExit as e:  # --help
        sys.stderr.write(err.getvalue())
        return CliResult(OK if not e.code else USAGE, "")
    try:
        return CliResult(OK, _dump(args.run(args)))
    except Negative as e:
        return CliResult(NEGATIVE, _dump(e.doc))
    except _UsageError as e:
        return _fail(USAGE, f"usage error: {e}")
    except (InputError, GraphError, PathError, OracleLimitError) as e:
        return _fail(INPUT, f"input error: {e}")
    except (InvariantError, RuntimeError) as e:
        return _fail(INTERNAL, f"internal error: {e}")


def _fail(code: int, message: str) -> CliResult:
    print(message, file=sys.stderr)
    return CliResult(code, "")


def main(argv=None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(res.stdout)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
