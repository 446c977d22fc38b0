"""ehlab command line.

Exit codes: 0 success / pattern-free / inequality holds, 1 copy found or
inequality violated, 2 usage or input error, 3 search cap exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import math
import sys
from pathlib import Path

from . import __version__, analysis, construct, detect, homog, search
from .core import Colouring, Palette, ParseError, parse, serialize
from .patterns import BUNDLED, load_pattern

REPORT_VERSION = 1

EXIT_OK, EXIT_FOUND, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


class _Inputs:
    """Loads colourings and remembers a digest of every input for the report."""

    def __init__(self):
        self.digests: dict[str, str] = {}

    def colouring(self, label: str, path: str) -> Colouring:
        p = Path(path)
        if not p.is_file():
            raise UsageError(f"no such file: {path}")
        data = p.read_bytes()
        self.digests[label] = _digest(data)
        return parse(data.decode("utf-8"))

    def pattern(self, label: str, name: str) -> Colouring:
        try:
            pat = load_pattern(name)
        except FileNotFoundError as exc:
            raise UsageError(str(exc)) from None
        self.digests[label] = _digest(serialize(pat).encode())
        return pat


def _report(command: str, inputs: _Inputs, seed=None, **body) -> dict:
    # seed is null for deterministic commands
    rep = {"report_version": REPORT_VERSION, "tool": "ehlab", "version": __version__, "command": command,
           "seed": seed}
    rep["inputs"] = dict(sorted(inputs.digests.items()))
    rep.update(body)
    return rep


def _emit(rep: dict, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(rep, indent=2))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_gen(args, inputs: _Inputs) -> int:
    kind = args.kind
    if kind == "random":
        if args.n is None:
            raise UsageError("gen --kind random needs --n")
        colours = args.colours or list(range(1, (args.s or 2) + 1))
        c = construct.random_colouring(args.n, colours, args.seed, s=args.s)
    elif kind == "product":
        if not args.factors:
            raise UsageError("gen --kind product needs --factors")
        factors = [inputs.colouring(f"factor{i}", f) for i, f in enumerate(args.factors.split(","))]
        c = construct.product_of(factors)
    elif kind == "gallai-c4":
        m = args.m if args.m is not None else args.n
        if m is None:
            raise UsageError("gen --kind gallai-c4 needs --m")
        c = construct.gallai_product_c4(m, args.seed, args.trials)
    elif kind == "k4host":
        if args.n is None:
            raise UsageError("gen --kind k4host needs --n")
        c = construct.k4_free_host_colouring(args.n, args.seed)
    else:
        raise UsageError(f"unknown kind {kind!r}")
    text = serialize(c)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    rep = _report("gen", inputs, seed=args.seed, kind=kind, n=c.n, s=c.s, colouring=text)
    if args.json:
        _emit(rep, True, [])
    elif args.output:
        print(f"wrote {kind} colouring of K_{c.n} with s={c.s} to {args.output} (seed {args.seed})")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_detect(args, inputs: _Inputs) -> int:
    host = inputs.colouring("host", args.host)
    if args.palette is not None:
        if args.k is None:
            raise UsageError("--palette needs --k")
        found = detect.find_palette_copy(host, args.k, Palette(args.k, tuple(args.palette)))
        rep = _report("detect", inputs, palette=args.palette, k=args.k, free=found is None,
                      clique=list(found) if found else None)
        lines = ["palette-free" if found is None else "palette found: " + " ".join(map(str, found))]
        _emit(rep, args.json, lines)
        return EXIT_OK if found is None else EXIT_FOUND
    if args.pattern is None:
        raise UsageError("detect needs --pattern or --palette")
    pattern = inputs.pattern("pattern", args.pattern)
    emb = detect.find_copy(host, pattern)
    body = {"free": emb is None, "embedding": list(emb) if emb else None}
    lines = ["free" if emb is None else "copy found: " + " ".join(map(str, emb))]
    if args.count:
        body["copies"] = detect.count_copies(host, pattern)
        lines.append(f"copies: {body['copies']}")
    _emit(_report("detect", inputs, **body), args.json, lines)
    return EXIT_OK if emb is None else EXIT_FOUND


def cmd_h(args, inputs: _Inputs) -> int:
    host = inputs.colouring("host", args.host)
    if args.colour_set:
        res = homog.s_clique(host, args.colour_set)
        rep = _report("h", inputs, colour_set=list(res.colours), value=res.value, witness=list(res.witness))
        lines = [
            f"S_{{{','.join(map(str, res.colours))}}} = {res.value}",
            "witness: " + " ".join(map(str, res.witness)),
        ]
        _emit(rep, args.json, lines)
        return EXIT_OK
    hr = homog.homogeneous_number(host)
    rep = _report(
        "h", inputs, n=host.n, s=host.s, value=hr.value, missing_colour=hr.missing_colour,
        witness=list(hr.witness), alpha={str(i + 1): a for i, a in enumerate(hr.alphas)},
    )
    lines = [
        f"h = {hr.value} (missing colour {hr.missing_colour})",
        "witness: " + " ".join(map(str, hr.witness)),
        "colour  alpha",
    ] + [f"{i + 1:>6}  {a}" for i, a in enumerate(hr.alphas)]
    _emit(rep, args.json, lines)
    return EXIT_OK


def _search_body(res: search.SearchResult, timing: bool) -> dict:
    return {
        "n": res.n,
        "s": res.s,
        "pattern": serialize(res.pattern),
        "value": res.value,
        "witness": serialize(res.witness),
        "stats": res.stats.as_dict(timing),
    }


def cmd_exact(args, inputs: _Inputs) -> int:
    pattern = inputs.pattern("pattern", args.pattern)
    res = search.exact_h(args.n, args.s, pattern, max_leaves=args.max_leaves, workers=args.workers,
                         upper_bound=args.upper_bound)
    rep = _report("exact", inputs, **_search_body(res, args.timing))
    lines = [
        f"h_{res.s}({res.n}, pattern) = {res.value}",
        f"classes per level: {res.stats.classes_per_level}",
        "witness:",
        serialize(res.witness).rstrip("\n"),
    ]
    _emit(rep, args.json, lines)
    return EXIT_OK


def cmd_minimize(args, inputs: _Inputs) -> int:
    pattern = inputs.pattern("pattern", args.pattern)
    c, value = search.minimize_h(args.n, args.s, pattern, budget=args.budget, seed=args.seed)
    if args.output:
        Path(args.output).write_text(serialize(c), encoding="utf-8")
    rep = _report("minimize", inputs, seed=args.seed, n=args.n, s=args.s, budget=args.budget,
                  value=value, witness=serialize(c))
    lines = [f"upper bound h_{args.s}({args.n}, pattern) <= {value} (seed {args.seed})", serialize(c).rstrip("\n")]
    _emit(rep, args.json, lines)
    return EXIT_OK


def cmd_verify_monotone(args, inputs: _Inputs) -> int:
    pattern = inputs.pattern("pattern", args.pattern)
    r = search.verify_monotone(args.n, pattern, args.s, max_leaves=args.max_leaves, workers=args.workers)
    rep = _report(
        "verify-monotone", inputs, n=args.n, s=args.s, holds=r.holds, guaranteed=r.guaranteed,
        lower=_search_body(r.lower, args.timing), upper=_search_body(r.upper, args.timing),
    )
    verdict = "holds" if r.holds else "VIOLATED"
    lines = [
        f"h_{args.s}({args.n}) = {r.lower.value}, h_{args.s + 1}({args.n}) = {r.upper.value}: {verdict}",
    ]
    if not r.guaranteed:
        lines.append("note: pattern uses at least s colours, so the inequality is not guaranteed")
    _emit(rep, args.json, lines)
    return EXIT_OK if r.holds else EXIT_FOUND


def cmd_analyze(args, inputs: _Inputs) -> int:
    if args.which == "recolour":
        br = analysis.recolour_failure_bound(args.n, args.h, args.xi)
    else:
        br = analysis.construction_failure_bound(args.n, args.alpha)
    rep = _report(
        "analyze", inputs, kind=br.kind, parameters=br.inputs, quantities=br.quantities,
        log2_bound=br.log2_bound, bound=None if math.isinf(br.bound) else br.bound, vacuous=br.vacuous,
    )
    lines = [f"{br.kind} bound (log base 2)"]
    lines += [f"  {k} = {v}" for k, v in {**br.inputs, **br.quantities}.items()]
    lines.append(f"  log2 bound = {br.log2_bound}")
    lines.append(f"  bound = {br.bound}  ({'vacuous' if br.vacuous else '< 1'})")
    _emit(rep, args.json, lines)
    return EXIT_OK


def cmd_convert(args, inputs: _Inputs) -> int:
    p = Path(args.input)
    if not p.is_file():
        raise UsageError(f"no such file: {args.input}")
    data = p.read_bytes()
    inputs.digests["input"] = _digest(data)
    text = data.decode("utf-8")
    if text.lstrip().startswith("{"):
        obj = json.loads(text)
        if "colouring" in obj:
            c = parse(obj["colouring"])
        elif "witness" in obj and isinstance(obj["witness"], str):
            c = parse(obj["witness"])
        else:
            c = Colouring(obj["n"], obj["s"], tuple(obj["colours"]))
    else:
        c = parse(text)
    if args.to == "ehc":
        out = serialize(c)
    elif args.to == "json":
        out = json.dumps({"n": c.n, "s": c.s, "colours": list(c.colours)}) + "\n"
    else:
        out = "\n".join(" ".join(str(x) for x in row) for row in c.matrix) + "\n"
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ehlab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"ehlab {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed=False, caps=False):
        p.add_argument("--json", action="store_true", help="machine-readable report")
        if seed:
            p.add_argument("--seed", type=int, default=0)
        if caps:
            p.add_argument("--max-leaves", type=int, default=None,
                           help="cap on generated extensions (env EHLAB_MAX_LEAVES)")
            p.add_argument("--workers", type=int, default=1)
            p.add_argument("--timing", action="store_true", help="include wall time in the report")

    p = sub.add_parser("gen", help="build a colouring")
    p.add_argument("--kind", required=True, choices=["random", "product", "gallai-c4", "k4host"])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int, help="blob size for gallai-c4")
    p.add_argument("--s", type=int, help="palette size for random")
    p.add_argument("--colours", type=_int_list)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--factors", help="comma-separated ehc files for product")
    p.add_argument("-o", "--output")
    common(p, seed=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("detect", help="look for a pattern copy or a palette")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", help="ehc file or bundled name (" + ", ".join(BUNDLED) + ")")
    p.add_argument("--count", action="store_true")
    p.add_argument("--palette", type=_int_list)
    p.add_argument("--k", type=int)
    common(p)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("h", help="homogeneous number of a colouring")
    p.add_argument("--host", required=True)
    p.add_argument("--colour-set", type=_int_list)
    common(p)
    p.set_defaults(func=cmd_h)

    p = sub.add_parser("exact", help="exact h_s(n, pattern) by exhaustive search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--upper-bound", type=int)
    common(p, caps=True)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("minimize", help="annealing upper bound on h_s(n, pattern)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("-o", "--output")
    common(p, seed=True)
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("verify-monotone", help="compare h_s and h_{s+1} exactly")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--pattern", required=True)
    common(p, caps=True)
    p.set_defaults(func=cmd_verify_monotone)

    p = sub.add_parser("analyze", help="evaluate the probabilistic bounds")
    asub = p.add_subparsers(dest="which", required=True)
    a = asub.add_parser("recolour")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--h", type=float, required=True)
    a.add_argument("--xi", type=float, required=True)
    common(a)
    a = asub.add_parser("construction")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--alpha", type=int, required=True)
    common(a)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("convert", help="convert between ehc, json and matrix text")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--to", choices=["ehc", "json", "matrix"], default="ehc")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_convert, json=False)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args, _Inputs())
    except search.CapExceeded as exc:
        print(f"ehlab: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ParseError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"ehlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
