"""Batch command-line front end.

Every command prints one report.  JSON reports have the shape

    {"envelope": {tool, version, elapsed_seconds},
     "payload": {"config": {...}, "result": {...}}}

where the payload is deterministic.  Exit status: 0 on success or PASS,
1 on a FAIL certificate (the report is still written), 2 on usage errors.
"""

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field

from . import __version__
from .category import (
    FwsMorphism,
    LabeledSet,
    MorphismError,
    TwsMorphism,
    enumerate_objects,
    hom_fws,
    hom_tws,
)
from .generation import (
    RESTRICTION_MODES,
    bound_recursion_check,
    certify_generation,
    factor_check_v00,
    generation_profile,
    restriction_witness,
)
from .groups import GroupSpecError, parse_group, parse_labels
from .hilbert import (
    FittedRational,
    candidate_factors,
    fit_rational,
    format_exact,
    specialize_univariate,
    truncated_series,
)
from .modules import CategoryMismatch, ModuleSpecError, parse_module

FORMAT_ENV = "FWSMOD_FORMAT"
TABULAR = ("objects", "profile", "bounds", "hilbert")


class UsageError(Exception):
    """Bad command-line input; ``field`` names the offending option."""

    def __init__(self, field, message):
        super().__init__("%s: %s" % (field, message))
        self.field = field


@dataclass
class RunConfig:
    command: str
    group: str = "1"
    module: str = ""
    params: dict = field(default_factory=dict)
    format: str = "json"
    output: str = "-"

    def as_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, d):
        return cls(**d)


@dataclass
class Outcome:
    result: dict
    passed: bool = True
    rows: list = None
    header: list = None


# -- helpers ------------------------------------------------------------------------


def _group(cfg):
    try:
        return parse_group(cfg.group)
    except GroupSpecError as exc:
        raise UsageError("--group", str(exc)) from None


def _labels(group, text, flag):
    try:
        return LabeledSet(group, parse_labels(group, text))
    except GroupSpecError as exc:
        raise UsageError(flag, str(exc)) from None


def _module(cfg, group):
    if not cfg.module:
        raise UsageError("--module", "a module spec is required")
    try:
        return parse_module(cfg.module, group)
    except ModuleSpecError as exc:
        raise UsageError("--module", str(exc)) from None


def _int_list(text, flag):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(flag, "expected comma-separated integers, got %r" % text) from None


def _labels_json(group, X):
    return [group.format_element(a) for a in X.labels]


def _object_row(group, X):
    return {"size": X.size, "labels": _labels_json(group, X),
            "multidegree": list(X.multidegree())}


def _morphism_json(group, m):
    out = {"map": list(m.map)}
    if isinstance(m, TwsMorphism):
        out["pointing"] = [group.format_element(a) for a in m.pointing]
    return out


def _dense(M):
    return [[format_exact(x) for x in row] for row in M.to_dense()]


# -- commands -----------------------------------------------------------------------


def cmd_objects(cfg):
    G = _group(cfg)
    p = cfg.params
    sizes = range(p["size"], p["size"] + 1) if p.get("max_size") is None else range(p["max_size"] + 1)
    rows = []
    for n in sizes:
        for X in enumerate_objects(G, n):
            rows.append(_object_row(G, X))
    header = ["size", "labels", "multidegree"]
    csv_rows = [[r["size"], ",".join(r["labels"]), ",".join(map(str, r["multidegree"]))] for r in rows]
    return Outcome({"count": len(rows), "objects": rows}, rows=csv_rows, header=header)


def cmd_hom(cfg):
    G = _group(cfg)
    p = cfg.params
    X = _labels(G, p["src"], "--src")
    Y = _labels(G, p["dst"], "--dst")
    homs = hom_tws(X, Y) if p["tilde"] else hom_fws(X, Y)
    result = {"count": len(homs), "category": "tws" if p["tilde"] else "fws"}
    if p["list"]:
        result["morphisms"] = [_morphism_json(G, m) for m in homs]
    return Outcome(result)


def cmd_dim(cfg):
    G = _group(cfg)
    M = _module(cfg, G)
    p = cfg.params
    try:
        if p.get("labels") is not None:
            X = _labels(M.group, p["labels"], "--labels")
            d = M.dim(X)
            result = {"labels": _labels_json(M.group, X), "dim": d}
            if p["basis"]:
                result["basis"] = [repr(b) for b in M.basis(X)]
            return Outcome(result)
        rows = []
        for n in range(p["max_size"] + 1):
            for X in enumerate_objects(M.group, n):
                try:
                    d = M.dim(X)
                except CategoryMismatch:
                    continue
                rows.append({**_object_row(M.group, X), "dim": d})
        return Outcome({"module": M.describe(), "dims": rows})
    except CategoryMismatch as exc:
        raise UsageError("--labels", str(exc)) from None


def cmd_act(cfg):
    G = _group(cfg)
    M = _module(cfg, G)
    p = cfg.params
    H = M.group
    X = _labels(H, p["src"], "--src")
    Y = _labels(H, p["dst"], "--dst")
    fmap = _int_list(p["map"], "--map")
    try:
        base = FwsMorphism(X, Y, fmap)
    except MorphismError as exc:
        raise UsageError("--map", str(exc)) from None
    m = base
    if p.get("pointing"):
        pointing = parse_labels(H, p["pointing"])
        try:
            m = TwsMorphism(base, pointing)
        except MorphismError as exc:
            raise UsageError("--pointing", str(exc)) from None
    try:
        A = M.act(m)
    except CategoryMismatch as exc:
        raise UsageError("--pointing", str(exc)) from None
    return Outcome({"shape": list(A.shape), "matrix": _dense(A)})


def cmd_gencert(cfg):
    G = _group(cfg)
    M = _module(cfg, G)
    p = cfg.params
    if p["max_size"] < p["claim"]:
        raise UsageError("--max-size", "must be at least --claim")
    rep = certify_generation(M, p["claim"], p["max_size"])
    return Outcome(rep.as_dict(), passed=rep.passed)


def cmd_profile(cfg):
    G = _group(cfg)
    M = _module(cfg, G)
    prof = generation_profile(M, cfg.params["max_size"])
    d = prof.as_dict()
    header = ["size", "labels", "multidegree", "dim", "rank", "coker_dim"]
    rows = [[len(r["labels"]), ",".join(".".join(map(str, a)) for a in r["labels"]),
             ",".join(map(str, r["multidegree"])), r["dim"], r["rank"], r["coker_dim"]]
            for r in d["records"]]
    return Outcome(d, rows=rows, header=header)


def cmd_factor_check(cfg):
    G = _group(cfg)
    rep = factor_check_v00(G, cfg.params["max_size"])
    return Outcome(rep.as_dict(), passed=rep.passed)


def cmd_restrict_witness(cfg):
    G = _group(cfg)
    p = cfg.params
    X = _labels(G, p["labels"], "--labels")
    rep = restriction_witness(X, p["mode"], p["max_size"])
    d = rep.as_dict()
    return Outcome(d, passed=d["pass"])


def cmd_bounds(cfg):
    p = cfg.params
    if p["imax"] < 0 or p["gmax"] < 0:
        raise UsageError("--imax", "bounds must be nonnegative")
    table = bound_recursion_check(p["imax"], p["gmax"])
    rows = [list(r) for r in table.rows()]
    return Outcome(table.as_dict(), passed=table.passed, rows=rows,
                   header=["i", "g", "f", "bound"])


def cmd_hilbert(cfg):
    G = _group(cfg)
    M = _module(cfg, G)
    p = cfg.params
    S = truncated_series(M, p["max_size"], weighted=p["weighted"])
    result = {"module": M.describe(), "series": S.as_dict(),
              "univariate": [format_exact(x) for x in S.graded()]}
    passed = True
    if p["fit"]:
        if p["guard"] < 2:
            raise UsageError("--guard", "must be >= 2")
        cands = candidate_factors(M.group, degree=p["degree"])
        fit = fit_rational(S, cands, max_multiplicity=p["max_multiplicity"], guard=p["guard"],
                           backtrack=p["backtrack"])
        result["fit"] = fit.as_dict()
        if isinstance(fit, FittedRational):
            result["fit"]["reexpansion_exact"] = fit.expand() == S
            result["fit_univariate"] = specialize_univariate(fit).as_dict()
        else:
            passed = False
    rows = [[",".join(map(str, e)), format_exact(x)] for e, x in sorted(S.coeffs.items())]
    return Outcome(result, passed=passed, rows=rows, header=["multidegree", "coefficient"])


COMMANDS = {
    "objects": cmd_objects,
    "hom": cmd_hom,
    "dim": cmd_dim,
    "act": cmd_act,
    "gencert": cmd_gencert,
    "profile": cmd_profile,
    "factor-check": cmd_factor_check,
    "restrict-witness": cmd_restrict_witness,
    "bounds": cmd_bounds,
    "hilbert": cmd_hilbert,
}


# -- argument parsing ---------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("usage", message)


def build_parser():
    parser = _Parser(prog="fwsmod", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, help_, group=True, module=False):
        p = sub.add_parser(name, help=help_)
        if group:
            p.add_argument("--group", default="1", help='group spec, e.g. "Z2xZ4" or "1"')
        if module:
            p.add_argument("--module", required=True, help="module spec, e.g. shift:1:v0bar")
        p.add_argument("--format", choices=("json", "csv"), default=None)
        p.add_argument("--output", default="-", help="output path, - for stdout")
        return p

    p = add("objects", "list iso classes of labeled sets")
    p.add_argument("--size", type=int, default=0)
    p.add_argument("--max-size", type=int, default=None)

    p = add("hom", "count morphisms between two labeled sets")
    p.add_argument("--src", required=True)
    p.add_argument("--dst", required=True)
    p.add_argument("--tilde", action="store_true", help="pointed morphisms")
    p.add_argument("--list", action="store_true", help="list the morphisms")

    p = add("dim", "module dimensions", module=True)
    p.add_argument("--labels", default=None)
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--basis", action="store_true")

    p = add("act", "action matrix of a morphism", module=True)
    p.add_argument("--src", required=True)
    p.add_argument("--dst", required=True)
    p.add_argument("--map", required=True, help="images of source points, e.g. 0,0,1")
    p.add_argument("--pointing", default=None)

    p = add("gencert", "certify generation in degree <= claim", module=True)
    p.add_argument("--claim", type=int, required=True)
    p.add_argument("--max-size", type=int, required=True)

    p = add("profile", "new generators per object", module=True)
    p.add_argument("--max-size", type=int, required=True)

    p = add("factor-check", "eta for V0-bar factors through the quotient q")
    p.add_argument("--max-size", type=int, default=4)

    p = add("restrict-witness", "verify the covering family of a restricted projective")
    p.add_argument("--labels", required=True)
    p.add_argument("--mode", choices=RESTRICTION_MODES, default=RESTRICTION_MODES[0])
    p.add_argument("--max-size", type=int, default=5)

    p = add("bounds", "the numerical recursion f(i, g) <= g + 5i", group=False)
    p.add_argument("--imax", type=int, required=True)
    p.add_argument("--gmax", type=int, required=True)

    p = add("hilbert", "truncated Hilbert series and rational fit", module=True)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--weighted", action="store_true")
    p.add_argument("--fit", action="store_true")
    p.add_argument("--guard", type=int, default=3)
    p.add_argument("--degree", type=int, default=1, help="candidate j ranges up to degree*|A|^2")
    p.add_argument("--max-multiplicity", type=int, default=3)
    p.add_argument("--backtrack", action="store_true")
    return parser


_COMMON = ("command", "group", "module", "format", "output")


def config_from_args(ns):
    fmt = ns.format or os.environ.get(FORMAT_ENV, "json")
    if fmt not in ("json", "csv"):
        raise UsageError(FORMAT_ENV, "unknown format %r" % fmt)
    params = {k: v for k, v in vars(ns).items() if k not in _COMMON}
    return RunConfig(ns.command, getattr(ns, "group", "1"), getattr(ns, "module", "") or "",
                     params, fmt, ns.output)


# -- rendering ----------------------------------------------------------------------


def render_json(cfg, outcome, elapsed):
    doc = {
        "envelope": {"tool": "fwsmod", "version": __version__,
                     "elapsed_seconds": round(elapsed, 6)},
        "payload": {"config": cfg.as_dict(), "result": outcome.result},
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render_csv(cfg, outcome):
    if cfg.command not in TABULAR or outcome.rows is None:
        raise UsageError("--format", "csv output is only available for %s" % ", ".join(TABULAR))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(outcome.header)
    w.writerows(outcome.rows)
    return buf.getvalue()


def parse_report(text):
    """(RunConfig, result) from a JSON report."""
    doc = json.loads(text)
    payload = doc["payload"]
    return RunConfig.from_dict(payload["config"]), payload["result"]


def run(argv):
    """Run one command; returns (exit status, report text or None)."""
    try:
        ns = build_parser().parse_args(argv)
        if ns.command is None:
            raise UsageError("command", "one of %s is required" % ", ".join(COMMANDS))
        cfg = config_from_args(ns)
        if cfg.format == "csv" and cfg.command not in TABULAR:
            raise UsageError("--format", "csv output is only available for %s" % ", ".join(TABULAR))
        start = time.perf_counter()
        outcome = COMMANDS[cfg.command](cfg)
        elapsed = time.perf_counter() - start
        text = render_csv(cfg, outcome) if cfg.format == "csv" else render_json(cfg, outcome, elapsed)
    except UsageError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2, None
    if cfg.output == "-":
        sys.stdout.write(text)
    else:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    return (0 if outcome.passed else 1), text


def main(argv=None):
    status, _ = run(sys.argv[1:] if argv is None else argv)
    return status


if __name__ == "__main__":
    sys.exit(main())
