"""Command line front end: ``leavitt classify|witness|monoid|ideals|selfcheck``.

Exit codes: 0 ok, 1 a checked property or precondition failed, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .classify import EquivalenceViolation, classify, ideal_lattice
from .config import Bounds, RunConfig, SelfcheckConfig
from .graph import Graph, GraphError, LatticeTooLarge, read_graph
from .kernel import (Element, KernelError, PreconditionError, diag, reduce_to_vertex, scalar,
                     subequivalence_from_path, vertex_properly_infinite_witness, verify_precsim)
from .literals import LiteralError, format_element, parse_element
from .monoid import (HypothesisFailure, MonoidError, RefinementMatrix,
                     decompose_2x_3y, fred_decompose, is_abelian_in_quotient,
                     is_irreducible_in_quotient, monoid_equal, monoid_leq, refine, vector,
                     verify_2x_3y, verify_equal, verify_fred, verify_leq, verify_not_abelian,
                     verify_reducible, verify_refinement)
from .selfcheck import run_selfcheck

OK, FAILED, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


# -- commands -----------------------------------------------------------------

def _load(path: str) -> Graph:
    try:
        return read_graph(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_classify(cfg: RunConfig):
    records, code = [], OK
    for path in cfg.paths:
        try:
            g = _load(path)
            records.append({"path": path, **classify(g, cfg.bounds.lattice_cap).to_json()})
        except (InputError, LatticeTooLarge) as exc:
            records.append({"path": path, "schema": "leavitt.classification/1", "error": str(exc)})
            code = INPUT_ERROR
    return {"schema": "leavitt.classification-batch/1", "reports": records}, code


def cmd_ideals(cfg: RunConfig):
    records, code = [], OK
    for path in cfg.paths:
        try:
            g = _load(path)
            records.append({"path": path, "graph": g.name, **ideal_lattice(g, cfg.bounds.lattice_cap)})
        except (InputError, LatticeTooLarge) as exc:
            records.append({"path": path, "error": str(exc)})
            code = INPUT_ERROR
    return {"schema": "leavitt.ideals/1", "lattices": records}, code


def _matrix_json(m) -> list[list[str]]:
    return [[format_element(x) for x in row] for row in m.entries]


def cmd_witness(cfg: RunConfig):
    (path,) = cfg.paths
    if len(cfg.args) != 2:
        raise InputError("witness needs KIND and ARG")
    kind, arg = cfg.args
    g = _load(path)
    out = {"schema": "leavitt.witness/1", "graph": g.name, "kind": kind, "arg": arg}
    try:
        if kind == "vertex-pi":
            if arg not in g.vertex_index:
                raise InputError(f"unknown vertex {arg!r}")
            w = vertex_properly_infinite_witness(g, arg)
            a = Element.vertex(g, arg)
            x, y = diag(g, [a, a]), scalar(a)
            out["claim"] = f"{arg} ⊕ {arg} ≾ {arg}"
        elif kind == "reduce":
            el = parse_element(g, arg)
            w, v = reduce_to_vertex(g, el)
            x, y = scalar(Element.vertex(g, v)), scalar(el)
            out["claim"] = f"{v} ≾ {format_element(el)}"
            out["vertex"] = v
        elif kind == "path-subeq":
            p = [e for e in arg.split(".") if e]
            if len(p) == 1 and p[0] in g.vertex_index:
                p, v0 = [], p[0]
            else:
                v0 = None
            w = subequivalence_from_path(g, p, v0)
            start = v0 if v0 else g.s(p[0])
            end = v0 if v0 else g.r(p[-1])
            x, y = scalar(Element.vertex(g, end)), scalar(Element.vertex(g, start))
            out["claim"] = f"{end} ≾ {start}"
        else:
            raise InputError(f"unknown witness kind {kind!r} (vertex-pi, reduce, path-subeq)")
    except LiteralError as exc:
        raise InputError(str(exc)) from None
    except (PreconditionError, KernelError, GraphError) as exc:
        out["error"] = str(exc)
        return out, FAILED
    out["alpha"] = _matrix_json(w.alpha)
    out["beta"] = _matrix_json(w.beta)
    out["verified"] = verify_precsim(g, x, y, w)
    return out, OK if out["verified"] else FAILED


_QUERY = re.compile(r"\s*(eq|leq|23div|refine|fred|irreducible|abelian)\s*:\s*(.*)\Z", re.S)


def _vertex_set(g: Graph, text: str) -> frozenset[str]:
    body = text.strip().strip("{}")
    vs = frozenset(x.strip() for x in body.split(",") if x.strip())
    bad = vs - set(g.vertices)
    if bad:
        raise InputError(f"unknown vertices {sorted(bad)}")
    return vs


def _split(text: str, sep: str, n: int) -> list[str]:
    parts = [p.strip() for p in text.split(sep)]
    if len(parts) != n:
        raise InputError(f"expected {n} parts separated by {sep!r}")
    return parts


def run_monoid_query(g: Graph, query: str, b: Bounds) -> tuple[dict, int]:
    m = _QUERY.match(query)
    if not m:
        raise InputError(f"bad monoid query {query!r}")
    op, body = m.groups()
    vec = lambda t: vector(g, t)  # noqa: E731
    out = {"schema": "leavitt.monoid/1", "graph": g.name, "query": query.strip(), "op": op}
    try:
        if op == "eq":
            x, y = map(vec, _split(body, "=", 2))
            r = monoid_equal(g, x, y, b.eq_depth, b.search_cap)
            ok = verify_equal(g, x, y, r)
        elif op == "leq":
            x, y = map(vec, _split(body, "<=", 2))
            r = monoid_leq(g, x, y, b.eq_depth, b.search_cap)
            ok = verify_leq(g, x, y, r)
        elif op == "23div":
            u = vec(body)
            r = decompose_2x_3y(g, u, b.eq_depth, b.search_cap)
            ok = r.found and verify_2x_3y(g, u, r.witness)
        elif op == "refine":
            lhs, rhs = _split(body, "=", 2)
            x1, x2 = map(vec, _split(lhs, ";", 2))
            y1, y2 = map(vec, _split(rhs, ";", 2))
            r = refine(g, x1, x2, y1, y2, b.eq_depth, b.search_cap)
            ok = r.found and verify_refinement(
                g, x1, x2, y1, y2, RefinementMatrix(*[z for row in r.witness["matrix"] for z in row]),
                b.eq_depth)
        elif op == "fred":
            n_text, *rest = _split(body, ";", 4)
            if not n_text.isdigit():
                raise InputError("fred needs a positive integer n")
            n = int(n_text)
            x, y, z = map(vec, rest)
            r = fred_decompose(g, n, x, y, z, b.eq_depth, b.search_cap)
            ok = r.found and verify_fred(g, n, x, y, z, r.witness)
        else:
            u_text, _, h_text = body.partition(" mod ")
            u, h = vec(u_text), _vertex_set(g, h_text)
            fn = is_irreducible_in_quotient if op == "irreducible" else is_abelian_in_quotient
            r = fn(g, u, h, b.eq_depth, b.search_cap)
            check = verify_reducible if op == "irreducible" else verify_not_abelian
            ok = r.found and check(g, u, r.witness)
    except LiteralError as exc:
        raise InputError(str(exc)) from None
    except HypothesisFailure as exc:
        out.update({"outcome": "hypothesis_failed", "error": str(exc),
                    "quotient_H": list(g.sort_vertices(exc.h))})
        return out, FAILED
    except (MonoidError, GraphError) as exc:
        out.update({"outcome": "error", "error": str(exc)})
        return out, FAILED
    out.update(r.to_json(g))
    if r.found:
        out["verified"] = bool(ok)
        if not ok:
            return out, FAILED
    return out, OK


def cmd_monoid(cfg: RunConfig):
    (path,) = cfg.paths
    if len(cfg.args) != 1:
        raise InputError("monoid needs one QUERY")
    return run_monoid_query(_load(path), cfg.args[0], cfg.bounds)


def cmd_selfcheck(cfg: RunConfig):
    records, code = [], OK
    for path in cfg.paths:
        try:
            g = _load(path)
        except InputError as exc:
            records.append({"path": path, "error": str(exc)})
            code = INPUT_ERROR
            continue
        try:
            results = run_selfcheck(g, SelfcheckConfig(seed=cfg.seed), cfg.bounds)
        except (EquivalenceViolation, LatticeTooLarge) as exc:
            records.append({"path": path, "graph": g.name, "error": str(exc)})
            code = max(code, FAILED)
            continue
        passed = all(r.passed for r in results)
        records.append({"path": path, "graph": g.name, "passed": passed,
                        "properties": [r.to_json() for r in results]})
        if not passed:
            code = max(code, FAILED)
    return {"schema": "leavitt.selfcheck/1", "seed": cfg.seed, "runs": records}, code


COMMANDS = {"classify": cmd_classify, "ideals": cmd_ideals, "witness": cmd_witness,
            "monoid": cmd_monoid, "selfcheck": cmd_selfcheck}


# -- text rendering -------------------------------------------------------------

def _text(obj, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if k == "schema":
                continue
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        if all(not isinstance(x, (dict, list)) for x in obj):
            return [pad + "[" + ", ".join(_scalar(x) for x in obj) + "]"]
        for x in obj:
            sub = _text(x, indent + 1)
            if sub:
                sub[0] = pad + "- " + sub[0].lstrip()
            lines.extend(sub)
    else:
        lines.append(pad + _scalar(obj))
    return lines


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, (dict, list)):
        return "[]" if isinstance(v, list) else "{}"
    return str(v)


def render(obj, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, indent=2, ensure_ascii=False)
    return "\n".join(_text(obj))


# -- argument parsing -------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--eq-depth", type=_positive, default=Bounds.eq_depth)
    common.add_argument("--search-cap", type=_positive, default=Bounds.search_cap)
    common.add_argument("--lattice-cap", type=_positive, default=Bounds.lattice_cap)
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="leavitt", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name, helptext in (("classify", "simple / purely infinite verdicts with evidence"),
                           ("ideals", "hereditary saturated lattice"),
                           ("selfcheck", "run the property suite on each graph")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("paths", nargs="+")
    sp = sub.add_parser("witness", parents=[common], help="build and re-verify a witness")
    sp.add_argument("path")
    sp.add_argument("kind", choices=("vertex-pi", "reduce", "path-subeq"))
    sp.add_argument("arg")
    sp = sub.add_parser("monoid", parents=[common], help="graph monoid query")
    sp.add_argument("path")
    sp.add_argument("query", help='e.g. "eq: v = 2v", "leq: u <= v", "23div: v", '
                                  '"refine: x1 ; x2 = y1 ; y2", "fred: n ; x ; y ; z", '
                                  '"irreducible: u mod {w}", "abelian: u"')
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    if ns.command in ("witness", "monoid"):
        paths = (ns.path,)
        args = (ns.kind, ns.arg) if ns.command == "witness" else (ns.query,)
    else:
        paths, args = tuple(ns.paths), ()
    bounds = Bounds(ns.eq_depth, ns.search_cap, ns.lattice_cap)
    return RunConfig(ns.command, paths, args, ns.format, bounds, ns.seed)


def run(cfg: RunConfig) -> tuple[str, int]:
    try:
        obj, code = COMMANDS[cfg.command](cfg)
    except InputError as exc:
        obj, code = {"schema": "leavitt.error/1", "command": cfg.command, "error": str(exc)}, INPUT_ERROR
    return render(obj, cfg.fmt), code


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    text, code = run(config_from_args(ns))
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
