"""Command line front end.

JSON goes to stdout, diagnostics to stderr.  Exit codes: 0 on success, 1 for
usage or input problems, 2 when a verify suite finds a failing instance.
Identical argument vectors produce byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .classify import (
    k0_report,
    kp_certificate,
    realization,
    verify_cyclic_criterion,
    verify_steps,
    verify_theorem_c2,
)
from .errors import GraphK0Error
from .graphs import (
    Graph,
    cayley_graph,
    graph_from_json_dict,
    graph_to_json_dict,
    incidence_matrix,
    k0_matrix,
    structural_report,
)
from .intlinalg import GroupElement, cokernel, determinant, project
from .monoid import consistent_with_cokernel, default_cap, enumerate_classes
from .seqs import d_gcd, d_closed, fib, gcd_invariants, h2_recursive, haselgrove, identity_suite

_SUITE_DEFAULT_MAX = {
    "theorem-c2": 50,
    "identities": 200,
    "gcd": 200,
    "steps": 40,
    "kp": 30,
    "monoid-cross": 4,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # noqa: A003 - argparse hook
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="graphk0", add_help=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cayley", help="invariants of the shift graph C(n, j)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument(
        "--emit", choices=("matrix", "det", "k0", "report"), default="report"
    )

    p = sub.add_parser("k0", help="K0 data of a graph loaded from JSON")
    p.add_argument("--graph", required=True, metavar="FILE")

    p = sub.add_parser("seq", help="print a sequence prefix")
    p.add_argument("--kind", choices=("fib", "h2", "haselgrove", "d"), required=True)
    p.add_argument("--k", type=int, default=None, help="shift for kind=haselgrove")
    p.add_argument("--max", type=int, required=True, dest="max_n")

    p = sub.add_parser("monoid", help="bounded graph-monoid closure of a graph")
    p.add_argument("--graph", required=True, metavar="FILE")
    p.add_argument("--cap", type=int, default=None)

    p = sub.add_parser("verify", help="run one verification sweep")
    p.add_argument(
        "--suite",
        choices=("theorem-c2", "identities", "gcd", "steps", "kp", "monoid-cross"),
        required=True,
    )
    p.add_argument("--max", type=int, default=None, dest="max_n")

    p = sub.add_parser("realize", help="named small model of the shift graph algebra")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    return parser


def _s(x: int) -> str:
    return str(x)


def _group_payload(group) -> dict:
    order = group.order()
    return {
        "free_rank": group.free_rank,
        "torsion": [_s(t) for t in group.torsion],
        "order": "infinite" if order is None else _s(order),
    }


def _element_payload(e: GroupElement) -> list[str]:
    return [_s(c) for c in e.coords]


def _structural_payload(rep) -> dict:
    return {
        "sink_free": rep.sink_free,
        "condition_l": rep.condition_l,
        "cofinal": rep.cofinal,
        "pis": rep.pis,
    }


def _graph_k0_payload(g: Graph) -> dict:
    m = k0_matrix(g)
    det = determinant(m)
    ck = cokernel(m)
    n = g.n_vertices
    basis = [
        project(tuple(1 if t == i else 0 for t in range(n)), ck) for i in range(n)
    ]
    return {
        "pis": _structural_payload(structural_report(g)),
        "det": _s(det),
        "h": _s(abs(det)),
        "group": _group_payload(ck.group),
        "basis_classes": [_element_payload(e) for e in basis],
        "sigma_class": _element_payload(project((1,) * n, ck)),
    }


def _cmd_cayley(ns: argparse.Namespace) -> tuple[dict, int]:
    payload: dict = {"n": ns.n, "j": ns.j}
    g = cayley_graph(ns.n, ns.j)
    if ns.emit == "matrix":
        payload["matrix"] = incidence_matrix(g).to_json_dict()
    elif ns.emit == "det":
        payload["det"] = _s(determinant(k0_matrix(g)))
    elif ns.emit == "k0":
        m = k0_matrix(g)
        det = determinant(m)
        payload["det"] = _s(det)
        payload["h"] = _s(abs(det))
        payload["group"] = _group_payload(cokernel(m).group)
    else:
        payload.update(_graph_k0_payload(g))
    return payload, 0


def _load_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphK0Error(f"cannot read {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphK0Error(
            f"{path} is not valid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    return graph_from_json_dict(obj)


def _cmd_k0(ns: argparse.Namespace) -> tuple[dict, int]:
    g = _load_graph(ns.graph)
    payload = {"n": g.n_vertices}
    payload.update(_graph_k0_payload(g))
    return payload, 0


def _cmd_seq(ns: argparse.Namespace) -> tuple[dict, int]:
    if ns.max_n < 1:
        raise GraphK0Error(f"need --max >= 1, got {ns.max_n}")
    payload: dict = {"kind": ns.kind, "max": ns.max_n}
    if ns.kind == "haselgrove":
        if ns.k is None:
            raise GraphK0Error("kind=haselgrove needs --k")
        payload["k"] = ns.k
        values = [haselgrove(ns.k, n) for n in range(1, ns.max_n + 1)]
    elif ns.kind == "fib":
        values = [fib(n) for n in range(1, ns.max_n + 1)]
    elif ns.kind == "h2":
        values = [h2_recursive(n) for n in range(1, ns.max_n + 1)]
    else:
        values = [d_gcd(n) for n in range(1, ns.max_n + 1)]
    payload["values"] = [_s(v) for v in values]
    return payload, 0


def _cmd_monoid(ns: argparse.Namespace) -> tuple[dict, int]:
    g = _load_graph(ns.graph)
    cap = ns.cap
    if cap is None:
        cap = default_cap(g.n_vertices)
        if cap is None:
            raise GraphK0Error(
                "no default cap for graphs on more than 5 vertices; pass --cap"
            )
    table = enumerate_classes(g, cap)
    payload: dict = {
        "n": g.n_vertices,
        "cap": cap,
        "reachable_classes": _s(table.class_count_reachable()),
    }
    if 2 * g.n_vertices <= cap:
        payload["identity_check"] = table.identity_class_check()
    else:
        payload["identity_check"] = None
    return payload, 0


def _cmd_realize(ns: argparse.Namespace) -> tuple[dict, int]:
    desc = realization(ns.n, ns.j)
    if desc.kind == "Leavitt":
        params = {"m": _s(desc.params[0])}
    elif desc.kind == "MatrixLeavitt":
        params = {"d": _s(desc.params[0]), "m": _s(desc.params[1])}
    else:
        params = {"d": _s(desc.params[0]), "q": _s(desc.params[1])}
    return {
        "n": ns.n,
        "j": ns.j,
        "kind": desc.kind,
        "params": params,
        "witness": graph_to_json_dict(desc.witness),
    }, 0


def _suite_rows(suite: str, max_n: int) -> list[tuple[int, bool, str]]:
    rows: list[tuple[int, bool, str]] = []
    if suite == "theorem-c2":
        for n in range(1, max_n + 1):
            ok = verify_theorem_c2(n) and verify_cyclic_criterion(n)
            rows.append((n, ok, "group shape or cyclicity"))
    elif suite == "identities":
        for n in range(2, max_n + 1):
            rep = identity_suite(n)
            rows.append((n, rep.all_hold(), "identity suite"))
    elif suite == "gcd":
        for n in range(1, max_n + 1):
            rows.append((n, _gcd_checks(n), "gcd laws"))
    elif suite == "steps":
        for n in range(3, max_n + 1):
            res = verify_steps(n)
            rows.append((n, all(res), "step replay"))
    elif suite == "kp":
        for n in range(1, max_n + 1):
            cert = kp_certificate(cayley_graph(n, 2), realization(n, 2).witness)
            rows.append((n, cert.verdict, "identification certificate"))
    else:  # monoid-cross: fixed desk-scale instances, independent of --max
        for n in (3, 4):
            rows.append((n, _monoid_cross(n), "monoid cross-check"))
    return rows


def _gcd_checks(n: int) -> bool:
    d = d_gcd(n)
    if d != d_closed(n):
        return False
    h = h2_recursive(n)
    if h % (d * d):
        return False
    if n % 4 == 0 and h != 5 * d * d:
        return False
    if n % 4 == 2 and h != d * d:
        return False
    inv = gcd_invariants(n)
    if inv.a != (2 if n % 6 == 0 else 1):
        return False
    if n % 2 == 0 and inv.b != 1:
        return False
    return True


def _monoid_cross(n: int) -> bool:
    table = enumerate_classes(cayley_graph(n, 2), 12)
    expected = {3: 4, 4: 5}[n]
    if table.class_count_reachable() != expected:
        return False
    if not table.identity_class_check():
        return False
    if not consistent_with_cokernel(table):
        return False
    if n == 4:
        e1 = (1, 0, 0, 0)
        if not table.same_class(e1, (0, 1, 1, 0)):
            return False
        if not table.same_class(e1, (0, 0, 0, 2)):
            return False
        if not table.same_class((6, 0, 0, 0), e1):
            return False
    return True


def _cmd_verify(ns: argparse.Namespace) -> tuple[dict, int]:
    max_n = ns.max_n if ns.max_n is not None else _SUITE_DEFAULT_MAX[ns.suite]
    if max_n < 1:
        raise GraphK0Error(f"need --max >= 1, got {max_n}")
    rows = _suite_rows(ns.suite, max_n)
    results = [{"n": n, "ok": ok} for n, ok, _ in rows]
    payload: dict = {"suite": ns.suite, "max": max_n, "results": results}
    failures = [(n, what) for n, ok, what in rows if not ok]
    payload["ok"] = not failures
    if failures:
        payload["first_failure"] = {"n": failures[0][0], "check": failures[0][1]}
        return payload, 2
    return payload, 0


_DISPATCH = {
    "cayley": _cmd_cayley,
    "k0": _cmd_k0,
    "seq": _cmd_seq,
    "monoid": _cmd_monoid,
    "verify": _cmd_verify,
    "realize": _cmd_realize,
}


def run(argv: Sequence[str]) -> int:
    """Parse argv, execute, print JSON; returns the process exit code."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(list(argv))
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        payload, code = _DISPATCH[ns.command](ns)
    except GraphK0Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(payload, separators=(",", ":")))
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
