"""Finite directed multigraphs and the families whose algebras we classify.

Vertices are 0-based integers.  Edge lists are canonicalized (sorted) so two
descriptions of the same multigraph compare equal.  Internally each graph also
keeps an edge multiplicity table; families with very high loop counts build
straight from multiplicities, and the derived routines (incidence, structure
checks) read the table rather than walking the expanded edge list.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import InternalError, InvalidGraph, InvalidParameter
from .intlinalg import IntMatrix


def _canonize(
    n_vertices: int, counts: Mapping[tuple[int, int], int]
) -> tuple[tuple[tuple[int, int], ...], dict[tuple[int, int], int]]:
    if not isinstance(n_vertices, int) or isinstance(n_vertices, bool) or n_vertices < 1:
        raise InvalidGraph(
            f"vertex count must be a positive integer, got {n_vertices!r}"
        )
    ordered: dict[tuple[int, int], int] = {}
    flat: list[tuple[int, int]] = []
    for pair in sorted(counts):
        try:
            s, t = pair
        except (TypeError, ValueError) as exc:
            raise InvalidGraph(f"edge key {pair!r} is not a pair") from exc
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (s, t)):
            raise InvalidGraph(f"edge ({s!r}, {t!r}) is not a pair of integers")
        if not (0 <= s < n_vertices and 0 <= t < n_vertices):
            raise InvalidGraph(
                f"edge ({s}, {t}) out of range for {n_vertices} vertices"
            )
        c = counts[pair]
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise InvalidGraph(f"bad multiplicity {c!r} for edge ({s}, {t})")
        if c == 0:
            continue
        pair = (s, t)
        ordered[pair] = c
        # repeated references, not repeated tuples: high loop counts stay cheap
        flat.extend([pair] * c)
    return tuple(flat), ordered


@dataclass(frozen=True)
class Graph:
    """Directed multigraph on vertices 0..n_vertices-1; parallel edges allowed."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        counts: dict[tuple[int, int], int] = {}
        for edge in self.edges:
            try:
                s, t = edge
                s, t = int(s), int(t)
            except (TypeError, ValueError) as exc:
                raise InvalidGraph(f"edge {edge!r} is not a pair of integers") from exc
            key = (s, t)
            counts[key] = counts.get(key, 0) + 1
        flat, ordered = _canonize(self.n_vertices, counts)
        object.__setattr__(self, "edges", flat)
        object.__setattr__(self, "_counts", ordered)

    @classmethod
    def from_multiplicities(
        cls, n_vertices: int, counts: Mapping[tuple[int, int], int]
    ) -> "Graph":
        """Build a graph from an edge -> multiplicity table without expanding it first."""
        flat, ordered = _canonize(n_vertices, counts)
        g = object.__new__(cls)
        object.__setattr__(g, "n_vertices", n_vertices)
        object.__setattr__(g, "edges", flat)
        object.__setattr__(g, "_counts", ordered)
        return g

    @property
    def multiplicities(self) -> dict[tuple[int, int], int]:
        """Edge -> multiplicity, in sorted edge order."""
        return dict(self._counts)

    def out_degree(self, v: int) -> int:
        return sum(c for (s, _), c in self._counts.items() if s == v)

    def successors(self, v: int) -> list[int]:
        """Targets of the edges leaving v, with multiplicity, ascending."""
        out: list[int] = []
        for (s, t), c in self._counts.items():
            if s == v:
                out.extend([t] * c)
        return out


def make_graph(n_vertices: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from a vertex count and an edge list, canonicalizing."""
    return Graph(n_vertices, tuple(tuple(e) for e in edges))


def cayley_graph(n: int, j: int) -> Graph:
    """Shift graph on Z_n: vertex i emits one edge to i+1 and one to i+j (mod n)."""
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"need n >= 1, got {n!r}")
    if not isinstance(j, int) or j < 0:
        raise InvalidParameter(f"need j >= 0, got {j!r}")
    j %= n
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, (i + j) % n))
    return Graph(n, tuple(edges))


def rose_graph(m: int) -> Graph:
    """One vertex with m loops; its algebra is the Leavitt algebra L(1, m)."""
    if not isinstance(m, int) or m < 1:
        raise InvalidParameter(f"need m >= 1 petals, got {m!r}")
    return Graph.from_multiplicities(1, {(0, 0): m})


def rose_tail_graph(m: int, d: int) -> Graph:
    """Rose with m loops fed by a tail of d-1 parallel edges.

    Two vertices: d-1 edges from vertex 0 to vertex 1 and m loops at vertex 1.
    Realizes the d x d matrix algebra over L(1, m) when d = m - 1.
    """
    if not isinstance(m, int) or m < 2:
        raise InvalidParameter(f"need m >= 2 loops, got {m!r}")
    if not isinstance(d, int) or d < 2:
        raise InvalidParameter(f"need d >= 2, got {d!r}")
    return Graph.from_multiplicities(2, {(0, 1): d - 1, (1, 1): m})


def en_graph(d: int, q: int) -> Graph:
    """Three mutually connected vertices with loop counts 2, 2+d, 2+q.

    Every ordered pair of distinct vertices carries exactly one edge.  The
    cokernel of its K0 presentation is Z_d x Z_q once d divides q.
    """
    if not isinstance(d, int) or d < 1:
        raise InvalidParameter(f"need d >= 1, got {d!r}")
    if not isinstance(q, int) or q < 1:
        raise InvalidParameter(f"need q >= 1, got {q!r}")
    counts = {(a, b): 1 for a in range(3) for b in range(3) if a != b}
    counts[(0, 0)] = 2
    counts[(1, 1)] = 2 + d
    counts[(2, 2)] = 2 + q
    return Graph.from_multiplicities(3, counts)


def incidence_matrix(g: Graph) -> IntMatrix:
    """Entry (i, k) counts the edges from vertex i to vertex k."""
    n = g.n_vertices
    counts = [[0] * n for _ in range(n)]
    for (s, t), c in g._counts.items():
        counts[s][t] = c
    return IntMatrix.from_rows(counts)


def k0_matrix(g: Graph) -> IntMatrix:
    """I - A^T for the incidence matrix A; its cokernel is K0 of the algebra."""
    return IntMatrix.identity(g.n_vertices) - incidence_matrix(g).transpose()


@dataclass(frozen=True)
class StructuralReport:
    """Structural facts that decide pure infiniteness and simplicity."""

    sink_free: bool
    condition_l: bool
    cofinal: bool
    pis: bool

    def __post_init__(self) -> None:
        if self.pis != (self.sink_free and self.condition_l and self.cofinal):
            raise InternalError("pis flag inconsistent with its components")


def structural_report(g: Graph) -> StructuralReport:
    """Check sink-freeness, Condition (L) and cofinality.

    Condition (L) asks every simple cycle to have an exit.  A cycle with no
    exit consists entirely of vertices of out-degree one, so it suffices to
    look for a cycle in the out-degree-one subgraph.  Cofinality asks every
    vertex to reach every simple cycle; every simple cycle lives inside a
    cyclic strongly connected component, so it suffices that every vertex
    reaches every cyclic component.
    """
    n = g.n_vertices
    out_deg = [0] * n
    for (s, _), c in g._counts.items():
        out_deg[s] += c
    sink_free = all(d > 0 for d in out_deg)

    condition_l = not _has_exitless_cycle(g, out_deg)
    cofinal = _every_vertex_reaches_every_cycle(g)
    return StructuralReport(
        sink_free=sink_free,
        condition_l=condition_l,
        cofinal=cofinal,
        pis=sink_free and condition_l and cofinal,
    )


def _has_exitless_cycle(g: Graph, out_deg: list[int]) -> bool:
    # follow unique successors through out-degree-one vertices only
    succ = {}
    for (s, t), _ in g._counts.items():
        if out_deg[s] == 1:
            succ[s] = t
    state = {v: 0 for v in succ}  # 0 fresh, 1 on current walk, 2 settled
    for start in succ:
        if state[start]:
            continue
        walk = []
        v = start
        while v in succ and state[v] == 0:
            state[v] = 1
            walk.append(v)
            v = succ[v]
        if v in succ and state[v] == 1:
            return True
        for w in walk:
            state[w] = 2
    return False


def _distinct_adjacency(g: Graph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.n_vertices)]
    for s, t in g._counts:
        adj[s].append(t)  # ascending, since the table is kept sorted
    return adj


def _strongly_connected_components(g: Graph) -> list[list[int]]:
    n = g.n_vertices
    adj = _distinct_adjacency(g)
    order: list[int] = []
    seen = [False] * n
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [(s, iter(adj[s]))]
        while stack:
            v, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                order.append(v)
                stack.pop()
            elif not seen[nxt]:
                seen[nxt] = True
                stack.append((nxt, iter(adj[nxt])))
    radj: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        for w in adj[v]:
            radj[w].append(v)
    comp = [-1] * n
    comps: list[list[int]] = []
    for root in reversed(order):
        if comp[root] != -1:
            continue
        cid = len(comps)
        members = [root]
        comp[root] = cid
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for w in radj[v]:
                if comp[w] == -1:
                    comp[w] = cid
                    members.append(w)
                    frontier.append(w)
        comps.append(members)
    return comps


def _every_vertex_reaches_every_cycle(g: Graph) -> bool:
    n = g.n_vertices
    loops = {s for s, t in g._counts if s == t}
    radj: list[list[int]] = [[] for _ in range(n)]
    for s, t in g._counts:
        radj[t].append(s)
    for members in _strongly_connected_components(g):
        cyclic = len(members) > 1 or members[0] in loops
        if not cyclic:
            continue
        reached = [False] * n
        frontier = list(members)
        for v in members:
            reached[v] = True
        while frontier:
            v = frontier.pop()
            for w in radj[v]:
                if not reached[w]:
                    reached[w] = True
                    frontier.append(w)
        if not all(reached):
            return False
    return True


def graph_to_json_dict(g: Graph) -> dict:
    edges: list[list[int]] = []
    for (s, t), c in g._counts.items():
        edges.extend([[s, t]] * c)  # shared refs; serialize, do not mutate
    return {"n": g.n_vertices, "edges": edges}


def graph_from_json_dict(obj: object) -> Graph:
    if not isinstance(obj, dict):
        raise InvalidGraph(f"graph object must be a JSON object, got {type(obj).__name__}")
    unknown = set(obj) - {"n", "edges"}
    if unknown:
        raise InvalidGraph(f"unknown graph keys: {sorted(unknown)}")
    if "n" not in obj or "edges" not in obj:
        raise InvalidGraph('graph object needs keys "n" and "edges"')
    n = obj["n"]
    edges = obj["edges"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidGraph(f'"n" must be an integer, got {n!r}')
    if not isinstance(edges, list):
        raise InvalidGraph('"edges" must be a list of [source, target] pairs')
    pairs = []
    for e in edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise InvalidGraph(f"edge {e!r} is not a pair of integers")
        pairs.append((e[0], e[1]))
    return Graph(n, tuple(pairs))
