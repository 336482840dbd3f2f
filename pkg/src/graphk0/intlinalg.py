"""Exact integer linear algebra: determinants, Smith form, cokernels.

Everything is computed over arbitrary-precision integers; no floats enter any
exact routine.  The one floating-point function, circulant_det_float, exists
only as an independent cross-check of the exact determinant.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    GroupMismatch,
    InternalError,
    InvalidParameter,
    ShapeError,
    Unsupported,
)


def exact_div(a: int, b: int) -> int:
    """Divide a by b, insisting the division is exact."""
    q, r = divmod(a, b)
    if r:
        raise InternalError(f"expected {b} to divide {a}")
    return q


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, stored row-major as nested tuples."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ShapeError(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows:
            raise ShapeError(f"expected {self.rows} rows, got {len(self.entries)}")
        for row in self.entries:
            if len(row) != self.cols:
                raise ShapeError(
                    f"ragged row of length {len(row)}, expected {self.cols}"
                )

    @staticmethod
    def from_rows(rows: Iterable[Iterable[int]]) -> "IntMatrix":
        ents = tuple(tuple(int(x) for x in row) for row in rows)
        ncols = len(ents[0]) if ents else 0
        return IntMatrix(len(ents), ncols, ents)

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(
            n, n, tuple(tuple(1 if i == k else 0 for k in range(n)) for i in range(n))
        )

    @staticmethod
    def diagonal(rows: int, cols: int, diag: Sequence[int]) -> "IntMatrix":
        ents = tuple(
            tuple(diag[i] if i == k and i < len(diag) else 0 for k in range(cols))
            for i in range(rows)
        )
        return IntMatrix(rows, cols, ents)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, k = key
        return self.entries[i][k]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("matrix subtraction needs matching shapes")
        ents = tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)
        )
        return IntMatrix(self.rows, self.cols, ents)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        if other.entries:
            cols = tuple(zip(*other.entries))
        else:
            cols = tuple(() for _ in range(other.cols))
        ents = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.entries
        )
        return IntMatrix(self.rows, other.cols, ents)

    def mul_vec(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise ShapeError(f"vector of length {len(vec)} against {self.cols} columns")
        return tuple(sum(a * x for a, x in zip(row, vec)) for row in self.entries)

    def to_json_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(x) for x in row] for row in self.entries],
        }

    @staticmethod
    def from_json_dict(obj: dict) -> "IntMatrix":
        try:
            rows = int(obj["rows"])
            cols = int(obj["cols"])
            ents = tuple(tuple(int(x) for x in row) for row in obj["entries"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ShapeError(f"malformed matrix object: {exc}") from exc
        return IntMatrix(rows, cols, ents)


def determinant(m: IntMatrix) -> int:
    """Exact determinant via Bareiss fraction-free elimination."""
    if m.rows != m.cols:
        raise ShapeError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            rowi = a[i]
            rowk = a[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity; a nonzero remainder is a bug
                rowi[j] = exact_div(rowi[j] * pivot - aik * rowk[j], prev)
            rowi[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SmithDecomposition:
    """u @ m @ v = diagonal(d) with u, v unimodular and d a divisibility chain."""

    d: tuple[int, ...]
    u: IntMatrix
    v: IntMatrix


def smith_normal_form(m: IntMatrix) -> SmithDecomposition:
    """Smith normal form with transform matrices, self-verified before return.

    Pivots are chosen with smallest magnitude first to keep coefficient growth
    down.  Diagonal entries come out non-negative, each dividing the next, with
    zeros last.
    """
    nrows, ncols = m.rows, m.cols
    a = [list(row) for row in m.entries]
    u = [[1 if i == k else 0 for k in range(nrows)] for i in range(nrows)]
    v = [[1 if i == k else 0 for k in range(ncols)] for i in range(ncols)]

    def swap_rows(i: int, k: int) -> None:
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(i: int, k: int) -> None:
        for row in a:
            row[i], row[k] = row[k], row[i]
        for row in v:
            row[i], row[k] = row[k], row[i]

    def add_row(i: int, k: int, q: int) -> None:
        # row_i -= q * row_k
        a[i] = [x - q * y for x, y in zip(a[i], a[k])]
        u[i] = [x - q * y for x, y in zip(u[i], u[k])]

    def add_col(i: int, k: int, q: int) -> None:
        # col_i -= q * col_k
        for row in a:
            row[i] -= q * row[k]
        for row in v:
            row[i] -= q * row[k]

    def negate_row(i: int) -> None:
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def smallest_in_block(t: int) -> tuple[int, int] | None:
        best = None
        best_abs = 0
        for i in range(t, nrows):
            for k in range(t, ncols):
                x = a[i][k]
                if x != 0 and (best is None or abs(x) < best_abs):
                    best = (i, k)
                    best_abs = abs(x)
        return best

    t = 0
    limit = min(nrows, ncols)
    while t < limit:
        spot = smallest_in_block(t)
        if spot is None:
            break
        if spot[0] != t:
            swap_rows(t, spot[0])
        if spot[1] != t:
            swap_cols(t, spot[1])
        if a[t][t] < 0:
            negate_row(t)
        while True:
            pivot = a[t][t]
            # clear the column under the pivot
            residue = None
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q, r = divmod(a[i][t], pivot)
                    if q:
                        add_row(i, t, q)
                    if r and (residue is None or r < a[residue][t]):
                        residue = i
            if residue is not None:
                swap_rows(t, residue)  # strictly smaller positive pivot
                continue
            # clear the row right of the pivot
            residue = None
            for k in range(t + 1, ncols):
                if a[t][k]:
                    q, r = divmod(a[t][k], pivot)
                    if q:
                        add_col(k, t, q)
                    if r and (residue is None or r < a[t][residue]):
                        residue = k
            if residue is not None:
                swap_cols(t, residue)
                continue
            # pivot must divide everything that remains; if not, fold the
            # offending row into row t and shrink the pivot another round
            bad = None
            for i in range(t + 1, nrows):
                for k in range(t + 1, ncols):
                    if a[i][k] % pivot:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, -1)
        t += 1
    d = tuple(a[i][i] for i in range(limit))
    dec = SmithDecomposition(
        d=d, u=IntMatrix.from_rows(u), v=IntMatrix.from_rows(v)
    )
    _check_smith(m, dec)
    return dec


def _check_smith(m: IntMatrix, dec: SmithDecomposition) -> None:
    if dec.u @ m @ dec.v != IntMatrix.diagonal(m.rows, m.cols, dec.d):
        raise InternalError("smith transform does not diagonalize the input")
    if abs(determinant(dec.u)) != 1 or abs(determinant(dec.v)) != 1:
        raise InternalError("smith transform is not unimodular")
    seen_zero = False
    prev = None
    for x in dec.d:
        if x < 0:
            raise InternalError("negative smith diagonal entry")
        if x == 0:
            seen_zero = True
            continue
        if seen_zero:
            raise InternalError("nonzero smith entry after a zero")
        if prev is not None and x % prev:
            raise InternalError("smith diagonal is not a divisibility chain")
        prev = x


_tags = itertools.count(1)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group in invariant-factor form.

    torsion holds the invariant factors greater than 1, each dividing the next.
    Equality and hashing look only at the structure; the tag identifies which
    cokernel computation an element belongs to.
    """

    free_rank: int
    torsion: tuple[int, ...]
    tag: int = field(default_factory=lambda: next(_tags), compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise InvalidParameter("free rank must be non-negative")
        prev = None
        for f in self.torsion:
            if f <= 1:
                raise InvalidParameter(f"invariant factor {f} must exceed 1")
            if prev is not None and f % prev:
                raise InvalidParameter("invariant factors must form a divisor chain")
            prev = f

    @property
    def coord_count(self) -> int:
        return len(self.torsion) + self.free_rank

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int | None:
        """Group order, or None when the group is infinite."""
        if self.free_rank:
            return None
        return math.prod(self.torsion)

    def element(self, coords: Sequence[int]) -> "GroupElement":
        coords = tuple(int(x) for x in coords)
        if len(coords) != self.coord_count:
            raise ShapeError(
                f"expected {self.coord_count} coordinates, got {len(coords)}"
            )
        reduced = tuple(
            c % f for c, f in zip(coords, self.torsion)
        ) + coords[len(self.torsion):]
        return GroupElement(self, reduced)

    def identity(self) -> "GroupElement":
        return self.element((0,) * self.coord_count)


@dataclass(frozen=True, eq=False)
class GroupElement:
    """Element of a fixed AbelianGroup: torsion coordinates, then free ones."""

    group: AbelianGroup
    coords: tuple[int, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.group.tag == other.group.tag and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.group.tag, self.coords))

    def _require_same_group(self, other: "GroupElement") -> None:
        if self.group.tag != other.group.tag:
            raise GroupMismatch("elements come from different cokernel computations")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._require_same_group(other)
        return self.group.element(
            tuple(x + y for x, y in zip(self.coords, other.coords))
        )

    def __neg__(self) -> "GroupElement":
        return self.group.element(tuple(-x for x in self.coords))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __rmul__(self, k: int) -> "GroupElement":
        if not isinstance(k, int):
            return NotImplemented
        return self.group.element(tuple(k * x for x in self.coords))

    def is_identity(self) -> bool:
        return all(x == 0 for x in self.coords)


class Cokernel(NamedTuple):
    """Cokernel of a square integer matrix plus the projection onto it."""

    group: AbelianGroup
    projection: IntMatrix


def cokernel(m: IntMatrix) -> Cokernel:
    """Z^n modulo the column span of m, with the quotient map.

    The projection rows are the rows of the left Smith transform at the
    non-unit diagonal positions, so coordinates follow the invariant-factor
    order: torsion factors first, free coordinates after.
    """
    if m.rows != m.cols:
        raise ShapeError("cokernel is defined here for square matrices only")
    dec = smith_normal_form(m)
    torsion = tuple(x for x in dec.d if x > 1)
    free = sum(1 for x in dec.d if x == 0)
    group = AbelianGroup(free_rank=free, torsion=torsion)
    keep = [i for i, x in enumerate(dec.d) if x != 1]
    if keep:
        projection = IntMatrix.from_rows(dec.u.row(i) for i in keep)
    else:
        projection = IntMatrix(0, m.rows, ())
    return Cokernel(group, projection)


def project(vec: Sequence[int], coker: Cokernel) -> GroupElement:
    """Image of an integer vector in the cokernel."""
    group, pm = coker
    if len(vec) != pm.cols:
        raise ShapeError(f"vector of length {len(vec)} against {pm.cols} columns")
    return group.element(pm.mul_vec(tuple(int(x) for x in vec)))


def element_order(e: GroupElement, g: AbelianGroup) -> int | None:
    """Least k >= 1 with k*e = 0, or None when e has infinite order.

    Computed in closed form from the coordinates: the order of c modulo a
    factor f is f // gcd(c, f), and the element order is the lcm of those.
    """
    if e.group.tag != g.tag:
        raise GroupMismatch("element does not belong to the given group")
    nt = len(g.torsion)
    if any(e.coords[nt:]):
        return None
    k = 1
    for c, f in zip(e.coords, g.torsion):
        k = math.lcm(k, f // math.gcd(c, f))
    return k


def generates(elems: Sequence[GroupElement], g: AbelianGroup) -> bool:
    """Whether the given elements generate the whole (finite) group.

    Decided by a Smith form: the elements generate iff their coordinate rows,
    stacked on the torsion relation lattice, span all of Z^k.
    """
    if g.free_rank:
        raise Unsupported("generation test is implemented for finite groups only")
    for e in elems:
        if e.group.tag != g.tag:
            raise GroupMismatch("element does not belong to the given group")
    k = len(g.torsion)
    if k == 0:
        return True
    rows = [list(e.coords) for e in elems]
    rows += [
        [g.torsion[i] if i == kk else 0 for kk in range(k)] for i in range(k)
    ]
    dec = smith_normal_form(IntMatrix.from_rows(rows))
    return all(x == 1 for x in dec.d)


def circulant_det_float(first_row: Sequence[int]) -> complex:
    """Floating-point circulant determinant via the roots-of-unity product.

    Evaluates prod over nth roots of unity w of (b1 + b2*w + ... + bn*w^(n-1)).
    Cross-check only; the exact value comes from determinant().
    """
    b = [int(x) for x in first_row]
    n = len(b)
    total = complex(1)
    for ell in range(n):
        w = cmath.exp(2j * math.pi * ell / n)
        s = complex(0)
        for coeff in reversed(b):
            s = s * w + coeff
        total *= s
    return total
