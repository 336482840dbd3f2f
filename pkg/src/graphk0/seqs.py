"""Fibonacci and Haselgrove sequences and the exact laws relating them.

Two independent routes exist for the order sequence H_2: the determinant of
the shift graph presentation (haselgrove) and a three-term recursion
(h2_recursive).  Tests hold them equal; neither calls the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidParameter
from .graphs import cayley_graph, k0_matrix
from .intlinalg import determinant, exact_div


def fib(n: int) -> int:
    """F(n) with F(0) = 0, F(1) = 1; plain iteration, exact at any size."""
    if not isinstance(n, int) or n < 0:
        raise InvalidParameter(f"need n >= 0, got {n!r}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def haselgrove(k: int, n: int) -> int:
    """H_k(n) = |det(I - A^T)| over the shift graph on n vertices with shift k."""
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"need n >= 1, got {n!r}")
    if not isinstance(k, int) or k < 0:
        raise InvalidParameter(f"need k >= 0, got {k!r}")
    return abs(determinant(k0_matrix(cayley_graph(n, k))))


def h2_recursive(n: int) -> int:
    """H_2(n) by the recursion H(n) = H(n-1) + H(n-2) + 1 - (-1)^n, H(1) = H(2) = 1."""
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"need n >= 1, got {n!r}")
    if n <= 2:
        return 1
    prev2, prev = 1, 1
    for m in range(3, n + 1):
        bump = 2 if m % 2 else 0  # 1 - (-1)^m by parity
        prev2, prev = prev, prev + prev2 + bump
    return prev


def d_gcd(n: int) -> int:
    """d(n) = gcd(F(n), F(n-1) - 1), taken on absolute values."""
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"need n >= 1, got {n!r}")
    return math.gcd(fib(n), abs(fib(n - 1) - 1))


def d_closed(n: int) -> int:
    """Closed form for d(n), split on the parity of n.

    Odd n: 1, except 2 when n = 3 mod 6.  Even n = 2m+2: F(m) + F(m+2) for
    even m, F(m+1) for odd m.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"need n >= 1, got {n!r}")
    if n % 2:
        return 2 if n % 6 == 3 else 1
    m = (n - 2) // 2
    if m % 2 == 0:
        return fib(m) + fib(m + 2)
    return fib(m + 1)


class GcdInvariants(NamedTuple):
    """A(n) and B(n); b is None for odd n, where B is not defined."""

    a: int
    b: int | None


def gcd_invariants(n: int) -> GcdInvariants:
    """A(n) = gcd(F(n)/d, H_2(n)) and, for even n, B(n) = gcd((F(n-1)-1)/d, H_2(n)/d)."""
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"need n >= 1, got {n!r}")
    d = d_gcd(n)
    h = h2_recursive(n)
    a = math.gcd(exact_div(fib(n), d), h)
    if n % 2:
        return GcdInvariants(a, None)
    b = math.gcd(exact_div(fib(n - 1) - 1, d), exact_div(h, d))
    return GcdInvariants(a, b)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of the nine exact identities checked at one index."""

    index: int
    cassini: bool
    f_odd: bool
    f_even: bool
    f_gcd: bool
    even_f_values: bool
    hoggatt71: bool
    vajda12: bool
    vajda20: bool
    h_to_f: bool

    def all_hold(self) -> bool:
        return (
            self.cassini
            and self.f_odd
            and self.f_even
            and self.f_gcd
            and self.even_f_values
            and self.hoggatt71
            and self.vajda12
            and self.vajda20
            and self.h_to_f
        )


def identity_suite(n: int) -> IdentityReport:
    """Evaluate the nine identities exactly at index n >= 2.

    The gcd identity is swept over all m in [1, n].  Signs (-1)^n are taken by
    parity, never by floating powers.
    """
    if not isinstance(n, int) or n < 2:
        raise InvalidParameter(f"identity suite needs n >= 2, got {n!r}")
    sign = 1 if n % 2 == 0 else -1
    fn2, fn1, f_n, fp1, fp2 = fib(n - 2), fib(n - 1), fib(n), fib(n + 1), fib(n + 2)
    assert fn2 + fn1 == f_n  # cheap coherence check on the window
    return IdentityReport(
        index=n,
        cassini=(fp1 * fn1 - f_n * f_n == sign),
        f_odd=(fib(2 * n - 1) == f_n * f_n + fn1 * fn1),
        f_even=(fib(2 * n) == (fn1 + fp1) * f_n),
        f_gcd=all(
            math.gcd(f_n, fib(m)) == fib(math.gcd(n, m)) for m in range(1, n + 1)
        ),
        even_f_values=((f_n % 2 == 0) == (n % 3 == 0)),
        hoggatt71=(fp2 * fp2 == 3 * fp1 * fp1 - f_n * f_n - 2 * sign),
        vajda12=(fp1 * fp1 - f_n * f_n == fp2 * fn1),
        vajda20=(f_n * fp1 == fn1 * fp2 - sign),
        h_to_f=(h2_recursive(n) == fp1 + fn1 - 1 - sign),
    )
