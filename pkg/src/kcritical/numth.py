"""
Exact integer helpers: extended Euclid, positive Bezout normalization,
divisor pairs, Stern-Brocot streaming of coprime pairs and the ceiling
counts behind the cyclic-interval construction.
"""

from __future__ import annotations

from math import gcd, isqrt
from typing import Iterator, NamedTuple

from .errors import InvalidParams, NoSolution


class BezoutSolution(NamedTuple):
    g: int
    phi: int
    psi: int


def extended_gcd(alpha: int, beta: int) -> BezoutSolution:
    """Extended Euclidean algorithm.

    Returns ``(g, phi, psi)`` with ``alpha*phi + beta*psi == g == gcd(alpha, beta)``.
    The coefficients are the ones the algorithm produces, so
    ``|phi| < beta/g`` and ``|psi| < alpha/g`` whenever ``alpha != beta``.
    """
    if alpha < 1 or beta < 1:
        raise InvalidParams(f"extended_gcd needs positive integers, got {alpha}, {beta}")
    r0, r1 = alpha, beta
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return BezoutSolution(r0, s0, t0)


def unit_bezout_positive(alpha: int, beta: int) -> tuple[int, int]:
    """Least positive solution of ``alpha*phi - beta*psi = 1``.

    The result satisfies ``0 < phi <= beta`` and ``0 <= psi < alpha``.
    """
    if alpha < 1 or beta < 1:
        raise InvalidParams(f"unit_bezout_positive needs positive integers, got {alpha}, {beta}")
    if alpha < 2 and beta < 2:
        raise InvalidParams("at least one of alpha, beta must be >= 2")
    g, phi, _ = extended_gcd(alpha, beta)
    if g != 1:
        raise NoSolution(f"gcd({alpha}, {beta}) = {g}, so alpha*phi - beta*psi = 1 is unsolvable")
    phi %= beta
    if phi == 0:
        phi = beta
    psi, rem = divmod(alpha * phi - 1, beta)
    assert rem == 0 and 0 <= psi < alpha
    return phi, psi


def divisor_pairs(n: int) -> list[tuple[int, int]]:
    """All ordered ``(p, q)`` with ``p*q == n``, sorted by ``p``. Trial division."""
    if n < 1:
        raise InvalidParams(f"divisor_pairs needs n >= 1, got {n}")
    small = [p for p in range(1, isqrt(n) + 1) if n % p == 0]
    large = [n // p for p in reversed(small) if p * p != n]
    return [(p, n // p) for p in small + large]


def coprime_pairs(limit: int) -> Iterator[tuple[int, int]]:
    """Yield every ``(x, y)`` with ``0 < y < x <= limit`` and ``gcd(x, y) == 1``.

    Walks the left half of the Stern-Brocot tree in order, so pairs come out
    sorted by increasing ``y/x``. Subtrees whose mediant denominator exceeds
    ``limit`` are pruned; descendants only have larger denominators.
    """
    if limit < 2:
        raise InvalidParams(f"coprime_pairs needs limit >= 2, got {limit}")
    # Nodes are intervals (lo, hi) of fractions stored as (num, den); the node
    # value is their mediant.
    stack: list[tuple[tuple[int, int], tuple[int, int]]] = []
    node: tuple[tuple[int, int], tuple[int, int]] | None = ((0, 1), (1, 1))
    while True:
        while node is not None:
            lo, hi = node
            if lo[1] + hi[1] > limit:
                node = None
                break
            stack.append(node)
            node = (lo, (lo[0] + hi[0], lo[1] + hi[1]))
        if not stack:
            return
        lo, hi = stack.pop()
        med = (lo[0] + hi[0], lo[1] + hi[1])
        yield med[1], med[0]
        node = (med, hi)


def _check_xy(x: int, y: int) -> None:
    if not 0 < y < x:
        raise InvalidParams(f"need 0 < y < x, got x={x}, y={y}")
    if gcd(x, y) != 1:
        raise InvalidParams(f"x={x} and y={y} are not coprime")


def ceil_count(x: int, y: int, c: int, j: int) -> int:
    """Number of ``i`` in ``[n]`` with ``ceil(i*y/x) mod m == j``, where ``n = c*x`` and ``m = c*y``.

    Closed form ``floor(j*x/y) - floor((j-1)*x/y)``; for ``j == 0`` this
    evaluates to ``ceil(x/y)``, which counts ``i = 0`` together with the
    solutions of ``ceil(i*y/x) == m``.
    """
    _check_xy(x, y)
    if c < 1:
        raise InvalidParams(f"c must be positive, got {c}")
    m = c * y
    if not 0 <= j < m:
        raise InvalidParams(f"j={j} is not in [0, {m})")
    return (j * x) // y - ((j - 1) * x) // y


def window_count(x: int, y: int, d: int, c: int, l: int) -> int:
    """Number of ``i`` in ``[n]`` whose first neighbour index falls in the cyclic
    window ``{l-(a-1), ..., l} (mod m)``, with ``a = d*y``.

    Equals ``b = d*x``: this is the V-side degree of the interval construction.
    """
    _check_xy(x, y)
    if not 0 < d < c:
        raise InvalidParams(f"need 0 < d < c, got d={d}, c={c}")
    m = c * y
    a = d * y
    if not 0 <= l < m:
        raise InvalidParams(f"l={l} is not in [0, {m})")
    # ceil_count(j) = F(j) - F(j-1) with F(j) = floor(j*x/y), and it has
    # period y in j; m is a multiple of y, so the window telescopes on
    # unreduced indices.
    return (l * x) // y - ((l - a) * x) // y
