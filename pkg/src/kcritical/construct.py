"""
Deterministic graph constructions: the block construction (G1), the
cyclic-interval construction (G2) and its stepped variant, the edge-swap
counterexample, the irregular construction for non-integral ``a``, and the
tilde augmentation.
"""

from __future__ import annotations

from .errors import Inapplicable, InvalidStep, IsBiregularCase, InvalidParams
from .graph import BipartiteGraph
from .params import ParamSet


def _ceil_div(p: int, q: int) -> int:
    return -(-p // q)


def _intervals(n: int, m: int, first: list[int], width: int, step: int = 1) -> BipartiteGraph:
    return BipartiteGraph(n, m, [[(first[i] + step * t) % m for t in range(width)] for i in range(n)])


def construct_g1(P: ParamSet) -> BipartiteGraph:
    """Each ``u_i`` joins ``a`` consecutive V-vertices starting at ``floor(i/x)*y``."""
    first = [(i // P.x) * P.y for i in range(P.n)]
    G = _intervals(P.n, P.m, first, P.a)
    assert G.is_biregular(P.a, P.b)
    return G


def construct_g1_blowup(P: ParamSet) -> BipartiteGraph:
    """G1 obtained by blowing up the circulant d-regular graph on ``c + c`` vertices.

    ``u_i`` becomes ``x`` copies ``u_{i*x+alpha}``, ``v_j`` becomes ``y``
    copies ``v_{j*y+beta}`` and every edge becomes ``K_{x,y}``.
    """
    edges = []
    for i in range(P.c):
        for delta in range(P.d):
            j = (i + delta) % P.c
            for alpha in range(P.x):
                for beta in range(P.y):
                    edges.append((i * P.x + alpha, j * P.y + beta))
    return BipartiteGraph.build(P.n, P.m, edges)


def construct_g2(P: ParamSet) -> BipartiteGraph:
    """Each ``u_i`` joins ``a`` consecutive V-vertices starting at ``ceil(i*y/x) mod m``.

    The result is (a, b)-regular and k-critical.
    """
    return construct_g2_step(P, 1)


def construct_g2_step(P: ParamSet, s: int, *, unchecked: bool = False) -> BipartiteGraph:
    """G2 with the ``a`` neighbours of each ``u_i`` spaced ``s`` apart instead of consecutive.

    ``s`` must divide ``x``. Pass ``unchecked=True`` to build the graph for
    other ``s`` anyway; such graphs are in general not biregular and carry
    no guarantee.
    """
    if s < 1:
        raise InvalidStep(f"step must be positive, got {s}")
    if P.x % s and not unchecked:
        raise InvalidStep(f"s={s} does not divide x={P.x}")
    first = [_ceil_div(i * P.y, P.x) for i in range(P.n)]
    G = _intervals(P.n, P.m, first, P.a, s)
    if not unchecked:
        assert G.is_biregular(P.a, P.b)
    return G


def construct_negative(P: ParamSet) -> BipartiteGraph:
    """(a, b)-regular graph that is not k-critical, for ``c == m`` and ``a < m - 1``.

    Start from the graph joining ``v_i`` to ``u_{(alpha-i+z*m) mod n}``
    (``alpha`` in ``[a]``, ``z`` in ``[x]``), then exchange ``x`` edges at
    ``v_{m-1}`` and ``v_1`` so that ``v_{m-1}`` ends up with the same
    neighbourhood as ``v_0``. ``B = {v_0, v_{m-1}}`` then has
    ``|N(B)| = a*x = b``, one short of ``|B| + k``.
    """
    n, m, a, x = P.n, P.m, P.a, P.x
    if P.c != m:
        raise Inapplicable(f"needs c == m, got c={P.c}, m={m}")
    if a >= m - 1:
        raise Inapplicable(f"needs a < m - 1, got a={a}, m={m}")
    edges = {((alpha - i + z * m) % n, i) for i in range(m) for alpha in range(a) for z in range(x)}
    removed = {((a + z * m) % n, m - 1) for z in range(x)} | {((z * m) % n, 1) for z in range(x)}
    added = {((z * m) % n, m - 1) for z in range(x)} | {((a + z * m) % n, 1) for z in range(x)}
    assert removed <= edges and not (added & edges)
    G = BipartiteGraph.build(n, m, (edges - removed) | added)
    assert G.is_biregular(a, P.b)
    return G


def conjecture_degree(n: int, m: int) -> int:
    return _ceil_div(m * (n - m + 1), n)


def construct_conjecture(n: int, m: int) -> BipartiteGraph:
    """Interval construction for non-integral ``a = m(n-m+1)/n``.

    Each ``u_i`` joins ``ceil(a)`` consecutive V-vertices starting at
    ``ceil(i*m/n)``; indices are reduced mod ``m``.
    """
    if not 1 < m < n:
        raise InvalidParams(f"need n > m > 1, got n={n}, m={m}")
    if (m * (n - m + 1)) % n == 0:
        raise IsBiregularCase(f"a = m(n-m+1)/n is integral for ({n}, {m}); use construct_g2")
    a_prime = conjecture_degree(n, m)
    first = [_ceil_div(i * m, n) for i in range(n)]
    return _intervals(n, m, first, a_prime)


def tilde(G: BipartiteGraph) -> BipartiteGraph:
    """Add ``k = n - m`` V-vertices adjacent to all of U, giving order ``(n, n)``."""
    if G.n < G.m:
        raise InvalidParams(f"tilde needs n >= m, got order {G.order}")
    extra = tuple(range(G.m, G.n))
    return BipartiteGraph(G.n, G.n, [row + extra for row in G.adj])
