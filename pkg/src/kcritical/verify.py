"""
k-criticality checks.

Three independent routes are provided:

* ``deficiency``: every nonempty ``B`` in V must satisfy
  ``|N(B)| >= |B| + k``; scanned over all subsets of V.
* ``deletion``: delete every ``k``-subset of U and look for a
  V-saturating matching in what remains (ground truth, exponential in n).
* ``tilde``: k-extendability of the tilde graph, decided by strong
  k-connectivity of the contracted digraph ``D(G, M)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Literal, Sequence

import numpy as np

from .construct import tilde
from .errors import BudgetExceeded, InvalidParams, NoPerfectMatching, ShapeError, Unbalanced
from .graph import BipartiteGraph, Matching

Method = Literal["deficiency", "deletion", "tilde"]

DELETION_BUDGET = 10**6
SCAN_LIMIT = 20


@dataclass(frozen=True)
class HallWitness:
    """Nonempty ``B`` in V with ``|N(B)| < |B| + k``."""

    B: tuple[int, ...]
    neighborhood_size: int


@dataclass(frozen=True)
class Verdict:
    is_k_critical: bool
    method: str
    witness: HallWitness | None = None
    deleted: tuple[int, ...] | None = None

    def as_dict(self) -> dict:
        return {
            "is_k_critical": self.is_k_critical,
            "method": self.method,
            "witness": None if self.witness is None else list(self.witness.B),
            "witness_neighborhood_size": None if self.witness is None else self.witness.neighborhood_size,
            "deleted": None if self.deleted is None else list(self.deleted),
        }


# ---------------------------------------------------------------- matchings

def _kuhn(m: int, vadj: Sequence[Sequence[int]], allowed: int = -1) -> dict[int, int]:
    """Augmenting-path matching from the V side; returns ``{u: v}``.

    ``allowed`` is a bitmask of usable U-vertices (all by default).
    """
    mate_u: dict[int, int] = {}

    def augment(j: int, seen: set[int]) -> bool:
        for i in vadj[j]:
            if not (allowed >> i) & 1 or i in seen:
                continue
            seen.add(i)
            if i not in mate_u or augment(mate_u[i], seen):
                mate_u[i] = j
                return True
        return False

    for j in range(m):
        augment(j, set())
    return mate_u


def max_matching(G: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching (augmenting paths, vertices tried in index order)."""
    mate_u = _kuhn(G.m, G.vadj)
    return Matching(frozenset(mate_u.items()))


def has_complete_matching(G: BipartiteGraph) -> bool:
    """True iff some matching covers every V-vertex."""
    return max_matching(G).size == G.m


def _alternating_violator(vadj: Sequence[Sequence[int]], m: int, mate_u: dict[int, int],
                          allowed: int = -1) -> set[int]:
    # V-vertices reachable by alternating paths from an exposed V-vertex form
    # a Hall violator: every U-neighbour reached is matched inside the set.
    matched_v = set(mate_u.values())
    root = next(j for j in range(m) if j not in matched_v)
    reached_v = {root}
    queue = deque([root])
    while queue:
        j = queue.popleft()
        for i in vadj[j]:
            if not (allowed >> i) & 1:
                continue
            w = mate_u[i]
            if w not in reached_v:
                reached_v.add(w)
                queue.append(w)
    return reached_v


def hall_deficient(G: BipartiteGraph, B: Iterable[int], k: int | None = None) -> bool:
    """True iff ``B`` is nonempty and ``|N(B)| < |B| + k``."""
    B = set(B)
    if k is None:
        k = G.n - G.m
    return bool(B) and len(G.neighborhood(B)) < len(B) + k


def _shrink(G: BipartiteGraph, B: set[int], k: int) -> tuple[int, ...]:
    for j in sorted(B):
        if len(B) > 1 and hall_deficient(G, B - {j}, k):
            B = B - {j}
    return tuple(sorted(B))


def _witness(G: BipartiteGraph, B: Iterable[int]) -> HallWitness:
    B = tuple(sorted(B))
    return HallWitness(B, len(G.neighborhood(B)))


# ------------------------------------------------------------ deficiency

def _scan_violators(G: BipartiteGraph, k: int) -> tuple[int, ...] | None:
    m = G.m
    N = np.zeros(1 << m, dtype=np.uint64)
    for j, mask in enumerate(G.vmask):
        lo = 1 << j
        np.bitwise_or(N[:lo], np.uint64(mask), out=N[lo:2 * lo])
    nsize = np.bitwise_count(N).astype(np.int64)
    bsize = np.bitwise_count(np.arange(1 << m, dtype=np.uint64)).astype(np.int64)
    bad = np.flatnonzero(nsize[1:] < bsize[1:] + k) + 1
    if bad.size == 0:
        return None
    smallest = bsize[bad].min()
    candidates = bad[bsize[bad] == smallest]
    # canonical order: size, then lexicographic on the sorted index tuple
    return min(tuple(j for j in range(m) if (int(c) >> j) & 1) for c in candidates)


def _surplus_violator(G: BipartiteGraph, k: int) -> tuple[int, ...] | None:
    # |N(B)| >= |B| + k for all B containing v  <=>  v copied k+1 times still
    # leaves a V-saturating matching.
    m = G.m
    for v in range(m):
        vadj = list(G.vadj) + [G.vadj[v]] * k
        mate_u = _kuhn(m + k, vadj)
        if len(mate_u) < m + k:
            reached = _alternating_violator(vadj, m + k, mate_u)
            B = {j if j < m else v for j in reached}
            return _shrink(G, B, k)
    return None


def is_k_critical_deficiency(G: BipartiteGraph, *, scan_limit: int = SCAN_LIMIT) -> Verdict:
    """Decide k-criticality by the neighbourhood-surplus condition.

    Returns a smallest violating ``B`` (lexicographically first among those
    of minimum size) when the graph is not k-critical. Graphs with more
    than ``scan_limit`` V-vertices, or more than 64 U-vertices, use the
    equivalent per-vertex matching test instead of the subset scan; the
    witness is then greedily shrunk to an inclusion-minimal one.
    """
    if G.n < G.m:
        raise ShapeError(f"needs n >= m, got order {G.order}")
    k = G.n - G.m
    if G.m == 0:
        return Verdict(True, "deficiency")
    if G.m <= scan_limit and G.n <= 64:
        B = _scan_violators(G, k)
    else:
        B = _surplus_violator(G, k)
    if B is None:
        return Verdict(True, "deficiency")
    return Verdict(False, "deficiency", _witness(G, B))


# -------------------------------------------------------------- deletion

def is_k_critical_deletion(G: BipartiteGraph, *, budget: int = DELETION_BUDGET) -> Verdict:
    """Ground-truth check: every deletion of ``k`` U-vertices leaves a V-saturating matching.

    Deleted sets are tried in lexicographic order; the first failure is
    reported together with a Hall witness extracted from the failed matching.
    """
    if G.n < G.m:
        raise ShapeError(f"needs n >= m, got order {G.order}")
    n, m, k = G.n, G.m, G.n - G.m
    total = comb(n, k)
    if total > budget:
        raise BudgetExceeded(f"C({n}, {k}) = {total} deletion sets exceed budget {budget}")
    full = (1 << n) - 1
    for S in combinations(range(n), k):
        allowed = full
        for i in S:
            allowed &= ~(1 << i)
        mate_u = _kuhn(m, G.vadj, allowed)
        if len(mate_u) < m:
            reached = _alternating_violator(G.vadj, m, mate_u, allowed)
            B = _shrink(G, set(reached), k)
            return Verdict(False, "deletion", _witness(G, B), deleted=S)
    return Verdict(True, "deletion")


# ---------------------------------------------------- extendability route

def contracted_digraph(G: BipartiteGraph, M: Matching) -> dict[int, set[int]]:
    """``D(G, M)``: orient edges U -> V and contract each matching edge.

    The contracted vertex for ``(u_i, v_M(i))`` is labelled ``i``.
    """
    mate_v = M.mate_of_v()
    arcs: dict[int, set[int]] = {i: set() for i in range(G.n)}
    for i, j in G.edges():
        t = mate_v[j]
        if t != i:
            arcs[i].add(t)
    return arcs


def local_connectivity(arcs: dict[int, set[int]], s: int, t: int, cap: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint s -> t paths (an arc s -> t counts as one).

    Unit vertex capacities via vertex splitting; stops once ``cap`` paths are found.
    """
    # node (w, 0) = w_in, (w, 1) = w_out
    res: dict[tuple[int, int], dict[tuple[int, int], int]] = {}

    def add(a, b, c):
        res.setdefault(a, {})
        res.setdefault(b, {})
        res[a][b] = res[a].get(b, 0) + c
        res[b].setdefault(a, 0)

    big = len(arcs) + 1
    for w in arcs:
        add((w, 0), (w, 1), big if w in (s, t) else 1)
    for w, outs in arcs.items():
        for z in outs:
            add((w, 1), (z, 0), 1)
    source, sink = (s, 1), (t, 0)
    flow = 0
    while cap is None or flow < cap:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b, c in res[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while parent[b] is not None:
            a = parent[b]
            res[a][b] -= 1
            res[b][a] += 1
            b = a
        flow += 1
    return flow


def is_strongly_k_connected(arcs: dict[int, set[int]], k: int) -> bool:
    q = len(arcs)
    if q <= k:
        return False
    return all(
        local_connectivity(arcs, s, t, k) >= k
        for s in arcs for t in arcs if s != t
    )


def is_k_extendable(G: BipartiteGraph, k: int, matching: Matching | None = None) -> bool:
    """k-extendability of a balanced graph via strong k-connectivity of ``D(G, M)``.

    ``matching`` must be perfect if given; otherwise the first maximum
    matching found by :func:`max_matching` is contracted.
    """
    if G.n != G.m:
        raise Unbalanced(f"needs a balanced graph, got order {G.order}")
    if k < 1:
        raise InvalidParams(f"k must be >= 1, got {k}")
    M = matching if matching is not None else max_matching(G)
    if M.size != G.n or not M.is_valid_in(G):
        raise NoPerfectMatching(f"graph of order {G.order} has no perfect matching")
    return is_strongly_k_connected(contracted_digraph(G, M), k)


def is_k_critical_tilde(G: BipartiteGraph) -> Verdict:
    """k-criticality of ``G`` read off k-extendability of its tilde graph."""
    if G.n < G.m:
        raise ShapeError(f"needs n >= m, got order {G.order}")
    k = G.n - G.m
    if k == 0:
        return Verdict(has_complete_matching(G), "tilde")
    try:
        ok = is_k_extendable(tilde(G), k)
    except NoPerfectMatching:
        ok = False
    return Verdict(ok, "tilde")


def check_tilde_equivalence(G: BipartiteGraph, *, budget: int = DELETION_BUDGET) -> bool:
    """True iff the deletion oracle and the tilde route agree on ``G``."""
    if G.n <= G.m:
        raise ShapeError(f"needs n > m, got order {G.order}")
    return is_k_critical_deletion(G, budget=budget).is_k_critical == is_k_critical_tilde(G).is_k_critical


_METHODS = {
    "deficiency": is_k_critical_deficiency,
    "deletion": is_k_critical_deletion,
    "tilde": is_k_critical_tilde,
}


def is_k_critical(G: BipartiteGraph, method: Method = "deficiency") -> Verdict:
    try:
        return _METHODS[method](G)
    except KeyError:
        raise InvalidParams(f"unknown method {method!r}") from None
