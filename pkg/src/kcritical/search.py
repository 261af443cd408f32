"""
The minimum k-critical bipartite graph problem: find a k-critical graph of
order (n, m) minimising ``(|E|, Delta_U, Delta_V)`` lexicographically.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .construct import construct_conjecture, construct_g2
from .errors import BudgetExceeded, InvalidParams
from .graph import BipartiteGraph
from .params import derive_params, is_admissible
from .verify import HallWitness, is_k_critical_deficiency, is_k_critical_deletion

EXHAUSTIVE_BUDGET = 2_000_000


class Certificate(str, enum.Enum):
    EXHAUSTIVE_OPTIMAL = "ExhaustiveOptimal"
    BIREGULAR_OPTIMAL = "BiregularOptimal"
    FEASIBLE_ONLY = "FeasibleOnly"


@dataclass(frozen=True)
class SolveResult:
    graph: BipartiteGraph
    objective: tuple[int, int, int]
    certificate: Certificate
    optimal_count: int | None = None
    candidates_examined: int | None = None

    def __post_init__(self) -> None:
        prof = self.graph.degree_profile()
        if self.objective != (self.graph.e, prof.Delta_u, prof.Delta_v):
            raise ValueError(f"objective {self.objective} does not match the graph")

    def as_dict(self) -> dict:
        return {
            "n": self.graph.n,
            "m": self.graph.m,
            "objective": list(self.objective),
            "certificate": self.certificate.value,
            "optimal_count": self.optimal_count,
            "candidates_examined": self.candidates_examined,
        }


def lower_bound_edges(n: int, m: int) -> int:
    """Each V-vertex needs at least ``n - m + 1`` neighbours."""
    if not 1 < m < n:
        raise InvalidParams(f"need n > m > 1, got n={n}, m={m}")
    return m * (n - m + 1)


def solve_biregular(n: int, m: int) -> SolveResult:
    """Optimal solution for integral ``a``, using the cyclic-interval construction.

    Optimality follows from three bounds that the construction meets with
    equality: ``e >= m(n-m+1)``, ``Delta_V >= n-m+1`` and ``Delta_U >= ceil(e/n) = a``.
    """
    P = derive_params(n, m)
    G = construct_g2(P)
    verdict = is_k_critical_deficiency(G)
    if not verdict.is_k_critical:
        raise AssertionError(f"construct_g2 failed verification at ({n}, {m}): {verdict}")
    assert G.e == lower_bound_edges(n, m) and -(-G.e // n) == P.a
    return SolveResult(G, (G.e, P.a, P.b), Certificate.BIREGULAR_OPTIMAL)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _canonical(n: int, cols: tuple[int, ...]) -> tuple[int, ...]:
    # Alternate row and column sorting until stable; a cheap partial
    # reduction under independent U/V relabelling, not a full canonical form.
    for _ in range(n + len(cols)):
        rows = sorted(
            (tuple((c >> i) & 1 for c in cols) for i in range(n)), reverse=True
        )
        new_cols = tuple(sorted(sum(rows[i][j] << i for i in range(n)) for j in range(len(cols))))
        if new_cols == cols:
            break
        cols = new_cols
    return cols


def _column_sequences(masks: list[int], weights: list[int], m: int, e: int, lo_w: int) -> Iterator[tuple[int, ...]]:
    # Nondecreasing index sequences of length m whose weights sum to e.
    seq: list[int] = []

    def rec(start: int, left: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if left == 0:
            if remaining == 0:
                yield tuple(masks[t] for t in seq)
            return
        for t in range(start, len(masks)):
            w = weights[t]
            if w + (left - 1) * lo_w > remaining:
                continue
            seq.append(t)
            yield from rec(t, left - 1, remaining - w)
            seq.pop()

    yield from rec(0, m, e)


def solve_exhaustive(n: int, m: int, budget: int = EXHAUSTIVE_BUDGET) -> SolveResult:
    """Exact minimiser by exhaustive search, practical for ``n <= 7``.

    Edge counts are tried in increasing order from the lower bound; within
    an edge count, candidate graphs (every V-degree at least ``n-m+1``,
    no isolated U-vertex) are grouped by ``(Delta_U, Delta_V)`` and checked
    with the deletion oracle in increasing order. The first group that
    contains a k-critical graph is optimal.
    """
    lb = lower_bound_edges(n, m)
    b = n - m + 1
    full = (1 << n) - 1
    masks = sorted((s for s in range(1, full + 1) if _popcount(s) >= b), key=lambda s: (_popcount(s), s))
    weights = [_popcount(s) for s in masks]
    examined = 0
    for e in range(lb, n * m + 1):
        groups: dict[tuple[int, int], set[tuple[int, ...]]] = {}
        for cols in _column_sequences(masks, weights, m, e, b):
            examined += 1
            if examined > budget:
                raise BudgetExceeded(f"more than {budget} candidate graphs for ({n}, {m})")
            union = 0
            for c in cols:
                union |= c
            if union != full:
                continue
            du = max(sum((c >> i) & 1 for c in cols) for i in range(n))
            dv = max(_popcount(c) for c in cols)
            groups.setdefault((du, dv), set()).add(_canonical(n, cols))
        for objective in sorted(groups):
            feasible = []
            for cols in sorted(groups[objective]):
                G = BipartiteGraph.build(n, m, [(i, j) for j, c in enumerate(cols) for i in range(n) if (c >> i) & 1])
                if is_k_critical_deletion(G).is_k_critical:
                    feasible.append(G)
            if feasible:
                return SolveResult(
                    feasible[0], (e, *objective), Certificate.EXHAUSTIVE_OPTIMAL,
                    optimal_count=len(feasible), candidates_examined=examined,
                )
    raise AssertionError("the complete bipartite graph is always k-critical")


@dataclass
class ConjectureEntry:
    n: int
    m: int
    a_prime: int
    e: int
    delta_v: int
    deficiency: bool
    deletion: bool | None
    witness: HallWitness | None = None

    @property
    def passed(self) -> bool:
        return self.deficiency and self.deletion is not False

    def as_dict(self) -> dict:
        return {
            "n": self.n, "m": self.m, "a_prime": self.a_prime, "e": self.e,
            "delta_v": self.delta_v, "deficiency": self.deficiency, "deletion": self.deletion,
            "witness": None if self.witness is None else list(self.witness.B),
        }


@dataclass
class ConjectureReport:
    n_max: int
    entries: list[ConjectureEntry] = field(default_factory=list)
    note: str = "empirical evidence at finite scale, not a proof"

    @property
    def counterexamples(self) -> list[ConjectureEntry]:
        return [e for e in self.entries if not e.passed]

    def as_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "checked": len(self.entries),
            "counterexamples": [e.as_dict() for e in self.counterexamples],
            "entries": [e.as_dict() for e in self.entries],
            "note": self.note,
        }


def conjecture_scan(
    n_max: int,
    *,
    deletion_budget: int = 50_000,
    builder: Callable[[int, int], BipartiteGraph] = construct_conjecture,
) -> ConjectureReport:
    """Verify the irregular interval construction for every ``1 < m < n <= n_max`` with non-integral ``a``.

    The deletion oracle also runs wherever ``C(n, k)`` fits ``deletion_budget``.
    """
    if n_max < 3:
        raise InvalidParams(f"n_max must be >= 3, got {n_max}")
    report = ConjectureReport(n_max)
    for n in range(3, n_max + 1):
        for m in range(2, n):
            if is_admissible(n, m):
                continue
            G = builder(n, m)
            defi = is_k_critical_deficiency(G)
            try:
                dele = is_k_critical_deletion(G, budget=deletion_budget)
            except BudgetExceeded:
                dele = None
            witness = defi.witness or (dele.witness if dele is not None else None)
            report.entries.append(ConjectureEntry(
                n=n, m=m, a_prime=max(G.u_degrees()), e=G.e,
                delta_v=G.degree_profile().delta_v,
                deficiency=defi.is_k_critical,
                deletion=None if dele is None else dele.is_k_critical,
                witness=witness,
            ))
    return report
