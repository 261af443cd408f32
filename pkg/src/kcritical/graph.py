"""
Bipartite graph model. Vertices are positional: ``u_i`` for ``i`` in
``[n]`` and ``v_j`` for ``j`` in ``[m]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import OutOfRange


@dataclass(frozen=True)
class DegreeProfile:
    delta_u: int
    Delta_u: int
    delta_v: int
    Delta_v: int


class BipartiteGraph:
    """Simple bipartite graph of order ``(n, m)`` stored as sorted U-side adjacency.

    Instances are immutable; the V-side index is derived on first use.
    """

    def __init__(self, n: int, m: int, adj: Iterable[Iterable[int]]):
        self.n = n
        self.m = m
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(set(row))) for row in adj)
        if len(self.adj) != n:
            raise OutOfRange(f"adjacency has {len(self.adj)} rows, expected {n}")
        for i, row in enumerate(self.adj):
            if row and (row[0] < 0 or row[-1] >= m):
                raise OutOfRange(f"u{i} has a neighbour outside [0, {m})")
        self.e = sum(len(row) for row in self.adj)

    @classmethod
    def build(cls, n: int, m: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
        if n < 0 or m < 0:
            raise OutOfRange(f"negative order ({n}, {m})")
        rows: list[set[int]] = [set() for _ in range(n)]
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < m):
                raise OutOfRange(f"edge ({i}, {j}) outside order ({n}, {m})")
            rows[i].add(j)
        return cls(n, m, rows)

    @cached_property
    def vadj(self) -> tuple[tuple[int, ...], ...]:
        cols: list[list[int]] = [[] for _ in range(self.m)]
        for i, row in enumerate(self.adj):
            for j in row:
                cols[j].append(i)
        return tuple(tuple(col) for col in cols)

    @cached_property
    def umask(self) -> tuple[int, ...]:
        """Bitmask over V of each U-vertex's neighbourhood."""
        return tuple(sum(1 << j for j in row) for row in self.adj)

    @cached_property
    def vmask(self) -> tuple[int, ...]:
        """Bitmask over U of each V-vertex's neighbourhood."""
        return tuple(sum(1 << i for i in col) for col in self.vadj)

    @property
    def order(self) -> tuple[int, int]:
        return (self.n, self.m)

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.adj):
            for j in row:
                yield (i, j)

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adj[i]

    def u_degrees(self) -> list[int]:
        return [len(row) for row in self.adj]

    def v_degrees(self) -> list[int]:
        return [len(col) for col in self.vadj]

    def _check_v(self, B: Iterable[int]) -> list[int]:
        B = list(B)
        for j in B:
            if not 0 <= j < self.m:
                raise OutOfRange(f"v{j} not in [0, {self.m})")
        return B

    def _check_u(self, A: Iterable[int]) -> list[int]:
        A = list(A)
        for i in A:
            if not 0 <= i < self.n:
                raise OutOfRange(f"u{i} not in [0, {self.n})")
        return A

    def neighborhood(self, B: Iterable[int]) -> frozenset[int]:
        """N(B) in U for a set B of V-vertices."""
        out: set[int] = set()
        for j in self._check_v(B):
            out.update(self.vadj[j])
        return frozenset(out)

    def u_neighborhood(self, A: Iterable[int]) -> frozenset[int]:
        """N(A) in V for a set A of U-vertices."""
        out: set[int] = set()
        for i in self._check_u(A):
            out.update(self.adj[i])
        return frozenset(out)

    def induced(self, U_prime: Iterable[int]) -> BipartiteGraph:
        """G[U', V]; U' is reindexed in ascending order, V is kept."""
        keep = sorted(set(self._check_u(U_prime)))
        return BipartiteGraph(len(keep), self.m, [self.adj[i] for i in keep])

    def add_edge(self, i: int, j: int) -> BipartiteGraph:
        if not (0 <= i < self.n and 0 <= j < self.m):
            raise OutOfRange(f"edge ({i}, {j}) outside order {self.order}")
        rows = [list(r) for r in self.adj]
        rows[i].append(j)
        return BipartiteGraph(self.n, self.m, rows)

    def remove_edge(self, i: int, j: int) -> BipartiteGraph:
        rows = [[t for t in r if not (k == i and t == j)] for k, r in enumerate(self.adj)]
        return BipartiteGraph(self.n, self.m, rows)

    def degree_profile(self) -> DegreeProfile:
        du = self.u_degrees() or [0]
        dv = self.v_degrees() or [0]
        return DegreeProfile(min(du), max(du), min(dv), max(dv))

    def is_biregular(self, a: int, b: int) -> bool:
        return all(len(r) == a for r in self.adj) and all(len(c) == b for c in self.vadj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self.n, self.m, self.adj) == (other.n, other.m, other.adj)

    def __hash__(self) -> int:
        return hash((self.n, self.m, self.adj))

    def __repr__(self) -> str:
        return f"BipartiteGraph(n={self.n}, m={self.m}, e={self.e})"


@dataclass(frozen=True)
class Matching:
    """Set of pairwise disjoint ``(i, j)`` edges."""

    pairs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        us = [i for i, _ in self.pairs]
        vs = [j for _, j in self.pairs]
        if len(set(us)) != len(us) or len(set(vs)) != len(vs):
            raise ValueError("matching edges are not pairwise disjoint")

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def size(self) -> int:
        return len(self.pairs)

    def covers_u(self, i: int) -> bool:
        return any(p[0] == i for p in self.pairs)

    def covers_v(self, j: int) -> bool:
        return any(p[1] == j for p in self.pairs)

    def mate_of_v(self) -> dict[int, int]:
        return {j: i for i, j in self.pairs}

    def mate_of_u(self) -> dict[int, int]:
        return {i: j for i, j in self.pairs}

    def is_valid_in(self, G: BipartiteGraph) -> bool:
        return all(0 <= i < G.n and G.has_edge(i, j) for i, j in self.pairs)
