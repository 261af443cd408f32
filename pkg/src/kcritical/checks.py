"""
Acceptance checks and the invariant corpus behind ``kcritical selftest``.

Each ``check_*`` function returns a :class:`CheckResult`; the test suite
asserts on them and the CLI prints them.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import comb, gcd
from typing import Callable

from .construct import (
    construct_conjecture,
    construct_g1,
    construct_g2,
    construct_g2_step,
    construct_negative,
)
from .graph import BipartiteGraph
from .numth import ceil_count, coprime_pairs, window_count
from .params import (
    ENUMERATORS,
    ParamSet,
    derive_params,
    enumerate_from_m,
    enumerate_from_n,
    is_admissible,
    n_existence_1_audit,
)
from .search import Certificate, conjecture_scan, solve_biregular, solve_exhaustive
from .verify import (
    check_tilde_equivalence as tilde_agrees,
    hall_deficient,
    is_k_critical_deficiency,
    is_k_critical_deletion,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def all_params(n_max: int) -> list[ParamSet]:
    return [derive_params(n, m) for n in range(3, n_max + 1) for m in range(2, n) if is_admissible(n, m)]


def g2_floor_variant(P: ParamSet) -> BipartiteGraph:
    """Interval construction with ``floor(i*y/x)`` as first neighbour."""
    return BipartiteGraph(P.n, P.m, [[((i * P.y) // P.x + t) % P.m for t in range(P.a)] for i in range(P.n)])


def brute_first_index_histogram(x: int, y: int, c: int) -> list[int]:
    m = c * y
    hist = [0] * m
    for i in range(c * x):
        hist[-(-i * y // x) % m] += 1
    return hist


# ------------------------------------------------------------------ corpus

def construction_corpus(n_max: int) -> list[tuple[str, BipartiteGraph]]:
    out: list[tuple[str, BipartiteGraph]] = []
    for P in all_params(n_max):
        tag = f"({P.n},{P.m})"
        out.append((f"g1{tag}", construct_g1(P)))
        out.append((f"g2{tag}", construct_g2(P)))
        out.append((f"g2floor{tag}", g2_floor_variant(P)))
        for s in range(2, P.x + 1):
            if P.x % s == 0:
                out.append((f"g2step{s}{tag}", construct_g2_step(P, s)))
        if P.c == P.m and P.a < P.m - 1:
            out.append((f"negative{tag}", construct_negative(P)))
    for n in range(3, n_max + 1):
        for m in range(2, n):
            if not is_admissible(n, m):
                out.append((f"conjecture({n},{m})", construct_conjecture(n, m)))
    return out


def perturbed_corpus(base: list[tuple[str, BipartiteGraph]], seed: int, per_graph: int) -> list[tuple[str, BipartiteGraph]]:
    """Random single- and multi-edge additions and deletions of every base graph."""
    rng = random.Random(seed)
    out = []
    for name, G in base:
        present = list(G.edges())
        missing = [(i, j) for i in range(G.n) for j in range(G.m) if not G.has_edge(i, j)]
        for t in range(per_graph):
            if missing:
                H = G
                for i, j in rng.sample(missing, min(len(missing), 1 + t)):
                    H = H.add_edge(i, j)
                out.append((f"{name}+{t}", H))
            if present:
                H = G
                for i, j in rng.sample(present, min(len(present), 1 + t)):
                    H = H.remove_edge(i, j)
                out.append((f"{name}-{t}", H))
    return out


def tilde_corpus(n_max: int = 12, seed: int = 2024, per_graph: int = 2) -> list[tuple[str, BipartiteGraph]]:
    base = construction_corpus(n_max)
    return base + perturbed_corpus(base, seed, per_graph)


# --------------------------------------------------------------- criteria

def check_positive_construction(n_max: int = 30, deletion_n_max: int = 16) -> CheckResult:
    params = all_params(n_max)
    bad = []
    deletion_runs = 0
    for P in params:
        G = construct_g2(P)
        if not G.is_biregular(P.a, P.b) or not is_k_critical_deficiency(G).is_k_critical:
            bad.append(P.key)
        if P.n <= deletion_n_max:
            deletion_runs += 1
            if not is_k_critical_deletion(G).is_k_critical:
                bad.append(P.key)
    return CheckResult(
        "positive construction",
        not bad and bool(params),
        f"{len(params)} parameter sets n<={n_max}, {deletion_runs} also by deletion; failures {bad}",
    )


def labeled_biregular_graphs(n: int, m: int, a: int, b: int) -> list[BipartiteGraph]:
    """Every labelled (a, b)-regular graph of order (n, m), by brute force over U-rows."""
    from itertools import combinations

    rows = list(combinations(range(m), a))
    out = []
    for choice in product(rows, repeat=n):
        deg = Counter(j for r in choice for j in r)
        if all(deg[j] == b for j in range(m)):
            out.append(BipartiteGraph(n, m, choice))
    return out


def check_negative_characterization(n_max_neg: int = 30, n_max_g1: int = 20) -> CheckResult:
    problems = []
    neg = [P for P in all_params(n_max_neg) if P.c == P.m and P.a < P.m - 1]
    for P in neg:
        G = construct_negative(P)
        v = is_k_critical_deficiency(G)
        B = (0, P.m - 1)
        if (
            v.is_k_critical
            or v.witness is None
            or v.witness.B != B
            or len(G.neighborhood(B)) != P.n - P.m + 1
            or not G.is_biregular(P.a, P.b)
        ):
            problems.append(("negative", P.key, v))
        if comb(P.n, P.k) <= 10**5 and is_k_critical_deletion(G).is_k_critical:
            problems.append(("negative-deletion", P.key))
    g1 = [P for P in all_params(n_max_g1) if P.c < P.m and P.a < P.m - 1]
    for P in g1:
        G = construct_g1(P)
        if is_k_critical_deficiency(G).is_k_critical or is_k_critical_deletion(G).is_k_critical:
            problems.append(("g1", P.key))
    graphs = labeled_biregular_graphs(6, 3, 2, 4)
    failing = [G for G in graphs if not is_k_critical_deletion(G).is_k_critical]
    if failing or not graphs:
        problems.append(("a=m-1", len(failing)))
    return CheckResult(
        "negative characterization",
        not problems and bool(neg) and bool(g1),
        f"{len(neg)} swap counterexamples (witness {{v0, v_m-1}}), {len(g1)} failing G1 with c<m, "
        f"{len(graphs)} labelled (2,4)-regular graphs of order (6,3) all k-critical; problems {problems}",
    )


def check_block_construction(n_max: int = 20) -> CheckResult:
    params = all_params(n_max)
    bad = []
    for P in params:
        G = construct_g1(P)
        expected = P.c == P.m
        if is_k_critical_deficiency(G).is_k_critical != expected or is_k_critical_deletion(G).is_k_critical != expected:
            bad.append(P.key)
    return CheckResult("G1 critical iff c = m", not bad, f"{len(params)} parameter sets n<={n_max}; mismatches {bad}")


def check_counting_identities(x_max: int = 50, c_max: int = 8) -> CheckResult:
    bad = []
    cases = 0
    for x, y in coprime_pairs(x_max):
        for c in range(1, c_max + 1):
            n, m = c * x, c * y
            hist = brute_first_index_histogram(x, y, c)
            counts = [ceil_count(x, y, c, j) for j in range(m)]
            cases += 1
            if counts != hist or sum(counts) != n:
                bad.append(("ceil_count", x, y, c))
                continue
            hi, lo = -(-x // y), x // y
            if hi == lo:
                if any(v != x for v in counts):
                    bad.append(("distribution", x, y, c))
            elif Counter(counts) != Counter({hi: n % m, lo: m - n % m}):
                bad.append(("distribution", x, y, c))
            prefix = [0]
            for v in hist + hist:
                prefix.append(prefix[-1] + v)
            for d in range(1, c):
                a = d * y
                for l in range(m):
                    # window {l-a+1, ..., l} shifted into the doubled histogram
                    brute = prefix[l + m + 1] - prefix[l + m + 1 - a]
                    if brute != d * x or window_count(x, y, d, c, l) != d * x:
                        bad.append(("window", x, y, c, d, l))
    return CheckResult(
        "counting identities", not bad,
        f"{cases} (x, y, c) triples with x<={x_max}, c<={c_max}; failures {bad[:5]}",
    )


def brute_pairs(kind: str, key: int) -> set[tuple[int, int]]:
    """All admissible (n, m) with the given parameter, by direct scan."""
    if kind == "n":
        return {(key, m) for m in range(2, key) if is_admissible(key, m)}
    if kind == "m":
        # n(m - a) = m(m - 1) with m - a >= 1 bounds n by m(m - 1)
        return {(n, key) for n in range(key + 1, key * (key - 1) + 1) if is_admissible(n, key)}
    if kind == "b":
        # n - m = b - 1 and n = b(b-1)/(b-a) <= b(b-1)
        return {(m + key - 1, m) for m in range(2, (key - 1) ** 2 + 1) if is_admissible(m + key - 1, m)}
    if kind == "a":
        # a fixes n = m(m-1)/(m-a); b >= a+1 bounds m by a^2
        out = set()
        for m in range(key + 1, key * key + 1):
            n, rem = divmod(m * (m - 1), m - key)
            if not rem and is_admissible(n, m) and derive_params(n, m).a == key:
                out.add((n, m))
        return out
    raise ValueError(kind)


def check_parameter_enumeration(key_max: int = 200, audit_n_max: int = 100) -> CheckResult:
    problems = []
    if {P.n for P in enumerate_from_m(7)} != {14, 21, 42}:
        problems.append("m=7")
    lows = {"m": 3, "a": 2, "b": 3, "n": 4}
    checked = 0
    for kind, fn in ENUMERATORS.items():
        for key in range(lows[kind], key_max + 1):
            if kind == "n" and all(key % c for c in range(2, key)):
                continue
            got = fn(key)
            checked += 1
            if any(P != derive_params(P.n, P.m) for P in got):
                problems.append(("roundtrip", kind, key))
            if {P.key for P in got} != brute_pairs(kind, key):
                problems.append(("brute", kind, key))
    for n in range(4, key_max + 1):
        from_n = {(P.c, P.x): P for P in enumerate_from_n(n)} if any(n % c == 0 for c in range(2, n)) else {}
        for c in range(2, n // 2 + 1):
            if n % c:
                continue
            x = n // c
            if x < 2:
                continue
            sols = [(y, d) for y in range(1, x) for d in range(1, c) if x * d == n - c * y + 1]
            expected = 1 if gcd(c, x) == 1 else 0
            if len(sols) != expected:
                problems.append(("uniqueness", n, c, x, sols))
            elif sols and (from_n[(c, x)].y, from_n[(c, x)].d) != sols[0]:
                problems.append(("n-recipe", n, c, x))
    audit = n_existence_1_audit(audit_n_max)
    if not audit or any(r["holds"] for r in audit):
        problems.append(("n_existence_1", sum(bool(r["holds"]) for r in audit)))
    return CheckResult(
        "parameter enumeration", not problems,
        f"m=7 -> {{14,21,42}}; {checked} enumerations (keys<={key_max}) match brute force; "
        f"uniqueness scan n<={key_max}; {len(audit)} recipe candidates from the n+1 factorization, "
        f"none satisfy b=n-m+1; problems {problems[:5]}",
    )


def check_tilde_agreement(n_max: int = 12) -> CheckResult:
    corpus = tilde_corpus(n_max)
    bad = []
    for name, G in corpus:
        if G.n <= G.m:
            continue
        dele = is_k_critical_deletion(G).is_k_critical
        if not tilde_agrees(G) or is_k_critical_deficiency(G).is_k_critical != dele:
            bad.append(name)
    crit = sum(is_k_critical_deficiency(G).is_k_critical for _, G in corpus)
    return CheckResult(
        "tilde equivalence", not bad and len(corpus) >= 200,
        f"{len(corpus)} graphs n<={n_max} ({crit} k-critical); disagreements {bad[:5]}",
    )


def check_exact_optima() -> CheckResult:
    expected = {(4, 3): (6, 2, 2), (3, 2): (4, 2, 2), (6, 3): (12, 2, 4)}
    problems = []
    for (n, m), obj in expected.items():
        r = solve_exhaustive(n, m)
        if r.objective != obj or r.certificate is not Certificate.EXHAUSTIVE_OPTIMAL:
            problems.append((n, m, r.objective))
    for n, m in [(6, 3), (6, 4)]:
        if solve_biregular(n, m).objective != solve_exhaustive(n, m).objective:
            problems.append(("agree", n, m))
    return CheckResult(
        "exact optima", not problems,
        f"exhaustive (4,3)->(6,2,2), (3,2)->(4,2,2), (6,3)->(12,2,4); biregular agrees at (6,3), (6,4); problems {problems}",
    )


def _drop_last_edge(n: int, m: int) -> BipartiteGraph:
    G = construct_conjecture(n, m)
    i, j = max(G.edges())
    return G.remove_edge(i, j)


def check_conjecture(n_max: int = 18) -> CheckResult:
    report = conjecture_scan(n_max)
    # the harness must be able to surface a counterexample with its witness
    broken = conjecture_scan(6, builder=_drop_last_edge)
    reported = bool(broken.counterexamples) and all(
        e.witness is not None and hall_deficient(_drop_last_edge(e.n, e.m), e.witness.B)
        for e in broken.counterexamples
    )
    return CheckResult(
        "conjecture harness", not report.counterexamples and bool(report.entries) and reported,
        f"{len(report.entries)} irregular (n, m) with n<={n_max}, counterexamples "
        f"{[(e.n, e.m) for e in report.counterexamples]}; harness reports a planted failure: {reported}",
    )


def check_monotonicity(n_max: int = 12) -> CheckResult:
    corpus = [G for _, G in tilde_corpus(n_max) if is_k_critical_deficiency(G).is_k_critical]
    bad = 0
    additions = 0
    for G in corpus:
        for i in range(G.n):
            for j in range(G.m):
                if not G.has_edge(i, j):
                    additions += 1
                    if not is_k_critical_deficiency(G.add_edge(i, j)).is_k_critical:
                        bad += 1
    return CheckResult(
        "monotonicity", bad == 0 and bool(corpus),
        f"{len(corpus)} k-critical graphs, {additions} single-edge additions, {bad} broke criticality",
    )


ACCEPTANCE: list[tuple[str, Callable[[], CheckResult]]] = [
    ("1", check_positive_construction),
    ("2", check_negative_characterization),
    ("3", check_block_construction),
    ("4", check_counting_identities),
    ("5", check_parameter_enumeration),
    ("6", check_tilde_agreement),
    ("7", check_exact_optima),
    ("8", check_conjecture),
    ("9", check_monotonicity),
]


def run_all() -> list[CheckResult]:
    return [fn() for _, fn in ACCEPTANCE]
