"""
Parameter model for (a, b)-regular bipartite graphs of order (n, m) with
b = n - m + 1, and the enumerations that complete a quadruple (n, m, a, b)
from any one of its parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .errors import InvalidParams, NotBiregular
from .numth import divisor_pairs, unit_bezout_positive


@dataclass(frozen=True, order=True)
class ParamSet:
    """Full parameter tuple. Construct through :func:`derive_params`.

    ``c = gcd(n, m)``, ``d = gcd(a, b)``, ``n = x*c``, ``m = y*c``,
    ``a = y*d``, ``b = x*d`` and ``p = c - d``. Every identity is checked
    on construction.
    """

    n: int
    m: int
    k: int
    a: int
    b: int
    c: int
    d: int
    x: int
    y: int
    p: int

    def __post_init__(self) -> None:
        n, m, k, a, b, c, d, x, y, p = (
            self.n, self.m, self.k, self.a, self.b, self.c, self.d, self.x, self.y, self.p,
        )
        checks = [
            1 < m < n,
            k == n - m,
            b == n - m + 1,
            a * n == b * m,
            c == gcd(n, m),
            d == gcd(a, b),
            n == x * c and m == y * c,
            a == y * d and b == x * d,
            gcd(x, y) == 1,
            d * x == c * (x - y) + 1,
            p == c - d,
            p * x == m - 1 and p * (x - y) == a - 1 and p * y == m - a,
            p > 0 and c > d > 0 and c > p and x > y > 0,
            n > m > 2 and b > a > 1,
            n - x >= b and m - y >= a,
            n - c >= m >= c and b - d >= a >= d,
            d * x - c * (x - y) == 1,
            gcd(c, d) == 1 and gcd(c, x) == 1 and gcd(x, x - y) == 1,
        ]
        if not all(checks):
            raise InvalidParams(f"inconsistent parameter set {self}")

    @property
    def key(self) -> tuple[int, int]:
        return (self.n, self.m)

    def as_dict(self) -> dict[str, int]:
        return {f: getattr(self, f) for f in ("n", "m", "k", "a", "b", "c", "d", "x", "y", "p")}


def is_admissible(n: int, m: int) -> bool:
    """True iff ``1 < m < n`` and ``m*(n-m+1)/n`` is an integer."""
    return 1 < m < n and (m * (n - m + 1)) % n == 0


def derive_params(n: int, m: int) -> ParamSet:
    if not 1 < m < n:
        raise InvalidParams(f"need n > m > 1, got n={n}, m={m}")
    b = n - m + 1
    a, rem = divmod(m * b, n)
    if rem:
        raise NotBiregular(f"m(n-m+1)/n = {m * b}/{n} is not an integer")
    c = gcd(n, m)
    d = gcd(a, b)
    return ParamSet(n=n, m=m, k=n - m, a=a, b=b, c=c, d=d, x=n // c, y=m // c, p=c - d)


def _from_recipe(n: int, m: int, **expected: int) -> ParamSet:
    ps = derive_params(n, m)
    for name, value in expected.items():
        if getattr(ps, name) != value:
            raise AssertionError(f"recipe gave {name}={value} but derive_params({n}, {m}) has {getattr(ps, name)}")
    return ps


def _dedup(items: Iterable[ParamSet]) -> list[ParamSet]:
    # pass dedup=False to an enumerator to see factorization multiplicities
    seen: dict[tuple[int, int], ParamSet] = {}
    for ps in items:
        seen.setdefault(ps.key, ps)
    return sorted(seen.values())


def _least_positive(alpha: int, beta: int) -> tuple[int, int]:
    # alpha*phi - beta*psi = 1 with both phi, psi > 0
    phi, psi = unit_bezout_positive(alpha, beta)
    if psi == 0:
        phi, psi = phi + beta, psi + alpha
    return phi, psi


def enumerate_from_xy(x: int, y: int, l_max: int) -> list[ParamSet]:
    """Parameter sets for the family ``(c, d) = (c0 + l*x, d0 + l*(x-y))``, ``l = 0..l_max``.

    ``(d0, c0)`` is the least positive solution of ``d*x - c*(x-y) = 1``.
    Members with ``m <= 1`` are dropped.
    """
    if not 0 < y < x or gcd(x, y) != 1:
        raise InvalidParams(f"need 0 < y < x with gcd(x, y) = 1, got x={x}, y={y}")
    if l_max < 0:
        raise InvalidParams("l_max must be nonnegative")
    d0, c0 = _least_positive(x, x - y)
    out = []
    for l in range(l_max + 1):
        c, d = c0 + l * x, d0 + l * (x - y)
        if y * c <= 1:
            continue
        out.append(_from_recipe(x * c, y * c, c=c, d=d, x=x, y=y))
    return out


def enumerate_from_cd(c: int, d: int, l_max: int) -> list[ParamSet]:
    """Parameter sets for ``(x, z) = (x0 + l*c, z0 + l*d)``, ``y = x - z``, ``l = 0..l_max``.

    ``(x0, z0)`` is the least solution of ``d*x - c*z = 1`` with both
    components positive.
    """
    if not 0 < d < c or gcd(c, d) != 1:
        raise InvalidParams(f"need 0 < d < c with gcd(c, d) = 1, got c={c}, d={d}")
    if l_max < 0:
        raise InvalidParams("l_max must be nonnegative")
    x0, z0 = _least_positive(d, c)
    out = []
    for l in range(l_max + 1):
        x, z = x0 + l * c, z0 + l * d
        y = x - z
        out.append(_from_recipe(x * c, y * c, c=c, d=d, x=x, y=y))
    return out


def enumerate_from_m(m: int, *, dedup: bool = True) -> list[ParamSet]:
    """All admissible ``n`` for a given ``m``, via ``m = c*y`` and ``m-1 = p*x``."""
    if m < 3:
        raise InvalidParams(f"need m >= 3, got {m}")
    found = []
    for c, y in divisor_pairs(m):
        if c < 2:
            continue
        for p, x in divisor_pairs(m - 1):
            if c > p and x > y:
                found.append(_from_recipe(c * x, m, c=c, d=c - p, x=x, y=y, p=p))
    return _dedup(found) if dedup else found


def enumerate_from_a(a: int, *, dedup: bool = True) -> list[ParamSet]:
    """All admissible ``(n, m)`` with U-degree ``a``, via ``a = d*y`` and ``a-1 = p*z``."""
    if a < 2:
        raise InvalidParams(f"need a >= 2, got {a}")
    found = []
    for d, y in divisor_pairs(a):
        for p, z in divisor_pairs(a - 1):
            x = z + y
            c = d + p
            found.append(_from_recipe(c * x, c * y, a=a, c=c, d=d, x=x, y=y))
    return _dedup(found) if dedup else found


def enumerate_from_b(b: int, *, dedup: bool = True) -> list[ParamSet]:
    """All admissible ``(n, m)`` with V-degree ``b``, via ``b = d*x`` and ``b-1 = c*z``."""
    if b < 3:
        raise InvalidParams(f"need b >= 3, got {b}")
    found = []
    for d, x in divisor_pairs(b):
        if x < 2:
            continue
        for c, z in divisor_pairs(b - 1):
            if c > d and z < x:
                y = x - z
                found.append(_from_recipe(c * x, c * y, b=b, c=c, d=d, x=x, y=y))
    return _dedup(found) if dedup else found


def enumerate_from_n(n: int, *, dedup: bool = True) -> list[ParamSet]:
    """The unique ``m`` for each coprime factorization ``n = c*x`` with ``c, x >= 2``.

    ``(d, z)`` is the least positive solution of ``d*x - z*c = 1`` and
    ``y = x - z``. Factorizations with ``gcd(c, x) > 1`` admit no solution
    and are skipped.
    """
    if n < 4 or all(not (2 <= c <= n // 2) for c, _ in divisor_pairs(n)):
        raise InvalidParams(f"n={n} must be composite and >= 4")
    found = []
    for c, x in divisor_pairs(n):
        if c < 2 or x < 2 or gcd(c, x) != 1:
            continue
        d, z = unit_bezout_positive(x, c)
        y = x - z
        found.append(_from_recipe(n, c * y, c=c, d=d, x=x, y=y))
    return _dedup(found) if dedup else found


ENUMERATORS = {
    "m": enumerate_from_m,
    "a": enumerate_from_a,
    "b": enumerate_from_b,
    "n": enumerate_from_n,
}


def n_existence_1_audit(n_max: int) -> list[dict[str, int | bool]]:
    """Audit the factorization recipe ``n = c*x``, ``n+1 = y*z``, ``z >= c+1``, ``d = z-c``.

    For every candidate it records whether ``b = d*x`` equals ``n - m + 1``
    with ``m = c*y``. Substituting the recipe gives
    ``c*(x-y)**2 = y - x`` for the identity to hold, which is negative for
    every ``x > y``, so the recipe does not produce admissible parameters.
    """
    rows: list[dict[str, int | bool]] = []
    for n in range(4, n_max + 1):
        for c, x in divisor_pairs(n):
            if c < 2 or x < 2:
                continue
            for y, z in divisor_pairs(n + 1):
                if z < c + 1:
                    continue
                d = z - c
                m = c * y
                b = d * x
                rows.append({
                    "n": n, "c": c, "x": x, "y": y, "z": z, "d": d, "m": m, "b": b,
                    "holds": b == n - m + 1,
                })
    return rows
