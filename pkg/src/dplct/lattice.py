"""The Picard lattice of the plane blown up in ``n`` points.

A class ``d*L - sum(m_i * E_i)`` is stored as the integer vector
``(d; m_1, ..., m_n)``; the form is ``diag(+1, -1, ..., -1)`` and the
canonical class is ``-3L + sum(E_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


@dataclass(frozen=True, order=True)
class DivisorClass:
    n: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.n + 1:
            raise ValueError(f"class on {self.n} points needs {self.n + 1} coordinates")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def d(self) -> int:
        return self.coords[0]

    @property
    def m(self) -> tuple[int, ...]:
        return self.coords[1:]

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _check_same(self, other)
        return DivisorClass(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.n, tuple(-a for a in self.coords))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(self.n, tuple(k * a for a in self.coords))

    def __str__(self) -> str:
        terms = [(self.d, "L")] + [(-mi, f"E{i + 1}") for i, mi in enumerate(self.m)]
        out = ""
        for c, name in terms:
            if not c:
                continue
            sign = "-" if c < 0 else ("+" if out else "")
            mag = "" if abs(c) == 1 else str(abs(c))
            out += f"{sign}{mag}{name}"
        return out or "0"


def _check_same(a: DivisorClass, b: DivisorClass) -> None:
    if a.n != b.n:
        raise ValueError(f"classes live on different lattices (n={a.n} vs n={b.n})")


@dataclass(frozen=True)
class Lattice:
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= 8:
            raise ValueError("number of blown-up points must be in 0..8")

    @property
    def degree(self) -> int:
        return 9 - self.n

    def line(self) -> DivisorClass:
        return DivisorClass(self.n, (1,) + (0,) * self.n)

    def exceptional(self, i: int) -> DivisorClass:
        """``E_i`` with ``i`` counted from 1."""
        if not 1 <= i <= self.n:
            raise ValueError(f"no exceptional curve E{i} on {self.n} points")
        m = [0] * self.n
        m[i - 1] = -1
        return DivisorClass(self.n, (0, *m))

    def canonical(self) -> DivisorClass:
        return DivisorClass(self.n, (-3,) + (-1,) * self.n)

    def cls(self, d: int, *m: int) -> DivisorClass:
        return DivisorClass(self.n, (d, *m))


def intersect(a: DivisorClass, b: DivisorClass) -> int:
    _check_same(a, b)
    return a.d * b.d - sum(x * y for x, y in zip(a.m, b.m))


def _solutions(n: int, square_sum: int, linear_sum: int, lo: int = -10**9):
    """Integer vectors of length n with given sum of squares and sum, entries >= lo."""
    if n == 0:
        if square_sum == 0 and linear_sum == 0:
            yield ()
        return
    if square_sum < 0 or linear_sum * linear_sum > n * square_sum:
        return
    bound = isqrt(square_sum)
    for first in range(max(-bound, lo), bound + 1):
        for rest in _solutions(n - 1, square_sum - first * first, linear_sum - first, lo):
            yield (first, *rest)


def _classes(lat: Lattice, self_int: int, k_int: int) -> list[DivisorClass]:
    """All D with D^2 = self_int and D.K = k_int, by bounded exhaustion.

    D.K = -3d + sum(m) and D^2 = d^2 - sum(m^2), so for each d the m-vector
    has prescribed sum and sum of squares; Cauchy-Schwarz prunes the search.
    """
    n = lat.n
    out = []
    bound = 3 * (n + 2)
    for d in range(-bound, bound + 1):
        sq = d * d - self_int
        lin = k_int + 3 * d
        if n == 0:
            if sq == 0 and lin == 0:
                out.append(DivisorClass(0, (d,)))
            continue
        for m in _solutions(n, sq, lin):
            out.append(DivisorClass(n, (d, *m)))
    return sorted(out)


def minus_one_classes(lat: Lattice) -> list[DivisorClass]:
    """Classes with D^2 = -1 and D.K = -1 (the lines of the surface)."""
    return _classes(lat, -1, -1)


def _is_positive(c: DivisorClass) -> bool:
    if c.d:
        return c.d > 0
    first = next(mi for mi in c.m if mi)
    return first < 0


def minus_two_classes(lat: Lattice, up_to_sign: bool = True) -> list[DivisorClass]:
    """Roots: D^2 = -2, D.K = 0.

    By default one representative per pair ``±D`` is returned, the one with
    ``d > 0`` or, for ``d = 0``, of the form ``E_i - E_j`` with ``i < j``.
    """
    roots = _classes(lat, -2, 0)
    if not up_to_sign:
        return roots
    return [r for r in roots if _is_positive(r)]
