"""Integer lattices in Z^k: exact membership via row-style Hermite normal form.

Supports exactly what infinite-module witness checks need: membership of a
vector in the span of the generators, and the residue of the ambient module
(N : Z^k), which is zero unless the lattice has full rank.  All arithmetic
is exact (Python ints and fractions).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError


def _hermite_rows(generators, ambient: int):
    """Row-style Hermite basis: echelon over Z, positive pivots, reduced above."""
    pivot_row = {}
    for gen in generators:
        vec = list(gen)
        j = 0
        while j < ambient:
            if vec[j] == 0:
                j += 1
                continue
            row = pivot_row.get(j)
            if row is None:
                pivot_row[j] = vec
                break
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                vec = [v - q * r for v, r in zip(vec, row)]
            elif a % b == 0:
                row[:], vec = vec, list(row)
                q = vec[j] // row[j]
                vec = [v - q * r for v, r in zip(vec, row)]
            else:
                g = math.gcd(a, b)
                x, y = _bezout(a, b)
                combined = [x * r + y * v for r, v in zip(row, vec)]
                reduced = [(-(b // g)) * r + (a // g) * v for r, v in zip(row, vec)]
                row[:] = combined
                vec = reduced
            # vec[j] is now 0; keep scanning later columns
            j += 1
    rows = [pivot_row[j] for j in sorted(pivot_row)]
    for row in rows:
        j = next(i for i, x in enumerate(row) if x != 0)
        if row[j] < 0:
            row[:] = [-x for x in row]
    for idx in range(len(rows) - 1, -1, -1):
        j = next(i for i, x in enumerate(rows[idx]) if x != 0)
        p = rows[idx][j]
        for above in rows[:idx]:
            q = above[j] // p
            if q:
                above[:] = [a - q * b for a, b in zip(above, rows[idx])]
    return [tuple(r) for r in rows]


def _bezout(a: int, b: int):
    """x, y with x*a + y*b = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return x0, y0


class IntegerLattice:
    """Span of integer vectors in Z^k with cached Hermite basis."""

    def __init__(self, ambient_rank: int, generators):
        if ambient_rank < 1:
            raise DomainError("ambient rank must be >= 1")
        self.ambient_rank = ambient_rank
        gens = [tuple(int(x) for x in g) for g in generators]
        for g in gens:
            if len(g) != ambient_rank:
                raise DomainError(f"generator {g} has wrong dimension (want {ambient_rank})")
        self.generators = tuple(gens)
        self.hnf = tuple(_hermite_rows(gens, ambient_rank))

    @property
    def rank(self) -> int:
        return len(self.hnf)

    def member(self, vec) -> bool:
        """True iff vec is an integer combination of the generators."""
        vec = [int(x) for x in vec]
        if len(vec) != self.ambient_rank:
            raise DomainError(f"vector {tuple(vec)} has wrong dimension (want {self.ambient_rank})")
        for row in self.hnf:
            j = next(i for i, x in enumerate(row) if x != 0)
            if vec[j] != 0:
                if vec[j] % row[j] != 0:
                    return False
                q = vec[j] // row[j]
                vec = [v - q * r for v, r in zip(vec, row)]
        return not any(vec)

    def residue_of_ambient(self) -> int:
        """Generator d >= 0 of (N : Z^k) = { r | r*Z^k <= N }; 0 unless full rank."""
        if self.rank < self.ambient_rank:
            return 0
        d = 1
        for i in range(self.ambient_rank):
            unit = [0] * self.ambient_rank
            unit[i] = 1
            d = math.lcm(d, self._min_multiplier(unit))
        return d

    def _min_multiplier(self, vec) -> int:
        """Smallest t > 0 with t*vec in the lattice (full rank assumed)."""
        # solve x * hnf = vec over Q; t = lcm of coordinate denominators
        coords = _solve_rational(self.hnf, vec)
        t = 1
        for c in coords:
            t = math.lcm(t, c.denominator)
        return t

    def name(self) -> str:
        return "span{" + ", ".join("(" + ",".join(map(str, g)) + ")" for g in self.generators) + "}"


def _solve_rational(rows, target):
    """Coefficients x with sum x_i * rows_i = target; rows are echelon, full rank."""
    vec = [Fraction(x) for x in target]
    coords = []
    for row in rows:
        j = next(i for i, x in enumerate(row) if x != 0)
        c = vec[j] / row[j]
        coords.append(c)
        vec = [v - c * r for v, r in zip(vec, row)]
    if any(vec):
        raise DomainError("vector outside the rational span")
    return coords
