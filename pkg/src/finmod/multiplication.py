"""Multiplication-module decisions, two independent ways.

Direct route: M is a multiplication module iff N = (N:M)M for every
submodule N.  Characterization route: iff for every maximal ideal Q the
module is Q-torsion (T_Q(M) = M) or Q-cyclic (some q in Q, m in M with
(1-q)M <= Rm).  Over Z-scalars only primes dividing the module exponent n
are examined: for p not dividing n some multiple q of p satisfies q = 1
mod n, so (1-q)M = 0 and M is automatically (p)-torsion.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError
from .modules import (
    Module,
    Submodule,
    cyclic_submodule,
    enumerate_submodules,
    is_faithful,
    residue,
    span,
    submodules_scan_order,
)
from .rings import Ideal, maximal_spectrum

__all__ = [
    "MultReport",
    "is_faithful",
    "is_multiplication",
    "is_multiplication_smith",
    "torsion_submodule",
    "q_cyclic_certificate",
]


@dataclass(frozen=True)
class QStatus:
    ideal: Ideal
    torsion: bool
    cyclic: bool
    certificate: Optional[tuple]  # (q, m) when cyclic


@dataclass(frozen=True)
class MultReport:
    direct: bool
    failing_submodule: Optional[Submodule]
    per_maximal: tuple  # QStatus per examined maximal ideal
    smith: bool


def ideal_times_module(module: Module, ideal: Ideal) -> Submodule:
    """IM: the submodule generated by all products i*m."""
    if module.ring.is_integers:
        g = ideal.generator
        return Submodule(module, {module.act(g, m) for m in module.elements()})
    products = {
        module.act(i, m)
        for i in ideal.elements
        for m in module.elements()
    }
    return span(module, sorted(products))


def is_multiplication(module: Module):
    """(flag, first failing submodule) for the direct N = (N:M)M test."""
    for sub in submodules_scan_order(module):
        if ideal_times_module(module, residue(sub, module)).elements != sub.elements:
            return False, sub
    return True, None


def _maximal_ideals(module: Module):
    """Maximal ideals to examine; over Z, (p) for primes p dividing the exponent."""
    if module.ring.is_integers:
        n = module.exponent
        primes = [p for p in range(2, n + 1) if n % p == 0 and _is_prime(p)]
        return [Ideal(module.ring, generator=p) for p in primes]
    return maximal_spectrum(module.ring)[0]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(math.isqrt(p)) + 1))


def _require_maximal(module: Module, ideal: Ideal) -> None:
    if module.ring.is_integers:
        g = ideal.generator
        if not _is_prime(g) or module.exponent % g != 0:
            raise DomainError("Q must be (p) for a prime p dividing the exponent")
    else:
        if ideal not in maximal_spectrum(module.ring)[0]:
            raise DomainError("Q must be a maximal ideal")


def _ideal_scalars(module: Module, ideal: Ideal) -> list:
    """The scalars of Q that the (1-q) scans range over, canonically ordered."""
    if module.ring.is_integers:
        n = module.exponent
        g = ideal.generator
        return sorted({(g * t) % n for t in range(n)})
    return sorted(ideal.elements)


def _one_minus(module: Module, q: int) -> int:
    if module.ring.is_integers:
        return 1 - q
    ring = module.ring
    return ring.add(ring.one, ring.neg(q))


def torsion_submodule(module: Module, ideal: Ideal) -> Submodule:
    """T_Q(M) = { m | some q in Q kills m via (1-q)m = 0 }."""
    _require_maximal(module, ideal)
    qs = _ideal_scalars(module, ideal)
    members = set()
    for m in module.elements():
        for q in qs:
            if module.act(_one_minus(module, q), m) == module.zero:
                members.add(m)
                break
    out = Submodule(module, members)
    closure = span(module, sorted(members))
    if closure.elements != out.elements:
        raise DomainError("torsion set failed the submodule closure check")
    return out


def q_cyclic_certificate(module: Module, ideal: Ideal):
    """(flag, (q, m)) for: some q in Q and m with (1-q)M <= Rm."""
    _require_maximal(module, ideal)
    qs = _ideal_scalars(module, ideal)
    for q in qs:
        one_minus_q = _one_minus(module, q)
        image = {module.act(one_minus_q, m) for m in module.elements()}
        for m in module.elements():
            if image <= cyclic_submodule(module, m).elements:
                return True, (q, m)
    return False, None


def is_multiplication_smith(module: Module) -> MultReport:
    """Full report: direct test plus the per-maximal-ideal characterization."""
    direct, failing = is_multiplication(module)
    statuses = []
    for q_ideal in _maximal_ideals(module):
        torsion = torsion_submodule(module, q_ideal).elements == frozenset(
            module.elements()
        )
        if torsion:
            statuses.append(QStatus(q_ideal, True, False, None))
            continue
        cyclic, cert = q_cyclic_certificate(module, q_ideal)
        statuses.append(QStatus(q_ideal, False, cyclic, cert))
    smith = all(s.torsion or s.cyclic for s in statuses)
    return MultReport(
        direct=direct,
        failing_submodule=failing,
        per_maximal=tuple(statuses),
        smith=smith,
    )
