"""Radicals over the submodule lattice: rad, rad1, and minimal members of Omega.

Omega(N) is the set of 1-absorbing prime submodules containing N.  rad1(N)
is the intersection of Omega(N), with the convention rad1(N) = M when Omega
is empty or N = M; rad(N) is the same construction over prime submodules.
Both reuse one classification pass over the lattice, cached per module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import classify_submodule
from .errors import DomainError
from .modules import Module, Submodule, enumerate_submodules


@dataclass(frozen=True)
class RadicalReport:
    input: Submodule
    omega: tuple      # 1-absorbing primes containing the input, canonical order
    result: Submodule


def one_absorbing_primes(module: Module) -> list:
    """All 1-absorbing prime submodules, in canonical (cardinality, lex) order."""
    return [
        s
        for s in enumerate_submodules(module)
        if s.is_proper() and classify_submodule(module, s).one_absorbing
    ]


def prime_submodules(module: Module) -> list:
    return [
        s
        for s in enumerate_submodules(module)
        if s.is_proper() and classify_submodule(module, s).prime
    ]


def _whole(module: Module) -> Submodule:
    return Submodule(module, set(module.elements()))


def _intersect_all(module: Module, subs) -> Submodule:
    subs = list(subs)
    if not subs:
        return _whole(module)
    out = subs[0]
    for s in subs[1:]:
        out = out.intersect(s)
    return out


def rad_submodule(module: Module, sub: Submodule) -> Submodule:
    """Intersection of the prime submodules containing N; M when none exists."""
    if not sub.is_proper():
        return _whole(module)
    return _intersect_all(
        module, (p for p in prime_submodules(module) if sub.issubset(p))
    )


def rad1_submodule(module: Module, sub: Submodule) -> RadicalReport:
    """rad1(N) together with the Omega it was intersected from."""
    if not sub.is_proper():
        return RadicalReport(input=sub, omega=(), result=_whole(module))
    omega = tuple(p for p in one_absorbing_primes(module) if sub.issubset(p))
    return RadicalReport(input=sub, omega=omega, result=_intersect_all(module, omega))


def minimal_one_absorbing_over(module: Module, sub: Submodule) -> list:
    """Inclusion-minimal members of Omega(N), pairwise incomparable."""
    if not sub.is_proper():
        raise DomainError("minimal 1-absorbing primes require a proper submodule")
    omega = [p for p in one_absorbing_primes(module) if sub.issubset(p)]
    minimal = [
        p for p in omega if not any(q is not p and q.issubset(p) for q in omega)
    ]
    return minimal
