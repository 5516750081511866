"""Submodule classification: prime, 1-absorbing prime, 2-absorbing.

Definitions, for a proper submodule N of an R-module M:

  prime         rm in N  =>  m in N or rM <= N            (all r, m)
  1-absorbing   abm in N =>  ab in (N:M) or m in N        (non-unit a, b; all m)
  2-absorbing   abm in N =>  ab in (N:M) or am in N or bm in N   (all a, b, m)

Quantifier scans run in the canonical scalar order (non-units first, then
units, by index) and module-element index order, and stop at the first
violation, so witnesses are byte-reproducible.  Over Z-scalars the scans
range over residues mod the module exponent: every residue class contains
non-unit integers, so a residue violation always lifts to a genuine one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError
from .lattices import IntegerLattice
from .modules import (
    Module,
    Submodule,
    cyclic_submodule,
    enumerate_submodules,
    residue,
    submodules_scan_order,
)
from .rings import Ideal, enumerate_ideals


@dataclass(frozen=True)
class SubmoduleVerdict:
    prime: bool
    prime_witness: Optional[tuple]          # (r, m)
    one_absorbing: bool
    one_absorbing_witness: Optional[tuple]  # (a, b, m)
    two_absorbing: bool
    two_absorbing_witness: Optional[tuple]  # (a, b, m)
    proper: bool = True


def classify_submodule(module: Module, sub: Submodule) -> SubmoduleVerdict:
    """Exhaustively decide all three classes, with first-found witnesses."""
    if not sub.is_proper():
        raise DomainError("classification requires a proper submodule")
    cached = module._verdicts.get(sub.key)
    if cached is not None:
        return cached

    scalars = module.scalars()
    res = residue(sub, module)
    member = sub.contains

    prime_witness = None
    for r in scalars:
        r_ok = None  # lazily computed: rM <= N
        for m in module.elements():
            if member(module.act(r, m)) and not member(m):
                if r_ok is None:
                    r_ok = all(member(module.act(r, x)) for x in module.elements())
                if not r_ok:
                    prime_witness = (r, m)
                    break
        if prime_witness:
            break

    nonunit_scan = scalars if module.ring.is_integers else [
        a for a in scalars if not module.scalar_is_unit(a)
    ]
    one_witness = None
    for a, b in itertools.product(nonunit_scan, repeat=2):
        ab = module.scalar_mul(a, b)
        if res.contains(ab):
            continue
        for m in module.elements():
            if member(module.act(ab, m)) and not member(m):
                one_witness = (a, b, m)
                break
        if one_witness:
            break

    two_witness = None
    for a, b in itertools.product(scalars, repeat=2):
        ab = module.scalar_mul(a, b)
        if res.contains(ab):
            continue
        for m in module.elements():
            if (
                member(module.act(ab, m))
                and not member(module.act(a, m))
                and not member(module.act(b, m))
            ):
                two_witness = (a, b, m)
                break
        if two_witness:
            break

    verdict = SubmoduleVerdict(
        prime=prime_witness is None,
        prime_witness=prime_witness,
        one_absorbing=one_witness is None,
        one_absorbing_witness=one_witness,
        two_absorbing=two_witness is None,
        two_absorbing_witness=two_witness,
    )
    module._verdicts[sub.key] = verdict
    return verdict


# ---------------------------------------------------------------------------
# Ideal-form characterization of 1-absorbing primeness
# ---------------------------------------------------------------------------

def _ideal_generator_residues(module: Module) -> list:
    """Residue generators standing in for all proper ideals of Z.

    Every proper ideal (g') of Z hits some residue class mod the exponent,
    and every class contains a proper generator (the class of 1 via n+1), so
    scanning residues 0..n-1 is a complete quantification.
    """
    return list(range(module.exponent))


def one_absorbing_via_ideals(module: Module, sub: Submodule):
    """Theorem-form check: IJK <= N forces IJ <= (N:M) or K <= N.

    Returns (flag, witness); the witness is the principal lift ((a),(b),<m>)
    of the elementwise witness, which always re-violates the ideal form.
    """
    if not sub.is_proper():
        raise DomainError("classification requires a proper submodule")
    res = residue(sub, module)
    proper_subs = [k for k in submodules_scan_order(module) if k.is_proper()]

    violated = False
    if module.ring.is_integers:
        n = module.exponent
        gens = _ideal_generator_residues(module)
        for gi, gj in itertools.product(gens, repeat=2):
            prod = (gi * gj) % n
            if res.contains(prod):
                continue
            for k in proper_subs:
                if k.issubset(sub):
                    continue
                if all(module.act(prod, x) in sub.elements for x in k.elements):
                    violated = True
                    break
            if violated:
                break
    else:
        ring = module.ring
        proper_ideals = [i for i in enumerate_ideals(ring) if i.is_proper()]
        for I, J in itertools.product(proper_ideals, repeat=2):
            prod_set = I.product_set(J)
            if all(res.contains(p) for p in prod_set):
                continue
            for k in proper_subs:
                if k.issubset(sub):
                    continue
                if all(
                    module.act(p, x) in sub.elements
                    for p in prod_set
                    for x in k.elements
                ):
                    violated = True
                    break
            if violated:
                break

    if not violated:
        return True, None
    verdict = classify_submodule(module, sub)
    a, b, m = verdict.one_absorbing_witness
    witness = (
        _principal_scalar_ideal(module, a),
        _principal_scalar_ideal(module, b),
        cyclic_submodule(module, m),
    )
    return False, witness


def _principal_scalar_ideal(module: Module, a: int) -> Ideal:
    if module.ring.is_integers:
        return Ideal(module.ring, generator=_nonunit_lift(module, a))
    ring = module.ring
    elems = {ring.mul(r, a) for r in ring.elements()}
    return Ideal(ring, elems)


def _nonunit_lift(module: Module, a: int) -> int:
    """Smallest nonnegative non-unit integer in the residue class of a."""
    if a == 1:
        return module.exponent + 1
    return a


# ---------------------------------------------------------------------------
# Single-witness evaluation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WitnessReport:
    a: int
    b: int
    m: object
    a_nonunit: bool
    b_nonunit: bool
    abm_in_n: bool
    ab_in_residue: bool
    m_in_n: bool
    residue_name: str
    refutes: bool


def check_witness(target, a: int, b: int, m, strict: bool = True) -> WitnessReport:
    """Evaluate the three 1-absorbing clauses for a concrete triple (a, b, m).

    `target` is a Submodule of a finite module or an IntegerLattice.  a and b
    are honest integers for Z-scalars / lattices, or ring indices for finite
    scalar rings.  The triple refutes 1-absorbing-primeness iff both scalars
    are non-units, abm lies in N, and neither ab in (N:M) nor m in N holds.
    """
    if isinstance(target, IntegerLattice):
        a_nonunit = a not in (1, -1)
        b_nonunit = b not in (1, -1)
        if strict and not (a_nonunit and b_nonunit):
            raise DomainError("witness scalars must be non-units")
        vec = tuple(int(x) for x in m)
        ab = a * b
        abm_in = target.member(tuple(ab * x for x in vec))
        d = target.residue_of_ambient()
        ab_in = ab == 0 if d == 0 else ab % d == 0
        m_in = target.member(vec)
        return WitnessReport(
            a=a,
            b=b,
            m=vec,
            a_nonunit=a_nonunit,
            b_nonunit=b_nonunit,
            abm_in_n=abm_in,
            ab_in_residue=ab_in,
            m_in_n=m_in,
            residue_name=f"({d})",
            refutes=a_nonunit and b_nonunit and abm_in and not ab_in and not m_in,
        )

    sub = target
    module = sub.module
    if module.ring.is_integers:
        a_nonunit = a not in (1, -1)
        b_nonunit = b not in (1, -1)
    else:
        a_nonunit = not module.ring.is_unit(a)
        b_nonunit = not module.ring.is_unit(b)
    if strict and not (a_nonunit and b_nonunit):
        raise DomainError("witness scalars must be non-units")
    res = residue(sub, module)
    ab = module.scalar_mul(a, b)
    abm_in = sub.contains(module.act(ab, m))
    ab_in = res.contains(ab)
    m_in = sub.contains(m)
    return WitnessReport(
        a=a,
        b=b,
        m=m,
        a_nonunit=a_nonunit,
        b_nonunit=b_nonunit,
        abm_in_n=abm_in,
        ab_in_residue=ab_in,
        m_in_n=m_in,
        residue_name=res.name(),
        refutes=a_nonunit and b_nonunit and abm_in and not ab_in and not m_in,
    )
