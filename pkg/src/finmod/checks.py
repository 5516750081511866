"""Registry of exhaustively verifiable statements and the suite runner.

Every check quantifies a statement about finite rings/modules over one
instance and either passes, fails with a replayable counterexample, or is
skipped because the instance does not satisfy the statement's hypotheses
(the reason is always recorded).  A failure means an implementation bug:
the statements are theorems.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .classify import (
    check_witness,
    classify_submodule,
    one_absorbing_via_ideals,
)
from .errors import CapExceededError, DomainError, FinmodError
from .lattices import IntegerLattice
from .modules import (
    Module,
    ModuleSpec,
    Submodule,
    SubmoduleModule,
    annihilator,
    build_module,
    enumerate_submodules,
    is_faithful,
    pull_submodule,
    push_submodule,
    quotient_module,
    residue,
    residue_elt,
    restrict_to_quotient_ring,
    submodules_scan_order,
)
from .multiplication import ideal_times_module, is_multiplication_smith
from .radicals import (
    minimal_one_absorbing_over,
    one_absorbing_primes,
    prime_submodules,
    rad1_submodule,
    rad_submodule,
)
from .rings import (
    Ideal,
    RingSpec,
    build_ring,
    classify_ideal,
    enumerate_ideals,
    good_unit_property,
    is_quasilocal,
    maximal_spectrum,
    quotient_ring,
    rad1_ideal,
    radical_ideal,
    units_lift,
)

CHECK_IDS = {
    "CHAIN": "prime => 1-absorbing prime => 2-absorbing, for every proper submodule",
    "LOCAL_M2": "quasilocal scalar ring with square-zero maximal ideal: every proper submodule is 1-absorbing prime",
    "RES_1ABS": "N 1-absorbing prime: (N:M) and every (N:m), m outside N, are 1-absorbing prime ideals",
    "ABK": "N 1-absorbing prime: abK <= N forces ab in (N:M) or K <= N (non-unit a,b; proper K)",
    "IJK_EQ": "elementwise and ideal-form 1-absorbing tests agree on every proper submodule",
    "QUASI": "a 1-absorbing-prime-but-not-prime submodule forces a quasilocal scalar ring",
    "QUASI_EQ": "over a non-quasilocal ring the 1-absorbing prime and prime submodules coincide",
    "CHAIN_LATTICE": "chains of 1-absorbing primes: intersection and union stay 1-absorbing prime",
    "HOM_PULL": "preimages of 1-absorbing primes under quotient/inclusion maps stay 1-absorbing prime",
    "HOM_PUSH": "images of 1-absorbing primes containing the kernel stay 1-absorbing prime",
    "QUOT": "N 1-absorbing prime and K < N: N/K is 1-absorbing prime in M/K",
    "MINIMAL": "every member of Omega(N) contains a minimal member; minima are incomparable and exist",
    "RAD1_LAWS": "the rad1 inclusion laws, including rad1(N) <= rad(N)",
    "RAD1_FG": "rad1(N) = M if and only if N = M",
    "RAD1_SUM": "N + L = M if and only if rad1(N) + rad1(L) = M",
    "MULT_EQ": "direct multiplication-module test agrees with the torsion/cyclic characterization",
    "MAIN": "faithful multiplication M, 1-absorbing ideal I: abm in IM forces ab in I or m in IM",
    "MAINCOR": "faithful multiplication M, 1-absorbing ideal I, IM proper: IM is 1-absorbing prime",
    "BOLUM": "J 1-absorbing prime ideal containing I: J/I is 1-absorbing prime in R/I",
    "GUP_RING": "units lift through R -> R/Ann(M): 1-absorbing prime over R/Ann(M) implies it over R",
    "CHAR": "multiplication module with lifting units: N 1-abs <=> (N:M) 1-abs ideal <=> N = IM for a 1-abs ideal I containing Ann(M)",
}

CONVERSE_CLAIMS = ("TWOABS_NOT_ONEABS", "ONEABS_NOT_PRIME", "RES_CONVERSE")


@dataclass(frozen=True)
class Instance:
    ring: object
    module: Module
    label: str


@dataclass
class CheckResult:
    check: str
    instance: str
    status: str  # pass | fail | skip | error
    combos: int = 0
    note: str = ""
    payload: Optional[dict] = None


@dataclass
class SuiteReport:
    results: list = field(default_factory=list)

    @property
    def passed(self):
        return sum(1 for r in self.results if r.status == "pass")

    @property
    def failed(self):
        return sum(1 for r in self.results if r.status == "fail")

    @property
    def skipped(self):
        return sum(1 for r in self.results if r.status == "skip")

    @property
    def errored(self):
        return sum(1 for r in self.results if r.status == "error")


def default_family(cap: int = 4096) -> list:
    """The stock verification instances.

    Integer-scalar instances come first (largest modulus first), then the
    finite-ring regular modules, then the two rank-2 free modules; the
    counterexample searches rely on this order to surface the documented
    witnesses.
    """
    instances = []
    Z = build_ring(RingSpec.integers())
    for n in (30, 12, 6, 4):
        mod = build_module(Z, ModuleSpec.znz(n), cap=cap)
        instances.append(Instance(Z, mod, f"Z{n} over Z"))
    ring_specs = [
        RingSpec.zn(2),
        RingSpec.zn(4),
        RingSpec.zn(6),
        RingSpec.zn(8),
        RingSpec.zn(9),
        RingSpec.zn(12),
        RingSpec.zn(30),
        RingSpec.product(RingSpec.zn(2), RingSpec.zn(2)),
        RingSpec.polyquot(2, (0, 0, 1)),
        RingSpec.polyquot(4, (0, 0, 1)),
    ]
    for spec in ring_specs:
        ring = build_ring(spec, cap=cap)
        mod = build_module(ring, ModuleSpec.regular(), cap=cap)
        instances.append(Instance(ring, mod, f"{mod.name} regular"))
    for n in (4, 2):
        ring = build_ring(RingSpec.zn(n), cap=cap)
        mod = build_module(
            ring, ModuleSpec.product(ModuleSpec.regular(), ModuleSpec.regular()), cap=cap
        )
        instances.append(Instance(ring, mod, f"Z{n}^2 over Z{n}"))
    return instances


# ---------------------------------------------------------------------------
# Individual checks
# ---------------------------------------------------------------------------

def _proper_submodules(module: Module) -> list:
    return [s for s in enumerate_submodules(module) if s.is_proper()]


def _fail(check, instance, combos, note, **payload):
    return CheckResult(
        check, instance.label, "fail", combos, note,
        {k: str(v) for k, v in payload.items()},
    )


def _check_chain(instance: Instance) -> CheckResult:
    module = instance.module
    combos = 0
    for sub in _proper_submodules(module):
        combos += 1
        v = classify_submodule(module, sub)
        if v.prime and not v.one_absorbing:
            return _fail("CHAIN", instance, combos, "prime but not 1-absorbing", submodule=sub.name())
        if v.one_absorbing and not v.two_absorbing:
            return _fail("CHAIN", instance, combos, "1-absorbing but not 2-absorbing", submodule=sub.name())
    return CheckResult("CHAIN", instance.label, "pass", combos)


def _square_zero_quasilocal(ring) -> bool:
    if ring.is_integers:
        return False
    maximal, quasilocal = maximal_spectrum(ring)
    if not quasilocal:
        return False
    m = maximal[0]
    return all(ring.mul(a, b) == ring.zero for a in m.elements for b in m.elements)


def _check_local_m2(instance: Instance) -> CheckResult:
    module = instance.module
    if not _square_zero_quasilocal(instance.ring):
        return CheckResult(
            "LOCAL_M2", instance.label, "skip",
            note="scalar ring is not quasilocal with square-zero maximal ideal",
        )
    combos = 0
    for sub in _proper_submodules(module):
        combos += 1
        if not classify_submodule(module, sub).one_absorbing:
            return _fail("LOCAL_M2", instance, combos, "proper submodule not 1-absorbing", submodule=sub.name())
    return CheckResult("LOCAL_M2", instance.label, "pass", combos)


def _check_res_1abs(instance: Instance) -> CheckResult:
    module = instance.module
    combos = 0
    for sub in _proper_submodules(module):
        if not classify_submodule(module, sub).one_absorbing:
            continue
        combos += 1
        res = residue(sub, module)
        if not classify_ideal(module.ring, res).one_absorbing:
            return _fail("RES_1ABS", instance, combos, "(N:M) not 1-absorbing", submodule=sub.name(), ideal=res.name())
        for m in module.elements():
            if sub.contains(m):
                continue
            combos += 1
            r = residue_elt(sub, m)
            if not classify_ideal(module.ring, r).one_absorbing:
                return _fail(
                    "RES_1ABS", instance, combos, "(N:m) not 1-absorbing",
                    submodule=sub.name(), element=module.format_element(m), ideal=r.name(),
                )
    return CheckResult("RES_1ABS", instance.label, "pass", combos)


def _one_absorbing_scalar_pairs(module: Module):
    scalars = module.scalars()
    if module.ring.is_integers:
        scan = scalars
    else:
        scan = [a for a in scalars if not module.scalar_is_unit(a)]
    return itertools.product(scan, repeat=2)


def _check_abk(instance: Instance) -> CheckResult:
    module = instance.module
    combos = 0
    propers = [k for k in submodules_scan_order(module) if k.is_proper()]
    for sub in _proper_submodules(module):
        if not classify_submodule(module, sub).one_absorbing:
            continue
        res = residue(sub, module)
        for a, b in _one_absorbing_scalar_pairs(module):
            ab = module.scalar_mul(a, b)
            if res.contains(ab):
                continue
            for k in propers:
                combos += 1
                if k.issubset(sub):
                    continue
                if all(sub.contains(module.act(ab, x)) for x in k.elements):
                    return _fail(
                        "ABK", instance, combos, "abK <= N with ab outside (N:M) and K outside N",
                        submodule=sub.name(), a=module.scalar_name(a), b=module.scalar_name(b), k=k.name(),
                    )
    return CheckResult("ABK", instance.label, "pass", combos)


def _check_ijk_eq(instance: Instance) -> CheckResult:
    module = instance.module
    combos = 0
    for sub in _proper_submodules(module):
        combos += 1
        elementwise = classify_submodule(module, sub).one_absorbing
        ideal_form, _ = one_absorbing_via_ideals(module, sub)
        if elementwise != ideal_form:
            return _fail(
                "IJK_EQ", instance, combos, "elementwise and ideal-form verdicts disagree",
                submodule=sub.name(), elementwise=elementwise, ideal_form=ideal_form,
            )
    return CheckResult("IJK_EQ", instance.label, "pass", combos)


def _check_quasi(instance: Instance) -> CheckResult:
    module = instance.module
    combos = 0
    for sub in _proper_submodules(module):
        combos += 1
        v = classify_submodule(module, sub)
        if v.one_absorbing and not v.prime:
            if not is_quasilocal(instance.ring):
                return _fail(
                    "QUASI", instance, combos, "1-absorbing-not-prime over a non-quasilocal ring",
                    submodule=sub.name(),
                )
    return CheckResult("QUASI", instance.label, "pass", combos)


def _check_quasi_eq(instance: Instance) -> CheckResult:
    module = instance.module
    if is_quasilocal(instance.ring):
        return CheckResult("QUASI_EQ", instance.label, "skip", note="scalar ring is quasilocal")
    combos = 0
    for sub in _proper_submodules(module):
        combos += 1
        v = classify_submodule(module, sub)
        if v.one_absorbing != v.prime:
            return _fail(
                "QUASI_EQ", instance, combos, "1-absorbing and prime disagree over non-quasilocal ring",
                submodule=sub.name(),
            )
    return CheckResult("QUASI_EQ", instance.label, "pass", combos)


def _maximal_chains(poset: list) -> list:
    """All maximal chains (as lists, bottom to top) of a finite inclusion poset."""
    chains = []

    def extend(chain):
        top = chain[-1]
        uppers = [p for p in poset if top is not p and top.issubset(p)]
        covers = [
            p for p in uppers
            if not any(q is not p and top.issubset(q) and q.issubset(p) for q in uppers)
        ]
        if not covers:
            chains.append(list(chain))
            return
        for c in covers:
            chain.append(c)
            extend(chain)
            chain.pop()

    minimal = [
        p for p in poset if not any(q is not p and q.issubset(p) for q in poset)
    ]
    for bottom in minimal:
        extend([bottom])
    return chains


def _check_chain_lattice(instance: Instance) -> CheckResult:
    module = instance.module
    omega = one_absorbing_primes(module)
    if not omega:
        return CheckResult("CHAIN_LATTICE", instance.label, "pass", 0,
                           note="no 1-absorbing primes; vacuous")
    names = {s.key for s in omega}
    combos = 0
    for chain in _maximal_chains(omega):
        combos += 1
        inter = chain[0]
        union = set()
        for s in chain:
            inter = inter.intersect(s)
            union |= s.elements
        union_sub = Submodule(module, union)
        if inter.key not in names or not classify_submodule(module, inter).one_absorbing:
            return _fail("CHAIN_LATTICE", instance, combos, "chain intersection not 1-absorbing",
                         chain=[s.name() for s in chain])
        if union_sub.key not in names or not classify_submodule(module, union_sub).one_absorbing:
            return _fail("CHAIN_LATTICE", instance, combos, "chain union not 1-absorbing",
                         chain=[s.name() for s in chain])
    return CheckResult(
        "CHAIN_LATTICE", instance.label, "pass", combos,
        note="finite chains: intersection/union equal the chain endpoints",
    )


def _check_hom_pull(instance: Instance) -> CheckResult:
    module = instance.module
    combos = 0
    for kernel in _proper_submodules(module):
        f = quotient_module(module, kernel)
        for nprime in enumerate_submodules(f.target):
            if not nprime.is_proper():
                continue
            if not classify_submodule(f.target, nprime).one_absorbing:
                continue
            combos += 1
            pulled = pull_submodule(f, nprime)
            if not classify_submodule(module, pulled).one_absorbing:
                return _fail(
                    "HOM_PULL", instance, combos, "quotient-map preimage not 1-absorbing",
                    kernel=kernel.name(), target_submodule=nprime.name(),
                )
    # inclusion maps: pull N' along K -> M is the intersection with K
    for ksub in _proper_submodules(module):
        if len(ksub.elements) < 2:
            continue
        as_module = SubmoduleModule(module, ksub)
        for nprime in one_absorbing_primes(module):
            inter = nprime.elements & ksub.elements
            if inter == ksub.elements:
                continue  # preimage equals the whole source module
            combos += 1
            pulled = Submodule(as_module, {as_module.index_of(m) for m in inter})
            if not classify_submodule(as_module, pulled).one_absorbing:
                return _fail(
                    "HOM_PULL", instance, combos, "inclusion-map preimage not 1-absorbing",
                    submodule=ksub.name(), target_submodule=nprime.name(),
                )
    return CheckResult("HOM_PULL", instance.label, "pass", combos)


def _check_hom_push(instance: Instance) -> CheckResult:
    module = instance.module
    combos = 0
    for kernel in _proper_submodules(module):
        f = quotient_module(module, kernel)
        for sub in one_absorbing_primes(module):
            if not kernel.issubset(sub):
                continue
            combos += 1
            pushed = push_submodule(f, sub)
            if not pushed.is_proper():
                continue
            if not classify_submodule(f.target, pushed).one_absorbing:
                return _fail(
                    "HOM_PUSH", instance, combos, "epimorphic image not 1-absorbing",
                    kernel=kernel.name(), submodule=sub.name(),
                )
    return CheckResult("HOM_PUSH", instance.label, "pass", combos)


def _check_quot(instance: Instance) -> CheckResult:
    module = instance.module
    combos = 0
    one_abs = one_absorbing_primes(module)
    for kernel in _proper_submodules(module):
        f = None
        for sub in one_abs:
            if kernel.elements == sub.elements or not kernel.issubset(sub):
                continue
            combos += 1
            if f is None:
                f = quotient_module(module, kernel)
            pushed = push_submodule(f, sub)
            if not classify_submodule(f.target, pushed).one_absorbing:
                return _fail(
                    "QUOT", instance, combos, "N/K not 1-absorbing in M/K",
                    submodule=sub.name(), kernel=kernel.name(),
                )
    return CheckResult("QUOT", instance.label, "pass", combos)


def _check_minimal(instance: Instance) -> CheckResult:
    module = instance.module
    combos = 0
    omega_all = one_absorbing_primes(module)
    for sub in _proper_submodules(module):
        combos += 1
        minimal = minimal_one_absorbing_over(module, sub)
        if not minimal:
            return _fail("MINIMAL", instance, combos, "no minimal 1-absorbing prime over N",
                         submodule=sub.name())
        for p, q in itertools.combinations(minimal, 2):
            if p.issubset(q) or q.issubset(p):
                return _fail("MINIMAL", instance, combos, "minimal members comparable",
                             submodule=sub.name(), p=p.name(), q=q.name())
        for p in omega_all:
            if not sub.issubset(p):
                continue
            if not any(m.issubset(p) for m in minimal):
                return _fail("MINIMAL", instance, combos, "Omega member missing a minimal member below it",
                             submodule=sub.name(), p=p.name())
    return CheckResult("MINIMAL", instance.label, "pass", combos)


def _proper_scalar_ideals(instance: Instance) -> list:
    """Proper ideals of the scalar ring for law quantifiers.

    Over Z this is every generator in {0} u [2, 2n+1]: each residue class mod
    the exponent n contains one of these as an honest proper generator.
    """
    ring, module = instance.ring, instance.module
    if ring.is_integers:
        n = module.exponent
        gens = [0] + list(range(2, 2 * n + 2))
        return [Ideal(ring, generator=g) for g in gens]
    return [i for i in enumerate_ideals(ring) if i.is_proper()]


def _check_rad1_laws(instance: Instance) -> CheckResult:
    module = instance.module
    combos = 0
    subs = enumerate_submodules(module)
    rad1_of = {s.key: rad1_submodule(module, s).result for s in subs}
    for s in subs:
        combos += 1
        r1 = rad1_of[s.key]
        if not s.issubset(r1):
            return _fail("RAD1_LAWS", instance, combos, "N not inside rad1(N)", submodule=s.name())
        if rad1_of[r1.key].elements != r1.elements:
            return _fail("RAD1_LAWS", instance, combos, "rad1 not idempotent", submodule=s.name())
        if s.is_proper():
            rad = rad_submodule(module, s)
            if not r1.issubset(rad):
                return _fail("RAD1_LAWS", instance, combos, "rad1(N) not inside rad(N)", submodule=s.name())
    for a, b in itertools.product(subs, repeat=2):
        combos += 1
        lhs = rad1_submodule(module, a.intersect(b)).result
        if not (lhs.issubset(rad1_of[a.key]) and lhs.issubset(rad1_of[b.key])):
            return _fail("RAD1_LAWS", instance, combos, "rad1(N^L) not inside rad1(N)^rad1(L)",
                         n=a.name(), l=b.name())
    for ideal in _proper_scalar_ideals(instance):
        combos += 1
        im = ideal_times_module(module, ideal)
        sqrt_im = ideal_times_module(module, radical_ideal(module.ring, ideal))
        lhs = rad1_submodule(module, im).result
        rhs = rad1_submodule(module, sqrt_im).result
        if not lhs.issubset(rhs):
            return _fail("RAD1_LAWS", instance, combos, "rad1(IM) not inside rad1(sqrt(I)M)",
                         ideal=ideal.name())
    for s in subs:
        if not s.is_proper():
            continue
        combos += 1
        res = residue(s, module)
        r1_ideal = rad1_ideal(module.ring, res)
        if not ideal_times_module(module, r1_ideal).issubset(rad1_of[s.key]):
            return _fail("RAD1_LAWS", instance, combos, "rad1(N:M)M not inside rad1(N)",
                         submodule=s.name())
        if not r1_ideal.issubset(residue(rad1_of[s.key], module)):
            return _fail("RAD1_LAWS", instance, combos, "rad1(N:M) not inside (rad1(N):M)",
                         submodule=s.name())
    return CheckResult("RAD1_LAWS", instance.label, "pass", combos)


def _check_rad1_fg(instance: Instance) -> CheckResult:
    module = instance.module
    combos = 0
    for s in enumerate_submodules(module):
        combos += 1
        r1 = rad1_submodule(module, s).result
        if (not r1.is_proper()) != (not s.is_proper()):
            return _fail("RAD1_FG", instance, combos, "rad1(N) = M does not match N = M",
                         submodule=s.name())
    return CheckResult("RAD1_FG", instance.label, "pass", combos)


def _check_rad1_sum(instance: Instance) -> CheckResult:
    module = instance.module
    combos = 0
    subs = enumerate_submodules(module)
    rad1_of = {s.key: rad1_submodule(module, s).result for s in subs}
    for a, b in itertools.product(subs, repeat=2):
        combos += 1
        direct = not a.sum(b).is_proper()
        via_rad = not rad1_of[a.key].sum(rad1_of[b.key]).is_proper()
        if direct != via_rad:
            return _fail("RAD1_SUM", instance, combos, "N+L = M disagrees with rad1(N)+rad1(L) = M",
                         n=a.name(), l=b.name())
    return CheckResult("RAD1_SUM", instance.label, "pass", combos)


def _check_mult_eq(instance: Instance) -> CheckResult:
    report = is_multiplication_smith(instance.module)
    combos = len(report.per_maximal) + 1
    if report.direct != report.smith:
        return _fail("MULT_EQ", instance, combos, "direct and characterization verdicts disagree",
                     direct=report.direct, smith=report.smith)
    return CheckResult("MULT_EQ", instance.label, "pass", combos)


def _multiplication_hypotheses(instance: Instance):
    """(skip reason or None) for faithful + multiplication statements."""
    module = instance.module
    if not is_faithful(module):
        return "module is not faithful"
    if not is_multiplication_smith(module).direct:
        return "module is not a multiplication module"
    return None


def _one_absorbing_ideals(instance: Instance) -> list:
    ring = instance.ring
    if ring.is_integers:
        # only reached by hypothesis-free callers; faithful gates exclude Z
        raise DomainError("cannot enumerate the 1-absorbing ideals of Z")
    return [
        i
        for i in enumerate_ideals(ring)
        if i.is_proper() and classify_ideal(ring, i).one_absorbing
    ]


def _check_main(instance: Instance) -> CheckResult:
    reason = _multiplication_hypotheses(instance)
    if reason:
        return CheckResult("MAIN", instance.label, "skip", note=reason)
    module = instance.module
    combos = 0
    for ideal in _one_absorbing_ideals(instance):
        im = ideal_times_module(module, ideal)
        for a, b in _one_absorbing_scalar_pairs(module):
            ab = module.scalar_mul(a, b)
            if ideal.contains(ab):
                continue
            for m in module.elements():
                combos += 1
                if im.contains(module.act(ab, m)) and not im.contains(m):
                    return _fail(
                        "MAIN", instance, combos, "abm in IM with ab outside I and m outside IM",
                        ideal=ideal.name(), a=module.scalar_name(a),
                        b=module.scalar_name(b), m=module.format_element(m),
                    )
    return CheckResult("MAIN", instance.label, "pass", combos)


def _check_maincor(instance: Instance) -> CheckResult:
    reason = _multiplication_hypotheses(instance)
    if reason:
        return CheckResult("MAINCOR", instance.label, "skip", note=reason)
    module = instance.module
    combos = 0
    for ideal in _one_absorbing_ideals(instance):
        im = ideal_times_module(module, ideal)
        if not im.is_proper():
            continue
        combos += 1
        if not classify_submodule(module, im).one_absorbing:
            return _fail("MAINCOR", instance, combos, "IM not 1-absorbing", ideal=ideal.name())
    return CheckResult("MAINCOR", instance.label, "pass", combos)


def _check_bolum(instance: Instance) -> CheckResult:
    ring = instance.ring
    combos = 0
    note = ""
    if ring.is_integers:
        n = instance.module.exponent
        note = "I = (0) omitted: Z/(0) is infinite"
        for g in range(2, 2 * n + 2):
            lower = Ideal(ring, generator=g)
            quo = quotient_ring(ring, lower)
            divisors = [e for e in range(2, g + 1) if g % e == 0]
            for e in divisors:
                upper = Ideal(ring, generator=e)
                if not classify_ideal(ring, upper).one_absorbing:
                    continue
                combos += 1
                image = Ideal(quo, {quo.mul(e % quo.n, r) for r in quo.elements()})
                if not image.is_proper():
                    continue
                if not classify_ideal(quo, image).one_absorbing:
                    return _fail("BOLUM", instance, combos, "J/I not 1-absorbing in R/I",
                                 i=lower.name(), j=upper.name())
        return CheckResult("BOLUM", instance.label, "pass", combos, note=note)
    ideals = enumerate_ideals(ring)
    for lower in ideals:
        if not lower.is_proper():
            continue
        quo = quotient_ring(ring, lower)
        for upper in ideals:
            if not (lower.issubset(upper) and upper.is_proper()):
                continue
            if not classify_ideal(ring, upper).one_absorbing:
                continue
            combos += 1
            image = Ideal(quo, {quo.project(r) for r in upper.elements})
            if not image.is_proper():
                continue
            if not classify_ideal(quo, image).one_absorbing:
                return _fail("BOLUM", instance, combos, "J/I not 1-absorbing in R/I",
                             i=lower.name(), j=upper.name())
    return CheckResult("BOLUM", instance.label, "pass", combos)


def _gup_hypotheses(instance: Instance):
    module = instance.module
    ann = annihilator(module)
    if not ann.is_proper():
        return "Ann(M) is the unit ideal"
    if not good_unit_property(instance.ring, ann):
        return "good unit element property fails for Ann(M)"
    if not units_lift(instance.ring, ann):
        return "units of R/Ann(M) do not all lift to units of R"
    return None


def _check_gup_ring(instance: Instance) -> CheckResult:
    reason = _gup_hypotheses(instance)
    if reason:
        return CheckResult("GUP_RING", instance.label, "skip", note=reason)
    module = instance.module
    restricted = restrict_to_quotient_ring(module)
    combos = 0
    by_key = {s.key: s for s in enumerate_submodules(module)}
    for rsub in enumerate_submodules(restricted):
        if not rsub.is_proper():
            continue
        combos += 1
        if not classify_submodule(restricted, rsub).one_absorbing:
            continue
        original = by_key.get(tuple(sorted(rsub.elements)))
        if original is None:
            return _fail("GUP_RING", instance, combos, "submodule lattices disagree across scalar change",
                         submodule=rsub.name())
        if not classify_submodule(module, original).one_absorbing:
            return _fail("GUP_RING", instance, combos, "1-absorbing over R/Ann(M) but not over R",
                         submodule=original.name())
    return CheckResult("GUP_RING", instance.label, "pass", combos)


def _check_char(instance: Instance) -> CheckResult:
    module = instance.module
    ring = instance.ring
    reason = None
    if not is_multiplication_smith(module).direct:
        reason = "module is not a multiplication module"
    else:
        ann = annihilator(module)
        if not good_unit_property(ring, ann):
            reason = "good unit element property fails for Ann(M)"
        elif not units_lift(ring, ann):
            reason = "units of R/Ann(M) do not all lift to units of R"
    if reason:
        return CheckResult("CHAR", instance.label, "skip", note=reason)
    ann = annihilator(module)
    if ring.is_integers:
        candidates = [Ideal(ring, generator=d) for d in _divisors(ann.generator)]
    else:
        candidates = [i for i in enumerate_ideals(ring) if ann.issubset(i)]
    one_abs_over_ann = [
        i for i in candidates if i.is_proper() and classify_ideal(ring, i).one_absorbing
    ]
    combos = 0
    for sub in _proper_submodules(module):
        combos += 1
        c1 = classify_submodule(module, sub).one_absorbing
        c2 = classify_ideal(ring, residue(sub, module)).one_absorbing
        c3 = any(
            ideal_times_module(module, i).elements == sub.elements
            for i in one_abs_over_ann
        )
        if not (c1 == c2 == c3):
            return _fail(
                "CHAR", instance, combos, "three-way characterization disagrees",
                submodule=sub.name(), direct=c1, residue_ideal=c2, exists_ideal=c3,
            )
    return CheckResult("CHAR", instance.label, "pass", combos)


def _divisors(n: int) -> list:
    return [d for d in range(1, n + 1) if n % d == 0]


_CHECK_FUNCTIONS = {
    "CHAIN": _check_chain,
    "LOCAL_M2": _check_local_m2,
    "RES_1ABS": _check_res_1abs,
    "ABK": _check_abk,
    "IJK_EQ": _check_ijk_eq,
    "QUASI": _check_quasi,
    "QUASI_EQ": _check_quasi_eq,
    "CHAIN_LATTICE": _check_chain_lattice,
    "HOM_PULL": _check_hom_pull,
    "HOM_PUSH": _check_hom_push,
    "QUOT": _check_quot,
    "MINIMAL": _check_minimal,
    "RAD1_LAWS": _check_rad1_laws,
    "RAD1_FG": _check_rad1_fg,
    "RAD1_SUM": _check_rad1_sum,
    "MULT_EQ": _check_mult_eq,
    "MAIN": _check_main,
    "MAINCOR": _check_maincor,
    "BOLUM": _check_bolum,
    "GUP_RING": _check_gup_ring,
    "CHAR": _check_char,
}


def run_check(check_id: str, instance: Instance) -> CheckResult:
    """Run one registered statement check against one instance."""
    fn = _CHECK_FUNCTIONS.get(check_id)
    if fn is None:
        raise DomainError(f"unknown check id {check_id!r}")
    return fn(instance)


def run_suite(instances, ids=None) -> SuiteReport:
    """The full matrix; failing or erroring cells never disturb the others."""
    if ids is None:
        ids = list(CHECK_IDS)
    for check_id in ids:
        if check_id not in CHECK_IDS:
            raise DomainError(f"unknown check id {check_id!r}")
    report = SuiteReport()
    for instance in instances:
        for check_id in ids:
            try:
                result = run_check(check_id, instance)
            except CapExceededError as exc:
                result = CheckResult(check_id, instance.label, "error", note=f"cap exceeded: {exc}")
            except FinmodError as exc:
                result = CheckResult(check_id, instance.label, "error", note=str(exc))
            report.results.append(result)
    return report


# ---------------------------------------------------------------------------
# Counterexample searches for the false converses
# ---------------------------------------------------------------------------

def find_counterexample(claim: str, family) -> Optional[dict]:
    """First instance+submodule refuting a converse claim, scanned in family order."""
    if claim not in CONVERSE_CLAIMS:
        raise DomainError(f"unknown converse claim {claim!r}")
    if claim == "TWOABS_NOT_ONEABS":
        return _scan_family(
            family,
            lambda v: v.two_absorbing and not v.one_absorbing,
            "2-absorbing submodule that is not 1-absorbing prime",
        )
    if claim == "ONEABS_NOT_PRIME":
        return _scan_family(
            family,
            lambda v: v.one_absorbing and not v.prime,
            "1-absorbing prime submodule that is not prime",
        )
    return _res_converse(family)


def _scan_family(family, predicate, description) -> Optional[dict]:
    examined = 0
    for instance in family:
        for sub in submodules_scan_order(instance.module):
            if not sub.is_proper():
                continue
            examined += 1
            v = classify_submodule(instance.module, sub)
            if predicate(v):
                return {
                    "claim": description,
                    "instance": instance.label,
                    "submodule": sub.name(),
                    "examined": examined,
                }
    return None


def _res_converse(family) -> dict:
    """(N:M) 1-absorbing does not force N 1-absorbing.

    Scans the family, and always evaluates the fixed rank-2 integer-lattice
    witness N = span{(3,0)}, (a,b,m) = (3,2,(1,0)).
    """
    finite = None
    examined = 0
    for instance in family:
        for sub in submodules_scan_order(instance.module):
            if not sub.is_proper():
                continue
            examined += 1
            if classify_submodule(instance.module, sub).one_absorbing:
                continue
            res = residue(sub, instance.module)
            if classify_ideal(instance.ring, res).one_absorbing:
                finite = {
                    "instance": instance.label,
                    "submodule": sub.name(),
                    "residue": res.name(),
                }
                break
        if finite:
            break
    lattice = IntegerLattice(2, [(3, 0)])
    report = check_witness(lattice, 3, 2, (1, 0))
    return {
        "claim": "(N:M) 1-absorbing prime does not force N 1-absorbing prime",
        "lattice": lattice.name(),
        "witness": {
            "a": report.a,
            "b": report.b,
            "m": list(report.m),
            "abm_in_n": report.abm_in_n,
            "ab_in_residue": report.ab_in_residue,
            "m_in_n": report.m_in_n,
            "residue": report.residue_name,
            "refutes": report.refutes,
        },
        "finite_instance": finite,
        "examined": examined,
    }
