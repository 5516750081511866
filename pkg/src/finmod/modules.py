"""Finite modules, submodule lattices, residues and quotient maps.

Module elements are indexed 0..size-1 (mixed-radix over the carrier moduli
for tuple carriers; list position for coset/sub carriers).  Scalars are ring
element indices for finite scalar rings; for the integers the scalars of
every quantifier are residues mod the module exponent -- each residue class
contains non-units of Z, and all ideal memberships that appear factor
through residues because the relevant ideals contain (exponent).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

from .errors import CapExceededError, DomainError
from .rings import (
    DEFAULT_CARRIER_CAP,
    LATTICE_CAP,
    Ideal,
    Ring,
    ZnRing,
    quotient_ring,
)

ACTION_LAW_BUDGET = 2_000_000


@dataclass(frozen=True)
class ModuleSpec:
    kind: str
    n: int = 0
    factors: tuple = ()

    @staticmethod
    def regular() -> "ModuleSpec":
        return ModuleSpec(kind="regular")

    @staticmethod
    def znz(n: int) -> "ModuleSpec":
        return ModuleSpec(kind="znz", n=n)

    @staticmethod
    def product(*factors: "ModuleSpec") -> "ModuleSpec":
        return ModuleSpec(kind="product", factors=tuple(factors))


class Module:
    """A non-zero finite module over a finite ring or over the integers."""

    def __init__(self, ring, size: int, name: str, cap: int = DEFAULT_CARRIER_CAP):
        if size < 2:
            raise DomainError("zero module rejected (carrier must have >= 2 elements)")
        if size > cap:
            raise CapExceededError(f"module carrier size {size} exceeds cap {cap}")
        self.ring = ring
        self.size = size
        self.name = name
        self.zero = 0
        self._exponent = None
        self._submodules = None
        self._verdicts = {}
        self._cyclics = None

    # -- abstract ------------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def act(self, r: int, m: int) -> int:
        """Scalar action; r is a ring index, or any integer for Z-scalars."""
        raise NotImplementedError

    def format_element(self, m: int) -> str:
        return str(m)

    # -- shared ----------------------------------------------------------------
    def elements(self) -> range:
        return range(self.size)

    @property
    def exponent(self) -> Optional[int]:
        """Least n >= 1 with n*m = 0 for all m (additive exponent)."""
        if self._exponent is None:
            exp = 1
            for m in self.elements():
                order, acc = 1, m
                while acc != self.zero:
                    acc = self.add(acc, m)
                    order += 1
                exp = math.lcm(exp, order)
            self._exponent = exp
        return self._exponent

    def scalars(self) -> list:
        """Canonical scalar scan order: non-units first, then units."""
        if self.ring.is_integers:
            n = self.exponent
            return sorted(range(n), key=lambda r: (math.gcd(r, n) == 1, r))
        return self.ring.scan_order()

    def scalar_is_unit(self, r: int) -> bool:
        if self.ring.is_integers:
            return math.gcd(r, self.exponent) == 1
        return self.ring.is_unit(r)

    def scalar_mul(self, a: int, b: int) -> int:
        """Product of two scalars, for residue/ideal membership tests."""
        if self.ring.is_integers:
            return a * b
        return self.ring.mul(a, b)

    def scalar_name(self, r: int) -> str:
        if self.ring.is_integers:
            return str(r)
        return self.ring.format_element(r)

    def verify_action_laws(self) -> None:
        """Distributivity, associativity and unitality of the action."""
        scalars = self.scalars()
        elems = list(self.elements())
        if len(scalars) * len(elems) ** 2 > ACTION_LAW_BUDGET:
            elems = elems[:: max(1, len(elems) // 32)][:32]
        if len(scalars) ** 2 * self.size > ACTION_LAW_BUDGET:
            scalars = scalars[:: max(1, len(scalars) // 32)][:32]
        one = 1 if self.ring.is_integers else self.ring.one
        for m in self.elements():
            if self.act(one, m) != m:
                raise DomainError(f"{self.name}: 1*m != m at {m}")
        for r in scalars:
            for a, b in itertools.product(elems, repeat=2):
                if self.act(r, self.add(a, b)) != self.add(self.act(r, a), self.act(r, b)):
                    raise DomainError(f"{self.name}: r(m+m') law fails at ({r},{a},{b})")
        add_s = (lambda a, b: a + b) if self.ring.is_integers else self.ring.add
        mul_s = (lambda a, b: a * b) if self.ring.is_integers else self.ring.mul
        for r, s in itertools.product(scalars, repeat=2):
            for m in elems:
                if self.act(add_s(r, s), m) != self.add(self.act(r, m), self.act(s, m)):
                    raise DomainError(f"{self.name}: (r+s)m law fails at ({r},{s},{m})")
                if self.act(mul_s(r, s), m) != self.act(r, self.act(s, m)):
                    raise DomainError(f"{self.name}: (rs)m law fails at ({r},{s},{m})")

    def __repr__(self):
        return f"Module({self.name})"


class TupleModule(Module):
    """Carrier = product of cyclic groups Z_d1 x ... x Z_dk, componentwise addition."""

    def __init__(self, ring, moduli, action, name, cap: int = DEFAULT_CARRIER_CAP):
        size = 1
        for d in moduli:
            size *= d
        super().__init__(ring, size, name, cap=cap)
        self.moduli = tuple(moduli)
        self._action = action

    def encode(self, tup) -> int:
        idx, weight = 0, 1
        for d, t in zip(self.moduli, tup):
            idx += (t % d) * weight
            weight *= d
        return idx

    def decode(self, idx: int) -> tuple:
        out = []
        for d in self.moduli:
            idx, r = divmod(idx, d)
            out.append(r)
        return tuple(out)

    def add(self, a, b):
        ta, tb = self.decode(a), self.decode(b)
        return self.encode(tuple(x + y for x, y in zip(ta, tb)))

    def act(self, r, m):
        return self._action(r, m)

    def format_element(self, m):
        tup = self.decode(m)
        if len(tup) == 1:
            return str(tup[0])
        return "(" + ",".join(str(t) for t in tup) + ")"


class RegularModule(Module):
    """The ring acting on itself; element formatting follows the ring."""

    def __init__(self, ring: Ring, cap: int = DEFAULT_CARRIER_CAP):
        if ring.is_integers:
            raise DomainError("regular module unsupported over the integers; use znz")
        super().__init__(ring, ring.size, f"{ring.name}", cap=cap)

    def add(self, a, b):
        return self.ring.add(a, b)

    def act(self, r, m):
        return self.ring.mul(r, m)

    def format_element(self, m):
        return self.ring.format_element(m)


class ProductModule(Module):
    """Direct product of modules over the same scalar ring."""

    def __init__(self, ring, parts, cap: int = DEFAULT_CARRIER_CAP):
        size = 1
        for p in parts:
            size *= p.size
        name = "x".join(p.name for p in parts)
        super().__init__(ring, size, name, cap=cap)
        self.parts = tuple(parts)

    def encode(self, tup) -> int:
        idx, weight = 0, 1
        for p, t in zip(self.parts, tup):
            idx += t * weight
            weight *= p.size
        return idx

    def decode(self, idx: int) -> tuple:
        out = []
        for p in self.parts:
            idx, r = divmod(idx, p.size)
            out.append(r)
        return tuple(out)

    def add(self, a, b):
        ta, tb = self.decode(a), self.decode(b)
        return self.encode(tuple(p.add(x, y) for p, x, y in zip(self.parts, ta, tb)))

    def act(self, r, m):
        return self.encode(tuple(p.act(r, x) for p, x in zip(self.parts, self.decode(m))))

    def format_element(self, m):
        return "(" + ",".join(p.format_element(x) for p, x in zip(self.parts, self.decode(m))) + ")"


class CosetModule(Module):
    """M/K with cosets addressed by canonical (minimal-index) representatives."""

    def __init__(self, source: Module, kernel: "Submodule"):
        rep_of = {}
        reps = []
        for m in source.elements():
            if m in rep_of:
                continue
            coset = sorted(source.add(m, k) for k in kernel.elements)
            rep = coset[0]
            reps.append(rep)
            for c in coset:
                rep_of[c] = rep
        reps.sort()
        self._rep_of = rep_of
        self.reps = reps
        self._index_of = {r: i for i, r in enumerate(reps)}
        self.source = source
        super().__init__(source.ring, len(reps), f"{source.name}/{kernel.name()}")

    def project(self, m: int) -> int:
        return self._index_of[self._rep_of[m]]

    def lift(self, q: int) -> int:
        return self.reps[q]

    def add(self, a, b):
        return self.project(self.source.add(self.reps[a], self.reps[b]))

    def act(self, r, m):
        return self.project(self.source.act(r, self.reps[m]))

    def format_element(self, m):
        return self.source.format_element(self.reps[m]) + "~"


class SubmoduleModule(Module):
    """A submodule viewed as a module in its own right (inclusion map source)."""

    def __init__(self, parent: Module, sub: "Submodule"):
        self.parent = parent
        self.carrier = tuple(sorted(sub.elements))
        self._index_of = {m: i for i, m in enumerate(self.carrier)}
        super().__init__(parent.ring, len(self.carrier), f"{sub.name()} in {parent.name}")

    def include(self, i: int) -> int:
        return self.carrier[i]

    def index_of(self, m: int) -> int:
        return self._index_of[m]

    def add(self, a, b):
        return self._index_of[self.parent.add(self.carrier[a], self.carrier[b])]

    def act(self, r, m):
        return self._index_of[self.parent.act(r, self.carrier[m])]

    def format_element(self, m):
        return self.parent.format_element(self.carrier[m])


def build_module(ring, spec: ModuleSpec, cap: int = DEFAULT_CARRIER_CAP) -> Module:
    """Construct a module over the ring and verify the action laws."""
    mod = _build(ring, spec, cap)
    mod.verify_action_laws()
    return mod


def _build(ring, spec: ModuleSpec, cap: int) -> Module:
    if spec.kind == "regular":
        return RegularModule(ring, cap=cap)
    if spec.kind == "znz":
        n = spec.n
        if n < 2:
            raise DomainError("znz carrier must have n >= 2")
        if ring.is_integers:
            return TupleModule(ring, [n], lambda r, m: (r * m) % n, f"Z{n}", cap=cap)
        if isinstance(ring, ZnRing):
            if ring.n % n != 0:
                raise DomainError(f"Z{n} carries no Z{ring.n}-action (need {n} | {ring.n})")
            return TupleModule(ring, [n], lambda r, m: (r * m) % n, f"Z{n}", cap=cap)
        raise DomainError(f"znz carrier undefined over {ring.name}")
    if spec.kind == "product":
        parts = [_build(ring, f, cap) for f in spec.factors]
        return ProductModule(ring, parts, cap=cap)
    raise DomainError(f"unknown module kind {spec.kind!r}")


# ---------------------------------------------------------------------------
# Submodules
# ---------------------------------------------------------------------------

class Submodule:
    """Canonical element set of a submodule, plus a recorded generating set."""

    def __init__(self, module: Module, elements, generators=()):
        self.module = module
        self.elements = frozenset(elements)
        self.key = tuple(sorted(self.elements))
        self.generators = tuple(generators)
        self._min_gens = None

    def contains(self, m: int) -> bool:
        return m in self.elements

    def is_proper(self) -> bool:
        return len(self.elements) != self.module.size

    def is_zero(self) -> bool:
        return self.elements == frozenset({self.module.zero})

    def issubset(self, other: "Submodule") -> bool:
        return self.elements <= other.elements

    def intersect(self, other: "Submodule") -> "Submodule":
        return Submodule(self.module, self.elements & other.elements)

    def sum(self, other: "Submodule") -> "Submodule":
        m = self.module
        return Submodule(m, {m.add(a, b) for a in self.elements for b in other.elements})

    def minimal_generators(self) -> tuple:
        if self._min_gens is None:
            gens, current = [], {self.module.zero}
            for m in self.key:
                if m not in current:
                    gens.append(m)
                    current = span(self.module, gens).elements
                    if current == self.elements:
                        break
            self._min_gens = tuple(gens)
        return self._min_gens

    def name(self) -> str:
        if self.is_zero():
            return "0"
        if not self.is_proper():
            return "M"
        gens = self.minimal_generators()
        return "<" + ",".join(self.module.format_element(g) for g in gens) + ">"

    def __eq__(self, other):
        return (
            isinstance(other, Submodule)
            and self.module is other.module
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash(self.key)

    def __lt__(self, other):
        return self.key < other.key

    def __repr__(self):
        return f"Submodule({self.module.name}, {self.name()})"


def span(module: Module, gens) -> Submodule:
    """Closure of the generators under addition and the scalar action."""
    current = {module.zero}
    for g in gens:
        for r in module.scalars():
            current.add(module.act(r, g))
    changed = True
    while changed:
        changed = False
        for a, b in itertools.product(tuple(current), repeat=2):
            s = module.add(a, b)
            if s not in current:
                current.add(s)
                changed = True
    return Submodule(module, current, generators=tuple(gens))


def cyclic_submodule(module: Module, m: int) -> Submodule:
    """<m> = Rm (with Z-scalars: all integer multiples)."""
    return span(module, [m])


def enumerate_submodules(module: Module) -> list:
    """The full lattice via fixpoint joins of cyclic submodules.

    Sorted by (cardinality, lexicographic element order); includes 0 and M.
    """
    if module._submodules is not None:
        return module._submodules
    cyclics = []
    seen = set()
    for m in module.elements():
        c = cyclic_submodule(module, m)
        if c.key not in seen:
            seen.add(c.key)
            cyclics.append(c)
    module._cyclics = cyclics
    zero = Submodule(module, {module.zero}, generators=())
    found = {zero.key: zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for sub in frontier:
            for c in cyclics:
                s = sub.sum(c)
                if s.key not in found:
                    if len(found) >= LATTICE_CAP:
                        raise CapExceededError("submodule lattice exceeds cap")
                    found[s.key] = s
                    nxt.append(s)
        frontier = nxt
    subs = sorted(found.values(), key=lambda s: (len(s.key), s.key))
    module._submodules = subs
    return subs


def submodules_scan_order(module: Module) -> list:
    """Lattice in pure lexicographic key order, the quantifier-scan order."""
    return sorted(enumerate_submodules(module), key=lambda s: s.key)


# ---------------------------------------------------------------------------
# Residues and annihilators
# ---------------------------------------------------------------------------

def residue(sub: Submodule, module: Module) -> Ideal:
    """(N : M) = { r | rM <= N } as an ideal of the scalar ring."""
    if sub.module is not module:
        raise DomainError("submodule does not belong to the module")
    if module.ring.is_integers:
        n = module.exponent
        g = n
        for r in range(n):
            if all(module.act(r, m) in sub.elements for m in module.elements()):
                g = math.gcd(g, r)
        return Ideal(module.ring, generator=g)
    elems = {
        r
        for r in module.ring.elements()
        if all(module.act(r, m) in sub.elements for m in module.elements())
    }
    return Ideal(module.ring, elems)


def residue_elt(sub: Submodule, m: int) -> Ideal:
    """(N : m) = { r | r*m in N }."""
    module = sub.module
    if module.ring.is_integers:
        n = module.exponent
        g = n
        for r in range(n):
            if module.act(r, m) in sub.elements:
                g = math.gcd(g, r)
        return Ideal(module.ring, generator=g)
    elems = {r for r in module.ring.elements() if module.act(r, m) in sub.elements}
    return Ideal(module.ring, elems)


def annihilator(module: Module) -> Ideal:
    """Ann(M) = (0 : M)."""
    zero = Submodule(module, {module.zero})
    return residue(zero, module)


def annihilator_elt(module: Module, m: int) -> Ideal:
    """Ann(m) = { r | r*m = 0 } (the standard elementwise annihilator)."""
    zero = Submodule(module, {module.zero})
    return residue_elt(zero, m)


def is_faithful(module: Module) -> bool:
    return annihilator(module).is_zero()


# ---------------------------------------------------------------------------
# Quotients and the two supported homomorphism kinds
# ---------------------------------------------------------------------------

class QuotientMap:
    """Surjection M -> M/K with the kernel recorded."""

    def __init__(self, source: Module, kernel: Submodule):
        if not kernel.is_proper():
            raise DomainError("zero quotient rejected: kernel must be proper")
        self.source = source
        self.kernel = kernel
        self.target = CosetModule(source, kernel)

    def apply(self, m: int) -> int:
        return self.target.project(m)


def quotient_module(module: Module, kernel: Submodule) -> QuotientMap:
    return QuotientMap(module, kernel)


def push_submodule(f: QuotientMap, sub: Submodule) -> Submodule:
    """Image f(N) as a submodule of the target."""
    return Submodule(f.target, {f.apply(m) for m in sub.elements})


def pull_submodule(f: QuotientMap, sub: Submodule) -> Submodule:
    """Preimage f^{-1}(N') as a submodule of the source."""
    return Submodule(
        f.source, {m for m in f.source.elements() if f.apply(m) in sub.elements}
    )


def restrict_to_quotient_ring(module: Module) -> Module:
    """View M as a module over R/Ann(M); the same object when M is faithful."""
    ann = annihilator(module)
    if ann.is_zero():
        return module
    if module.ring.is_integers:
        n = ann.generator
        ring = ZnRing(n)
        return _WrappedModule(ring, module, lambda r, m: module.act(r, m))
    quo = quotient_ring(module.ring, ann)
    return _WrappedModule(quo, module, lambda r, m: module.act(quo.lift(r), m))


def element_from_literal(module: Module, literal) -> int:
    """Turn a script literal (int or tuple of ints) into an element index."""
    from .rings import PolyQuotRing, ProductRing, ZnRing

    if isinstance(module, TupleModule):
        if isinstance(literal, int):
            if len(module.moduli) != 1:
                raise DomainError(f"{module.name} elements need tuple literals")
            return module.encode((literal,))
        if len(literal) != len(module.moduli):
            raise DomainError(f"tuple literal {literal} has wrong length for {module.name}")
        return module.encode(literal)
    if isinstance(module, ProductModule):
        if isinstance(literal, int) or len(literal) != len(module.parts):
            raise DomainError(f"{module.name} elements need {len(module.parts)}-tuples")
        return module.encode(
            tuple(element_from_literal(p, x) for p, x in zip(module.parts, literal))
        )
    if isinstance(module, RegularModule):
        ring = module.ring
        if isinstance(ring, ZnRing):
            if not isinstance(literal, int):
                raise DomainError(f"{module.name} elements are integers")
            return literal % ring.n
        if isinstance(ring, (ProductRing, PolyQuotRing)):
            if isinstance(literal, int):
                literal = (literal,) + (0,) * (len(ring.decode(0)) - 1)
            return ring.encode(literal)
    raise DomainError(f"no literal syntax for elements of {module.name}")


def scalar_from_literal(module: Module, literal) -> int:
    """Turn a script literal into a scalar (honest int over Z, ring index otherwise)."""
    from .rings import PolyQuotRing, ProductRing, ZnRing

    ring = module.ring
    if ring.is_integers:
        if not isinstance(literal, int):
            raise DomainError("integer scalars are plain integers")
        return literal
    if isinstance(ring, ZnRing):
        if not isinstance(literal, int):
            raise DomainError(f"{ring.name} scalars are integers")
        return literal % ring.n
    if isinstance(ring, (ProductRing, PolyQuotRing)) and isinstance(literal, tuple):
        return ring.encode(literal)
    raise DomainError(f"no literal syntax for scalars of {ring.name}")


class _WrappedModule(Module):
    """Same carrier as a base module, different scalar ring."""

    def __init__(self, ring, base: Module, action):
        self.base = base
        self._action = action
        super().__init__(ring, base.size, f"{base.name} over {ring.name}")

    def add(self, a, b):
        return self.base.add(a, b)

    def act(self, r, m):
        return self._action(r, m)

    def format_element(self, m):
        return self.base.format_element(m)
