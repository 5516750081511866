"""Line-oriented script parsing for the CLI.

Grammar (one statement per line, '#' comments allowed):

    ring zn <n> | ring product <spec> <spec> | ring polyquot <n> <c0> ... 1 | ring integers
    module regular | module znz <n> | module product <mspec> <mspec>
    classify
    rad <gens> | rad1 <gens>
    suite [all | <id> <id> ...]
    witness <a> <b> <m> in <gens>
    emit dot <path>

Element literals are integers or space-free tuples like (1,0).  Generator
lists are written <6> / <6,10> for submodules of the current module, or as
vector literals (3,0) (0,5) for integer lattices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError
from .rings import RingSpec
from .modules import ModuleSpec
from .checks import CHECK_IDS


@dataclass(frozen=True)
class Step:
    kind: str
    line: int
    args: tuple = ()


@dataclass
class Plan:
    steps: list = field(default_factory=list)

    def render(self) -> str:
        return "\n".join(_render_step(s) for s in self.steps) + "\n"


def _render_step(step: Step) -> str:
    if step.kind == "ring":
        return "ring " + _render_ring_spec(step.args[0])
    if step.kind == "module":
        return "module " + _render_module_spec(step.args[0])
    if step.kind == "classify":
        return "classify"
    if step.kind in ("rad", "rad1"):
        return f"{step.kind} " + _render_gens(step.args[0])
    if step.kind == "suite":
        ids = step.args[0]
        return "suite " + (" ".join(ids) if ids else "all")
    if step.kind == "witness":
        a, b, m, gens, lattice = step.args
        gens_txt = (
            " ".join(_render_literal(g) for g in gens)
            if lattice
            else _render_gens(gens)
        )
        return f"witness {_render_literal(a)} {_render_literal(b)} {_render_literal(m)} in {gens_txt}"
    if step.kind == "emit_dot":
        return f"emit dot {step.args[0]}"
    raise ParseError(f"unrenderable step kind {step.kind!r}")


def _render_ring_spec(spec: RingSpec) -> str:
    if spec.kind == "zn":
        return f"zn {spec.n}"
    if spec.kind == "integers":
        return "integers"
    if spec.kind == "polyquot":
        return f"polyquot {spec.n} " + " ".join(str(c) for c in spec.poly)
    if spec.kind == "product":
        return "product " + " ".join(_render_ring_spec(f) for f in spec.factors)
    raise ParseError(f"unrenderable ring spec {spec.kind!r}")


def _render_module_spec(spec: ModuleSpec) -> str:
    if spec.kind == "regular":
        return "regular"
    if spec.kind == "znz":
        return f"znz {spec.n}"
    if spec.kind == "product":
        return "product " + " ".join(_render_module_spec(f) for f in spec.factors)
    raise ParseError(f"unrenderable module spec {spec.kind!r}")


def _render_literal(lit) -> str:
    if isinstance(lit, tuple):
        return "(" + ",".join(str(x) for x in lit) + ")"
    return str(lit)


def _render_gens(gens) -> str:
    return "<" + ",".join(_render_literal(g) for g in gens) + ">"


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def parse_script(text: str) -> Plan:
    plan = Plan()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        rest = tokens[1:]
        if head == "ring":
            spec, leftover = _parse_ring_spec(rest, lineno)
            _expect_empty(leftover, lineno)
            plan.steps.append(Step("ring", lineno, (spec,)))
        elif head == "module":
            spec, leftover = _parse_module_spec(rest, lineno)
            _expect_empty(leftover, lineno)
            plan.steps.append(Step("module", lineno, (spec,)))
        elif head == "classify":
            _expect_empty(rest, lineno)
            plan.steps.append(Step("classify", lineno))
        elif head in ("rad", "rad1"):
            gens = _parse_gen_list(rest, lineno)
            plan.steps.append(Step(head, lineno, (gens,)))
        elif head == "suite":
            ids = _parse_suite_ids(rest, lineno)
            plan.steps.append(Step("suite", lineno, (ids,)))
        elif head == "witness":
            plan.steps.append(Step("witness", lineno, _parse_witness(rest, lineno)))
        elif head == "emit":
            if len(rest) != 2 or rest[0] != "dot":
                raise ParseError("expected: emit dot <path>", lineno)
            plan.steps.append(Step("emit_dot", lineno, (rest[1],)))
        else:
            raise ParseError(f"unknown command {head!r}", lineno)
    return plan


def _expect_empty(tokens, lineno):
    if tokens:
        raise ParseError(f"unexpected trailing tokens: {' '.join(tokens)}", lineno)


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def _parse_ring_spec(tokens, lineno):
    if not tokens:
        raise ParseError("missing ring kind", lineno)
    kind, rest = tokens[0], tokens[1:]
    if kind == "zn":
        if not rest:
            raise ParseError("zn needs a modulus", lineno)
        n = _parse_int(rest[0], lineno)
        if n < 2:
            raise ParseError("zero ring rejected: zn needs n >= 2", lineno)
        return RingSpec.zn(n), rest[1:]
    if kind == "integers":
        return RingSpec.integers(), rest
    if kind == "polyquot":
        if not rest:
            raise ParseError("polyquot needs a base modulus", lineno)
        n = _parse_int(rest[0], lineno)
        if n < 2:
            raise ParseError("polyquot base needs n >= 2", lineno)
        coeffs = []
        rest = rest[1:]
        while rest and _is_int(rest[0]):
            coeffs.append(int(rest[0]))
            rest = rest[1:]
        if len(coeffs) < 2 or coeffs[-1] != 1:
            raise ParseError("polyquot polynomial must be monic of degree >= 1", lineno)
        return RingSpec.polyquot(n, coeffs), rest
    if kind == "product":
        first, rest = _parse_ring_spec(rest, lineno)
        second, rest = _parse_ring_spec(rest, lineno)
        return RingSpec.product(first, second), rest
    raise ParseError(f"unknown ring kind {kind!r}", lineno)


def _parse_module_spec(tokens, lineno):
    if not tokens:
        raise ParseError("missing module kind", lineno)
    kind, rest = tokens[0], tokens[1:]
    if kind == "regular":
        return ModuleSpec.regular(), rest
    if kind == "znz":
        if not rest:
            raise ParseError("znz needs a modulus", lineno)
        n = _parse_int(rest[0], lineno)
        if n < 2:
            raise ParseError("znz carrier needs n >= 2", lineno)
        return ModuleSpec.znz(n), rest[1:]
    if kind == "product":
        first, rest = _parse_module_spec(rest, lineno)
        second, rest = _parse_module_spec(rest, lineno)
        return ModuleSpec.product(first, second), rest
    raise ParseError(f"unknown module kind {kind!r}", lineno)


def _is_int(token: str) -> bool:
    try:
        int(token)
        return True
    except ValueError:
        return False


def _parse_literal(token: str, lineno: int):
    """An element literal: integer, or a space-free tuple like (1,0)."""
    if token.startswith("(") and token.endswith(")"):
        inner = token[1:-1]
        if not inner:
            raise ParseError("empty tuple literal", lineno)
        return tuple(_parse_int(x, lineno) for x in inner.split(","))
    return _parse_int(token, lineno)


def _parse_gen_list(tokens, lineno):
    """<g> / <g1,g2> bracket form, or bare literals."""
    if not tokens:
        raise ParseError("missing generator list", lineno)
    joined = " ".join(tokens)
    if joined.startswith("<") and joined.endswith(">"):
        inner = joined[1:-1].replace(" ", "")
        if not inner:
            return ()
        parts = _split_top_level(inner, lineno)
        return tuple(_parse_literal(p, lineno) for p in parts)
    return tuple(_parse_literal(t, lineno) for t in tokens)


def _split_top_level(text: str, lineno: int):
    """Split on commas that are not inside parentheses."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses in generator list", lineno)
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise ParseError("unbalanced parentheses in generator list", lineno)
    parts.append("".join(current))
    return [p for p in parts if p]


def _parse_suite_ids(tokens, lineno):
    if not tokens or tokens == ["all"]:
        return ()
    for t in tokens:
        if t not in CHECK_IDS:
            raise ParseError(f"unknown check id {t!r}", lineno)
    return tuple(tokens)


def parse_family_file(text: str):
    """Instance list syntax: one `<ring-spec> | <module-spec>` per line."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "|" not in line:
            raise ParseError("expected '<ring-spec> | <module-spec>'", lineno)
        ring_part, module_part = line.split("|", 1)
        ring_spec, leftover = _parse_ring_spec(ring_part.split(), lineno)
        _expect_empty(leftover, lineno)
        module_spec, leftover = _parse_module_spec(module_part.split(), lineno)
        _expect_empty(leftover, lineno)
        pairs.append((ring_spec, module_spec))
    return pairs


def _parse_witness(tokens, lineno):
    if "in" not in tokens:
        raise ParseError("witness needs: witness <a> <b> <m> in <gens>", lineno)
    split = tokens.index("in")
    before, after = tokens[:split], tokens[split + 1 :]
    if len(before) != 3:
        raise ParseError("witness needs exactly a, b and m before 'in'", lineno)
    a = _parse_literal(before[0], lineno)
    b = _parse_literal(before[1], lineno)
    m = _parse_literal(before[2], lineno)
    if not after:
        raise ParseError("witness needs generators after 'in'", lineno)
    joined = " ".join(after)
    if joined.startswith("<"):
        gens = _parse_gen_list(after, lineno)
        return (a, b, m, gens, False)
    gens = tuple(_parse_literal(t, lineno) for t in after)
    if not all(isinstance(g, tuple) for g in gens):
        raise ParseError("lattice generators must be vector literals like (3,0)", lineno)
    return (a, b, m, gens, True)
