"""
Semiring Engine - Archetype Structures
Exact-arithmetic tuple structures over the number systems Z0, Q0, Z, Q (R0/R carried by
rational stand-ins), Z_n and finite table factors, with subset descriptors replayed on grids
"""

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Dict, List, Any, Optional, Tuple, Sequence, Union

from algebra_models import (
    Characteristic, CharacteristicKind, KindFlag, Verdict, TypeMismatch, UnknownKind, AxiomViolation,
)
from engine_config import engine_config
from finite_structures import Structure, FiniteMagma, ElementClasses, characteristic as table_characteristic

logger = logging.getLogger(__name__)

Element = Tuple[Any, ...]


class FactorKind(Enum):
    Z0 = "Z0"
    Q0 = "Q0"
    R0 = "R0"
    Z = "Z"
    Q = "Q"
    R = "R"
    ZMOD = "Zn"
    FINITE = "finite"


NONNEG_KINDS = {FactorKind.Z0, FactorKind.Q0, FactorKind.R0}
INTEGRAL_KINDS = {FactorKind.Z0, FactorKind.Z}
GROUP_KINDS = {FactorKind.Z, FactorKind.Q, FactorKind.R, FactorKind.ZMOD}


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


@dataclass(frozen=True)
class Factor:
    kind: FactorKind
    modulus: Optional[int] = None
    structure: Optional[Structure] = field(default=None, compare=False)

    @classmethod
    def parse(cls, tag: str) -> 'Factor':
        tag = str(tag).strip()
        for kind in (FactorKind.Z0, FactorKind.Q0, FactorKind.R0, FactorKind.Z, FactorKind.Q, FactorKind.R):
            if tag == kind.value:
                return cls(kind)
        if tag.startswith("Z") and tag[1:].isdigit() and int(tag[1:]) >= 2:
            return cls(FactorKind.ZMOD, int(tag[1:]))
        raise UnknownKind(f"unknown archetype tag {tag!r}", path="tags")

    @classmethod
    def finite(cls, structure: Structure) -> 'Factor':
        return cls(FactorKind.FINITE, structure.n, structure)

    @property
    def tag(self) -> str:
        if self.kind == FactorKind.ZMOD:
            return f"Z{self.modulus}"
        if self.kind == FactorKind.FINITE:
            return self.structure.name or f"finite{self.modulus}"
        return self.kind.value

    @property
    def zero(self):
        if self.kind == FactorKind.FINITE:
            return self.structure.label(self.structure.zero)
        return 0 if self.kind == FactorKind.ZMOD else Fraction(0)

    @property
    def one(self):
        if self.kind == FactorKind.FINITE:
            s = self.structure
            return None if s.one is None else s.label(s.one)
        return 1 if self.kind == FactorKind.ZMOD else Fraction(1)

    def add(self, x, y):
        if self.kind == FactorKind.ZMOD:
            return (x + y) % self.modulus
        if self.kind == FactorKind.FINITE:
            s = self.structure
            return s.label(s.plus(s.index(x), s.index(y)))
        return x + y

    def mul(self, x, y):
        if self.kind == FactorKind.ZMOD:
            return (x * y) % self.modulus
        if self.kind == FactorKind.FINITE:
            s = self.structure
            return s.label(s.times(s.index(x), s.index(y)))
        return x * y

    def neg(self, x):
        """Additive inverse, or None when it does not exist in the factor"""
        if self.kind == FactorKind.ZMOD:
            return (-x) % self.modulus
        if self.kind == FactorKind.FINITE:
            s = self.structure
            i = s.index(x)
            for j in range(s.n):
                if s.plus(i, j) == s.zero:
                    return s.label(j)
            return None
        if self.kind in NONNEG_KINDS:
            return Fraction(0) if x == 0 else None
        return -x

    def inverse(self, x):
        """Multiplicative inverse, or None"""
        if self.kind == FactorKind.ZMOD:
            for y in range(self.modulus):
                if (x * y) % self.modulus == 1 % self.modulus:
                    return y
            return None
        if self.kind == FactorKind.FINITE:
            s = self.structure
            if s.one is None:
                return None
            i = s.index(x)
            for j in range(s.n):
                if s.times(i, j) == s.one and s.times(j, i) == s.one:
                    return s.label(j)
            return None
        if x == 0:
            return None
        y = 1 / Fraction(x)
        return y if self.contains(y) else None

    def contains(self, x) -> bool:
        if self.kind == FactorKind.FINITE:
            return isinstance(x, str) and x in self.structure.labels
        if self.kind == FactorKind.ZMOD:
            return isinstance(x, int) and 0 <= x < self.modulus
        if not isinstance(x, (int, Fraction)):
            return False
        x = Fraction(x)
        if self.kind in INTEGRAL_KINDS and x.denominator != 1:
            return False
        if self.kind in NONNEG_KINDS and x < 0:
            return False
        return True

    def coerce(self, value):
        """Parse a JSON value into a factor element"""
        if self.kind == FactorKind.FINITE:
            label = str(value)
            if label not in self.structure.labels:
                raise TypeMismatch(f"{label!r} is not an element of {self.tag}", path="element")
            return label
        try:
            x = Fraction(str(value))
        except (ValueError, ZeroDivisionError):
            raise TypeMismatch(f"{value!r} is not a number", path="element")
        if self.kind == FactorKind.ZMOD:
            if x.denominator != 1:
                raise TypeMismatch(f"{value!r} is not an integer", path="element")
            return int(x) % self.modulus
        if not self.contains(x):
            raise TypeMismatch(f"{value!r} is not in {self.tag}", path="element")
        return x

    @property
    def is_strict(self) -> bool:
        if self.kind == FactorKind.FINITE:
            return self.structure.has(KindFlag.STRICT)
        return self.kind in NONNEG_KINDS

    @property
    def is_group_like(self) -> bool:
        if self.kind == FactorKind.FINITE:
            return self.structure.has(KindFlag.RING)
        return self.kind in GROUP_KINDS

    @property
    def is_field(self) -> bool:
        if self.kind == FactorKind.FINITE:
            return self.structure.has(KindFlag.FIELD)
        if self.kind == FactorKind.ZMOD:
            return _is_prime(self.modulus)
        return self.kind in (FactorKind.Q, FactorKind.R)

    @property
    def is_semifield(self) -> bool:
        if self.kind == FactorKind.FINITE:
            return self.structure.has(KindFlag.SEMIFIELD)
        return self.kind in NONNEG_KINDS

    @property
    def characteristic(self) -> int:
        if self.kind == FactorKind.ZMOD:
            return self.modulus
        if self.kind == FactorKind.FINITE:
            c = table_characteristic(self.structure)
            return c.modulus if c.kind == CharacteristicKind.FINITE else -1
        return 0

    def sample(self) -> List[Any]:
        if self.kind == FactorKind.FINITE:
            return list(self.structure.labels[:12])
        if self.kind == FactorKind.ZMOD:
            return list(range(min(self.modulus, 12)))
        return [x for x in engine_config.grid if self.contains(x)]

    def render(self, x) -> str:
        return str(x)


# ---------------------------------------------------------------------------
# Subset descriptors
# ---------------------------------------------------------------------------

COMPONENT_KINDS = ("all", "zero", "nonneg", "positive", "integers", "nonneg_integers",
                   "multiples", "nonneg_multiples", "values")


@dataclass(frozen=True)
class ComponentSet:
    kind: str
    param: Tuple[Any, ...] = ()

    @classmethod
    def parse(cls, text: str) -> 'ComponentSet':
        name, _, rest = str(text).partition(":")
        if name not in COMPONENT_KINDS:
            raise UnknownKind(f"unknown component set {name!r}", path="witness")
        if name in ("multiples", "nonneg_multiples"):
            return cls(name, (int(rest),))
        if name == "values":
            return cls(name, tuple(v for v in rest.split(",") if v != ""))
        return cls(name)

    def render(self) -> str:
        if self.kind in ("multiples", "nonneg_multiples"):
            return f"{self.kind}:{self.param[0]}"
        if self.kind == "values":
            return "values:" + ",".join(str(v) for v in self.param)
        return self.kind

    def values(self, factor: Factor) -> List[Any]:
        return [factor.coerce(v) for v in self.param]

    def contains(self, factor: Factor, x) -> bool:
        if not factor.contains(x):
            return False
        k = self.kind
        if k == "all":
            return True
        if k == "zero":
            return x == factor.zero
        if k == "values":
            return x in self.values(factor)
        if factor.kind in (FactorKind.ZMOD, FactorKind.FINITE):
            if k in ("multiples", "nonneg_multiples") and factor.kind == FactorKind.ZMOD:
                return x % gcd(self.param[0], factor.modulus) == 0
            return k in ("nonneg", "integers", "nonneg_integers")
        x = Fraction(x)
        if k == "nonneg":
            return x >= 0
        if k == "positive":
            return x > 0
        if k == "integers":
            return x.denominator == 1
        if k == "nonneg_integers":
            return x.denominator == 1 and x >= 0
        if k == "multiples":
            return x.denominator == 1 and x.numerator % self.param[0] == 0
        if k == "nonneg_multiples":
            return x.denominator == 1 and x >= 0 and x.numerator % self.param[0] == 0
        return False

    def sample(self, factor: Factor) -> List[Any]:
        if self.kind == "values":
            return self.values(factor)
        if self.kind == "zero":
            return [factor.zero]
        base = factor.sample()
        if self.kind in ("multiples", "nonneg_multiples") and factor.kind not in (FactorKind.ZMOD, FactorKind.FINITE):
            p = self.param[0]
            base = base + [Fraction(p * k) for k in (1, 2, 3, -1, -2)]
        seen, out = set(), []
        for x in base:
            if x not in seen and self.contains(factor, x):
                seen.add(x)
                out.append(x)
        return out

    def has_nontrivial_group(self, factor: Factor) -> bool:
        """Whether this component set contains an additive group other than {0}"""
        k = self.kind
        if k == "zero":
            return False
        if k == "all":
            return factor.is_group_like
        if k == "values":
            vals = set(self.values(factor))
            if len(vals) < 2:
                return False
            return all(factor.neg(x) in vals for x in vals) and \
                all(factor.add(x, y) in vals for x in vals for y in vals)
        if factor.kind in (FactorKind.Z, FactorKind.Q, FactorKind.R):
            return k in ("integers", "multiples")
        if factor.kind == FactorKind.ZMOD:
            return k == "multiples" and gcd(self.param[0], factor.modulus) != factor.modulus
        return False


@dataclass(frozen=True)
class ProductSubset:
    components: Tuple[ComponentSet, ...]
    adjoin_zero: bool = False

    @classmethod
    def parse(cls, data: Union[Dict[str, Any], Sequence[str]]) -> 'ProductSubset':
        if isinstance(data, dict):
            comps = data.get('components', [])
            adjoin = bool(data.get('adjoin_zero', False))
        else:
            comps, adjoin = data, False
        return cls(tuple(ComponentSet.parse(c) for c in comps), adjoin)

    def to_dict(self) -> Dict[str, Any]:
        return {'components': [c.render() for c in self.components], 'adjoin_zero': self.adjoin_zero}

    def contains(self, arch: 'TupleArchetype', x: Element) -> bool:
        if len(x) != len(self.components):
            return False
        if self.adjoin_zero and x == arch.zero():
            return True
        return all(c.contains(f, v) for c, f, v in zip(self.components, arch.component_factors, x))

    def sample(self, arch: 'TupleArchetype', limit: Optional[int] = None) -> List[Element]:
        """Bounded grid of members; deterministic for a given seed"""
        limit = limit or engine_config.materialize_cap
        axes = [c.sample(f) for c, f in zip(self.components, arch.component_factors)]
        total = 1
        for axis in axes:
            total *= max(len(axis), 1)
        if total <= limit:
            points = [tuple(p) for p in product(*axes)]
        else:
            rng = random.Random(engine_config.seed)
            points = sorted({tuple(rng.choice(a) for a in axes) for _ in range(limit)}, key=str)
            logger.debug("sampled %d of %d grid points", len(points), total)
        if self.adjoin_zero and arch.zero() not in points:
            points.insert(0, arch.zero())
        return points

    def has_nontrivial_group(self, arch: 'TupleArchetype') -> bool:
        return any(c.has_nontrivial_group(f) for c, f in zip(self.components, arch.component_factors))


# ---------------------------------------------------------------------------
# Tuple archetypes
# ---------------------------------------------------------------------------

class TupleArchetype:
    """Componentwise-additive structure over exact factors; arithmetic only, no search"""

    is_archetype = True

    def __init__(self, factors: Sequence[Factor], name: str = ""):
        self.factors = list(factors)
        self.name = name or "x".join(f.tag for f in self.factors)

    @property
    def component_factors(self) -> List[Factor]:
        return self.factors

    @property
    def arity(self) -> int:
        return len(self.component_factors)

    @property
    def tags(self) -> List[str]:
        return [f.tag for f in self.factors]

    def zero(self) -> Element:
        return tuple(f.zero for f in self.component_factors)

    def one(self) -> Optional[Element]:
        ones = tuple(f.one for f in self.component_factors)
        return None if any(o is None for o in ones) else ones

    def add(self, x: Element, y: Element) -> Element:
        return tuple(f.add(a, b) for f, a, b in zip(self.component_factors, x, y))

    def mul(self, x: Element, y: Element) -> Element:
        raise NotImplementedError

    def neg(self, x: Element) -> Optional[Element]:
        out = tuple(f.neg(a) for f, a in zip(self.component_factors, x))
        return None if any(v is None for v in out) else out

    def contains(self, x) -> bool:
        return isinstance(x, tuple) and len(x) == self.arity and \
            all(f.contains(v) for f, v in zip(self.component_factors, x))

    def coerce(self, value) -> Element:
        values = list(value)
        if len(values) != self.arity:
            raise TypeMismatch(f"expected {self.arity} components, got {len(values)}", path="element")
        return tuple(f.coerce(v) for f, v in zip(self.component_factors, values))

    def render(self, x: Element) -> List[str]:
        return [str(v) for v in x]

    def full_subset(self) -> ProductSubset:
        return ProductSubset(tuple(ComponentSet("all") for _ in self.component_factors))

    def grid(self, limit: Optional[int] = None) -> List[Element]:
        return self.full_subset().sample(self, limit)

    def is_commutative(self) -> bool:
        return True

    def characteristic(self) -> Characteristic:
        chars = [f.characteristic for f in self.factors]
        if any(c == 0 for c in chars):
            return Characteristic(CharacteristicKind.ZERO)
        if any(c < 0 for c in chars):
            return Characteristic(CharacteristicKind.UNDEFINED)
        m = 1
        for c in chars:
            m = m * c // gcd(m, c)
        return Characteristic(CharacteristicKind.FINITE, m)

    def is_strict(self) -> Verdict:
        for i, f in enumerate(self.component_factors):
            if f.is_strict:
                continue
            for v in f.sample():
                w = f.neg(v)
                if v != f.zero and w is not None:
                    a = list(self.zero())
                    b = list(self.zero())
                    a[i], b[i] = v, w
                    return Verdict(False, (self.render(tuple(a)), self.render(tuple(b))),
                                   f"component {i} has additive inverses")
        return Verdict(True, None, "every factor is zero-sum-free")

    def is_s_semigroup(self) -> Verdict:
        """Additive S-semigroup test by factor analysis"""
        for i, f in enumerate(self.component_factors):
            if not f.is_group_like:
                continue
            comps = [ComponentSet("zero")] * self.arity
            if self.arity > 1:
                comps[i] = ComponentSet("all")
            elif f.kind == FactorKind.ZMOD:
                divisors = [d for d in range(2, f.modulus) if f.modulus % d == 0]
                if not divisors:
                    continue
                comps[i] = ComponentSet("multiples", (divisors[0],))
            elif f.kind == FactorKind.Z:
                comps[i] = ComponentSet("multiples", (2,))
            else:
                comps[i] = ComponentSet("integers")
            return Verdict(True, ProductSubset(tuple(comps)).to_dict())
        return Verdict(False, None, "no group-like factor; zero-sum-free addition")

    def classify_elements(self, candidates: Sequence[Any]) -> ElementClasses:
        elems = [self.coerce(c) if not isinstance(c, tuple) else c for c in candidates]
        zero = self.zero()
        one = self.one()
        pairs = [(x, y) for x in elems for y in elems
                 if x != zero and y != zero and self.mul(x, y) == zero]
        divisors = []
        for x, y in pairs:
            for z in (x, y):
                if z not in divisors:
                    divisors.append(z)
        idempotents = [x for x in elems if self.mul(x, x) == x]
        units, inverses = [], {}
        if one is not None:
            for x in elems:
                y = self.inverse(x)
                if y is not None:
                    units.append(x)
                    inverses[element_key(self.render(x))] = self.render(y)
        return ElementClasses([self.render(x) for x in divisors],
                              [(self.render(x), self.render(y)) for x, y in pairs],
                              [self.render(x) for x in idempotents],
                              [self.render(x) for x in units], inverses)

    def inverse(self, x: Element) -> Optional[Element]:
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'kind': self.__class__.__name__, 'tags': self.tags}


class ArchetypeProduct(TupleArchetype):
    """Direct (possibly mixed) product with componentwise multiplication"""

    def mul(self, x: Element, y: Element) -> Element:
        return tuple(f.mul(a, b) for f, a, b in zip(self.factors, x, y))

    def inverse(self, x: Element) -> Optional[Element]:
        out = tuple(f.inverse(a) for f, a in zip(self.factors, x))
        return None if any(v is None for v in out) else out


class ArchetypeMatrix(TupleArchetype):
    """k×k matrices over one factor, stored row-major"""

    def __init__(self, base: Factor, k: int, name: str = ""):
        super().__init__([base], name or f"M{k}({base.tag})")
        self.base = base
        self.k = k

    @property
    def component_factors(self) -> List[Factor]:
        return [self.base] * (self.k * self.k)

    @property
    def tags(self) -> List[str]:
        return [self.base.tag]

    def one(self) -> Optional[Element]:
        b = self.base
        if b.one is None:
            return None
        return tuple(b.one if i == j else b.zero for i in range(self.k) for j in range(self.k))

    def mul(self, x: Element, y: Element) -> Element:
        k, b = self.k, self.base
        out = []
        for i in range(k):
            for j in range(k):
                acc = b.zero
                for t in range(k):
                    acc = b.add(acc, b.mul(x[i * k + t], y[t * k + j]))
                out.append(acc)
        return tuple(out)

    def is_commutative(self) -> bool:
        return self.k == 1

    def render(self, x: Element) -> List[List[str]]:
        k = self.k
        return [[str(x[i * k + j]) for j in range(k)] for i in range(k)]

    def coerce(self, value) -> Element:
        if value and isinstance(value[0], (list, tuple)):
            value = [v for row in value for v in row]
        return super().coerce(value)

    def characteristic(self) -> Characteristic:
        return TupleArchetype(self.component_factors[:1]).characteristic()


class ArchetypeGroupAlgebra(TupleArchetype):
    """Coefficient tuples indexed by a finite group; multiplication is convolution"""

    def __init__(self, coeff: Factor, group: FiniteMagma, name: str = ""):
        super().__init__([coeff], name or f"{coeff.tag}[{','.join(group.labels)}]")
        self.coeff = coeff
        self.group = group
        self.identity = group.identity()
        if self.identity is None:
            raise AxiomViolation("carrier identity", None)

    @property
    def component_factors(self) -> List[Factor]:
        return [self.coeff] * self.group.n

    @property
    def tags(self) -> List[str]:
        return [self.coeff.tag]

    def one(self) -> Optional[Element]:
        c = self.coeff
        return tuple(c.one if g == self.identity else c.zero for g in range(self.group.n))

    def mul(self, x: Element, y: Element) -> Element:
        c = self.coeff
        out = [c.zero] * self.group.n
        for g, a in enumerate(x):
            if a == c.zero:
                continue
            for h, b in enumerate(y):
                if b == c.zero:
                    continue
                k = self.group.op(g, h)
                out[k] = c.add(out[k], c.mul(a, b))
        return tuple(out)

    def is_commutative(self) -> bool:
        return bool(self.group.is_commutative())

    def render(self, x: Element) -> Dict[str, str]:
        return {self.group.labels[g]: str(a) for g, a in enumerate(x) if a != self.coeff.zero}

    def coerce(self, value) -> Element:
        if isinstance(value, dict):
            c = self.coeff
            out = [c.zero] * self.group.n
            for label, coeff in value.items():
                out[self.group.index(label)] = c.coerce(coeff)
            return tuple(out)
        return super().coerce(value)

    def characteristic(self) -> Characteristic:
        return TupleArchetype([self.coeff]).characteristic()


def element_key(rendered) -> str:
    """Stable text key for a rendered archetype element"""
    if isinstance(rendered, dict):
        return "+".join(f"{c}*{g}" for g, c in rendered.items()) or "0"
    if rendered and isinstance(rendered[0], list):
        return ";".join(",".join(row) for row in rendered)
    return "(" + ",".join(rendered) + ")"


def archetype_from_tags(tags: Sequence[str], name: str = "") -> ArchetypeProduct:
    return ArchetypeProduct([Factor.parse(t) for t in tags], name)
