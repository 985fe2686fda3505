"""
Semiring Engine - Constructions
Builders for lattice semirings, direct and mixed products, matrix and polynomial semirings,
group/semigroup semirings, group rings, V(S) adjunction and the standard carrier magmas
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Any, Optional, Tuple, Sequence, Union, Callable, Iterable

from sympy.combinatorics.named_groups import SymmetricGroup

from algebra_models import (
    KindFlag, Verdict, AxiomViolation, CapExceeded, NotStrict, NoUnit, NotBoolean,
    TooFewAtoms, PreconditionFailed,
)
from archetypes import (
    Factor, ArchetypeProduct, ArchetypeMatrix, ArchetypeGroupAlgebra,
)
from engine_config import engine_config
from finite_structures import (
    Structure, FiniteMagma, validate_semiring, is_s_semigroup, is_s_anti_group, closure_under,
)
from poset_lattice import (
    FiniteLattice, as_lattice, poset_from_leq, is_boolean, atoms, complements,
    chain_lattice as chain_lattice_order, power_set_lattice,
)

logger = logging.getLogger(__name__)

INFINITY = "∞"


def materialize(elements: Sequence[Any], label: Callable[[Any], str],
                add: Callable[[Any, Any], Any], mul: Callable[[Any, Any], Any], *,
                name: str = "", tags: Optional[Dict[str, Any]] = None,
                lattice: Optional[FiniteLattice] = None,
                require_additive_identity: bool = True) -> Structure:
    """Tabulate value-level operations over an explicit element list and validate"""
    cap = engine_config.materialize_cap
    if len(elements) > cap:
        raise CapExceeded(cap)
    position = {e: i for i, e in enumerate(elements)}
    add_table = [[position[add(x, y)] for y in elements] for x in elements]
    mul_table = [[position[mul(x, y)] for y in elements] for x in elements]
    return validate_semiring([label(e) for e in elements], add_table, mul_table,
                             require_additive_identity=require_additive_identity,
                             name=name, tags=tags, lattice=lattice)


# ---------------------------------------------------------------------------
# Lattice semirings
# ---------------------------------------------------------------------------

def lattice_semiring(l: FiniteLattice, name: str = "") -> Structure:
    """(join, meet) semiring of a lattice; non-distributive lattices fail validation"""
    return validate_semiring(l.labels, l.join, l.meet, name=name, lattice=l)


def chain_lattice(n: int) -> Structure:
    return lattice_semiring(chain_lattice_order(n), name=f"C{n}")


def power_set_semiring(k: Union[int, Sequence[str]]) -> Structure:
    l = power_set_lattice(k)
    size = k if isinstance(k, int) else len(k)
    return lattice_semiring(l, name=f"P({size})")


# ---------------------------------------------------------------------------
# Products
# ---------------------------------------------------------------------------

FactorLike = Union[Structure, str, Factor]


def _factor_kind(f: FactorLike) -> str:
    if isinstance(f, Structure):
        for flag in (KindFlag.FIELD, KindFlag.RING, KindFlag.SEMIFIELD):
            if f.has(flag):
                return flag.value
        return KindFlag.SEMIRING.value
    factor = f if isinstance(f, Factor) else Factor.parse(f)
    if factor.is_field:
        return KindFlag.FIELD.value
    if factor.is_group_like:
        return KindFlag.RING.value
    if factor.is_semifield:
        return KindFlag.SEMIFIELD.value
    return KindFlag.SEMIRING.value


def _product_lattice(factors: Sequence[Structure], elements: Sequence[Tuple[int, ...]],
                     labels: Sequence[str]) -> Optional[FiniteLattice]:
    if not all(f.lattice is not None for f in factors):
        return None
    pairs = [(labels[a], labels[b]) for a, x in enumerate(elements) for b, y in enumerate(elements)
             if all(f.lattice.le(i, j) for f, i, j in zip(factors, x, y))]
    return as_lattice(poset_from_leq(labels, pairs))


def direct_product(factors: Sequence[FactorLike], name: str = "",
                   tags: Optional[Dict[str, Any]] = None) -> Union[Structure, ArchetypeProduct]:
    """Componentwise product; any archetype factor makes the result a symbolic product"""
    if not factors:
        raise PreconditionFailed("direct product needs at least one factor")
    tags = dict(tags or {})
    if not all(isinstance(f, Structure) for f in factors):
        parts = [Factor.finite(f) if isinstance(f, Structure) else
                 (f if isinstance(f, Factor) else Factor.parse(f)) for f in factors]
        product_ = ArchetypeProduct(parts, name)
        product_.factor_kinds = tags.get('factor_kinds', [_factor_kind(f) for f in factors])
        return product_
    if len(factors) == 1:
        f = factors[0]
        return validate_semiring(f.labels, f.add.table, f.mul.table, name=name or f.name,
                                 tags=tags, lattice=f.lattice)
    elements = list(product(*[range(f.n) for f in factors]))
    labels = ["(" + ",".join(f.label(i) for f, i in zip(factors, x)) + ")" for x in elements]
    lattice = _product_lattice(factors, elements, labels)
    return materialize(
        elements, lambda x: "(" + ",".join(f.label(i) for f, i in zip(factors, x)) + ")",
        lambda x, y: tuple(f.plus(i, j) for f, i, j in zip(factors, x, y)),
        lambda x, y: tuple(f.times(i, j) for f, i, j in zip(factors, x, y)),
        name=name or "x".join(f.name for f in factors), tags=tags, lattice=lattice)


def mixed_direct_product(factors: Sequence[FactorLike], name: str = "") -> Union[Structure, ArchetypeProduct]:
    """Direct product of heterogeneous factors recording per-factor kind tags"""
    kinds = [_factor_kind(f) for f in factors]
    result = direct_product(factors, name, tags={'factor_kinds': kinds, 'mixed': True})
    logger.debug("mixed product %s with factor kinds %s", result.name, kinds)
    return result


# ---------------------------------------------------------------------------
# Matrix semirings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MatrixElement:
    dim: int
    entries: Tuple[Tuple[int, ...], ...]


class MatrixSemiring:
    """k×k matrices over a finite semiring with value-level operations; tables are built
    only on materialize()"""

    def __init__(self, base: Structure, k: int):
        if k < 1:
            raise PreconditionFailed("matrix dimension must be positive")
        if base.zero is None:
            raise PreconditionFailed("matrix semiring needs a base with additive identity")
        self.base = base
        self.k = k
        self.name = f"M{k}({base.name or 'S'})"

    @property
    def size(self) -> int:
        return self.base.n ** (self.k * self.k)

    def element(self, rows: Sequence[Sequence[Union[str, int]]]) -> MatrixElement:
        if len(rows) != self.k or any(len(r) != self.k for r in rows):
            raise AxiomViolation("matrix shape", {'dim': self.k})
        return MatrixElement(self.k, tuple(tuple(self.base.index(v) for v in row) for row in rows))

    def zero_matrix(self) -> MatrixElement:
        z = self.base.zero
        return MatrixElement(self.k, tuple(tuple(z for _ in range(self.k)) for _ in range(self.k)))

    def identity(self) -> Optional[MatrixElement]:
        b = self.base
        if b.one is None:
            return None
        return MatrixElement(self.k, tuple(tuple(b.one if i == j else b.zero for j in range(self.k))
                                           for i in range(self.k)))

    def add(self, x: MatrixElement, y: MatrixElement) -> MatrixElement:
        b = self.base
        return MatrixElement(self.k, tuple(tuple(b.plus(p, q) for p, q in zip(rx, ry))
                                           for rx, ry in zip(x.entries, y.entries)))

    def mul(self, x: MatrixElement, y: MatrixElement) -> MatrixElement:
        b, k = self.base, self.k
        rows = []
        for i in range(k):
            row = []
            for j in range(k):
                acc = b.times(x.entries[i][0], y.entries[0][j])
                for t in range(1, k):
                    acc = b.plus(acc, b.times(x.entries[i][t], y.entries[t][j]))
                row.append(acc)
            rows.append(tuple(row))
        return MatrixElement(k, tuple(rows))

    def label(self, x: MatrixElement) -> str:
        return "[" + ",".join("[" + ",".join(self.base.label(v) for v in row) + "]"
                              for row in x.entries) + "]"

    def rows(self, x: MatrixElement) -> List[List[str]]:
        return [[self.base.label(v) for v in row] for row in x.entries]

    def elements(self) -> Iterable[MatrixElement]:
        k = self.k
        for flat in product(range(self.base.n), repeat=k * k):
            yield MatrixElement(k, tuple(tuple(flat[i * k:(i + 1) * k]) for i in range(k)))

    def materialize(self, cap: Optional[int] = None) -> Structure:
        cap = cap or engine_config.materialize_cap
        if self.size > cap:
            raise CapExceeded(cap)
        return materialize(list(self.elements()), self.label, self.add, self.mul, name=self.name,
                           tags={'construction': 'matrix', 'dim': self.k, 'base': self.base.name})


def matrix_semiring(base: Union[Structure, str, Factor], k: int) -> Union[MatrixSemiring, ArchetypeMatrix]:
    if isinstance(base, Structure):
        return MatrixSemiring(base, k)
    return ArchetypeMatrix(base if isinstance(base, Factor) else Factor.parse(base), k)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SparsePoly:
    terms: Tuple[Tuple[int, Any], ...] = ()

    @property
    def degree(self) -> int:
        return self.terms[-1][0] if self.terms else -1

    def coefficient(self, exponent: int, zero: Any) -> Any:
        for e, c in self.terms:
            if e == exponent:
                return c
        return zero


def _coeff_ops(base: Union[Structure, Factor]) -> Tuple[Any, Callable, Callable]:
    if isinstance(base, Structure):
        return (base.label(base.zero),
                lambda x, y: base.label(base.plus(base.index(x), base.index(y))),
                lambda x, y: base.label(base.times(base.index(x), base.index(y))))
    return base.zero, base.add, base.mul


def _normalize_terms(acc: Dict[int, Any], zero: Any) -> SparsePoly:
    return SparsePoly(tuple((e, c) for e, c in sorted(acc.items()) if c != zero))


def make_poly(coeffs: Dict[int, Any], base: Union[Structure, Factor]) -> SparsePoly:
    zero, _, _ = _coeff_ops(base)
    if isinstance(base, Factor):
        coeffs = {e: base.coerce(c) for e, c in coeffs.items()}
    return _normalize_terms(dict(coeffs), zero)


def poly_add(p: SparsePoly, q: SparsePoly, base: Union[Structure, Factor]) -> SparsePoly:
    zero, add, _ = _coeff_ops(base)
    acc: Dict[int, Any] = dict(p.terms)
    for e, c in q.terms:
        acc[e] = add(acc[e], c) if e in acc else c
    return _normalize_terms(acc, zero)


def poly_mul(p: SparsePoly, q: SparsePoly, base: Union[Structure, Factor]) -> SparsePoly:
    zero, add, mul = _coeff_ops(base)
    acc: Dict[int, Any] = {}
    for e1, c1 in p.terms:
        for e2, c2 in q.terms:
            e = e1 + e2
            term = mul(c1, c2)
            acc[e] = add(acc[e], term) if e in acc else term
    return _normalize_terms(acc, zero)


class PolynomialSemiring:
    """S[x] with sparse exact coefficients; `max_degree` filters the degree-bounded spaces"""

    def __init__(self, base: Union[Structure, Factor, str], max_degree: Optional[int] = None):
        self.base = Factor.parse(base) if isinstance(base, str) else base
        self.max_degree = max_degree
        base_name = self.base.name if isinstance(self.base, Structure) else self.base.tag
        self.name = f"{base_name}[x]" if max_degree is None else f"{base_name}_{max_degree}[x]"

    def poly(self, coeffs: Dict[int, Any]) -> SparsePoly:
        p = make_poly(coeffs, self.base)
        if not self.contains(p):
            raise AxiomViolation("degree bound", {'degree': p.degree, 'max_degree': self.max_degree})
        return p

    def contains(self, p: SparsePoly) -> bool:
        return self.max_degree is None or p.degree <= self.max_degree

    def add(self, p: SparsePoly, q: SparsePoly) -> SparsePoly:
        return poly_add(p, q, self.base)

    def mul(self, p: SparsePoly, q: SparsePoly) -> SparsePoly:
        return poly_mul(p, q, self.base)

    def render(self, p: SparsePoly) -> str:
        if not p.terms:
            return "0"
        parts = []
        for e, c in p.terms:
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if not mono:
                parts.append(str(c))
            elif str(c) == "1":
                parts.append(mono)
            else:
                parts.append(f"{c}{mono}")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# Carrier magmas
# ---------------------------------------------------------------------------

def _compose_label(images: Sequence[int]) -> str:
    return "".join(str(v + 1) for v in images)


def symmetric_group(n: int) -> FiniteMagma:
    """S_n with one-line labels; (σ·τ)(x) = σ(τ(x))"""
    perms = sorted(SymmetricGroup(n).generate(), key=lambda p: p.array_form)
    index = {p: i for i, p in enumerate(perms)}
    # sympy composes left to right: p*q applies p first
    return FiniteMagma.from_function([_compose_label(p.array_form) for p in perms],
                                     lambda i, j: index[perms[j] * perms[i]])


def full_transformation(n: int) -> FiniteMagma:
    """S(n): all maps of {1..n} into itself under composition"""
    maps = list(product(range(n), repeat=n))
    index = {m: i for i, m in enumerate(maps)}
    return FiniteMagma.from_function([_compose_label(m) for m in maps],
                                     lambda i, j: index[tuple(maps[i][maps[j][x]] for x in range(n))])


def cyclic_group(n: int) -> FiniteMagma:
    labels = ["1", "g"] + [f"g^{i}" for i in range(2, n)]
    return FiniteMagma.from_function(labels[:n], lambda i, j: (i + j) % n)


def dihedral(n: int) -> FiniteMagma:
    """Symmetries of the n-gon; element r^a s^f stored at index f*n + a"""
    def label(a: int, f: int) -> str:
        rot = "" if a == 0 else ("r" if a == 1 else f"r^{a}")
        if f == 0:
            return rot or "1"
        return f"{rot}s"

    def op(i: int, j: int) -> int:
        a, f = i % n, i // n
        b, g = j % n, j // n
        c = (a + (-b if f else b)) % n
        return ((f + g) % 2) * n + c

    return FiniteMagma.from_function([label(a, f) for f in range(2) for a in range(n)], op)


def zmod_ring(n: int) -> Structure:
    labels = [str(i) for i in range(n)]
    return validate_semiring(labels, [[(i + j) % n for j in range(n)] for i in range(n)],
                             [[(i * j) % n for j in range(n)] for i in range(n)], name=f"Z{n}")


# ---------------------------------------------------------------------------
# Group semirings and group rings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FormalSum:
    """Finitely supported coefficient map carrier index -> coefficient index, zeros omitted"""
    coeffs: Tuple[Tuple[int, int], ...] = ()

    def support(self) -> List[int]:
        return [g for g, _ in self.coeffs]


class GroupSemiring:
    """Formal sums over a monoid carrier with coefficients in a finite semiring.

    mode='semiring' requires a strict commutative coefficient semiring with unit;
    mode='ring' requires a ring with unit."""

    def __init__(self, coeff: Structure, carrier: FiniteMagma, mode: str = "semiring", name: str = ""):
        if coeff.one is None:
            raise NoUnit(f"{coeff.name or 'coefficient semiring'} has no multiplicative identity")
        if mode == "semiring":
            if not coeff.has(KindFlag.STRICT):
                raise NotStrict(f"{coeff.name or 'coefficient semiring'} is not strict")
            if not coeff.has(KindFlag.COMMUTATIVE_MUL):
                raise PreconditionFailed("coefficient semiring must be commutative")
        elif mode == "ring":
            if not coeff.has(KindFlag.RING):
                raise PreconditionFailed("group ring needs a ring of coefficients")
        else:
            raise PreconditionFailed(f"unknown group semiring mode {mode!r}")
        self.identity_index = carrier.identity()
        if self.identity_index is None:
            raise AxiomViolation("carrier identity", None)
        self.coeff = coeff
        self.carrier = carrier
        self.mode = mode
        self.name = name or f"{coeff.name}[{'G' if len(carrier.labels) > 8 else ','.join(carrier.labels)}]"
        self.tags: Dict[str, Any] = {'construction': 'group_ring' if mode == 'ring' else 'group_semiring'}
        if carrier.n <= 64 and is_s_semigroup(carrier):
            self.tags['s-group-semiring'] = True
        if carrier.n <= 64 and is_s_anti_group(carrier):
            self.tags['s-anti-group-semiring'] = True

    @property
    def size(self) -> int:
        return self.coeff.n ** self.carrier.n

    def _make(self, acc: Dict[int, int]) -> FormalSum:
        z = self.coeff.zero
        return FormalSum(tuple(sorted((g, c) for g, c in acc.items() if c != z)))

    def element(self, terms: Dict[str, str]) -> FormalSum:
        acc: Dict[int, int] = {}
        c = self.coeff
        for g_label, coeff_label in terms.items():
            g = self.carrier.index(g_label)
            value = c.index(coeff_label)
            acc[g] = c.plus(acc[g], value) if g in acc else value
        return self._make(acc)

    def zero(self) -> FormalSum:
        return FormalSum()

    def one(self) -> FormalSum:
        return self.embed_carrier(self.identity_index)

    def embed_carrier(self, g: Union[int, str]) -> FormalSum:
        return self._make({self.carrier.index(g): self.coeff.one})

    def embed_coeff(self, s: Union[int, str]) -> FormalSum:
        return self._make({self.identity_index: self.coeff.index(s)})

    def add(self, x: FormalSum, y: FormalSum) -> FormalSum:
        c = self.coeff
        acc = dict(x.coeffs)
        for g, v in y.coeffs:
            acc[g] = c.plus(acc[g], v) if g in acc else v
        return self._make(acc)

    def mul(self, x: FormalSum, y: FormalSum) -> FormalSum:
        c, op = self.coeff, self.carrier.op
        acc: Dict[int, int] = {}
        for g, a in x.coeffs:
            for h, b in y.coeffs:
                k = op(g, h)
                term = c.times(a, b)
                acc[k] = c.plus(acc[k], term) if k in acc else term
        return self._make(acc)

    def scalar(self, s: Union[int, str], x: FormalSum) -> FormalSum:
        c = self.coeff
        si = c.index(s)
        return self._make({g: c.times(si, v) for g, v in x.coeffs})

    def in_carrier(self, x: FormalSum) -> bool:
        """Whether x is 1·g for a carrier element g"""
        return len(x.coeffs) == 1 and x.coeffs[0][1] == self.coeff.one

    def label(self, x: FormalSum) -> str:
        if not x.coeffs:
            return "0"
        parts = []
        for g, v in x.coeffs:
            g_label = self.carrier.labels[g]
            parts.append(g_label if v == self.coeff.one else f"{self.coeff.label(v)}*{g_label}")
        return "+".join(parts)

    def elements(self) -> Iterable[FormalSum]:
        for coeffs in product(range(self.coeff.n), repeat=self.carrier.n):
            yield self._make(dict(enumerate(coeffs)))

    def materialize(self, cap: Optional[int] = None) -> Structure:
        cap = cap or engine_config.materialize_cap
        if self.size > cap:
            raise CapExceeded(cap)
        return materialize(list(self.elements()), self.label, self.add, self.mul,
                           name=self.name, tags=dict(self.tags))

    def non_commuting_pair(self) -> Optional[Tuple[str, str]]:
        t = self.carrier.table
        for g, h in product(range(self.carrier.n), repeat=2):
            if t[g][h] != t[h][g]:
                return self.carrier.labels[g], self.carrier.labels[h]
        return None

    def find_zero_divisors(self, support_cap: Optional[int] = None) -> Verdict:
        """Search sums supported on at most two carrier elements; translating by carrier
        units lets both supports contain the identity"""
        support_cap = support_cap or engine_config.group_support_cap
        c = self.coeff
        nonzero = [v for v in range(c.n) if v != c.zero]
        e = self.identity_index
        candidates: List[FormalSum] = []
        for a in nonzero:
            candidates.append(self._make({e: a}))
        if support_cap >= 2:
            for g in range(self.carrier.n):
                if g == e:
                    continue
                for a, b in product(nonzero, repeat=2):
                    candidates.append(self._make({e: a, g: b}))
        for x in candidates:
            for y in candidates:
                if not self.mul(x, y).coeffs:
                    return Verdict(True, (self.label(x), self.label(y)), f"support <= {support_cap}")
        return Verdict(False, None, f"none with support <= {support_cap} (search incomplete)")


def group_semiring(coeff: Structure, carrier: FiniteMagma, name: str = "") -> GroupSemiring:
    return GroupSemiring(coeff, carrier, mode="semiring", name=name)


def group_ring(coeff: Union[int, Structure, str, Factor], carrier: FiniteMagma,
               name: str = "") -> Union[GroupSemiring, ArchetypeGroupAlgebra]:
    """Z_n G (finite, lazily tabulated) or a tag coefficient group algebra such as QG"""
    if isinstance(coeff, int):
        coeff = zmod_ring(coeff)
    if isinstance(coeff, Structure):
        return GroupSemiring(coeff, carrier, mode="ring", name=name)
    factor = coeff if isinstance(coeff, Factor) else Factor.parse(coeff)
    return ArchetypeGroupAlgebra(factor, carrier, name)


@dataclass
class AtomFactorization:
    alpha: FormalSum
    beta: FormalSum
    k: int
    r: int
    atom: str
    partner: str
    target: int
    semiring: GroupSemiring = field(repr=False)

    def verify(self) -> Verdict:
        gs = self.semiring
        product_ = gs.mul(self.alpha, self.beta)
        if product_ != gs.embed_carrier(self.target):
            return Verdict(False, gs.label(product_), "alpha·beta differs from the target")
        if gs.in_carrier(self.alpha) or gs.in_carrier(self.beta):
            return Verdict(False, None, "factor lies in the carrier group")
        return Verdict(True, {'alpha': gs.label(self.alpha), 'beta': gs.label(self.beta)})

    def to_dict(self) -> Dict[str, Any]:
        gs = self.semiring
        return {'alpha': gs.label(self.alpha), 'beta': gs.label(self.beta), 'k': self.k, 'r': self.r,
                'atom': self.atom, 'partner': self.partner,
                'target': gs.carrier.labels[self.target]}


def atom_factorization(coeff: Structure, n: int, i: int, k: Optional[int] = None) -> AtomFactorization:
    """Write g^i as α·β with α = a g^k + a' g^r, β = a g^r + a' g^k, k + r = i (mod n),
    where a is an atom and a' its complement"""
    if coeff.lattice is None or not is_boolean(coeff.lattice):
        raise NotBoolean("coefficients must form a Boolean algebra")
    atom_labels = atoms(coeff.lattice)
    if len(atom_labels) < 2:
        raise TooFewAtoms("need at least two atoms")
    a = atom_labels[0]
    partner = sorted(complements(coeff.lattice, a), key=coeff.lattice.index)[0]
    choices = [k] if k is not None else list(range(n))
    for k_ in choices:
        r = (i - k_) % n
        if r != k_ % n:
            break
    else:
        raise PreconditionFailed(f"no k with k != r and k + r = {i} mod {n}")
    gs = group_semiring(coeff, cyclic_group(n))
    g = gs.carrier.labels
    alpha = gs.element({g[k_ % n]: a, g[r]: partner})
    beta = gs.element({g[r]: a, g[k_ % n]: partner})
    return AtomFactorization(alpha, beta, k_ % n, r, a, partner, i % n, gs)


# ---------------------------------------------------------------------------
# V(S)
# ---------------------------------------------------------------------------

def v_of(m: FiniteMagma, validate: bool = True, name: str = "") -> Structure:
    """Adjoin ∞ to a multiplicative semigroup: x + x = x, x + y = ∞ otherwise, ∞ absorbing.

    With validate=False the tables are returned unchecked for congruence analysis."""
    n = m.n
    inf = n
    labels = list(m.labels) + [INFINITY]
    add = [[i if i == j else inf for j in range(n + 1)] for i in range(n + 1)]
    mul = [[inf if (i == inf or j == inf) else m.table[i][j] for j in range(n + 1)]
           for i in range(n + 1)]
    name = name or f"V({len(m.labels)})"
    if validate:
        return validate_semiring(labels, add, mul, require_additive_identity=False, name=name,
                                 tags={'construction': 'v_of'})
    return Structure(tuple(labels), FiniteMagma.from_rows(labels, add), FiniteMagma.from_rows(labels, mul),
                     None, m.identity(), frozenset(), name, {'construction': 'v_of', 'validated': False})


def sub_structure(s: Structure, subset: Iterable[int], name: str = "") -> Structure:
    """Induced tables on a subset closed under both operations (unvalidated)"""
    members = sorted(subset)
    if closure_under([s.add.table, s.mul.table], members) != frozenset(members):
        raise AxiomViolation("closure", [s.label(i) for i in members])
    pos = {x: i for i, x in enumerate(members)}
    labels = [s.label(x) for x in members]
    add = [[pos[s.plus(x, y)] for y in members] for x in members]
    mul = [[pos[s.times(x, y)] for y in members] for x in members]
    zero = s.add.identity(members)
    one = s.mul.identity(members)
    return Structure(tuple(labels), FiniteMagma.from_rows(labels, add), FiniteMagma.from_rows(labels, mul),
                     None if zero is None else pos[zero], None if one is None else pos[one],
                     frozenset(), name or f"{s.name}|{len(members)}", {'validated': False})
