"""
Semiring Engine - Finite Structures
Table-backed magmas and semirings: axiom validation, element classification,
substructure census, congruences and multiplicative subgroups
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from math import gcd
from typing import Dict, List, Any, Optional, Tuple, FrozenSet, Iterable, Sequence, Union, Callable

import numpy as np

from algebra_models import (
    KindFlag, CharacteristicKind, Characteristic, Side, HomKind, Verdict,
    AxiomViolation, CapExceeded, MissingOne, UnknownElement,
)
from engine_config import engine_config
from poset_lattice import FiniteLattice, FinitePoset

logger = logging.getLogger(__name__)

Table = Tuple[Tuple[int, ...], ...]
ElementRef = Union[int, str]

CONGRUENCE_FLAG_LIMIT = 32


def _as_table(rows: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class FiniteMagma:
    labels: Tuple[str, ...]
    table: Table

    def __post_init__(self):
        n = len(self.labels)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise AxiomViolation("square table", {'size': n})
        for i, row in enumerate(self.table):
            for j, v in enumerate(row):
                if not 0 <= v < n:
                    raise AxiomViolation("closure", (self.labels[i], self.labels[j]))

    @classmethod
    def from_rows(cls, labels: Sequence[str], rows: Sequence[Sequence[int]]) -> 'FiniteMagma':
        return cls(tuple(str(l) for l in labels), _as_table(rows))

    @classmethod
    def from_function(cls, labels: Sequence[str], op: Callable[[int, int], int]) -> 'FiniteMagma':
        n = len(labels)
        return cls(tuple(labels), tuple(tuple(op(i, j) for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, x: ElementRef) -> int:
        if isinstance(x, int) and not isinstance(x, bool):
            if 0 <= x < self.n:
                return x
            raise UnknownElement(x)
        try:
            return self.labels.index(x)
        except ValueError:
            raise UnknownElement(x)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def is_associative(self) -> Verdict:
        bad = associativity_witness(np.array(self.table, dtype=np.int64))
        if bad is not None:
            return Verdict(False, tuple(self.labels[i] for i in bad), "associativity")
        return Verdict(True)

    def is_commutative(self) -> Verdict:
        t = self.table
        for a, b in combinations(range(self.n), 2):
            if t[a][b] != t[b][a]:
                return Verdict(False, (self.labels[a], self.labels[b]), "commutativity")
        return Verdict(True)

    def identity(self, subset: Optional[Iterable[int]] = None) -> Optional[int]:
        """Two-sided identity of the magma, or of the induced operation on `subset`"""
        members = range(self.n) if subset is None else sorted(subset)
        for e in members:
            if all(self.table[e][x] == x and self.table[x][e] == x for x in members):
                return e
        return None

    def idempotents(self) -> List[int]:
        return [x for x in range(self.n) if self.table[x][x] == x]

    def closure(self, generators: Iterable[int]) -> FrozenSet[int]:
        return closure_under([self.table], generators)

    def is_group(self, subset: Optional[Iterable[int]] = None) -> Verdict:
        members = set(range(self.n)) if subset is None else set(subset)
        if not members:
            return Verdict(False, None, "empty")
        t = self.table
        for a, b in product(members, repeat=2):
            if t[a][b] not in members:
                return Verdict(False, (self.labels[a], self.labels[b]), "closure")
        e = self.identity(members)
        if e is None:
            return Verdict(False, None, "identity")
        for a in sorted(members):
            if not any(t[a][b] == e and t[b][a] == e for b in members):
                return Verdict(False, (self.labels[a],), "inverse")
        if subset is None:
            assoc = self.is_associative()
            if not assoc:
                return assoc
        else:
            for a, b, c in product(members, repeat=3):
                if t[t[a][b]][c] != t[a][t[b][c]]:
                    return Verdict(False, (self.labels[a], self.labels[b], self.labels[c]), "associativity")
        return Verdict(True, {'identity': self.labels[e]})

    def to_dict(self) -> Dict[str, Any]:
        return {'labels': list(self.labels), 'table': [list(row) for row in self.table]}


def closure_under(tables: Sequence[Table], generators: Iterable[int]) -> FrozenSet[int]:
    """Smallest subset containing `generators` closed under every table"""
    members = set(generators)
    frontier = list(members)
    while frontier:
        x = frontier.pop()
        for y in list(members):
            for t in tables:
                for r in (t[x][y], t[y][x]):
                    if r not in members:
                        members.add(r)
                        frontier.append(r)
    return frozenset(members)


@dataclass(frozen=True)
class Structure:
    labels: Tuple[str, ...]
    add: FiniteMagma
    mul: FiniteMagma
    zero: Optional[int]
    one: Optional[int]
    flags: FrozenSet[KindFlag]
    name: str = ""
    tags: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)
    lattice: Optional[FiniteLattice] = field(default=None, compare=False, hash=False)

    is_archetype = False

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, x: ElementRef) -> int:
        return self.add.index(x)

    def label(self, i: int) -> str:
        return self.labels[i]

    def plus(self, a: int, b: int) -> int:
        return self.add.table[a][b]

    def times(self, a: int, b: int) -> int:
        return self.mul.table[a][b]

    def has(self, flag: KindFlag) -> bool:
        return flag in self.flags

    def closure(self, generators: Iterable[int]) -> FrozenSet[int]:
        return closure_under([self.add.table, self.mul.table], generators)

    def relative_zero(self, subset: Iterable[int]) -> Optional[int]:
        return self.add.identity(subset)

    def relative_one(self, subset: Iterable[int]) -> Optional[int]:
        return self.mul.identity(subset)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'labels': list(self.labels),
            'add': [list(r) for r in self.add.table],
            'mul': [list(r) for r in self.mul.table],
            'zero': None if self.zero is None else self.labels[self.zero],
            'one': None if self.one is None else self.labels[self.one],
            'flags': sorted(f.value for f in self.flags),
            'tags': dict(self.tags),
        }


def _first_mismatch(bad: np.ndarray) -> Optional[Tuple[int, int]]:
    if not bad.any():
        return None
    y, z = np.argwhere(bad)[0]
    return int(y), int(z)


def associativity_witness(t: np.ndarray) -> Optional[Tuple[int, int, int]]:
    """First (a, b, c) with (ab)c != a(bc), one slice of the cube at a time"""
    for a in range(len(t)):
        hit = _first_mismatch(t[t[a]] != t[a][t])
        if hit is not None:
            return (a,) + hit
    return None


def _axiom_violation(a: np.ndarray, m: np.ndarray) -> Optional[Tuple[str, Tuple[int, int, int]]]:
    for x in range(len(a)):
        checks = (
            ("additive associativity", a[a[x]] != a[x][a]),
            ("multiplicative associativity", m[m[x]] != m[x][m]),
            ("left distributivity", m[x][a] != a[np.ix_(m[x], m[x])]),
            ("right distributivity", m[:, x][a] != a[np.ix_(m[:, x], m[:, x])]),
        )
        for axiom, bad in checks:
            hit = _first_mismatch(bad)
            if hit is not None:
                return axiom, (x,) + hit
    return None


def validate_semiring(labels: Sequence[str], add_table: Sequence[Sequence[int]],
                      mul_table: Sequence[Sequence[int]], *, require_additive_identity: bool = True,
                      name: str = "", tags: Optional[Dict[str, Any]] = None,
                      lattice: Optional[FiniteLattice] = None) -> Structure:
    """Check the semiring axioms on raw tables and compute every kind flag.

    Zero absorption is reported as a flag and is not part of validity."""
    labels = tuple(str(l) for l in labels)
    add = FiniteMagma(labels, _as_table(add_table))
    mul = FiniteMagma(labels, _as_table(mul_table))
    n = len(labels)
    tags = dict(tags or {})
    a, m = add.table, mul.table
    logger.debug("validating %s (%d elements)", name or "structure", n)

    commutative = add.is_commutative()
    if not commutative:
        raise AxiomViolation("additive commutativity", commutative.witness)
    zero = add.identity()
    if zero is None and require_additive_identity:
        raise AxiomViolation("additive identity", None)
    violation = _axiom_violation(np.array(a, dtype=np.int64), np.array(m, dtype=np.int64))
    if violation is not None:
        axiom, triple = violation
        raise AxiomViolation(axiom, tuple(labels[i] for i in triple))

    one = mul.identity()
    flags = {KindFlag.SEMIGROUP, KindFlag.SEMIRING, KindFlag.COMMUTATIVE_ADD}
    if mul.is_commutative():
        flags.add(KindFlag.COMMUTATIVE_MUL)
    if one is not None:
        flags.add(KindFlag.HAS_ONE)
    if lattice is not None:
        flags.add(KindFlag.LATTICE_DERIVED)
    if all(a[x][x] == x for x in range(n)):
        flags.add(KindFlag.ADDITIVELY_IDEMPOTENT)
    if zero is not None:
        if all(m[zero][x] == zero and m[x][zero] == zero for x in range(n)):
            flags.add(KindFlag.ZERO_ABSORBING)
        if not _strict_witness(a, zero, n):
            flags.add(KindFlag.STRICT)
        is_ring = all(any(a[x][y] == zero for y in range(n)) for x in range(n))
        if is_ring:
            flags.add(KindFlag.RING)
            flags.add(KindFlag.GROUP)
        no_zero_divisors = not any(m[x][y] == zero for x in range(n) for y in range(n)
                                   if x != zero and y != zero)
        commutative_mul = KindFlag.COMMUTATIVE_MUL in flags
        if (commutative_mul and one is not None and one != zero and no_zero_divisors
                and KindFlag.STRICT in flags):
            flags.add(KindFlag.SEMIFIELD)
        if (is_ring and commutative_mul and one is not None and one != zero
                and all(any(m[x][y] == one for y in range(n)) for x in range(n) if x != zero)):
            flags.add(KindFlag.FIELD)
    structure = Structure(labels, add, mul, zero, one, frozenset(flags), name, tags, lattice)
    if n <= CONGRUENCE_FLAG_LIMIT:
        if is_congruence_simple(structure):
            flags.add(KindFlag.CONGRUENCE_SIMPLE)
    elif KindFlag.FIELD in flags:
        # finite fields are congruence-simple
        flags.add(KindFlag.CONGRUENCE_SIMPLE)
    return Structure(labels, add, mul, zero, one, frozenset(flags), name, tags, lattice)


def _strict_witness(a: Table, zero: int, n: int) -> Optional[Tuple[int, int]]:
    for x in range(n):
        if x == zero:
            continue
        for y in range(x, n):
            if y != zero and a[x][y] == zero:
                return x, y
    return None


def is_proper_semiring(s: Structure) -> bool:
    """Semiring that is not a ring"""
    return s.has(KindFlag.SEMIRING) and not s.has(KindFlag.RING)


def characteristic(s) -> Characteristic:
    """Least m with m·x = 0 for every x: the lcm of the additive orders"""
    if getattr(s, 'is_archetype', False):
        return s.characteristic()
    if s.zero is None:
        return Characteristic(CharacteristicKind.UNDEFINED)
    result = 1
    for x in range(s.n):
        order = _additive_order(s, x)
        if order is None:
            return Characteristic(CharacteristicKind.UNDEFINED)
        result = result * order // gcd(result, order)
    return Characteristic(CharacteristicKind.FINITE, result)


def _additive_order(s: Structure, x: int) -> Optional[int]:
    seen = set()
    current, m = x, 1
    while current not in seen:
        if current == s.zero:
            return m
        seen.add(current)
        current = s.plus(current, x)
        m += 1
    return None


def is_strict(s) -> Verdict:
    if getattr(s, 'is_archetype', False):
        return s.is_strict()
    if s.zero is None:
        return Verdict(False, None, "no additive identity")
    pair = _strict_witness(s.add.table, s.zero, s.n)
    if pair is None:
        return Verdict(True)
    return Verdict(False, (s.label(pair[0]), s.label(pair[1])), "nonzero elements sum to zero")


def zero_absorption_witness(s: Structure) -> Optional[str]:
    if s.zero is None:
        return None
    for x in range(s.n):
        if s.times(s.zero, x) != s.zero or s.times(x, s.zero) != s.zero:
            return s.label(x)
    return None


@dataclass
class ElementClasses:
    zero_divisors: List[str]
    zero_divisor_pairs: List[Tuple[str, str]]
    idempotents: List[str]
    units: List[str]
    inverses: Dict[str, str]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'zero_divisors': list(self.zero_divisors),
            'zero_divisor_pairs': [list(p) for p in self.zero_divisor_pairs],
            'idempotents': list(self.idempotents),
            'units': list(self.units),
            'inverses': dict(self.inverses),
        }


def classify_elements(s, candidates: Optional[Sequence[Any]] = None) -> ElementClasses:
    """Zero divisors, idempotents and units; archetypes classify the supplied candidates"""
    if getattr(s, 'is_archetype', False):
        return s.classify_elements(candidates or [])
    rng = range(s.n)
    pairs, divisors = [], []
    if s.zero is not None:
        for x, y in product(rng, repeat=2):
            if x != s.zero and y != s.zero and s.times(x, y) == s.zero:
                pairs.append((s.label(x), s.label(y)))
        divisor_idx = sorted({s.index(p[0]) for p in pairs} | {s.index(p[1]) for p in pairs})
        divisors = [s.label(x) for x in divisor_idx]
    idempotents = [s.label(x) for x in rng if s.times(x, x) == x]
    units, inverses = [], {}
    if s.one is not None:
        for x in rng:
            for y in rng:
                if s.times(x, y) == s.one and s.times(y, x) == s.one:
                    units.append(s.label(x))
                    inverses[s.label(x)] = s.label(y)
                    break
    return ElementClasses(divisors, pairs, idempotents, units, inverses)


@dataclass
class SubsetCensus:
    subsets: List[FrozenSet[int]]
    complete: bool

    def labelled(self, s: Structure) -> List[List[str]]:
        return [[s.label(i) for i in sorted(sub)] for sub in self.subsets]


def subset_order(subset: Iterable[int]) -> Tuple[int, Tuple[int, ...]]:
    members = tuple(sorted(subset))
    return len(members), members


def closed_subsets(tables: Sequence[Table], n: int, cap: Optional[int] = None,
                   seeds: Iterable[Iterable[int]] = ()) -> SubsetCensus:
    """Every nonempty subset closed under `tables`, by generator-closure BFS"""
    cap = cap or engine_config.subset_cap
    found: Dict[FrozenSet[int], None] = {}
    queue: List[FrozenSet[int]] = []
    for gens in list(seeds) + [[x] for x in range(n)]:
        c = closure_under(tables, gens)
        if c not in found:
            found[c] = None
            queue.append(c)
    complete = True
    head = 0
    while head < len(queue):
        current = queue[head]
        head += 1
        for x in range(n):
            if x in current:
                continue
            c = closure_under(tables, current | {x})
            if c not in found:
                if len(found) >= cap:
                    complete = False
                    break
                found[c] = None
                queue.append(c)
        if not complete:
            logger.warning("closed-subset census stopped at cap %d", cap)
            break
    return SubsetCensus(sorted(found, key=subset_order), complete)


def subsemirings(s: Structure, cap: Optional[int] = None, raise_on_cap: bool = False,
                 require_identity: bool = True) -> SubsetCensus:
    """All subsets closed under both operations that have their own additive identity"""
    census = closed_subsets([s.add.table, s.mul.table], s.n, cap)
    if require_identity:
        kept = [c for c in census.subsets if s.add.identity(c) is not None]
    else:
        kept = census.subsets
    if not census.complete and raise_on_cap:
        raise CapExceeded(cap or engine_config.subset_cap, kept)
    return SubsetCensus(kept, census.complete)


def _resolve_subset(s: Structure, subset: Iterable[ElementRef]) -> FrozenSet[int]:
    return frozenset(s.index(x) for x in subset)


def is_ideal(s: Structure, subset: Iterable[ElementRef], side: Side = Side.TWO_SIDED) -> Verdict:
    members = _resolve_subset(s, subset)
    if not members:
        return Verdict(False, None, "empty subset")
    if s.closure(members) != members:
        return Verdict(False, None, "not closed under the operations")
    if s.add.identity(members) is None:
        return Verdict(False, None, "no additive identity in subset")
    for x in range(s.n):
        for i in sorted(members):
            if side in (Side.LEFT, Side.TWO_SIDED) and s.times(x, i) not in members:
                return Verdict(False, (s.label(x), s.label(i)), "left absorption")
            if side in (Side.RIGHT, Side.TWO_SIDED) and s.times(i, x) not in members:
                return Verdict(False, (s.label(i), s.label(x)), "right absorption")
    return Verdict(True)


# ---------------------------------------------------------------------------
# Congruences
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Congruence:
    partition: Tuple[int, ...]

    @property
    def n_classes(self) -> int:
        return len(set(self.partition))

    def is_full(self) -> bool:
        return self.n_classes == 1

    def related(self, a: int, b: int) -> bool:
        return self.partition[a] == self.partition[b]

    def classes(self, labels: Sequence[str]) -> List[List[str]]:
        groups: Dict[int, List[str]] = {}
        for i, cls in enumerate(self.partition):
            groups.setdefault(cls, []).append(labels[i])
        return [groups[k] for k in sorted(groups)]


def _normalize(parent: List[int]) -> Tuple[int, ...]:
    ids: Dict[int, int] = {}
    return tuple(ids.setdefault(root, len(ids)) for root in parent)


def congruence_closure(s: Structure, a: ElementRef, b: ElementRef,
                       extra_pairs: Iterable[Tuple[int, int]] = ()) -> Congruence:
    """Least congruence identifying a and b (union-find over all translations)"""
    n = s.n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    add, mul = s.add.table, s.mul.table
    work = [(s.index(a), s.index(b))] + list(extra_pairs)
    while work:
        x, y = work.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[rx] = ry
        for c in range(n):
            work.append((add[c][x], add[c][y]))
            work.append((add[x][c], add[y][c]))
            work.append((mul[c][x], mul[c][y]))
            work.append((mul[x][c], mul[y][c]))
    return Congruence(_normalize([find(x) for x in range(n)]))


def is_compatible(s: Structure, congruence: Congruence) -> bool:
    p = congruence.partition
    for x, y in product(range(s.n), repeat=2):
        if p[x] != p[y]:
            continue
        for c in range(s.n):
            if (p[s.plus(c, x)] != p[s.plus(c, y)] or p[s.plus(x, c)] != p[s.plus(y, c)]
                    or p[s.times(c, x)] != p[s.times(c, y)] or p[s.times(x, c)] != p[s.times(y, c)]):
                return False
    return True


def is_congruence_simple(s: Structure) -> Verdict:
    """Every pair-generated congruence is the full relation; witness is the first
    pair whose closure is proper"""
    for a, b in combinations(range(s.n), 2):
        c = congruence_closure(s, a, b)
        if not c.is_full():
            return Verdict(False, (s.label(a), s.label(b)), f"{c.n_classes} classes")
    return Verdict(True)


# ---------------------------------------------------------------------------
# Multiplicative subgroups
# ---------------------------------------------------------------------------

def maximal_subgroup(m: FiniteMagma, e: int) -> FrozenSet[int]:
    """Group of units of the local monoid at idempotent e"""
    t = m.table
    local = [x for x in range(m.n) if t[e][x] == x and t[x][e] == x]
    return frozenset(x for x in local if any(t[x][y] == e and t[y][x] == e for y in local))


def subgroups_of_mul_semigroup(m: FiniteMagma, method: str = "auto") -> List[FrozenSet[int]]:
    """All subgroups of a finite semigroup, anchored on idempotents (each subgroup lies in
    the maximal subgroup of its identity) or by exhaustive subset scan for n <= 12"""
    if method == "exhaustive":
        return _subgroups_exhaustive(m)
    found = set()
    for e in m.idempotents():
        h = maximal_subgroup(m, e)
        members = sorted(h)
        census = closed_subsets([_restricted(m.table, members)], len(members))
        for sub in census.subsets:
            found.add(frozenset(members[i] for i in sub))
    return sorted(found, key=subset_order)


def _restricted(table: Table, members: Sequence[int]) -> Table:
    pos = {x: i for i, x in enumerate(members)}
    return tuple(tuple(pos[table[x][y]] for y in members) for x in members)


def _subgroups_exhaustive(m: FiniteMagma) -> List[FrozenSet[int]]:
    if m.n > 12:
        raise CapExceeded(12)
    result = []
    for size in range(1, m.n + 1):
        for sub in combinations(range(m.n), size):
            if m.is_group(sub):
                result.append(frozenset(sub))
    return sorted(result, key=subset_order)


def is_s_semigroup(m) -> Verdict:
    """Contains a proper subset with at least two elements that is a group"""
    if getattr(m, 'is_archetype', False):
        return m.is_s_semigroup()
    for g in subgroups_of_mul_semigroup(m):
        if 2 <= len(g) < m.n:
            return Verdict(True, [m.labels[i] for i in sorted(g)])
    return Verdict(False, None, "no proper nontrivial subgroup")


def is_s_anti_group(m: FiniteMagma) -> Verdict:
    """A group with a proper sub-semigroup that is not a subgroup.

    Closed subsets of a finite group are subgroups, so finite carriers always answer
    False; the scan still runs so the verdict carries its reason."""
    if not m.is_group():
        return Verdict(False, None, "not a group")
    candidates = {m.closure([x]) for x in range(m.n)}
    candidates |= {m.closure([x, y]) for x, y in combinations(range(m.n), 2)}
    for c in sorted(candidates, key=subset_order):
        if len(c) < m.n and not m.is_group(c):
            return Verdict(True, [m.labels[i] for i in sorted(c)])
    return Verdict(False, None, "every sub-semigroup is a subgroup")


# ---------------------------------------------------------------------------
# Homomorphisms and ordered semirings
# ---------------------------------------------------------------------------

def _ops_for(x, kind: HomKind):
    if isinstance(x, FiniteLattice):
        return [('meet', x.meet), ('join', x.join)]
    if kind == HomKind.LATTICE and x.lattice is not None:
        return [("meet", x.mul.table), ("join", x.add.table)]
    return [('add', x.add.table), ('mul', x.mul.table)]


def check_hom(f: Dict[ElementRef, ElementRef], src, dst, kind: HomKind = HomKind.SEMIRING) -> Verdict:
    """Check that f preserves the operations selected by kind on every pair"""
    fmap = {src.index(k): dst.index(v) for k, v in f.items()}
    if len(fmap) != src.n:
        missing = [src.labels[i] for i in range(src.n) if i not in fmap]
        return Verdict(False, missing, "map is not total")
    src_ops, dst_ops = _ops_for(src, kind), _ops_for(dst, kind)
    for (name, ts), (_, td) in zip(src_ops, dst_ops):
        for a, b in product(range(src.n), repeat=2):
            if fmap[ts[a][b]] != td[fmap[a]][fmap[b]]:
                return Verdict(False, (name, src.labels[a], src.labels[b]), f"{name} not preserved")
    return Verdict(True)


def ring_kernel(f: Dict[ElementRef, ElementRef], src: Structure, dst: Structure) -> List[str]:
    if dst.zero is None:
        return []
    return [src.label(src.index(k)) for k, v in f.items() if dst.index(v) == dst.zero]


@dataclass
class StarReport:
    monotone: Verdict
    fixed_point: Verdict
    induction: Verdict

    @property
    def inductive(self) -> bool:
        return bool(self.monotone) and bool(self.fixed_point) and bool(self.induction)

    def to_dict(self) -> Dict[str, Any]:
        return {'monotone': self.monotone.to_dict(), 'fixed_point': self.fixed_point.to_dict(),
                'induction': self.induction.to_dict(), 'inductive': self.inductive}


def check_inductive_star(s: Structure, order: FinitePoset, star: Union[Dict[str, str], Sequence[int]]) -> StarReport:
    """Ordered-semiring monotonicity, a·a* + 1 <= a*, and the induction rule
    a·x + b <= x  =>  a*·b <= x, all by brute force"""
    if s.one is None:
        raise MissingOne("inductive star needs a multiplicative identity")
    if isinstance(star, dict):
        st = [s.index(star[s.label(i)]) for i in range(s.n)]
    else:
        st = list(star)
    pos = [order.index(s.label(i)) for i in range(s.n)]

    def le(x: int, y: int) -> bool:
        return (pos[x], pos[y]) in order.leq

    lab = s.label
    monotone = Verdict(True)
    for x, y, c in product(range(s.n), repeat=3):
        if not le(x, y):
            continue
        if not le(s.plus(x, c), s.plus(y, c)) or not le(s.times(x, c), s.times(y, c)) \
                or not le(s.times(c, x), s.times(c, y)):
            monotone = Verdict(False, (lab(x), lab(y), lab(c)), "operation not monotone")
            break
    fixed_point = Verdict(True)
    for a in range(s.n):
        if not le(s.plus(s.times(a, st[a]), s.one), st[a]):
            fixed_point = Verdict(False, (lab(a),), "a·a* + 1 exceeds a*")
            break
    induction = Verdict(True)
    for a, b, x in product(range(s.n), repeat=3):
        if le(s.plus(s.times(a, x), b), x) and not le(s.times(st[a], b), x):
            induction = Verdict(False, (lab(a), lab(b), lab(x)), "induction rule fails")
            break
    return StarReport(monotone, fixed_point, induction)
