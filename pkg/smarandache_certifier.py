"""
Semiring Engine - Smarandache Certifier
Searches for Smarandache substructures and elements, and replays every certificate
clause by clause against the subject's own operations
"""

import logging
import random
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, List, Any, Optional, Tuple, FrozenSet, Iterable, Callable, Sequence, Union

from algebra_models import (
    KindFlag, PropertyName, Side, Verdict, Certificate, ClauseCheck, AxiomViolation,
    UnknownElement, TypeMismatch, NotFound, PreconditionFailed, MissingParam, SpecError,
)
from archetypes import (
    TupleArchetype, ArchetypeProduct, ArchetypeMatrix, ArchetypeGroupAlgebra, FactorKind,
    ComponentSet, ProductSubset, NONNEG_KINDS,
)
from constructions import MatrixSemiring, GroupSemiring
from engine_config import engine_config
from finite_structures import (
    Structure, closed_subsets, subset_order, validate_semiring, is_congruence_simple, is_strict,
    SubsetCensus, _restricted,
)

logger = logging.getLogger(__name__)

QUICK_PAIR_LIMIT = 40

KSEMI_NOTE = ("k-semi algebra read as a proper subset with a nonzero element, closed under + and ·, "
              "absorbing multiplication by every element of the ambient semifield")
IDEAL_NOTE = "ideal clause checked literally: products of semifield and ideal elements land in the semifield"
WEAK_NOTE = "the nested algebra is checked as a k-semi algebra over the witness semifield P"

PROPERTY_CATALOG = [
    {'name': 'semifield', 'needs_subset': False,
     'description': 'Commutative, unital, strict and free of zero divisors'},
    {'name': 'prime-semifield', 'needs_subset': False,
     'description': 'Semifield without a proper subset that is a semifield'},
    {'name': 's-semiring-1', 'needs_subset': False,
     'description': 'Contains a proper subset that is a semifield'},
    {'name': 's-semiring-2', 'needs_subset': False,
     'description': 'Contains a proper subset that is a field'},
    {'name': 's-commutative', 'needs_subset': False,
     'description': 'Has a commutative S-subsemiring'},
    {'name': 's-subsemiring', 'needs_subset': True,
     'description': 'Subsemiring containing a proper semifield'},
    {'name': 's-subsemiring-2', 'needs_subset': True,
     'description': 'Subsemiring containing a proper field'},
    {'name': 's-ideal', 'needs_subset': True,
     'description': 'S-subsemiring whose semifield absorbs products with the subset'},
    {'name': 's-pseudo-subsemiring', 'needs_subset': True,
     'description': 'Subset inside a proper S-subsemiring or semifield'},
    {'name': 's-dual-ideal', 'needs_subset': True,
     'description': 'S-subsemiring with a + p in the semifield for nonzero a'},
    {'name': 's-pseudo-ideal', 'needs_subset': True,
     'description': 'Subset of a semifield A with a·p back in the subset'},
    {'name': 's-pseudo-dual-ideal', 'needs_subset': True,
     'description': 'Subset of a semifield-bearing container with p + a back in the subset'},
    {'name': 's-semidivision-ring', 'needs_subset': False,
     'description': 'Non-commutative S-subsemiring holding a non-commutative semidivision ring'},
    {'name': 's-zero-divisor', 'needs_subset': False,
     'description': 'Zero-divisor pair with auxiliary annihilators x, y where xy or yx is nonzero'},
    {'name': 's-anti-zero-divisor', 'needs_subset': False,
     'description': 'Element x with y, a, b where ab or ba vanishes'},
    {'name': 's-idempotent', 'needs_subset': False,
     'description': 'Idempotent a with a square root b under the exclusive absorption rule'},
    {'name': 's-unit', 'needs_subset': False,
     'description': 'Unit x with auxiliary a, b satisfying ab = 1'},
    {'name': 's-congruence-simple', 'needs_subset': False,
     'description': 'Proper closed substructure of at least three elements that is congruence-simple'},
    {'name': 's-semifield-1', 'needs_subset': False,
     'description': 'Semifield containing a proper k-semi algebra'},
    {'name': 's-weak-semifield', 'needs_subset': False,
     'description': 'Contains a semifield P that is itself an S-semifield'},
    {'name': 's-semifield-2', 'needs_subset': False,
     'description': 'Semifield or mixed product holding a proper field'},
    {'name': 's-anti-semiring', 'needs_subset': False,
     'description': 'Ring containing a closed subset that is a semiring but not a ring'},
    {'name': 's-anti-semifield', 'needs_subset': False,
     'description': 'Ring or field containing a proper semifield'},
    {'name': 's-anti-ideal', 'needs_subset': True,
     'description': 'Semiring P inside a semifield T of a ring with P·T inside P'},
]

Subject = Union[Structure, TupleArchetype]


# ---------------------------------------------------------------------------
# Subjects and clause recording
# ---------------------------------------------------------------------------

def as_subject(x) -> Subject:
    """Materialize lazy matrix and group semirings into table-backed structures"""
    if isinstance(x, (MatrixSemiring, GroupSemiring)):
        return x.materialize()
    return x


def _is_archetype(subject) -> bool:
    return getattr(subject, 'is_archetype', False)


class ClauseReplay:
    """Ordered clause transcript"""

    def __init__(self):
        self.checks: List[ClauseCheck] = []

    def check(self, clause: str, passed) -> bool:
        self.checks.append(ClauseCheck(clause, bool(passed)))
        return bool(passed)

    def mark(self) -> int:
        return len(self.checks)

    def passed_since(self, mark: int) -> bool:
        return all(c.passed for c in self.checks[mark:])

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)


class _View:
    """Members of a candidate subset together with the ambient operations"""

    def __init__(self, subject: Subject, members: Sequence[Any], contains: Callable[[Any], bool]):
        self.subject = subject
        self.members = list(members)
        self.contains = contains
        if _is_archetype(subject):
            self.add, self.mul, self.render = subject.add, subject.mul, subject.render
        else:
            self.add, self.mul, self.render = subject.plus, subject.times, subject.label

    def pairs(self) -> Iterable[Tuple[Any, Any]]:
        return product(self.members, repeat=2)

    def find_neg(self, x, zero):
        if _is_archetype(self.subject):
            y = self.subject.neg(x)
            if y is not None and self.contains(y) and self.add(x, y) == zero:
                return y
        for y in self.members:
            if self.add(x, y) == zero:
                return y
        return None

    def find_inverse(self, x, one):
        if _is_archetype(self.subject):
            y = _relative_inverse(self.subject, x, one)
            if y is not None and self.contains(y) and self.mul(x, y) == one:
                return y
        for y in self.members:
            if self.mul(x, y) == one and self.mul(y, x) == one:
                return y
        return None


def _relative_inverse(arch: TupleArchetype, x, one):
    if not isinstance(arch, ArchetypeProduct):
        return arch.inverse(x)
    out = []
    for f, a, e in zip(arch.factors, x, one):
        if e == f.zero:
            if a != f.zero:
                return None
            out.append(f.zero)
        elif e == f.one:
            inv = f.inverse(a)
            if inv is None:
                return None
            out.append(inv)
        else:
            return None
    return tuple(out)


def _finite_view(s: Structure, members: Iterable[int]) -> _View:
    ms = sorted(set(members))
    lookup = frozenset(ms)
    return _View(s, ms, lambda x: x in lookup)


def _grid_view(arch: TupleArchetype, subset: ProductSubset) -> _View:
    return _View(arch, subset.sample(arch, engine_config.verify_grid), lambda x: subset.contains(arch, x))


def _whole_view(subject: Subject) -> _View:
    if _is_archetype(subject):
        return _grid_view(subject, subject.full_subset())
    return _finite_view(subject, range(subject.n))


def _ambient_zero(subject: Subject):
    return subject.zero() if _is_archetype(subject) else subject.zero


def _ambient_one(subject: Subject):
    return subject.one() if _is_archetype(subject) else subject.one


# ---------------------------------------------------------------------------
# Generic clauses
# ---------------------------------------------------------------------------

def _closed(v: _View, rec: ClauseReplay, name: str) -> bool:
    add_ok = all(v.contains(v.add(x, y)) for x, y in v.pairs())
    mul_ok = all(v.contains(v.mul(x, y)) for x, y in v.pairs())
    rec.check(f"{name} closed under +", add_ok)
    rec.check(f"{name} closed under ·", mul_ok)
    return add_ok and mul_ok


def _is_zero_of(v: _View, z) -> bool:
    return z is not None and v.contains(z) and all(v.add(x, z) == x for x in v.members)


def _is_one_of(v: _View, e) -> bool:
    return e is not None and v.contains(e) and all(v.mul(x, e) == x and v.mul(e, x) == x for x in v.members)


def _commutes(v: _View) -> bool:
    return all(v.mul(x, y) == v.mul(y, x) for x, y in v.pairs())


def _no_zero_divisors(v: _View, zero) -> bool:
    return not any(v.mul(x, y) == zero for x, y in v.pairs() if x != zero and y != zero)


def _is_strict_in(v: _View, zero) -> bool:
    return not any(v.add(x, y) == zero for x, y in v.pairs() if not (x == zero and y == zero))


def _semifield_clauses(v: _View, zero, one, rec: ClauseReplay, name: str) -> bool:
    mark = rec.mark()
    rec.check(f"{name} has at least two elements", len(set(v.members)) >= 2)
    _closed(v, rec, name)
    rec.check(f"{name} zero is its additive identity", _is_zero_of(v, zero))
    rec.check(f"{name} one is its multiplicative identity", _is_one_of(v, one))
    rec.check(f"{name} one differs from zero", one is not None and one != zero)
    rec.check(f"{name} multiplication commutes", _commutes(v))
    rec.check(f"{name} is strict", _is_strict_in(v, zero))
    rec.check(f"{name} has no zero divisors", _no_zero_divisors(v, zero))
    return rec.passed_since(mark)


def _field_clauses(v: _View, zero, one, rec: ClauseReplay, name: str) -> bool:
    mark = rec.mark()
    rec.check(f"{name} has at least two elements", len(set(v.members)) >= 2)
    _closed(v, rec, name)
    rec.check(f"{name} zero is its additive identity", _is_zero_of(v, zero))
    rec.check(f"{name} one is its multiplicative identity", _is_one_of(v, one))
    rec.check(f"{name} one differs from zero", one is not None and one != zero)
    rec.check(f"{name} multiplication commutes", _commutes(v))
    rec.check(f"{name} has additive inverses", all(v.find_neg(x, zero) is not None for x in v.members))
    rec.check(f"{name} nonzero elements are invertible",
              all(v.find_inverse(x, one) is not None for x in v.members if x != zero))
    return rec.passed_since(mark)


def _proper_in(v: _View, container: _View) -> bool:
    return all(container.contains(x) for x in v.members) and \
        any(not v.contains(y) for y in container.members)


def _subset_of(v: _View, container: _View) -> bool:
    return all(container.contains(x) for x in v.members)


def _parse_element(subject: Subject, value):
    if value is None:
        return None
    try:
        if _is_archetype(subject):
            return subject.coerce(value)
        return subject.index(str(value))
    except (UnknownElement, TypeMismatch, SpecError, TypeError, ValueError):
        return None


def _payload_view(subject: Subject, payload, rec: ClauseReplay, name: str) -> Optional[_View]:
    """Rebuild a subset from its witness payload; finite payloads also replay their induced tables"""
    if not isinstance(payload, dict) or 'subset' not in payload:
        rec.check(f"{name} is described", False)
        return None
    if _is_archetype(subject):
        try:
            subset = ProductSubset.parse(payload['subset'])
        except (SpecError, ValueError, TypeError):
            rec.check(f"{name} descriptor parses", False)
            return None
        if not rec.check(f"{name} descriptor matches the arity", len(subset.components) == subject.arity):
            return None
        return _grid_view(subject, subset)
    labels = payload['subset']
    members = [_parse_element(subject, l) for l in labels] if isinstance(labels, list) else [None]
    if not rec.check(f"{name} members belong to the subject", members and None not in members):
        return None
    if not rec.check(f"{name} members are distinct", len(set(members)) == len(members)):
        return None
    if 'add' in payload or 'mul' in payload:
        rec.check(f"{name} induced tables match the subject", _tables_match(subject, members, payload))
    return _finite_view(subject, members)


def _tables_match(s: Structure, members: List[int], payload: Dict[str, Any]) -> bool:
    for key, op in (('add', s.plus), ('mul', s.times)):
        rows = payload.get(key)
        if not isinstance(rows, list) or len(rows) != len(members):
            return False
        for x, row in zip(members, rows):
            if not isinstance(row, list) or len(row) != len(members):
                return False
            if any(str(entry) != s.label(op(x, y)) for y, entry in zip(members, row)):
                return False
    return True


def _semifield_part(subject: Subject, payload, rec: ClauseReplay, name: str,
                    container: Optional[_View] = None, proper: bool = True) -> Optional[_View]:
    v = _payload_view(subject, payload, rec, name)
    if v is None:
        return None
    outer = container or _whole_view(subject)
    label = "the container" if container is not None else "the subject"
    if proper:
        rec.check(f"{name} is a proper subset of {label}", _proper_in(v, outer))
    else:
        rec.check(f"{name} lies inside {label}", _subset_of(v, outer))
    zero = _parse_element(subject, payload.get('zero'))
    one = _parse_element(subject, payload.get('one'))
    _semifield_clauses(v, zero, one, rec, name)
    v.zero, v.one = zero, one
    return v


def _field_part(subject: Subject, payload, rec: ClauseReplay, name: str,
                container: Optional[_View] = None) -> Optional[_View]:
    v = _payload_view(subject, payload, rec, name)
    if v is None:
        return None
    outer = container or _whole_view(subject)
    rec.check(f"{name} is a proper subset of {'the container' if container else 'the subject'}",
              _proper_in(v, outer))
    zero = _parse_element(subject, payload.get('zero'))
    one = _parse_element(subject, payload.get('one'))
    _field_clauses(v, zero, one, rec, name)
    v.zero, v.one = zero, one
    return v


def _subsemiring_part(subject: Subject, payload, rec: ClauseReplay, name: str,
                      proper: bool = False) -> Optional[_View]:
    v = _payload_view(subject, payload, rec, name)
    if v is None:
        return None
    if proper:
        rec.check(f"{name} is a proper subset of the subject", _proper_in(v, _whole_view(subject)))
    _closed(v, rec, name)
    zero = _parse_element(subject, payload.get('zero'))
    rec.check(f"{name} zero is its additive identity", _is_zero_of(v, zero))
    v.zero = zero
    return v


def _plain_subset(subject: Subject, payload, rec: ClauseReplay, name: str) -> Optional[_View]:
    if isinstance(payload, list) and not _is_archetype(subject):
        payload = {'subset': payload}
    return _payload_view(subject, payload, rec, name)


def _structure_is_semifield(subject: Subject, rec: ClauseReplay) -> bool:
    v = _whole_view(subject)
    return _semifield_clauses(v, _ambient_zero(subject), _ambient_one(subject), rec, "subject")


def _subject_is_ring(subject: Subject) -> bool:
    if _is_archetype(subject):
        return all(f.is_group_like for f in subject.component_factors)
    return subject.has(KindFlag.RING)


# ---------------------------------------------------------------------------
# Payload builders (finite)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SemifieldWitness:
    members: FrozenSet[int]
    zero: int
    one: int

    @classmethod
    def from_subset(cls, s: Structure, members: Iterable[int]) -> 'SemifieldWitness':
        ms = frozenset(members)
        return cls(ms, s.relative_zero(ms), s.relative_one(ms))

    def to_dict(self, s: Structure) -> Dict[str, Any]:
        return subset_payload(s, self.members, zero=True, one=True)


def subset_payload(s: Structure, members: Iterable[int], *, zero: bool = False,
                   one: bool = False) -> Dict[str, Any]:
    """Witness payload for a finite subset: labels plus induced tables"""
    ms = sorted(members)
    payload: Dict[str, Any] = {
        'subset': [s.label(i) for i in ms],
        'add': [[s.label(s.plus(x, y)) for y in ms] for x in ms],
        'mul': [[s.label(s.times(x, y)) for y in ms] for x in ms],
    }
    if zero:
        z = s.relative_zero(ms)
        payload['zero'] = None if z is None else s.label(z)
    if one:
        e = s.relative_one(ms)
        payload['one'] = None if e is None else s.label(e)
    return payload


# ---------------------------------------------------------------------------
# Finite subset search
# ---------------------------------------------------------------------------

def _preference(s: Structure) -> Callable[[FrozenSet[int]], Tuple]:
    anchors = frozenset(a for a in (s.zero, s.one) if a is not None)

    def key(c: FrozenSet[int]):
        return (not anchors <= c,) + subset_order(c)
    return key


def _closed_within(s: Structure, universe: FrozenSet[int], cap: Optional[int]) -> SubsetCensus:
    if len(universe) == s.n:
        return closed_subsets([s.add.table, s.mul.table], s.n, cap)
    members = sorted(universe)
    tables = [_restricted(s.add.table, members), _restricted(s.mul.table, members)]
    census = closed_subsets(tables, len(members), cap)
    return SubsetCensus([frozenset(members[i] for i in c) for c in census.subsets], census.complete)


def _find_subset(s: Structure, accept: Callable[[FrozenSet[int]], bool],
                 universe: Optional[Iterable[int]] = None, proper: bool = True,
                 cap: Optional[int] = None, seeds: Iterable[Iterable[int]] = ()) -> Tuple[Optional[FrozenSet[int]], bool]:
    """First closed subset (in preference order) accepted; quick pass over closures of
    anchors, seeds, singletons and pairs, then the full census. Returns (subset, complete)."""
    universe = frozenset(range(s.n)) if universe is None else frozenset(universe)
    key = _preference(s)
    members = sorted(universe)
    generators: List[List[int]] = [list(g) for g in seeds]
    anchors = [a for a in (s.zero, s.one) if a is not None and a in universe]
    if anchors:
        generators.insert(0, anchors)
    generators += [[x] for x in members]
    if len(members) <= QUICK_PAIR_LIMIT:
        generators += [list(p) for p in combinations(members, 2)]
    tried: Dict[FrozenSet[int], None] = {}
    for g in generators:
        c = s.closure(g)
        if c <= universe:
            tried.setdefault(c, None)

    def admissible(c: FrozenSet[int]) -> bool:
        return not (proper and c == universe)

    for c in sorted(tried, key=key):
        if admissible(c) and accept(c):
            return c, True
    census = _closed_within(s, universe, cap)
    for c in sorted(census.subsets, key=key):
        if c in tried:
            continue
        if admissible(c) and accept(c):
            return c, True
    logger.debug("subset search over %d candidates found nothing (complete=%s)",
                 len(tried) + len(census.subsets), census.complete)
    return None, census.complete


def _accept_semifield(s: Structure) -> Callable[[FrozenSet[int]], bool]:
    def accept(c: FrozenSet[int]) -> bool:
        return len(c) >= 2 and _semifield_clauses(_finite_view(s, c), s.relative_zero(c),
                                                  s.relative_one(c), ClauseReplay(), "")
    return accept


def is_semifield_subset(s: Structure, members: Iterable[Any]) -> bool:
    """Induced operations on the subset form a semifield with its own zero and one"""
    return _accept_semifield(s)(_resolve(s, members))


def _accept_field(s: Structure) -> Callable[[FrozenSet[int]], bool]:
    def accept(c: FrozenSet[int]) -> bool:
        return len(c) >= 2 and _field_clauses(_finite_view(s, c), s.relative_zero(c),
                                              s.relative_one(c), ClauseReplay(), "")
    return accept


def _accept_k_algebra(s: Structure, over: FrozenSet[int]) -> Callable[[FrozenSet[int]], bool]:
    zero = s.relative_zero(over)

    def accept(c: FrozenSet[int]) -> bool:
        if not c < over or not any(x != zero for x in c):
            return False
        return all(s.times(p, a) in c and s.times(a, p) in c for p in over for a in c)
    return accept


def _resolve(s: Structure, subset) -> FrozenSet[int]:
    if isinstance(subset, dict):
        subset = subset.get('subset', [])
    try:
        return frozenset(s.index(str(x)) for x in subset)
    except UnknownElement as e:
        raise PreconditionFailed(f"subset element {e.label!r} is not in the subject")


def _is_subsemiring(s: Structure, members: FrozenSet[int]) -> bool:
    return bool(members) and s.closure(members) == members and s.relative_zero(members) is not None


# ---------------------------------------------------------------------------
# Certificate issue and verification
# ---------------------------------------------------------------------------

def _subject_name(subject: Subject) -> str:
    return getattr(subject, 'name', '') or subject.__class__.__name__


def _issue(subject: Subject, prop: PropertyName, witness: Dict[str, Any], *, complete: bool = True,
           notes: Optional[List[str]] = None, mode: str = "search") -> Certificate:
    cert = Certificate(prop.value, _subject_name(subject), True, witness, complete, [], list(notes or []), mode)
    checked = verify_certificate(subject, cert)
    if not checked.holds:
        failed = [c.clause for c in checked.transcript if not c.passed]
        logger.error("certificate for %s on %s failed replay: %s", prop.value, cert.subject, failed)
    return checked


def verify_certificate(subject, certificate: Certificate) -> Certificate:
    """Replay the defining clauses of the certificate's property on the subject alone"""
    subject = as_subject(subject)
    prop = PropertyName.parse(certificate.property)
    rec = ClauseReplay()
    witness = certificate.witness if isinstance(certificate.witness, dict) else {}
    _VERIFIERS[prop](subject, witness, rec)
    mode = certificate.mode
    if _is_archetype(subject) and mode == "search":
        mode = "verify-grid"
    notes = list(certificate.notes)
    if _is_archetype(subject):
        grid_note = f"archetype clauses replayed on a grid of at most {engine_config.verify_grid} points"
        if grid_note not in notes:
            notes.append(grid_note)
    return replace(certificate, holds=rec.ok, transcript=rec.checks, notes=notes, mode=mode)


# -- whole-structure predicates ------------------------------------------------

def _verify_semifield(subject, w, rec):
    _structure_is_semifield(subject, rec)


def _verify_prime_semifield(subject, w, rec):
    _structure_is_semifield(subject, rec)
    if not rec.check("subject is finite", not _is_archetype(subject)):
        return
    found, complete = _find_subset(subject, _accept_semifield(subject))
    rec.check("no proper subset is a semifield", found is None and complete)


# -- level I / II substructures --------------------------------------------------

def _verify_s_semiring_1(subject, w, rec):
    _semifield_part(subject, w.get('semifield'), rec, "semifield")


def _verify_s_semiring_2(subject, w, rec):
    _field_part(subject, w.get('field'), rec, "field")


def _verify_s_commutative(subject, w, rec):
    a = _subsemiring_part(subject, w.get('subsemiring'), rec, "subsemiring")
    if a is None:
        return
    rec.check("subsemiring multiplication commutes", _commutes(a))
    _semifield_part(subject, w.get('semifield'), rec, "semifield", container=a)


def _verify_s_subsemiring(subject, w, rec):
    a = _subsemiring_part(subject, w.get('subsemiring'), rec, "subsemiring")
    if a is not None:
        _semifield_part(subject, w.get('semifield'), rec, "semifield", container=a)


def _verify_s_subsemiring_2(subject, w, rec):
    a = _subsemiring_part(subject, w.get('subsemiring'), rec, "subsemiring")
    if a is not None:
        _field_part(subject, w.get('field'), rec, "field", container=a)


def _side_products(side: str) -> Tuple[bool, bool]:
    try:
        s = Side(side)
    except ValueError:
        s = Side.TWO_SIDED
    return s in (Side.RIGHT, Side.TWO_SIDED), s in (Side.LEFT, Side.TWO_SIDED)


def _verify_s_ideal(subject, w, rec):
    p = _subsemiring_part(subject, w.get('ideal'), rec, "ideal")
    if p is None:
        return
    a = _semifield_part(subject, w.get('semifield'), rec, "semifield", container=p)
    if a is None:
        return
    right, left = _side_products(w.get('side', Side.TWO_SIDED.value))
    if right:
        rec.check("a·p lies in the semifield", all(a.contains(a.mul(x, y)) for x in a.members for y in p.members))
    if left:
        rec.check("p·a lies in the semifield", all(a.contains(a.mul(y, x)) for x in a.members for y in p.members))


def _verify_s_pseudo_subsemiring(subject, w, rec):
    sub = _plain_subset(subject, w.get('subset'), rec, "subset")
    c = _subsemiring_part(subject, w.get('container'), rec, "container", proper=True)
    if sub is None or c is None:
        return
    rec.check("subset is a proper subset of the subject", _proper_in(sub, _whole_view(subject)))
    rec.check("subset lies inside the container", _subset_of(sub, c))
    _semifield_part(subject, w.get('semifield'), rec, "semifield", container=c, proper=False)


def _verify_s_dual_ideal(subject, w, rec):
    p = _subsemiring_part(subject, w.get('ideal'), rec, "ideal")
    if p is None:
        return
    a = _semifield_part(subject, w.get('semifield'), rec, "semifield", container=p)
    if a is None:
        return
    rec.check("a + p lies in the semifield for nonzero a",
              all(a.contains(a.add(x, y)) for x in a.members if x != a.zero for y in p.members))


def _verify_s_pseudo_ideal(subject, w, rec):
    p = _plain_subset(subject, w.get('subset'), rec, "subset")
    a = _semifield_part(subject, w.get('semifield'), rec, "semifield")
    if p is None or a is None:
        return
    rec.check("subset lies inside the semifield", _subset_of(p, a))
    right, left = _side_products(w.get('side', Side.TWO_SIDED.value))
    if right:
        rec.check("a·p lies in the subset", all(p.contains(p.mul(x, y)) for x in a.members for y in p.members))
    if left:
        rec.check("p·a lies in the subset", all(p.contains(p.mul(y, x)) for x in a.members for y in p.members))


def _verify_s_pseudo_dual_ideal(subject, w, rec):
    p = _plain_subset(subject, w.get('subset'), rec, "subset")
    c = _subsemiring_part(subject, w.get('container'), rec, "container", proper=True)
    if p is None or c is None:
        return
    _semifield_part(subject, w.get('semifield'), rec, "semifield", container=c, proper=False)
    rec.check("subset lies inside the container", _subset_of(p, c))
    rec.check("p + a lies in the subset", all(p.contains(p.add(x, y)) for x in p.members for y in c.members))


def _verify_s_semidivision_ring(subject, w, rec):
    a = _subsemiring_part(subject, w.get('subsemiring'), rec, "subsemiring", proper=True)
    if a is None:
        return
    rec.check("subsemiring is non-commutative", not _commutes(a))
    _semifield_part(subject, w.get('semifield'), rec, "semifield", container=a)
    p = _subsemiring_part(subject, w.get('division'), rec, "division")
    if p is None:
        return
    rec.check("division lies inside the subsemiring", _subset_of(p, a))
    rec.check("division is non-commutative", not _commutes(p))
    rec.check("division has no zero divisors", _no_zero_divisors(p, p.zero))


def _verify_s_congruence_simple(subject, w, rec):
    if not rec.check("subject is finite", not _is_archetype(subject)):
        return
    v = _payload_view(subject, w.get('substructure'), rec, "substructure")
    if v is None:
        return
    rec.check("substructure is a proper subset of the subject", _proper_in(v, _whole_view(subject)))
    rec.check("substructure has at least three elements", len(v.members) >= 3)
    if not _closed(v, rec, "substructure"):
        return
    induced = _induced_structure(subject, v.members)
    if rec.check("substructure satisfies the semiring axioms", induced is not None):
        rec.check("substructure is congruence-simple", is_congruence_simple(induced).holds)


def _induced_structure(s: Structure, members: Sequence[int]) -> Optional[Structure]:
    ms = sorted(members)
    try:
        return validate_semiring([s.label(i) for i in ms], _restricted(s.add.table, ms),
                                 _restricted(s.mul.table, ms), require_additive_identity=False,
                                 name=f"{s.name}|sub")
    except AxiomViolation:
        return None


# -- semifield levels ----------------------------------------------------------

def _algebra_clauses(subject, payload, over: _View, over_zero, rec, name: str) -> None:
    t = _payload_view(subject, payload, rec, name)
    if t is None:
        return
    rec.check(f"{name} is a proper subset of its semifield", _proper_in(t, over))
    rec.check(f"{name} has a nonzero element", any(x != over_zero for x in t.members))
    _closed(t, rec, name)
    rec.check(f"{name} absorbs multiplication by the semifield",
              all(t.contains(t.mul(p, a)) and t.contains(t.mul(a, p)) for p in over.members for a in t.members))


def _verify_s_semifield_1(subject, w, rec):
    _structure_is_semifield(subject, rec)
    _algebra_clauses(subject, w.get('algebra'), _whole_view(subject), _ambient_zero(subject), rec, "algebra")


def _verify_s_weak_semifield(subject, w, rec):
    p = _semifield_part(subject, w.get('semifield'), rec, "semifield", proper=False)
    if p is not None:
        _algebra_clauses(subject, w.get('algebra'), p, p.zero, rec, "algebra")


def _mixed_semifield_subject(subject) -> bool:
    if _is_archetype(subject):
        kinds = getattr(subject, 'factor_kinds', None)
        if kinds:
            return all(k in (KindFlag.SEMIFIELD.value, KindFlag.FIELD.value) for k in kinds)
        return all(f.is_semifield or f.is_field for f in subject.component_factors)
    if subject.has(KindFlag.SEMIFIELD):
        return True
    kinds = subject.tags.get('factor_kinds')
    return bool(kinds) and all(k in (KindFlag.SEMIFIELD.value, KindFlag.FIELD.value) for k in kinds)


def _verify_s_semifield_2(subject, w, rec):
    rec.check("subject is a semifield or a mixed product of semifields and fields",
              _mixed_semifield_subject(subject))
    _field_part(subject, w.get('field'), rec, "field")


# -- anti structures -------------------------------------------------------------

def _verify_s_anti_semiring(subject, w, rec):
    rec.check("subject is a ring", _subject_is_ring(subject))
    p = _subsemiring_part(subject, w.get('semiring'), rec, "semiring", proper=True)
    if p is None:
        return
    x = _parse_element(subject, w.get('non_invertible'))
    rec.check("non_invertible lies in the semiring", x is not None and p.contains(x))
    if x is None:
        return
    if _is_archetype(subject):
        y = subject.neg(x)
        lacks = y is None or not p.contains(y)
    else:
        lacks = p.find_neg(x, p.zero) is None
    rec.check("non_invertible has no additive inverse in the semiring", lacks)


def _verify_s_anti_semifield(subject, w, rec):
    rec.check("subject is a ring", _subject_is_ring(subject))
    _semifield_part(subject, w.get('semifield'), rec, "semifield")


def _verify_s_anti_ideal(subject, w, rec):
    rec.check("subject is a ring", _subject_is_ring(subject))
    t = _semifield_part(subject, w.get('semifield'), rec, "semifield")
    p = _subsemiring_part(subject, w.get('ideal'), rec, "ideal")
    if t is None or p is None:
        return
    rec.check("ideal lies inside the semifield", _subset_of(p, t))
    rec.check("p·t lies in the ideal",
              all(p.contains(p.mul(x, y)) and p.contains(p.mul(y, x)) for x in p.members for y in t.members))


# -- elements --------------------------------------------------------------------

def _elements(subject, w, names: Sequence[str], rec) -> Optional[List[Any]]:
    values = [_parse_element(subject, w.get(n)) for n in names]
    if not rec.check(f"{', '.join(names)} belong to the subject", None not in values):
        return None
    return values


def _ops(subject):
    if _is_archetype(subject):
        return subject.mul, subject.zero(), subject.one()
    return subject.times, subject.zero, subject.one


def _verify_s_zero_divisor(subject, w, rec):
    vals = _elements(subject, w, ('a', 'b', 'x', 'y'), rec)
    if vals is None:
        return
    a, b, x, y = vals
    mul, zero, _ = _ops(subject)
    rec.check("a, b are nonzero", a != zero and b != zero)
    rec.check("a·b = 0", mul(a, b) == zero)
    rec.check("x, y lie outside {a, b, 0}", x not in (a, b, zero) and y not in (a, b, zero))
    rec.check("x differs from y", x != y)
    rec.check("a·x = 0 or x·a = 0", mul(a, x) == zero or mul(x, a) == zero)
    rec.check("b·y = 0 or y·b = 0", mul(b, y) == zero or mul(y, b) == zero)
    rec.check("x·y ≠ 0 or y·x ≠ 0", mul(x, y) != zero or mul(y, x) != zero)


def _verify_s_anti_zero_divisor(subject, w, rec):
    vals = _elements(subject, w, ('x', 'y', 'a', 'b'), rec)
    if vals is None:
        return
    x, y, a, b = vals
    mul, zero, _ = _ops(subject)
    rec.check("x·y ≠ 0", mul(x, y) != zero)
    rec.check("a, b lie outside {0, x, y}", a not in (zero, x, y) and b not in (zero, x, y))
    rec.check("a·x ≠ 0 or x·a ≠ 0", mul(a, x) != zero or mul(x, a) != zero)
    rec.check("b·y ≠ 0 or y·b ≠ 0", mul(b, y) != zero or mul(y, b) != zero)
    rec.check("a·b = 0 or b·a = 0", mul(a, b) == zero or mul(b, a) == zero)


def _verify_s_idempotent(subject, w, rec):
    vals = _elements(subject, w, ('a', 'b'), rec)
    if vals is None:
        return
    a, b = vals
    mul, zero, _ = _ops(subject)
    rec.check("a is nonzero", a != zero)
    rec.check("a·a = a", mul(a, a) == a)
    rec.check("b differs from a", b != a)
    rec.check("b·b = a", mul(b, b) == a)
    absorbs_b = mul(a, b) == b or mul(b, a) == b
    absorbs_a = mul(b, a) == a or mul(a, b) == a
    rec.check("exactly one of ab = b (ba = b) and ba = a (ab = a) holds", absorbs_b != absorbs_a)


def _verify_s_unit(subject, w, rec):
    mul, _, one = _ops(subject)
    if not rec.check("subject has a multiplicative identity", one is not None):
        return
    vals = _elements(subject, w, ('x', 'y', 'a', 'b'), rec)
    if vals is None:
        return
    x, y, a, b = vals
    rec.check("x differs from 1", x != one)
    rec.check("x·y = 1", mul(x, y) == one)
    rec.check("a, b lie outside {x, y, 1}", a not in (x, y, one) and b not in (x, y, one))
    rec.check("x·a = y or a·x = y or y·b = x or b·y = x",
              mul(x, a) == y or mul(a, x) == y or mul(y, b) == x or mul(b, y) == x)
    rec.check("a·b = 1", mul(a, b) == one)


_VERIFIERS: Dict[PropertyName, Callable[[Subject, Dict[str, Any], ClauseReplay], None]] = {
    PropertyName.SEMIFIELD: _verify_semifield,
    PropertyName.PRIME_SEMIFIELD: _verify_prime_semifield,
    PropertyName.S_SEMIRING_1: _verify_s_semiring_1,
    PropertyName.S_SEMIRING_2: _verify_s_semiring_2,
    PropertyName.S_COMMUTATIVE: _verify_s_commutative,
    PropertyName.S_SUBSEMIRING: _verify_s_subsemiring,
    PropertyName.S_SUBSEMIRING_2: _verify_s_subsemiring_2,
    PropertyName.S_IDEAL: _verify_s_ideal,
    PropertyName.S_PSEUDO_SUBSEMIRING: _verify_s_pseudo_subsemiring,
    PropertyName.S_DUAL_IDEAL: _verify_s_dual_ideal,
    PropertyName.S_PSEUDO_IDEAL: _verify_s_pseudo_ideal,
    PropertyName.S_PSEUDO_DUAL_IDEAL: _verify_s_pseudo_dual_ideal,
    PropertyName.S_SEMIDIVISION_RING: _verify_s_semidivision_ring,
    PropertyName.S_ZERO_DIVISOR: _verify_s_zero_divisor,
    PropertyName.S_ANTI_ZERO_DIVISOR: _verify_s_anti_zero_divisor,
    PropertyName.S_IDEMPOTENT: _verify_s_idempotent,
    PropertyName.S_UNIT: _verify_s_unit,
    PropertyName.S_CONGRUENCE_SIMPLE: _verify_s_congruence_simple,
    PropertyName.S_SEMIFIELD_1: _verify_s_semifield_1,
    PropertyName.S_WEAK_SEMIFIELD: _verify_s_weak_semifield,
    PropertyName.S_SEMIFIELD_2: _verify_s_semifield_2,
    PropertyName.S_ANTI_SEMIRING: _verify_s_anti_semiring,
    PropertyName.S_ANTI_SEMIFIELD: _verify_s_anti_semifield,
    PropertyName.S_ANTI_IDEAL: _verify_s_anti_ideal,
}


# ---------------------------------------------------------------------------
# Archetype analysis (factor reasoning; results are replayed on grids)
# ---------------------------------------------------------------------------

def _unit_vector(arch: ArchetypeProduct, i: int, value=None) -> Tuple[Any, ...]:
    out = list(arch.zero())
    out[i] = arch.factors[i].one if value is None else value
    return tuple(out)


def _descriptor(arity: int, comps: Dict[int, str]) -> Dict[str, Any]:
    return ProductSubset(tuple(ComponentSet.parse(comps.get(i, "zero")) for i in range(arity))).to_dict()


def _archetype_payload(arch, comps: Dict[int, str], zero=None, one=None, **extra) -> Dict[str, Any]:
    payload = {'subset': _descriptor(arch.arity, comps)}
    payload['zero'] = arch.render(arch.zero() if zero is None else zero)
    if one is not None:
        payload['one'] = arch.render(one)
    for key, value in extra.items():
        payload[key] = arch.render(value)
    return payload


def _archetype_is_semifield(arch) -> Verdict:
    st = arch.is_strict()
    if not st:
        return Verdict(False, st.witness, "not strict")
    if not arch.is_commutative():
        return Verdict(False, None, "multiplication does not commute")
    if isinstance(arch, ArchetypeProduct):
        if arch.arity > 1:
            if arch.factors[0].one is None or arch.factors[1].one is None:
                return Verdict(False, None, "factors without identity")
            e0, e1 = _unit_vector(arch, 0), _unit_vector(arch, 1)
            return Verdict(False, (arch.render(e0), arch.render(e1)), "zero divisors")
        f = arch.factors[0]
        return Verdict(f.is_semifield, None, "" if f.is_semifield else f"{f.tag} is not a semifield")
    if isinstance(arch, ArchetypeGroupAlgebra):
        return Verdict(arch.coeff.is_semifield, None, "")
    return Verdict(False, None, "unsupported archetype")


def _archetype_semifield_payload(arch) -> Dict[str, Any]:
    """Proper semifield inside an archetype, by factor analysis"""
    prop = PropertyName.S_SEMIRING_1.value
    if isinstance(arch, ArchetypeProduct):
        for i, f in enumerate(arch.factors):
            if f.kind in NONNEG_KINDS and arch.arity > 1:
                return {'semifield': _archetype_payload(arch, {i: "all"}, one=_unit_vector(arch, i))}
            if f.kind in (FactorKind.Q0, FactorKind.R0, FactorKind.Z, FactorKind.Q, FactorKind.R):
                return {'semifield': _archetype_payload(arch, {i: "nonneg_integers"}, one=_unit_vector(arch, i))}
        if all(f.kind == FactorKind.Z0 for f in arch.factors):
            raise NotFound(prop, True, "Z0 contains no proper semifield")
        raise NotFound(prop, False, "no semifield found by factor analysis")
    if isinstance(arch, ArchetypeMatrix):
        comp = "all" if arch.base.kind in NONNEG_KINDS else "nonneg_integers"
        corner = list(arch.zero())
        corner[0] = arch.base.one
        return {'semifield': _archetype_payload(arch, {0: comp}, one=tuple(corner))}
    if isinstance(arch, ArchetypeGroupAlgebra):
        comp = "all" if arch.coeff.kind in NONNEG_KINDS else "nonneg_integers"
        if comp == "all" and arch.group.n == 1:
            raise NotFound(prop, True, "coefficients are the whole structure")
        return {'semifield': _archetype_payload(arch, {arch.identity: comp}, one=arch.one())}
    raise NotFound(prop, False, "unsupported archetype")


def _archetype_field_payload(arch, prop: PropertyName) -> Dict[str, Any]:
    if not isinstance(arch, ArchetypeProduct):
        raise NotFound(prop.value, False, "field search needs a product archetype")
    if all(f.is_strict for f in arch.factors):
        raise NotFound(prop.value, True, "zero-sum-free addition admits no additive inverses")
    for i, f in enumerate(arch.factors):
        if f.kind == FactorKind.ZMOD:
            n = f.modulus
            # closed subsets of Z_n are the multiples of a divisor
            for d in (d for d in range(1, n) if n % d == 0):
                if arch.arity == 1 and d == 1:
                    continue
                members = sorted({(d * k) % n for k in range(n)})
                one = next((e for e in members if e and all((e * m) % n == m for m in members)), None)
                if one is None or len(members) < 2:
                    continue
                if all(any((m * y) % n == one for y in members) for m in members if m):
                    return {'field': _archetype_payload(arch, {i: f"multiples:{d}"},
                                                        one=_unit_vector(arch, i, one))}
        if f.kind in (FactorKind.Q, FactorKind.R) and arch.arity > 1:
            return {'field': _archetype_payload(arch, {i: "all"}, one=_unit_vector(arch, i))}
    if arch.arity == 1 and arch.factors[0].kind in (FactorKind.Q, FactorKind.ZMOD):
        raise NotFound(prop.value, True, "no proper subfield")
    raise NotFound(prop.value, False, "no field found by factor analysis")


def _archetype_k_algebra_payload(arch) -> Dict[str, Any]:
    prop = PropertyName.S_SEMIFIELD_1.value
    if isinstance(arch, ArchetypeProduct) and arch.arity == 1:
        kind = arch.factors[0].kind
        if kind == FactorKind.Z0:
            return {'algebra': {'subset': _descriptor(1, {0: "nonneg_multiples:2"})}}
        if kind in (FactorKind.Q0, FactorKind.R0):
            raise NotFound(prop, True, "every nonzero element generates the whole semifield under scaling")
    raise NotFound(prop, False, "no k-semi algebra found by factor analysis")


def _archetype_anti_semiring_payload(arch) -> Dict[str, Any]:
    prop = PropertyName.S_ANTI_SEMIRING.value
    comps = {}
    witness_one = None
    for i, f in enumerate(arch.component_factors):
        if f.kind in (FactorKind.Q, FactorKind.R):
            comps[i] = "nonneg"
        elif f.kind == FactorKind.Z:
            comps[i] = "nonneg_integers"
    if not comps:
        raise NotFound(prop, True, "closed subsets of finite rings are rings")
    if isinstance(arch, ArchetypeProduct):
        i = min(comps)
        witness_one = _unit_vector(arch, i)
    else:
        witness_one = arch.one()
    payload = _archetype_payload(arch, comps)
    return {'semiring': payload, 'non_invertible': arch.render(witness_one)}


def _archetype_anti_semifield_payload(arch) -> Dict[str, Any]:
    prop = PropertyName.S_ANTI_SEMIFIELD.value
    if isinstance(arch, ArchetypeProduct):
        for i, f in enumerate(arch.factors):
            if f.kind in (FactorKind.Q, FactorKind.R):
                return {'semifield': _archetype_payload(arch, {i: "nonneg"}, one=_unit_vector(arch, i))}
            if f.kind == FactorKind.Z:
                return {'semifield': _archetype_payload(arch, {i: "nonneg_integers"}, one=_unit_vector(arch, i))}
        raise NotFound(prop, False, "no semifield found by factor analysis")
    if isinstance(arch, ArchetypeGroupAlgebra) and arch.coeff.kind in (FactorKind.Q, FactorKind.R, FactorKind.Z):
        comp = "nonneg_integers" if arch.coeff.kind == FactorKind.Z else "nonneg"
        return {'semifield': _archetype_payload(arch, {arch.identity: comp}, one=arch.one())}
    raise NotFound(prop, False, "no semifield found by factor analysis")


def _factor_elements(f) -> List[Any]:
    if f.kind == FactorKind.ZMOD:
        return list(range(f.modulus))
    return list(f.structure.labels)


def _factor_idempotents(f) -> List[Any]:
    if f.kind in (FactorKind.ZMOD, FactorKind.FINITE):
        return [x for x in _factor_elements(f) if f.mul(x, x) == x]
    return [f.zero, f.one]


def _factor_roots(f, a) -> List[Any]:
    """All b with b·b = a in the factor (exact for number kinds)"""
    if f.kind in (FactorKind.ZMOD, FactorKind.FINITE):
        return [x for x in _factor_elements(f) if f.mul(x, x) == a]
    if a == 0:
        return [f.zero]
    roots = [Fraction(1)] if a == 1 else []
    if a == 1 and f.kind in (FactorKind.Z, FactorKind.Q, FactorKind.R):
        roots.append(Fraction(-1))
    return roots


def _archetype_s_idempotents(arch: ArchetypeProduct, limit: Optional[int]) -> List[Dict[str, Any]]:
    found = []
    zero = arch.zero()
    for a in product(*[_factor_idempotents(f) for f in arch.factors]):
        if a == zero:
            continue
        for b in product(*[_factor_roots(f, v) for f, v in zip(arch.factors, a)]):
            rec = ClauseReplay()
            w = {'a': arch.render(a), 'b': arch.render(b)}
            _verify_s_idempotent(arch, w, rec)
            if rec.ok:
                found.append(w)
                if limit and len(found) >= limit:
                    return found
    return found


def _needs_witness(prop: PropertyName):
    raise PreconditionFailed(f"{prop.value} on an archetype needs a supplied witness")


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def is_semifield(s) -> Verdict:
    """Commutative, unital, strict and without zero divisors; witness explains a failure"""
    s = as_subject(s)
    if _is_archetype(s):
        return _archetype_is_semifield(s)
    comm = s.mul.is_commutative()
    if not comm:
        return Verdict(False, comm.witness, "multiplication does not commute")
    if s.zero is None or s.one is None or s.one == s.zero:
        return Verdict(False, None, "no distinct zero and one")
    strict = is_strict(s)
    if not strict:
        return Verdict(False, strict.witness, "not strict")
    for x, y in product(range(s.n), repeat=2):
        if x != s.zero and y != s.zero and s.times(x, y) == s.zero:
            return Verdict(False, (s.label(x), s.label(y)), "zero divisors")
    return Verdict(True)


def is_prime_semifield(s, cap: Optional[int] = None) -> Verdict:
    s = as_subject(s)
    base = is_semifield(s)
    if not base:
        return base
    if _is_archetype(s):
        if isinstance(s, ArchetypeProduct) and s.arity == 1:
            kind = s.factors[0].kind
            if kind == FactorKind.Z0:
                return Verdict(True, None, "Z0 contains no proper semifield")
            return Verdict(False, {'subset': _descriptor(1, {0: "nonneg_integers"})}, "contains Z0")
        return Verdict(False, None, "unsupported archetype")
    found, complete = _find_subset(s, _accept_semifield(s), cap=cap)
    if found is not None:
        return Verdict(False, [s.label(i) for i in sorted(found)], "proper semifield")
    if not complete:
        return Verdict(False, None, "census incomplete; primality unconfirmed")
    return Verdict(True)


# ---------------------------------------------------------------------------
# Searches
# ---------------------------------------------------------------------------

def certify_s_semiring_I(s, cap: Optional[int] = None) -> Certificate:
    s = as_subject(s)
    prop = PropertyName.S_SEMIRING_1
    if _is_archetype(s):
        return _issue(s, prop, _archetype_semifield_payload(s))
    found, complete = _find_subset(s, _accept_semifield(s), cap=cap)
    if found is None:
        raise NotFound(prop.value, complete)
    return _issue(s, prop, {'semifield': SemifieldWitness.from_subset(s, found).to_dict(s)})


def certify_s_semiring_II(s, cap: Optional[int] = None) -> Certificate:
    s = as_subject(s)
    prop = PropertyName.S_SEMIRING_2
    if _is_archetype(s):
        return _issue(s, prop, _archetype_field_payload(s, prop))
    found, complete = _find_subset(s, _accept_field(s), cap=cap)
    if found is None:
        raise NotFound(prop.value, complete)
    return _issue(s, prop, {'field': subset_payload(s, found, zero=True, one=True)})


def certify_s_commutative(s, cap: Optional[int] = None) -> Certificate:
    """S has a commutative S-subsemiring"""
    s = as_subject(s)
    prop = PropertyName.S_COMMUTATIVE
    if _is_archetype(s):
        _needs_witness(prop)
    sf, complete = _find_subset(s, _accept_semifield(s), cap=cap)
    if sf is None:
        raise NotFound(prop.value, complete, "no semifield inside the subject")
    inner: Dict[str, FrozenSet[int]] = {}

    def accept(a: FrozenSet[int]) -> bool:
        if s.relative_zero(a) is None or not _commutes(_finite_view(s, a)):
            return False
        found, _ = _find_subset(s, _accept_semifield(s), universe=a, cap=cap)
        if found is None:
            return False
        inner['semifield'] = found
        return True

    a, complete = _find_subset(s, accept, proper=False, cap=cap, seeds=[sf | {x} for x in range(s.n)])
    if a is None:
        raise NotFound(prop.value, complete)
    return _issue(s, prop, {'subsemiring': subset_payload(s, a, zero=True),
                            'semifield': SemifieldWitness.from_subset(s, inner['semifield']).to_dict(s)})


def is_s_commutative(s, cap: Optional[int] = None) -> Verdict:
    try:
        cert = certify_s_commutative(s, cap)
    except NotFound as e:
        return Verdict(False, None, "search incomplete" if not e.complete else e.message)
    return Verdict(cert.holds, cert.witness)


def _subsemiring_or_reject(s: Structure, subset, prop: PropertyName) -> FrozenSet[int]:
    a = _resolve(s, subset)
    if not _is_subsemiring(s, a):
        raise NotFound(prop.value, True, "subset is not a subsemiring")
    return a


def certify_s_subsemiring(s, subset, cap: Optional[int] = None) -> Certificate:
    s = as_subject(s)
    prop = PropertyName.S_SUBSEMIRING
    if _is_archetype(s):
        _needs_witness(prop)
    a = _subsemiring_or_reject(s, subset, prop)
    sf, complete = _find_subset(s, _accept_semifield(s), universe=a, cap=cap)
    if sf is None:
        raise NotFound(prop.value, complete, "no proper semifield inside the subset")
    return _issue(s, prop, {'subsemiring': subset_payload(s, a, zero=True),
                            'semifield': SemifieldWitness.from_subset(s, sf).to_dict(s)})


def certify_s_subsemiring_II(s, subset, cap: Optional[int] = None) -> Certificate:
    s = as_subject(s)
    prop = PropertyName.S_SUBSEMIRING_2
    if _is_archetype(s):
        _needs_witness(prop)
    a = _subsemiring_or_reject(s, subset, prop)
    field_, complete = _find_subset(s, _accept_field(s), universe=a, cap=cap)
    if field_ is None:
        raise NotFound(prop.value, complete, "no proper field inside the subset")
    return _issue(s, prop, {'subsemiring': subset_payload(s, a, zero=True),
                            'field': subset_payload(s, field_, zero=True, one=True)})


def certify_s_ideal(s, subset, side: Union[Side, str] = Side.TWO_SIDED, cap: Optional[int] = None) -> Certificate:
    s = as_subject(s)
    prop = PropertyName.S_IDEAL
    if _is_archetype(s):
        _needs_witness(prop)
    side = Side(side)
    right, left = _side_products(side.value)
    p = _subsemiring_or_reject(s, subset, prop)
    semifield_ok = _accept_semifield(s)

    def accept(a: FrozenSet[int]) -> bool:
        if right and any(s.times(x, y) not in a for x in a for y in p):
            return False
        if left and any(s.times(y, x) not in a for x in a for y in p):
            return False
        return semifield_ok(a)

    a, complete = _find_subset(s, accept, universe=p, cap=cap)
    if a is None:
        raise NotFound(prop.value, complete)
    return _issue(s, prop, {'ideal': subset_payload(s, p, zero=True),
                            'semifield': SemifieldWitness.from_subset(s, a).to_dict(s),
                            'side': side.value}, notes=[IDEAL_NOTE])


def certify_s_pseudo_subsemiring(s, subset, cap: Optional[int] = None) -> Certificate:
    s = as_subject(s)
    prop = PropertyName.S_PSEUDO_SUBSEMIRING
    if _is_archetype(s):
        _needs_witness(prop)
    a = _resolve(s, subset)
    if not a or len(a) >= s.n:
        raise PreconditionFailed("subset must be a nonempty proper subset")
    inner: Dict[str, FrozenSet[int]] = {}
    semifield_ok = _accept_semifield(s)

    def accept(p: FrozenSet[int]) -> bool:
        if not a <= p or s.relative_zero(p) is None:
            return False
        if semifield_ok(p):
            inner['semifield'] = p
            return True
        found, _ = _find_subset(s, semifield_ok, universe=p, cap=cap)
        if found is None:
            return False
        inner['semifield'] = found
        return True

    p, complete = _find_subset(s, accept, cap=cap, seeds=[a] + [a | {x} for x in range(s.n)])
    if p is None:
        raise NotFound(prop.value, complete)
    return _issue(s, prop, {'subset': [s.label(i) for i in sorted(a)],
                            'container': subset_payload(s, p, zero=True),
                            'semifield': SemifieldWitness.from_subset(s, inner['semifield']).to_dict(s)})


def certify_s_dual_ideal(s, subset, cap: Optional[int] = None) -> Certificate:
    s = as_subject(s)
    prop = PropertyName.S_DUAL_IDEAL
    if _is_archetype(s):
        _needs_witness(prop)
    p = _subsemiring_or_reject(s, subset, prop)
    semifield_ok = _accept_semifield(s)

    def accept(a: FrozenSet[int]) -> bool:
        z = s.relative_zero(a)
        if any(s.plus(x, y) not in a for x in a if x != z for y in p):
            return False
        return semifield_ok(a)

    a, complete = _find_subset(s, accept, universe=p, cap=cap)
    if a is None:
        raise NotFound(prop.value, complete)
    return _issue(s, prop, {'ideal': subset_payload(s, p, zero=True),
                            'semifield': SemifieldWitness.from_subset(s, a).to_dict(s)})


def certify_s_pseudo_ideal(s, subset, side: Union[Side, str] = Side.TWO_SIDED,
                           cap: Optional[int] = None) -> Certificate:
    s = as_subject(s)
    prop = PropertyName.S_PSEUDO_IDEAL
    if _is_archetype(s):
        _needs_witness(prop)
    side = Side(side)
    right, left = _side_products(side.value)
    p = _resolve(s, subset)
    if not p:
        raise PreconditionFailed("subset must be nonempty")
    semifield_ok = _accept_semifield(s)

    def accept(a: FrozenSet[int]) -> bool:
        if not p <= a:
            return False
        if right and any(s.times(x, y) not in p for x in a for y in p):
            return False
        if left and any(s.times(y, x) not in p for x in a for y in p):
            return False
        return semifield_ok(a)

    a, complete = _find_subset(s, accept, cap=cap, seeds=[p])
    if a is None:
        raise NotFound(prop.value, complete)
    return _issue(s, prop, {'subset': [s.label(i) for i in sorted(p)],
                            'semifield': SemifieldWitness.from_subset(s, a).to_dict(s),
                            'side': side.value})


def certify_s_pseudo_dual_ideal(s, subset, cap: Optional[int] = None) -> Certificate:
    s = as_subject(s)
    prop = PropertyName.S_PSEUDO_DUAL_IDEAL
    if _is_archetype(s):
        _needs_witness(prop)
    p = _resolve(s, subset)
    if not p:
        raise PreconditionFailed("subset must be nonempty")
    inner: Dict[str, FrozenSet[int]] = {}
    semifield_ok = _accept_semifield(s)

    def accept(c: FrozenSet[int]) -> bool:
        if not p <= c or s.relative_zero(c) is None:
            return False
        if any(s.plus(x, y) not in p for x in p for y in c):
            return False
        if semifield_ok(c):
            inner['semifield'] = c
            return True
        found, _ = _find_subset(s, semifield_ok, universe=c, cap=cap)
        if found is None:
            return False
        inner['semifield'] = found
        return True

    c, complete = _find_subset(s, accept, cap=cap, seeds=[p])
    if c is None:
        raise NotFound(prop.value, complete)
    return _issue(s, prop, {'subset': [s.label(i) for i in sorted(p)],
                            'container': subset_payload(s, c, zero=True),
                            'semifield': SemifieldWitness.from_subset(s, inner['semifield']).to_dict(s)})


def certify_s_semidivision_ring(s, cap: Optional[int] = None) -> Certificate:
    s = as_subject(s)
    prop = PropertyName.S_SEMIDIVISION_RING
    if _is_archetype(s):
        if s.is_commutative():
            raise NotFound(prop.value, True, "commutative semirings hold no semidivision ring")
        _needs_witness(prop)
    if s.has(KindFlag.COMMUTATIVE_MUL):
        raise NotFound(prop.value, True, "commutative semirings hold no semidivision ring")
    semifield_ok = _accept_semifield(s)
    inner: Dict[str, FrozenSet[int]] = {}
    state = {'complete': True}

    def division_ok(c: FrozenSet[int]) -> bool:
        z = s.relative_zero(c)
        v = _finite_view(s, c)
        return z is not None and not _commutes(v) and _no_zero_divisors(v, z)

    def accept(a: FrozenSet[int]) -> bool:
        if s.relative_zero(a) is None or _commutes(_finite_view(s, a)):
            return False
        sf, c1 = _find_subset(s, semifield_ok, universe=a, cap=cap)
        state['complete'] &= c1
        if sf is None:
            return False
        p, c2 = _find_subset(s, division_ok, universe=a, proper=False, cap=cap)
        state['complete'] &= c2
        if p is None:
            return False
        inner.update(semifield=sf, division=p)
        return True

    a, complete = _find_subset(s, accept, cap=cap)
    if a is None:
        raise NotFound(prop.value, complete and state['complete'])
    return _issue(s, prop, {'subsemiring': subset_payload(s, a, zero=True),
                            'semifield': SemifieldWitness.from_subset(s, inner['semifield']).to_dict(s),
                            'division': subset_payload(s, inner['division'], zero=True)})


def _element_certificates(s: Structure, prop: PropertyName, tuples: Iterable[Dict[str, int]],
                          limit: Optional[int]) -> List[Certificate]:
    out = []
    for t in tuples:
        out.append(_issue(s, prop, {k: s.label(v) for k, v in t.items()}))
        if limit and len(out) >= limit:
            break
    return out


def find_s_zero_divisors(s, limit: Optional[int] = None) -> List[Certificate]:
    s = as_subject(s)
    prop = PropertyName.S_ZERO_DIVISOR
    if _is_archetype(s):
        _needs_witness(prop)
    if s.zero is None:
        return []
    z, n, m = s.zero, s.n, s.times
    annihilators = {a: [x for x in range(n) if m(a, x) == z or m(x, a) == z] for a in range(n) if a != z}

    def tuples():
        for a, b in product(range(n), repeat=2):
            if a == z or b == z or m(a, b) != z:
                continue
            for x in annihilators[a]:
                if x in (a, b, z):
                    continue
                for y in annihilators[b]:
                    if y in (a, b, z) or y == x:
                        continue
                    if m(x, y) != z or m(y, x) != z:
                        yield {'a': a, 'b': b, 'x': x, 'y': y}
    return _element_certificates(s, prop, tuples(), limit)


def find_s_anti_zero_divisors(s, limit: Optional[int] = None) -> List[Certificate]:
    s = as_subject(s)
    prop = PropertyName.S_ANTI_ZERO_DIVISOR
    if _is_archetype(s):
        _needs_witness(prop)
    if s.zero is None:
        return []
    z, n, m = s.zero, s.n, s.times
    vanishing = [(a, b) for a, b in product(range(n), repeat=2)
                 if a != z and b != z and (m(a, b) == z or m(b, a) == z)]

    def tuples():
        for x, y in product(range(n), repeat=2):
            if m(x, y) == z:
                continue
            for a, b in vanishing:
                if a in (x, y) or b in (x, y):
                    continue
                if (m(a, x) != z or m(x, a) != z) and (m(b, y) != z or m(y, b) != z):
                    yield {'x': x, 'y': y, 'a': a, 'b': b}
                    break
    return _element_certificates(s, prop, tuples(), limit)


def find_s_idempotents(s, limit: Optional[int] = None) -> List[Certificate]:
    s = as_subject(s)
    prop = PropertyName.S_IDEMPOTENT
    if _is_archetype(s):
        if not isinstance(s, ArchetypeProduct):
            _needs_witness(prop)
        return [_issue(s, prop, w) for w in _archetype_s_idempotents(s, limit)]
    m = s.times
    squares: Dict[int, List[int]] = {}
    for b in range(s.n):
        squares.setdefault(m(b, b), []).append(b)

    def tuples():
        for a in range(s.n):
            if a == s.zero or m(a, a) != a:
                continue
            for b in squares.get(a, []):
                if b == a:
                    continue
                absorbs_b = m(a, b) == b or m(b, a) == b
                absorbs_a = m(b, a) == a or m(a, b) == a
                if absorbs_b != absorbs_a:
                    yield {'a': a, 'b': b}
    return _element_certificates(s, prop, tuples(), limit)


def find_s_units(s, limit: Optional[int] = None) -> List[Certificate]:
    s = as_subject(s)
    prop = PropertyName.S_UNIT
    if _is_archetype(s):
        _needs_witness(prop)
    if s.one is None:
        raise PreconditionFailed("S-units need a multiplicative identity")
    one, n, m = s.one, s.n, s.times

    def tuples():
        for x, y in product(range(n), repeat=2):
            if x == one or m(x, y) != one:
                continue
            for a, b in product(range(n), repeat=2):
                if a in (x, y, one) or b in (x, y, one) or m(a, b) != one:
                    continue
                if m(x, a) == y or m(a, x) == y or m(y, b) == x or m(b, y) == x:
                    yield {'x': x, 'y': y, 'a': a, 'b': b}
                    break
    return _element_certificates(s, prop, tuples(), limit)


def certify_s_congruence_simple(s, cap: Optional[int] = None) -> Certificate:
    s = as_subject(s)
    prop = PropertyName.S_CONGRUENCE_SIMPLE
    if _is_archetype(s):
        _needs_witness(prop)

    def accept(c: FrozenSet[int]) -> bool:
        if len(c) < 3:
            return False
        induced = _induced_structure(s, sorted(c))
        return induced is not None and is_congruence_simple(induced).holds

    found, complete = _find_subset(s, accept, cap=cap)
    if found is None:
        raise NotFound(prop.value, complete)
    return _issue(s, prop, {'substructure': subset_payload(s, found)})


def certify_s_semifield_I(s, cap: Optional[int] = None) -> Certificate:
    s = as_subject(s)
    prop = PropertyName.S_SEMIFIELD_1
    base = is_semifield(s)
    if not base:
        raise PreconditionFailed(f"subject is not a semifield ({base.reason})")
    if _is_archetype(s):
        return _issue(s, prop, _archetype_k_algebra_payload(s), notes=[KSEMI_NOTE])
    found, complete = _find_subset(s, _accept_k_algebra(s, frozenset(range(s.n))), cap=cap)
    if found is None:
        raise NotFound(prop.value, complete)
    return _issue(s, prop, {'algebra': subset_payload(s, found)}, notes=[KSEMI_NOTE])


def certify_s_weak_semifield(s, cap: Optional[int] = None) -> Certificate:
    s = as_subject(s)
    prop = PropertyName.S_WEAK_SEMIFIELD
    if _is_archetype(s):
        if not is_semifield(s):
            _needs_witness(prop)
        inner = _archetype_k_algebra_payload(s)
        semifield = _archetype_payload(s, {i: "all" for i in range(s.arity)}, one=s.one())
        return _issue(s, prop, {'semifield': semifield, 'algebra': inner['algebra']},
                      notes=[KSEMI_NOTE, WEAK_NOTE])
    semifield_ok = _accept_semifield(s)
    inner: Dict[str, FrozenSet[int]] = {}

    def accept(p: FrozenSet[int]) -> bool:
        if not semifield_ok(p):
            return False
        t, _ = _find_subset(s, _accept_k_algebra(s, p), universe=p, cap=cap)
        if t is None:
            return False
        inner['algebra'] = t
        return True

    p, complete = _find_subset(s, accept, proper=False, cap=cap)
    if p is None:
        raise NotFound(prop.value, complete)
    return _issue(s, prop, {'semifield': SemifieldWitness.from_subset(s, p).to_dict(s),
                            'algebra': subset_payload(s, inner['algebra'])},
                  notes=[KSEMI_NOTE, WEAK_NOTE])


def certify_s_semifield_II(s, cap: Optional[int] = None) -> Certificate:
    s = as_subject(s)
    prop = PropertyName.S_SEMIFIELD_2
    if not _mixed_semifield_subject(s):
        raise PreconditionFailed("subject must be a semifield or a mixed product of semifields and fields")
    if _is_archetype(s):
        return _issue(s, prop, _archetype_field_payload(s, prop))
    found, complete = _find_subset(s, _accept_field(s), cap=cap)
    if found is None:
        raise NotFound(prop.value, complete)
    return _issue(s, prop, {'field': subset_payload(s, found, zero=True, one=True)})


def certify_s_anti_semiring(r, cap: Optional[int] = None) -> Certificate:
    r = as_subject(r)
    prop = PropertyName.S_ANTI_SEMIRING
    if not _subject_is_ring(r):
        raise PreconditionFailed("subject must be a ring")
    if _is_archetype(r):
        return _issue(r, prop, _archetype_anti_semiring_payload(r))
    lacking: Dict[str, int] = {}

    def accept(c: FrozenSet[int]) -> bool:
        z = r.relative_zero(c)
        if z is None:
            return False
        for x in sorted(c):
            if not any(r.plus(x, y) == z for y in c):
                lacking['x'] = x
                return True
        return False

    found, complete = _find_subset(r, accept, cap=cap)
    if found is None:
        raise NotFound(prop.value, complete, "every closed subset with zero is a ring")
    return _issue(r, prop, {'semiring': subset_payload(r, found, zero=True),
                            'non_invertible': r.label(lacking['x'])})


def certify_s_anti_semifield(r, cap: Optional[int] = None) -> Certificate:
    r = as_subject(r)
    prop = PropertyName.S_ANTI_SEMIFIELD
    if not _subject_is_ring(r):
        raise PreconditionFailed("subject must be a ring or a field")
    if _is_archetype(r):
        return _issue(r, prop, _archetype_anti_semifield_payload(r))
    found, complete = _find_subset(r, _accept_semifield(r), cap=cap)
    if found is None:
        raise NotFound(prop.value, complete)
    return _issue(r, prop, {'semifield': SemifieldWitness.from_subset(r, found).to_dict(r)})


def certify_s_anti_ideal(r, subset, semifield=None, cap: Optional[int] = None) -> Certificate:
    r = as_subject(r)
    prop = PropertyName.S_ANTI_IDEAL
    if not _subject_is_ring(r):
        raise PreconditionFailed("subject must be a ring")
    if _is_archetype(r):
        if semifield is None:
            _needs_witness(prop)
        return _issue(r, prop, {'ideal': subset, 'semifield': semifield})
    p = _resolve(r, subset)
    if not _is_subsemiring(r, p):
        raise NotFound(prop.value, True, "subset is not a semiring")
    if semifield is not None:
        t = _resolve(r, semifield)
        return _issue(r, prop, {'ideal': subset_payload(r, p, zero=True),
                                'semifield': SemifieldWitness.from_subset(r, t).to_dict(r)})
    semifield_ok = _accept_semifield(r)

    def accept(t: FrozenSet[int]) -> bool:
        return p <= t and all(r.times(x, y) in p and r.times(y, x) in p for x in p for y in t) \
            and semifield_ok(t)

    t, complete = _find_subset(r, accept, cap=cap, seeds=[p])
    if t is None:
        raise NotFound(prop.value, complete)
    return _issue(r, prop, {'ideal': subset_payload(r, p, zero=True),
                            'semifield': SemifieldWitness.from_subset(r, t).to_dict(r)})


# ---------------------------------------------------------------------------
# Dispatch, fuzz support
# ---------------------------------------------------------------------------

_ELEMENT_FINDERS = {
    PropertyName.S_ZERO_DIVISOR: find_s_zero_divisors,
    PropertyName.S_ANTI_ZERO_DIVISOR: find_s_anti_zero_divisors,
    PropertyName.S_IDEMPOTENT: find_s_idempotents,
    PropertyName.S_UNIT: find_s_units,
}

_SEARCHES = {
    PropertyName.S_SEMIRING_1: certify_s_semiring_I,
    PropertyName.S_SEMIRING_2: certify_s_semiring_II,
    PropertyName.S_COMMUTATIVE: certify_s_commutative,
    PropertyName.S_SEMIDIVISION_RING: certify_s_semidivision_ring,
    PropertyName.S_CONGRUENCE_SIMPLE: certify_s_congruence_simple,
    PropertyName.S_SEMIFIELD_1: certify_s_semifield_I,
    PropertyName.S_WEAK_SEMIFIELD: certify_s_weak_semifield,
    PropertyName.S_SEMIFIELD_2: certify_s_semifield_II,
    PropertyName.S_ANTI_SEMIRING: certify_s_anti_semiring,
    PropertyName.S_ANTI_SEMIFIELD: certify_s_anti_semifield,
}

_SUBSET_SEARCHES = {
    PropertyName.S_SUBSEMIRING: certify_s_subsemiring,
    PropertyName.S_SUBSEMIRING_2: certify_s_subsemiring_II,
    PropertyName.S_PSEUDO_SUBSEMIRING: certify_s_pseudo_subsemiring,
    PropertyName.S_DUAL_IDEAL: certify_s_dual_ideal,
    PropertyName.S_PSEUDO_DUAL_IDEAL: certify_s_pseudo_dual_ideal,
}


def certify(subject, prop: Union[str, PropertyName], witness: Optional[Dict[str, Any]] = None,
            subset=None, side: Union[Side, str] = Side.TWO_SIDED, semifield=None,
            cap: Optional[int] = None) -> Certificate:
    """Search for (or, given a witness, verify) a certificate of the named property"""
    subject = as_subject(subject)
    prop = prop if isinstance(prop, PropertyName) else PropertyName.parse(prop)
    if witness is not None:
        cert = Certificate(prop.value, _subject_name(subject), False, witness, True, [], [], "verify")
        return verify_certificate(subject, cert)
    if prop in (PropertyName.SEMIFIELD, PropertyName.PRIME_SEMIFIELD):
        verdict = is_semifield(subject) if prop == PropertyName.SEMIFIELD else is_prime_semifield(subject, cap)
        if not verdict:
            incomplete = "incomplete" in verdict.reason
            raise NotFound(prop.value, not incomplete, verdict.reason or "property fails", verdict.witness)
        return _issue(subject, prop, {})
    if prop in _ELEMENT_FINDERS:
        found = _ELEMENT_FINDERS[prop](subject, limit=1)
        if not found:
            raise NotFound(prop.value, True)
        return found[0]
    if prop in _SEARCHES:
        return _SEARCHES[prop](subject, cap=cap)
    if subset is None:
        raise MissingParam(f"{prop.value} needs a subset", path="subset")
    if prop in _SUBSET_SEARCHES:
        return _SUBSET_SEARCHES[prop](subject, subset, cap=cap)
    if prop == PropertyName.S_IDEAL:
        return certify_s_ideal(subject, subset, side, cap=cap)
    if prop == PropertyName.S_PSEUDO_IDEAL:
        return certify_s_pseudo_ideal(subject, subset, side, cap=cap)
    return certify_s_anti_ideal(subject, subset, semifield, cap=cap)


ELEMENT_KEYS = ('zero', 'one', 'a', 'b', 'x', 'y', 'non_invertible')
STRUCTURAL_KEYS = ('side',)


def _occurrences(node, path=()) -> Iterable[Tuple[Tuple, Any]]:
    if isinstance(node, dict):
        for k, v in node.items():
            if k in STRUCTURAL_KEYS:
                continue
            yield from _occurrences(v, path + (k,))
    elif isinstance(node, list):
        for i, v in enumerate(node):
            yield from _occurrences(v, path + (i,))
    else:
        yield path, node


def _set_path(node, path, value):
    for key in path[:-1]:
        node = node[key]
    node[path[-1]] = value


def _copy(node):
    if isinstance(node, dict):
        return {k: _copy(v) for k, v in node.items()}
    if isinstance(node, list):
        return [_copy(v) for v in node]
    return node


def _get_path(node, path):
    for key in path:
        node = node[key]
    return node


def _has_descriptor(node) -> bool:
    return isinstance(node, dict) and isinstance(node.get('subset'), dict)


def _archetype_sites(node, path=(), owner=None) -> Iterable[Tuple[str, Tuple, Optional[Tuple]]]:
    """Mutable spots of an archetype witness as (kind, path, path of the owning descriptor)"""
    if not isinstance(node, dict):
        return
    if _has_descriptor(node):
        owner = path + ('subset',)
        for i in range(len(node['subset'].get('components', []))):
            yield 'component', owner + ('components', i), None
    for k, v in node.items():
        if k == 'subset':
            continue
        if k == 'non_invertible' and v is not None:
            held_in = owner
            if _has_descriptor(node.get('semiring')):
                held_in = path + ('semiring', 'subset')
            yield 'element', path + (k,), held_in
        elif k in ELEMENT_KEYS and v is not None:
            yield 'element', path + (k,), owner
        elif isinstance(v, dict):
            yield from _archetype_sites(v, path + (k,), owner)


def _mutate_archetype(witness, subject, rng: random.Random) -> None:
    sites = list(_archetype_sites(witness))
    if not sites:
        raise PreconditionFailed("witness has no element occurrences or descriptors to mutate")
    kind, path, owner = rng.choice(sites)
    if kind == 'component':
        current = ComponentSet.parse(_get_path(witness, path))
        _set_path(witness, path, "all" if current.kind == "zero" else "zero")
        return
    current = subject.coerce(_get_path(witness, path))
    if owner is None:
        # bare elements of a valid witness are nonzero
        replacement = subject.zero() if current != subject.zero() else subject.one()
    else:
        held_in = ProductSubset.parse(_get_path(witness, owner))
        grid = [x for x in subject.full_subset().sample(subject, engine_config.verify_grid) if x != current]
        outside = [x for x in grid if not held_in.contains(subject, x)]
        replacement = rng.choice(outside or grid) if grid else None
    if replacement is None:
        raise PreconditionFailed("no replacement element")
    _set_path(witness, path, subject.render(replacement))


def mutate_witness(certificate: Certificate, subject, rng: Optional[random.Random] = None) -> Certificate:
    """Make one change to the witness that a replay must reject.

    Finite subjects swap a label for one absent from the whole witness. Archetype
    subjects flip one subset component between zero and something larger, move a
    declared zero, one or non_invertible outside its subset, or send a bare element to 0.
    Witnesses that are empty (the subject itself is the witness) raise PreconditionFailed."""
    subject = as_subject(subject)
    rng = rng or random.Random(engine_config.seed)
    witness = _copy(certificate.witness)
    if _is_archetype(subject):
        _mutate_archetype(witness, subject, rng)
    else:
        labels = set(subject.labels)
        occurrences = [(p, v) for p, v in _occurrences(witness) if isinstance(v, str) and v in labels]
        if not occurrences:
            raise PreconditionFailed("witness has no element occurrences to mutate")
        path, current = rng.choice(occurrences)
        present = {v for _, v in occurrences}
        fresh = [l for l in subject.labels if l not in present]
        pool = fresh or [l for l in subject.labels if l != current]
        if not pool:
            raise PreconditionFailed("subject has a single element")
        _set_path(witness, path, rng.choice(pool))
    return replace(certificate, witness=witness, transcript=[], mode="mutated")
