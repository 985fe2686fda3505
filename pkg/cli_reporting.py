"""
Semiring Engine - Command Line and Reports
Structure-spec parsing, subject construction, the validate/classify/certify/hasse/claims
commands and their JSON reports
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Any, Optional, Union, Callable

from algebra_models import (
    AlgebraError, SpecError, UnknownKind, MissingParam, TypeMismatch, UnknownField, AxiomViolation,
    NotALattice, NotFound, CapExceeded, PreconditionFailed, PropertyName, Certificate, ClauseCheck,
    Side,
)
from archetypes import TupleArchetype, archetype_from_tags
from constructions import (
    chain_lattice, power_set_semiring, lattice_semiring, zmod_ring, direct_product,
    mixed_direct_product, matrix_semiring, PolynomialSemiring, MatrixSemiring, GroupSemiring,
    group_semiring, group_ring, v_of, symmetric_group, full_transformation, cyclic_group, dihedral,
)
from engine_config import engine_config, setup_logging
from finite_structures import (
    Structure, FiniteMagma, validate_semiring, characteristic, classify_elements, subsemirings,
    is_s_semigroup, is_strict, subgroups_of_mul_semigroup,
)
from lattice_catalog import get_lattice_record, get_poset_by_name
from poset_lattice import (
    FiniteLattice, FinitePoset, lattice_from_covers, lattice_from_tables, hasse, is_distributive,
    is_modular, is_boolean, power_set_lattice, chain_lattice as chain_order,
)
from semivector import (
    FiniteSemivectorSpace, TupleSemivectorSpace, SpaceProperty, LinearMap, lattice_space,
    tuple_space, polynomial_space, check_axioms, is_s_semivector, valid_scalar_choices, bases,
    certify_s_subsemivector, certify_s_pseudo_semivector, certify_s_anti_semivector,
    certify_s_basis, check_s_linear_map,
)
from smarandache_certifier import certify, is_semifield, as_subject

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INCOMPLETE = 2
EXIT_INPUT = 3

INT, BOOL, STR = "int", "bool", "str"
TAGS, LABELS, TABLE, PAIRS = "tags", "labels", "table", "pairs"
SPEC, FACTOR, FACTORS, COEFF = "spec", "factor", "factors", "coeff"

# kind -> (required fields, optional fields); ints carry a minimum
KIND_SCHEMAS: Dict[str, Any] = {
    'chain_lattice': ({'n': (INT, 1)}, {}),
    'power_set': ({'k': (INT, 0)}, {}),
    'lattice': ({}, {'catalog': STR, 'elements': LABELS, 'covers': PAIRS}),
    'lattice_tables': ({'labels': LABELS, 'meet': TABLE, 'join': TABLE}, {}),
    'table': ({'labels': LABELS, 'add': TABLE, 'mul': TABLE}, {'require_zero': BOOL}),
    'zmod': ({'n': (INT, 2)}, {}),
    'symmetric_group': ({'n': (INT, 1)}, {}),
    'full_transformation': ({'n': (INT, 1)}, {}),
    'cyclic_group': ({'n': (INT, 1)}, {}),
    'dihedral': ({'n': (INT, 2)}, {}),
    'magma': ({'labels': LABELS, 'table': TABLE}, {}),
    'direct_product': ({'factors': FACTORS}, {}),
    'mixed_product': ({'factors': FACTORS}, {}),
    'matrix': ({'base': FACTOR, 'dim': (INT, 1)}, {}),
    'polynomial': ({'base': FACTOR}, {'max_degree': (INT, 0)}),
    'group_semiring': ({'coeff': SPEC, 'carrier': SPEC}, {}),
    'semigroup_semiring': ({'coeff': SPEC, 'carrier': SPEC}, {}),
    'group_ring': ({'coeff': COEFF, 'carrier': SPEC}, {}),
    'v_of': ({'carrier': SPEC}, {}),
    'archetype': ({'tags': TAGS}, {}),
    'lattice_space': ({'lattice': SPEC}, {}),
    'tuple_space': ({'tags': TAGS}, {'scalars': STR}),
    'polynomial_space': ({'max_degree': (INT, 0)}, {'scalars': STR}),
    'finite_space': ({'scalars': SPEC, 'labels': LABELS, 'add': TABLE, 'zero': STR, 'action': TABLE}, {}),
}

LATTICE_KINDS = ('chain_lattice', 'power_set', 'lattice', 'lattice_tables')
SPACE_KINDS = ('lattice_space', 'tuple_space', 'polynomial_space', 'finite_space')
SPACE_PROPERTIES = {p.value: p for p in SpaceProperty}


# ---------------------------------------------------------------------------
# Structure specs
# ---------------------------------------------------------------------------

@dataclass
class StructureSpec:
    kind: str
    params: Dict[str, Any] = field(default_factory=dict)
    name: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        result = {'kind': self.kind}
        for key, value in self.params.items():
            result[key] = _spec_value_to_dict(value)
        if self.name:
            result['name'] = self.name
        return result

    @classmethod
    def from_dict(cls, data: Dict[str, Any], path: str = "") -> 'StructureSpec':
        return _parse_object(data, path)


def _spec_value_to_dict(value):
    if isinstance(value, StructureSpec):
        return value.to_dict()
    if isinstance(value, list):
        return [_spec_value_to_dict(v) for v in value]
    return value


def _join(path: str, key) -> str:
    return f"{path}.{key}" if path else str(key)


def _check_int(value, minimum: int, path: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeMismatch(f"expected an integer, got {type(value).__name__}", path=path)
    if value < minimum:
        raise TypeMismatch(f"must be at least {minimum}", path=path)
    return value


def _check_str_list(value, path: str) -> List[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise TypeMismatch("expected a list of strings", path=path)
    return list(value)


def _check_table(value, path: str) -> List[List[int]]:
    if not isinstance(value, list):
        raise TypeMismatch("expected a list of rows", path=path)
    for i, row in enumerate(value):
        if not isinstance(row, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in row):
            raise TypeMismatch("expected a row of integers", path=_join(path, i))
    return [list(row) for row in value]


def _check_factor(value, path: str):
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return _parse_object(value, path)
    raise TypeMismatch("expected a factor tag or a structure spec", path=path)


def _check_field(value, kind, path: str):
    if isinstance(kind, tuple):
        return _check_int(value, kind[1], path)
    if kind == BOOL:
        if not isinstance(value, bool):
            raise TypeMismatch("expected true or false", path=path)
        return value
    if kind == STR:
        if not isinstance(value, str):
            raise TypeMismatch("expected a string", path=path)
        return value
    if kind in (TAGS, LABELS):
        return _check_str_list(value, path)
    if kind == TABLE:
        return _check_table(value, path)
    if kind == PAIRS:
        if not isinstance(value, list) or not all(
                isinstance(p, list) and len(p) == 2 and all(isinstance(x, str) for x in p) for p in value):
            raise TypeMismatch("expected a list of [lower, upper] label pairs", path=path)
        return [list(p) for p in value]
    if kind == SPEC:
        if not isinstance(value, dict):
            raise TypeMismatch("expected a structure spec object", path=path)
        return _parse_object(value, path)
    if kind == FACTOR:
        return _check_factor(value, path)
    if kind == FACTORS:
        if not isinstance(value, list) or not value:
            raise TypeMismatch("expected a nonempty list of factors", path=path)
        return [_check_factor(v, _join(path, i)) for i, v in enumerate(value)]
    if kind == COEFF:
        if isinstance(value, int) and not isinstance(value, bool):
            return _check_int(value, 2, path)
        return _check_factor(value, path)
    raise TypeMismatch(f"unsupported field type {kind}", path=path)


def _parse_object(data, path: str = "") -> StructureSpec:
    if not isinstance(data, dict):
        raise TypeMismatch("expected a structure spec object", path=path)
    if 'kind' not in data:
        raise MissingParam("missing field 'kind'", path=_join(path, 'kind'))
    kind = data['kind']
    if kind not in KIND_SCHEMAS:
        raise UnknownKind(f"unknown kind {kind!r}", path=_join(path, 'kind'))
    required, optional = KIND_SCHEMAS[kind]
    name = data.get('name')
    if name is not None and not isinstance(name, str):
        raise TypeMismatch("expected a string", path=_join(path, 'name'))
    for key in data:
        if key not in ('kind', 'name') and key not in required and key not in optional:
            raise UnknownField(f"unknown field {key!r} for kind {kind}", path=_join(path, key))
    params = {}
    for key, ftype in required.items():
        if key not in data:
            raise MissingParam(f"missing field {key!r}", path=_join(path, key))
        params[key] = _check_field(data[key], ftype, _join(path, key))
    for key, ftype in optional.items():
        if key in data:
            params[key] = _check_field(data[key], ftype, _join(path, key))
    if kind == 'lattice' and 'catalog' not in params and not ('elements' in params and 'covers' in params):
        raise MissingParam("lattice needs 'catalog' or both 'elements' and 'covers'", path=_join(path, 'catalog'))
    return StructureSpec(kind, params, name)


def parse_spec(text: Union[str, bytes, Dict[str, Any]]) -> StructureSpec:
    """Parse and validate a structure spec from JSON text (or an already decoded object)"""
    if isinstance(text, dict):
        return _parse_object(text)
    if isinstance(text, bytes):
        try:
            text = text.decode('utf-8')
        except UnicodeDecodeError as e:
            raise TypeMismatch(f"spec is not UTF-8 text (byte {e.start})")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise TypeMismatch(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}")
    return _parse_object(data)


def serialize_spec(spec: StructureSpec) -> str:
    """Canonical text form: sorted keys, no insignificant whitespace"""
    return json.dumps(spec.to_dict(), sort_keys=True, separators=(',', ':'), ensure_ascii=False)


# ---------------------------------------------------------------------------
# Building subjects
# ---------------------------------------------------------------------------

def build_order(spec: StructureSpec) -> Union[FiniteLattice, FinitePoset]:
    """The lattice (or catalog poset) behind a spec, without semiring validation"""
    p = spec.params
    if spec.kind == 'chain_lattice':
        return chain_order(p['n'])
    if spec.kind == 'power_set':
        return power_set_lattice(p['k'])
    if spec.kind == 'lattice':
        if 'catalog' in p:
            record = get_lattice_record(p['catalog'])
            if record is None:
                raise UnknownKind(f"no catalog lattice named {p['catalog']!r}", path="catalog")
            if not record['is_lattice']:
                return get_poset_by_name(p['catalog'])
            return lattice_from_covers(record['elements'], [tuple(c) for c in record['covers']])
        return lattice_from_covers(p['elements'], [tuple(c) for c in p['covers']])
    if spec.kind == 'lattice_tables':
        return lattice_from_tables(p['labels'], p['meet'], p['join'])
    if spec.kind == 'lattice_space':
        return build_order(p['lattice'])
    built = build_subject(spec)
    lattice = getattr(built, 'lattice', None)
    if lattice is None:
        raise PreconditionFailed(f"{spec.kind} carries no lattice order")
    return lattice


def _lattice_name(spec: StructureSpec) -> str:
    p = spec.params
    if spec.name:
        return spec.name
    if spec.kind == 'lattice':
        return p.get('catalog', f"L{len(p.get('elements', []))}")
    return f"L{len(p['labels'])}"


def _structure(value, path: str) -> Structure:
    """Build a nested spec that must come out as a finite table-backed semiring"""
    built = build_subject(value)
    if isinstance(built, (MatrixSemiring, GroupSemiring)):
        built = built.materialize()
    if not isinstance(built, Structure):
        raise TypeMismatch(f"expected a finite semiring, got {built.__class__.__name__}", path=path)
    return built


def _factor(value, path: str):
    return value if isinstance(value, str) else _structure(value, path)


def _carrier(value: StructureSpec, path: str) -> FiniteMagma:
    built = build_subject(value)
    if isinstance(built, Structure):
        return built.mul
    if not isinstance(built, FiniteMagma):
        raise TypeMismatch("expected a semigroup carrier", path=path)
    return built


def _build_lattice_kind(spec: StructureSpec) -> Structure:
    p = spec.params
    if spec.kind == 'chain_lattice':
        return chain_lattice(p['n'])
    if spec.kind == 'power_set':
        return power_set_semiring(p['k'])
    order = build_order(spec)
    if isinstance(order, FinitePoset):
        raise NotALattice(("catalog", p.get('catalog')), "meet or join")
    return lattice_semiring(order, name=_lattice_name(spec))


def _build_table(spec: StructureSpec) -> Structure:
    p = spec.params
    return validate_semiring(p['labels'], p['add'], p['mul'],
                             require_additive_identity=p.get('require_zero', True),
                             name=spec.name or f"T{len(p['labels'])}")


def _build_magma(spec: StructureSpec) -> FiniteMagma:
    p = spec.params
    builders = {'symmetric_group': symmetric_group, 'full_transformation': full_transformation,
                'cyclic_group': cyclic_group, 'dihedral': dihedral}
    if spec.kind in builders:
        return builders[spec.kind](p['n'])
    return FiniteMagma.from_rows(p['labels'], p['table'])


def _build_product(spec: StructureSpec):
    factors = [_factor(f, f"factors.{i}") for i, f in enumerate(spec.params['factors'])]
    if spec.kind == 'mixed_product':
        return mixed_direct_product(factors, name=spec.name or "")
    return direct_product(factors, name=spec.name or "")


def _build_group_semiring(spec: StructureSpec):
    p = spec.params
    carrier = _carrier(p['carrier'], "carrier")
    if spec.kind == 'group_ring':
        coeff = p['coeff']
        if isinstance(coeff, StructureSpec):
            coeff = _structure(coeff, "coeff")
        return group_ring(coeff, carrier, name=spec.name or "")
    return group_semiring(_structure(p['coeff'], "coeff"), carrier, name=spec.name or "")


def _build_space(spec: StructureSpec):
    p = spec.params
    if spec.kind == 'lattice_space':
        order = build_order(p['lattice'])
        if isinstance(order, FinitePoset):
            raise NotALattice(("catalog", p['lattice'].params.get('catalog')), "meet or join")
        return lattice_space(order, name=spec.name or "")
    if spec.kind == 'tuple_space':
        return tuple_space(p['tags'], p.get('scalars', "Z0"), name=spec.name or "")
    if spec.kind == 'polynomial_space':
        return polynomial_space(p['max_degree'], p.get('scalars', "Z0"))
    scalars = _structure(p['scalars'], "scalars")
    labels = p['labels']
    if p['zero'] not in labels:
        raise TypeMismatch(f"zero vector {p['zero']!r} is not a listed vector", path="zero")
    return FiniteSemivectorSpace(scalars, labels, p['add'], labels.index(p['zero']), p['action'],
                                 name=spec.name or "")


_BUILDERS: Dict[str, Callable[[StructureSpec], Any]] = {
    'chain_lattice': _build_lattice_kind,
    'power_set': _build_lattice_kind,
    'lattice': _build_lattice_kind,
    'lattice_tables': _build_lattice_kind,
    'table': _build_table,
    'zmod': lambda spec: zmod_ring(spec.params['n']),
    'symmetric_group': _build_magma,
    'full_transformation': _build_magma,
    'cyclic_group': _build_magma,
    'dihedral': _build_magma,
    'magma': _build_magma,
    'direct_product': _build_product,
    'mixed_product': _build_product,
    'matrix': lambda spec: matrix_semiring(_factor(spec.params['base'], "base"), spec.params['dim']),
    'polynomial': lambda spec: PolynomialSemiring(_factor(spec.params['base'], "base"),
                                                  spec.params.get('max_degree')),
    'group_semiring': _build_group_semiring,
    'semigroup_semiring': _build_group_semiring,
    'group_ring': _build_group_semiring,
    'v_of': lambda spec: v_of(_carrier(spec.params['carrier'], "carrier"), name=spec.name or ""),
    'archetype': lambda spec: archetype_from_tags(spec.params['tags'], spec.name or ""),
    'lattice_space': _build_space,
    'tuple_space': _build_space,
    'polynomial_space': _build_space,
    'finite_space': _build_space,
}


def build_subject(spec: Union[StructureSpec, Dict[str, Any], str]):
    """Construct the structure, magma, archetype or space a spec describes"""
    if not isinstance(spec, StructureSpec):
        spec = parse_spec(spec)
    subject = _BUILDERS[spec.kind](spec)
    logger.debug("built %s subject %s", spec.kind, getattr(subject, 'name', ''))
    return subject


def _is_space(subject) -> bool:
    return isinstance(subject, (FiniteSemivectorSpace, TupleSemivectorSpace))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

def _report(exit_code: int, **payload) -> Dict[str, Any]:
    result = {'success': exit_code == EXIT_OK, 'exit_code': exit_code}
    result.update(payload)
    return result


def _error_report(error: AlgebraError, exit_code: int = EXIT_INPUT) -> Dict[str, Any]:
    return _report(exit_code, error=error.to_dict())


def _guarded(fn: Callable[..., Dict[str, Any]]) -> Callable[..., Dict[str, Any]]:
    """Map engine errors escaping a command onto input-error reports"""
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except CapExceeded as e:
            logger.warning("cap %d exceeded", e.cap)
            return _error_report(e, EXIT_INCOMPLETE)
        except AlgebraError as e:
            logger.info("%s: %s", e.__class__.__name__, e.message)
            return _error_report(e)
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _as_spec(spec) -> StructureSpec:
    return spec if isinstance(spec, StructureSpec) else parse_spec(spec)


def _structure_summary(s: Structure) -> Dict[str, Any]:
    return {'name': s.name, 'order': s.n, 'flags': sorted(f.value for f in s.flags),
            'zero': None if s.zero is None else s.label(s.zero),
            'one': None if s.one is None else s.label(s.one),
            'validation': s.tags.get('validation', 'exhaustive')}


@_guarded
def cmd_validate(spec) -> Dict[str, Any]:
    """Axiom report for the subject; a failed axiom exits with 1"""
    spec = _as_spec(spec)
    try:
        subject = build_subject(spec)
        subject = as_subject(subject)
    except (AxiomViolation, NotALattice) as e:
        return _report(EXIT_FALSE, valid=False, violation=e.to_dict())
    if isinstance(subject, Structure):
        return _report(EXIT_OK, valid=True, structure=_structure_summary(subject))
    if isinstance(subject, FiniteMagma):
        assoc = subject.is_associative()
        return _report(EXIT_OK if assoc else EXIT_FALSE, valid=assoc.holds, associativity=assoc.to_dict(),
                       order=subject.n)
    if _is_space(subject):
        axioms = check_axioms(subject)
        return _report(EXIT_OK if axioms else EXIT_FALSE, valid=axioms.holds, axioms=axioms.to_dict(),
                       space=subject.to_dict())
    return _report(EXIT_OK, valid=True, note="archetype axioms hold componentwise in exact arithmetic",
                   subject=getattr(subject, 'name', ''))


def _classify_structure(s: Structure, cap: Optional[int]) -> Dict[str, Any]:
    census = subsemirings(s, cap=cap)
    mul_s = is_s_semigroup(s.mul)
    return {
        'structure': _structure_summary(s),
        'characteristic': str(characteristic(s)),
        'strict': is_strict(s).to_dict(),
        'semifield': is_semifield(s).to_dict(),
        'elements': classify_elements(s).to_dict(),
        'subsemirings': {'count': len(census.subsets), 'complete': census.complete,
                         'members': census.labelled(s) if len(census.subsets) <= 64 else None},
        'multiplicative_s_semigroup': mul_s.to_dict(),
        'tags': {k: v for k, v in s.tags.items()},
    }


def _classify_archetype(a: TupleArchetype) -> Dict[str, Any]:
    return {
        'archetype': a.to_dict(),
        'characteristic': str(characteristic(a)),
        'strict': is_strict(a).to_dict(),
        'semifield': is_semifield(a).to_dict(),
        'additive_s_semigroup': a.is_s_semigroup().to_dict(),
        'elements': classify_elements(a, a.grid(24)).to_dict(),
        'note': "element classes computed on a sample grid",
    }


def _classify_magma(m: FiniteMagma) -> Dict[str, Any]:
    return {
        'order': m.n,
        'associative': m.is_associative().to_dict(),
        'commutative': m.is_commutative().to_dict(),
        'group': m.is_group().to_dict(),
        'idempotents': [m.labels[i] for i in m.idempotents()],
        'subgroups': [[m.labels[i] for i in sorted(g)] for g in subgroups_of_mul_semigroup(m)],
        's_semigroup': is_s_semigroup(m).to_dict(),
    }


def _classify_space(sp) -> Dict[str, Any]:
    report = {'space': sp.to_dict(), 'axioms': check_axioms(sp).to_dict(),
              's_semivector': is_s_semivector(sp).to_dict(), 'bases': bases(sp).to_dict()}
    if not sp.is_finite:
        report['valid_scalar_choices'] = valid_scalar_choices(sp.arch.tags)
    return report


@_guarded
def cmd_classify(spec, cap: Optional[int] = None) -> Dict[str, Any]:
    """Flags, characteristic, element classes and the sub-structure census"""
    subject = build_subject(_as_spec(spec))
    if isinstance(subject, (MatrixSemiring, GroupSemiring)):
        subject = subject.materialize()
    if isinstance(subject, Structure):
        return _report(EXIT_OK, **_classify_structure(subject, cap))
    if isinstance(subject, FiniteMagma):
        return _report(EXIT_OK, **_classify_magma(subject))
    if _is_space(subject):
        return _report(EXIT_OK, **_classify_space(subject))
    if isinstance(subject, PolynomialSemiring):
        return _report(EXIT_OK, polynomial={'name': subject.name, 'max_degree': subject.max_degree},
                       note="infinite semiring; classify a degree-bounded polynomial_space instead")
    return _report(EXIT_OK, **_classify_archetype(subject))


def _certificate_report(cert: Certificate) -> Dict[str, Any]:
    code = EXIT_OK if cert.holds else EXIT_FALSE
    return _report(code, found=True, certificate=cert.to_dict())


def _not_found_report(e: NotFound) -> Dict[str, Any]:
    return _report(EXIT_FALSE if e.complete else EXIT_INCOMPLETE, found=False, not_found=e.to_dict())


def _linear_map_certificate(sp, options: Dict[str, Any]) -> Certificate:
    for key in ('map', 'codomain', 'domain_group', 'codomain_group'):
        if key not in options:
            raise MissingParam(f"s-linear-map needs {key!r}", path=f"options.{key}")
    T = LinearMap.from_dict(options['map'])
    codomain = build_subject(options['codomain'])
    verdict = check_s_linear_map(T, sp, codomain, options['domain_group'], options['codomain_group'])
    witness = {'map': T.to_dict(), 'domain_group': options['domain_group'],
               'codomain_group': options['codomain_group']}
    if not verdict:
        witness['counterexample'] = verdict.witness
    clause = "T(c·p1 + p2) = c·T(p1) + T(p2) and T(p) in C for p, p1, p2 in P"
    notes = [verdict.reason] if verdict.reason else []
    return Certificate(SpaceProperty.S_LINEAR_MAP.value, sp.name, verdict.holds, witness, sp.is_finite,
                       [ClauseCheck(clause, verdict.holds)], notes, "search" if sp.is_finite else "verify-grid")


def _space_certificate(sp, prop: SpaceProperty, subset, options: Dict[str, Any]) -> Certificate:
    if prop == SpaceProperty.S_LINEAR_MAP:
        return _linear_map_certificate(sp, options)
    if prop == SpaceProperty.S_ANTI_SEMIVECTOR:
        if sp.is_finite:
            raise PreconditionFailed("s-anti-semivector needs a tuple space")
        for key in ('field', 'semifield'):
            if key not in options:
                raise MissingParam(f"s-anti-semivector needs {key!r}", path=f"options.{key}")
    if subset is None:
        raise MissingParam(f"{prop.value} needs a subset", path="subset")
    if prop == SpaceProperty.S_SUBSEMIVECTOR:
        return certify_s_subsemivector(sp, subset)
    if prop == SpaceProperty.S_PSEUDO_SEMIVECTOR:
        if 'scalars' not in options:
            raise MissingParam("s-pseudo-semivector needs 'scalars'", path="options.scalars")
        return certify_s_pseudo_semivector(sp, subset, options['scalars'])
    if prop == SpaceProperty.S_ANTI_SEMIVECTOR:
        return certify_s_anti_semivector(sp.arch, options['field'], subset, options['semifield'])
    if 'basis' not in options:
        raise MissingParam("s-basis needs 'basis'", path="options.basis")
    return certify_s_basis(sp, options['basis'], subset)


@_guarded
def cmd_certify(spec, prop: str, witness: Optional[Dict[str, Any]] = None, cap: Optional[int] = None,
                subset=None, side: Union[str, Side] = Side.TWO_SIDED, semifield=None,
                options: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Search for (or verify) a certificate; exit 1 for a false claim, 2 for an incomplete search"""
    subject = build_subject(_as_spec(spec))
    try:
        if prop in SPACE_PROPERTIES:
            if not _is_space(subject):
                raise PreconditionFailed(f"{prop} applies to semivector spaces")
            return _certificate_report(_space_certificate(subject, SPACE_PROPERTIES[prop], subset, options or {}))
        PropertyName.parse(prop)
        if _is_space(subject) or isinstance(subject, (FiniteMagma, PolynomialSemiring)):
            raise PreconditionFailed(f"{prop} needs a semiring subject, not {subject.__class__.__name__}")
        if isinstance(witness, dict) and 'witness' in witness and 'property' in witness:
            witness = witness['witness']
        cert = certify(subject, prop, witness=witness, subset=subset, side=side, semifield=semifield, cap=cap)
    except NotFound as e:
        return _not_found_report(e)
    return _certificate_report(cert)


@_guarded
def cmd_hasse(spec) -> Dict[str, Any]:
    """Cover relation of the subject's order and its DOT rendering"""
    spec = _as_spec(spec)
    order = build_order(spec)
    diagram = hasse(order)
    report = {'diagram': diagram.to_dict(), 'dot': diagram.to_dot(spec.name or "hasse")}
    if isinstance(order, FiniteLattice):
        report['distributive'] = is_distributive(order).to_dict()
        report['modular'] = is_modular(order).to_dict()
        report['boolean'] = is_boolean(order).to_dict()
    return _report(EXIT_OK, **report)


def cmd_claims(filter_glob: Optional[str] = None, workers: Optional[int] = None) -> Dict[str, Any]:
    """Replay the claims corpus; any failing claim exits with 1"""
    from claims_corpus import run_claims
    ledger = run_claims(filter_glob, workers)
    failed = [entry for entry in ledger if not entry['passed']]
    return _report(EXIT_FALSE if failed else EXIT_OK, total=len(ledger), passed=len(ledger) - len(failed),
                   failed=[entry['id'] for entry in failed], ledger=ledger)


# ---------------------------------------------------------------------------
# Command line
# ---------------------------------------------------------------------------

def _load_json_file(path: str, what: str):
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except FileNotFoundError:
        raise SpecError(f"{what} file not found: {path}")
    except json.JSONDecodeError as e:
        raise TypeMismatch(f"invalid JSON in {path} at line {e.lineno} column {e.colno}: {e.msg}")
    except UnicodeDecodeError as e:
        raise TypeMismatch(f"{what} file {path} is not UTF-8 text (byte {e.start})")


def _read_spec(path: str) -> StructureSpec:
    if path == "-":
        return parse_spec(sys.stdin.buffer.read())
    try:
        with open(path, 'rb') as f:
            return parse_spec(f.read())
    except FileNotFoundError:
        raise SpecError(f"spec file not found: {path}")


def _json_arg(text: Optional[str], what: str):
    if text is None:
        return None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise TypeMismatch(f"invalid JSON for {what}: {e.msg}", path=what)


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog="semiring-engine",
                                     description="Finite semirings, semifields and their Smarandache variants")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the axioms of a structure spec")
    p.add_argument("spec", help="structure spec file, or - for stdin")

    p = sub.add_parser("classify", help="flags, characteristic, element classes and census")
    p.add_argument("spec")
    p.add_argument("--cap", type=int, default=None)

    p = sub.add_parser("certify", help="search for or verify a property certificate")
    p.add_argument("spec")
    p.add_argument("--property", required=True, dest="prop")
    p.add_argument("--witness", default=None, help="JSON file with a witness payload or certificate")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--subset", default=None, help="JSON subset (labels or a product descriptor)")
    p.add_argument("--side", default=Side.TWO_SIDED.value, choices=[s.value for s in Side])
    p.add_argument("--semifield", default=None, help="JSON semifield subset for s-anti-ideal")
    p.add_argument("--options", default=None, help="JSON object of space-property options")

    p = sub.add_parser("hasse", help="emit the Hasse diagram as DOT")
    p.add_argument("spec")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("claims", help="replay the claims corpus")
    p.add_argument("--filter", default=None, dest="filter_glob", help="claim id glob")
    p.add_argument("--workers", type=int, default=None)
    return parser.parse_args(argv)


def _run(args: argparse.Namespace) -> Dict[str, Any]:
    if args.command == "claims":
        return cmd_claims(args.filter_glob, args.workers)
    try:
        spec = _read_spec(args.spec)
        if args.command == "validate":
            return cmd_validate(spec)
        if args.command == "classify":
            return cmd_classify(spec, cap=args.cap)
        if args.command == "hasse":
            return cmd_hasse(spec)
        witness = _load_json_file(args.witness, "witness") if args.witness else None
        return cmd_certify(spec, args.prop, witness=witness, cap=args.cap,
                           subset=_json_arg(args.subset, "subset"), side=args.side,
                           semifield=_json_arg(args.semifield, "semifield"),
                           options=_json_arg(args.options, "options"))
    except SpecError as e:
        return _error_report(e)


def _summary(command: str, report: Dict[str, Any]) -> str:
    if 'error' in report:
        return f"{command}: {report['error']['error']}: {report['error']['message']}"
    if command == "claims":
        return f"claims: {report['passed']}/{report['total']} passed"
    if command == "certify" and 'certificate' in report:
        cert = report['certificate']
        return f"certify {cert['property']}: holds={cert['holds']} code={cert['verification_code']}"
    return f"{command}: exit {report['exit_code']}"


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_args(argv)
    setup_logging(args.log_level)
    saved_cap = engine_config.settings['subset_cap']
    if getattr(args, 'cap', None):
        engine_config.settings['subset_cap'] = args.cap
    try:
        report = _run(args)
    finally:
        engine_config.settings['subset_cap'] = saved_cap
    if args.command == "hasse" and report['success']:
        if args.output:
            with open(args.output, 'w', encoding='utf-8') as f:
                f.write(report['dot'])
        else:
            sys.stdout.write(report['dot'])
            print(_summary(args.command, report), file=sys.stderr)
            return report['exit_code']
    print(json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False, default=str))
    print(_summary(args.command, report), file=sys.stderr)
    return report['exit_code']


if __name__ == '__main__':
    sys.exit(main())
