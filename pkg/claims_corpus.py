"""
Semiring Engine - Claims Corpus
Replays the structural claims ledger: every record names a subject spec, a check and the
expected observation
"""

import fnmatch
import json
import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Any, Optional, Callable

from algebra_models import AlgebraError, SpecError, Side
from cli_reporting import (
    EXIT_OK, EXIT_INCOMPLETE, StructureSpec, parse_spec, serialize_spec, build_order,
    build_subject, cmd_validate, cmd_certify,
)
from constructions import MatrixSemiring, GroupSemiring, atom_factorization
from engine_config import engine_config
from finite_structures import (
    Structure, FiniteMagma, characteristic, is_strict, classify_elements, is_congruence_simple,
    is_s_semigroup, subgroups_of_mul_semigroup,
)
from poset_lattice import FiniteLattice, hasse, is_distributive, is_modular, is_boolean, atoms, boolean_atom_iso
from semivector import (
    in_span, is_independent, bases, representation_count, is_s_semivector, valid_scalar_choices,
    is_subsemivector, smaller_spanning_search,
)
from smarandache_certifier import is_semifield, as_subject

logger = logging.getLogger(__name__)

CLAIMS_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'claims_corpus.json')

LATTICE_PREDICATES = {'distributive': is_distributive, 'modular': is_modular, 'boolean': is_boolean}


@dataclass
class Claim:
    id: str
    check: str
    expected: Any
    subject: Optional[StructureSpec] = None
    args: Dict[str, Any] = field(default_factory=dict)
    source: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            'id': self.id,
            'source': self.source,
            'subject': None if self.subject is None else self.subject.to_dict(),
            'check': self.check,
            'args': self.args,
            'expected': self.expected,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Claim':
        for key in ('id', 'check', 'expected'):
            if key not in data:
                raise SpecError(f"claim is missing {key!r}", path=str(data.get('id', '')))
        subject = data.get('subject')
        return cls(
            id=data['id'],
            check=data['check'],
            expected=data['expected'],
            subject=None if subject is None else parse_spec(subject),
            args=data.get('args', {}),
            source=data.get('source', ''),
        )


@dataclass
class ClaimResult:
    id: str
    passed: bool
    observed: Any
    expected: Any
    seconds: float
    error: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        result = {
            'id': self.id,
            'passed': self.passed,
            'observed': self.observed,
            'expected': self.expected,
            'seconds': round(self.seconds, 4),
        }
        if self.error is not None:
            result['error'] = self.error
        return result


def load_claims(path: str = CLAIMS_FILE) -> List[Claim]:
    """Load the claims ledger"""
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except FileNotFoundError:
        raise SpecError(f"claims file not found: {path}")
    claims = [Claim.from_dict(record) for record in data.get('claims', [])]
    ids = [c.id for c in claims]
    if len(ids) != len(set(ids)):
        raise SpecError("claim ids must be unique")
    return claims


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------

def _outcome(report: Dict[str, Any]) -> str:
    code = report['exit_code']
    if 'error' in report:
        return "incomplete" if code == EXIT_INCOMPLETE else "input_error"
    if code == EXIT_INCOMPLETE:
        return "incomplete"
    if report.get('found') is False:
        return "not_found"
    return "holds" if code == EXIT_OK else "fails"


def _lattice(claim: Claim) -> FiniteLattice:
    order = build_order(claim.subject)
    if not isinstance(order, FiniteLattice):
        raise SpecError(f"{claim.subject.kind} is not a lattice", path="subject")
    return order


def _structure(claim: Claim) -> Structure:
    return as_subject(build_subject(claim.subject))


def _magma(claim: Claim) -> FiniteMagma:
    subject = _structure(claim)
    return subject.mul if isinstance(subject, Structure) else subject


def _certify_report(claim: Claim, witness: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    a = claim.args
    return cmd_certify(claim.subject, a['property'], witness=witness, cap=a.get('cap'),
                       subset=a.get('subset'), side=a.get('side', Side.TWO_SIDED.value),
                       semifield=a.get('semifield'), options=a.get('options'))


def check_lattice_predicates(claim: Claim) -> Dict[str, bool]:
    l = _lattice(claim)
    names = claim.args.get('properties', list(LATTICE_PREDICATES))
    return {name: LATTICE_PREDICATES[name](l).holds for name in names}


def check_order(claim: Claim) -> int:
    subject = build_subject(claim.subject)
    if isinstance(subject, (MatrixSemiring, GroupSemiring)):
        return subject.size
    return subject.n


def check_certify_witness(claim: Claim) -> Any:
    report = _certify_report(claim)
    if 'certificate' not in report:
        return _outcome(report)
    node = report['certificate']['witness']
    for key in claim.args['path']:
        node = node[key]
    return node


def check_matrix_product(claim: Claim) -> Dict[str, Any]:
    ms = build_subject(claim.subject)
    if not isinstance(ms, MatrixSemiring):
        raise SpecError("matrix_product needs a finite matrix semiring", path="subject")
    a, b = ms.element(claim.args['a']), ms.element(claim.args['b'])
    return {'ab': ms.rows(ms.mul(a, b)), 'ba': ms.rows(ms.mul(b, a))}


def check_subgroups_include(claim: Claim) -> bool:
    m = _magma(claim)
    found = {frozenset(m.labels[i] for i in g) for g in subgroups_of_mul_semigroup(m)}
    return all(frozenset(g) in found for g in claim.args['subgroups'])


def check_s_semigroup(claim: Claim) -> bool:
    subject = _structure(claim)
    if getattr(subject, 'is_archetype', False):
        return subject.is_s_semigroup().holds
    return is_s_semigroup(subject.mul if isinstance(subject, Structure) else subject).holds


def check_atom_factorization(claim: Claim) -> bool:
    return atom_factorization(_structure(claim), claim.args['n'], claim.args['i']).verify().holds


def check_basis(claim: Claim) -> Dict[str, Any]:
    report = bases(build_subject(claim.subject))
    return {'unique': report.unique, 'dimension': report.dimension}


def check_smaller_spanning(claim: Claim) -> Optional[List[Any]]:
    return smaller_spanning_search(build_subject(claim.subject), claim.args['size'],
                                   claim.args.get('bound', 2)).found


def check_spec_roundtrip(claim: Claim) -> bool:
    return parse_spec(serialize_spec(claim.subject)) == claim.subject


CHECKS: Dict[str, Callable[[Claim], Any]] = {
    'lattice_predicates': check_lattice_predicates,
    'is_lattice': lambda c: isinstance(build_order(c.subject), FiniteLattice),
    'atoms': lambda c: atoms(_lattice(c)),
    'hasse_covers': lambda c: len(hasse(_lattice(c)).covers),
    'boolean_iso': lambda c: boolean_atom_iso(_lattice(c)).as_label_map(),
    'validate': lambda c: cmd_validate(c.subject).get('valid'),
    'order': check_order,
    'characteristic': lambda c: str(characteristic(_structure(c))),
    'strict': lambda c: is_strict(_structure(c)).holds,
    'semifield': lambda c: is_semifield(_structure(c)).holds,
    'has_zero_divisors': lambda c: bool(classify_elements(_structure(c)).zero_divisors),
    'congruence_simple': lambda c: is_congruence_simple(_structure(c)).holds,
    'subgroups_include': check_subgroups_include,
    's_semigroup': check_s_semigroup,
    'group_semiring_tags': lambda c: sorted(k for k, v in build_subject(c.subject).tags.items()
                                            if k.startswith('s-') and v),
    'group_ring_zero_divisors': lambda c: build_subject(c.subject).find_zero_divisors().holds,
    'atom_factorization': check_atom_factorization,
    'matrix_product': check_matrix_product,
    'certify': lambda c: _outcome(_certify_report(c)),
    'verify': lambda c: _outcome(_certify_report(c, witness=c.args['witness'])),
    'certify_witness': check_certify_witness,
    'span_member': lambda c: in_span(build_subject(c.subject), c.args['generators'], c.args['vector']).member,
    'independent': lambda c: is_independent(build_subject(c.subject), c.args['vectors']).holds,
    'basis': check_basis,
    'representation_count': lambda c: representation_count(build_subject(c.subject), c.args['basis'],
                                                            c.args['vector']).count,
    's_semivector': lambda c: is_s_semivector(build_subject(c.subject)).holds,
    'scalar_choices': lambda c: valid_scalar_choices(c.args['tags']),
    'subsemivector': lambda c: is_subsemivector(build_subject(c.subject), c.args['subset']).holds,
    'smaller_spanning': check_smaller_spanning,
    'spec_roundtrip': check_spec_roundtrip,
}


# ---------------------------------------------------------------------------
# Replay
# ---------------------------------------------------------------------------

def replay_claim(claim: Claim) -> ClaimResult:
    """Run one claim; engine errors become a failed entry carrying the error"""
    started = time.perf_counter()
    error = None
    check = CHECKS.get(claim.check)
    if check is None:
        observed = None
        error = {'error': 'UnknownCheck', 'message': f"unknown check {claim.check!r}"}
    else:
        try:
            observed = check(claim)
        except AlgebraError as e:
            observed = None
            error = e.to_dict()
        except Exception as e:
            logger.exception("claim %s crashed", claim.id)
            observed = None
            error = {'error': type(e).__name__, 'message': str(e)}
    seconds = time.perf_counter() - started
    passed = error is None and observed == claim.expected
    logger.info("claim %s %s in %.3fs", claim.id, "passed" if passed else "FAILED", seconds)
    if not passed:
        logger.warning("claim %s observed %r, expected %r", claim.id, observed, claim.expected)
    return ClaimResult(claim.id, passed, observed, claim.expected, seconds, error)


def run_claims(filter_glob: Optional[str] = None, workers: Optional[int] = None,
               claims: Optional[List[Claim]] = None) -> List[Dict[str, Any]]:
    """Replay the claims whose id matches filter_glob; the ledger is sorted by claim id so
    replay order and worker count never change it"""
    claims = load_claims() if claims is None else claims
    if filter_glob:
        claims = [c for c in claims if fnmatch.fnmatchcase(c.id, filter_glob)]
    workers = workers or engine_config.workers
    if workers <= 1 or len(claims) <= 1:
        results = [replay_claim(c) for c in claims]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(replay_claim, claims))
    failed = sum(1 for r in results if not r.passed)
    logger.info("replayed %d claims with %d failures", len(results), failed)
    return [r.to_dict() for r in sorted(results, key=lambda r: r.id)]
