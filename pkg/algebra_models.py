"""
Semiring Engine - Data Models
Shared enums, error hierarchy, verdicts and certificates for the algebra engine
"""

from dataclasses import dataclass, asdict, field
from typing import Dict, List, Any, Optional
from enum import Enum
import hashlib
import json


class KindFlag(Enum):
    SEMIGROUP = "semigroup"
    GROUP = "group"
    SEMIRING = "semiring"
    RING = "ring"
    FIELD = "field"
    SEMIFIELD = "semifield"
    LATTICE_DERIVED = "lattice_derived"
    STRICT = "strict"
    ZERO_ABSORBING = "zero_absorbing"
    COMMUTATIVE_ADD = "commutative_add"
    COMMUTATIVE_MUL = "commutative_mul"
    HAS_ONE = "has_one"
    ADDITIVELY_IDEMPOTENT = "additively_idempotent"
    CONGRUENCE_SIMPLE = "congruence_simple"


class CharacteristicKind(Enum):
    ZERO = "zero"
    FINITE = "finite"
    UNDEFINED = "undefined"


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two_sided"


class HomKind(Enum):
    SEMIRING = "semiring"
    LATTICE = "lattice"
    RING = "ring"


class PropertyName(Enum):
    SEMIFIELD = "semifield"
    PRIME_SEMIFIELD = "prime-semifield"
    S_SEMIRING_1 = "s-semiring-1"
    S_SEMIRING_2 = "s-semiring-2"
    S_COMMUTATIVE = "s-commutative"
    S_SUBSEMIRING = "s-subsemiring"
    S_SUBSEMIRING_2 = "s-subsemiring-2"
    S_IDEAL = "s-ideal"
    S_PSEUDO_SUBSEMIRING = "s-pseudo-subsemiring"
    S_DUAL_IDEAL = "s-dual-ideal"
    S_PSEUDO_IDEAL = "s-pseudo-ideal"
    S_PSEUDO_DUAL_IDEAL = "s-pseudo-dual-ideal"
    S_SEMIDIVISION_RING = "s-semidivision-ring"
    S_ZERO_DIVISOR = "s-zero-divisor"
    S_ANTI_ZERO_DIVISOR = "s-anti-zero-divisor"
    S_IDEMPOTENT = "s-idempotent"
    S_UNIT = "s-unit"
    S_CONGRUENCE_SIMPLE = "s-congruence-simple"
    S_SEMIFIELD_1 = "s-semifield-1"
    S_WEAK_SEMIFIELD = "s-weak-semifield"
    S_SEMIFIELD_2 = "s-semifield-2"
    S_ANTI_SEMIRING = "s-anti-semiring"
    S_ANTI_SEMIFIELD = "s-anti-semifield"
    S_ANTI_IDEAL = "s-anti-ideal"

    @classmethod
    def parse(cls, name: str) -> 'PropertyName':
        try:
            return cls(name)
        except ValueError:
            raise UnknownProperty(name)


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------

class AlgebraError(Exception):
    """Base class for every engine error; carries structured details"""

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.__class__.__name__)
        self.message = message or self.__class__.__name__
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        result = {'error': self.__class__.__name__, 'message': self.message}
        result.update({k: _jsonable(v) for k, v in self.details.items()})
        return result


class CycleDetected(AlgebraError):
    def __init__(self, pair):
        super().__init__(f"order relation is not antisymmetric at {pair}", pair=list(pair))
        self.pair = tuple(pair)


class DuplicateLabel(AlgebraError):
    def __init__(self, label: str):
        super().__init__(f"duplicate element label {label!r}", label=label)
        self.label = label


class UnknownElement(AlgebraError):
    def __init__(self, label):
        super().__init__(f"unknown element {label!r}", label=str(label))
        self.label = label


class NotALattice(AlgebraError):
    def __init__(self, pair, missing: str):
        super().__init__(f"pair {pair} has no {missing}", pair=list(pair), missing=missing)
        self.pair = tuple(pair)
        self.missing = missing


class NotBoolean(AlgebraError):
    pass


class AxiomViolation(AlgebraError):
    def __init__(self, axiom: str, witness=None):
        super().__init__(f"axiom {axiom} fails", axiom=axiom, witness=witness)
        self.axiom = axiom
        self.witness = witness


class CapExceeded(AlgebraError):
    def __init__(self, cap: int, partial=None):
        super().__init__(f"search cap {cap} exceeded", cap=cap)
        self.cap = cap
        self.partial = partial if partial is not None else []


class NotStrict(AlgebraError):
    pass


class NoUnit(AlgebraError):
    pass


class MissingOne(AlgebraError):
    pass


class TooFewAtoms(AlgebraError):
    pass


class PreconditionFailed(AlgebraError):
    pass


class NotFound(AlgebraError):
    def __init__(self, prop: str, complete: bool, message: str = "", witness=None):
        super().__init__(message or f"no witness for {prop}", property=prop, complete=complete,
                         witness=witness)
        self.property = prop
        self.complete = complete
        self.witness = witness


class SpecError(AlgebraError):
    """Structure-spec input errors; `path` is the dotted field location"""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message, path=path)
        self.path = path


class UnknownKind(SpecError):
    pass


class MissingParam(SpecError):
    pass


class TypeMismatch(SpecError):
    pass


class UnknownField(SpecError):
    pass


class UnknownProperty(SpecError):
    def __init__(self, name: str):
        super().__init__(f"unknown property {name!r}", path="property")


# ---------------------------------------------------------------------------
# Results
# ---------------------------------------------------------------------------

@dataclass
class Verdict:
    holds: bool
    witness: Any = None
    reason: str = ""

    def __bool__(self) -> bool:
        return bool(self.holds)

    def to_dict(self) -> Dict[str, Any]:
        return {'holds': self.holds, 'witness': _jsonable(self.witness), 'reason': self.reason}


@dataclass(frozen=True)
class Characteristic:
    kind: CharacteristicKind
    modulus: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == CharacteristicKind.FINITE:
            return f"finite:{self.modulus}"
        return self.kind.value

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': self.kind.value, 'modulus': self.modulus}


@dataclass
class ClauseCheck:
    clause: str
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class Certificate:
    """Self-contained witness for a property claim, replayable against the subject"""
    property: str
    subject: str
    holds: bool
    witness: Dict[str, Any] = field(default_factory=dict)
    complete_search: bool = True
    transcript: List[ClauseCheck] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    mode: str = "search"

    @property
    def verified(self) -> bool:
        return bool(self.transcript) and all(check.passed for check in self.transcript)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'property': self.property,
            'subject': self.subject,
            'holds': self.holds,
            'witness': _jsonable(self.witness),
            'complete_search': self.complete_search,
            'transcript': [check.to_dict() for check in self.transcript],
            'notes': list(self.notes),
            'mode': self.mode,
            'verification_code': self.generate_verification_code(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Certificate':
        data = dict(data)
        data.pop('verification_code', None)
        data['transcript'] = [ClauseCheck(**c) for c in data.get('transcript', [])]
        return cls(**data)

    def generate_verification_code(self) -> str:
        """Generate a verification code over property, subject and witness"""
        combined = json.dumps({'property': self.property, 'subject': self.subject,
                               'witness': _jsonable(self.witness)}, sort_keys=True)
        return hashlib.sha256(combined.encode()).hexdigest()[:12].upper()


def _jsonable(value):
    """Convert tuples, sets and Fractions inside witnesses into JSON-friendly values"""
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        items = [_jsonable(v) for v in value]
        return sorted(items, key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(value, Enum):
        return value.value
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)
