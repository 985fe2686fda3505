"""
Semiring Engine - Semivector Spaces
Finite (table-backed) and tuple semivector spaces over semifields: spans, independence,
bases, representation counts and the Smarandache space certificates
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, List, Any, Optional, Tuple, Sequence, Callable, Union, FrozenSet

from algebra_models import (
    Verdict, Certificate, PreconditionFailed, UnknownElement, TypeMismatch, SpecError,
)
from archetypes import (
    Factor, FactorKind, ArchetypeProduct, ProductSubset, NONNEG_KINDS, archetype_from_tags,
)
from constructions import chain_lattice, SparsePoly
from engine_config import engine_config
from finite_structures import Structure, FiniteMagma, is_s_semigroup
from poset_lattice import FiniteLattice
from smarandache_certifier import ClauseReplay, is_semifield_subset

logger = logging.getLogger(__name__)

SCALAR_KINDS = (FactorKind.Z0, FactorKind.Q0, FactorKind.R0)

# factor kinds on which each scalar semifield acts by multiplication
ACTS_ON = {
    FactorKind.Z0: {FactorKind.Z0, FactorKind.Q0, FactorKind.R0, FactorKind.Z, FactorKind.Q,
                    FactorKind.R, FactorKind.ZMOD},
    FactorKind.Q0: {FactorKind.Q0, FactorKind.R0, FactorKind.Q, FactorKind.R},
    FactorKind.R0: {FactorKind.R0, FactorKind.R},
}

FIELD_KINDS = (FactorKind.Q, FactorKind.R)
FIELD_SEMIFIELDS = {FactorKind.Q: {FactorKind.Z0, FactorKind.Q0},
                    FactorKind.R: {FactorKind.Z0, FactorKind.Q0, FactorKind.R0}}


class SpaceProperty(Enum):
    S_SUBSEMIVECTOR = "s-subsemivector"
    S_PSEUDO_SEMIVECTOR = "s-pseudo-semivector"
    S_ANTI_SEMIVECTOR = "s-anti-semivector"
    S_BASIS = "s-basis"
    S_LINEAR_MAP = "s-linear-map"


# ---------------------------------------------------------------------------
# Spaces
# ---------------------------------------------------------------------------

class FiniteSemivectorSpace:
    """Finite commutative monoid of vectors with a scalar-action table over a finite semifield"""

    is_finite = True

    def __init__(self, scalars: Structure, labels: Sequence[str], addition: Sequence[Sequence[int]],
                 zero: int, action: Sequence[Sequence[int]], name: str = ""):
        self.scalars = scalars
        self.addition = FiniteMagma.from_rows(labels, addition)
        self.zero = zero
        self.action = tuple(tuple(row) for row in action)
        self.name = name or f"V{len(labels)}"
        self._index = {l: i for i, l in enumerate(self.addition.labels)}

    @property
    def n(self) -> int:
        return self.addition.n

    def zero_vector(self) -> int:
        return self.zero

    def add(self, x: int, y: int) -> int:
        return self.addition.op(x, y)

    def act(self, c: int, v: int) -> int:
        return self.action[c][v]

    def vectors(self) -> List[int]:
        return list(range(self.n))

    def scalar_values(self) -> List[int]:
        return list(range(self.scalars.n))

    def scalar_add(self, c: int, d: int) -> int:
        return self.scalars.plus(c, d)

    def scalar_mul(self, c: int, d: int) -> int:
        return self.scalars.times(c, d)

    @property
    def scalar_zero(self) -> int:
        return self.scalars.zero

    @property
    def scalar_one(self) -> Optional[int]:
        return self.scalars.one

    def parse(self, value) -> int:
        label = str(value)
        if label not in self._index:
            raise UnknownElement(label)
        return self._index[label]

    def render(self, v: int) -> str:
        return self.addition.labels[v]

    def render_scalar(self, c: int) -> str:
        return self.scalars.label(c)

    def contains(self, v) -> bool:
        return isinstance(v, int) and 0 <= v < self.n

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'kind': 'finite', 'vectors': list(self.addition.labels),
                'scalars': self.scalars.name}


class TupleSemivectorSpace:
    """Componentwise tuple space over a number semifield (Z0, Q0 or R0 stand-in)"""

    is_finite = False

    def __init__(self, scalar: Union[Factor, str], vectors: ArchetypeProduct, name: str = ""):
        scalar = Factor.parse(scalar) if isinstance(scalar, str) else scalar
        if scalar.kind not in SCALAR_KINDS:
            raise PreconditionFailed(f"scalars must be one of Z0, Q0, R0, not {scalar.tag}")
        bad = [f.tag for f in vectors.factors if f.kind not in ACTS_ON[scalar.kind]]
        if bad:
            raise PreconditionFailed(f"{scalar.tag} does not act on {', '.join(bad)}")
        self.scalar = scalar
        self.arch = vectors
        self.name = name or f"{vectors.name} over {scalar.tag}"

    @property
    def factors(self) -> List[Factor]:
        return self.arch.factors

    @property
    def arity(self) -> int:
        return self.arch.arity

    def zero_vector(self) -> Tuple[Any, ...]:
        return self.arch.zero()

    def add(self, x, y):
        return self.arch.add(x, y)

    def act(self, c, v):
        out = []
        for f, x in zip(self.factors, v):
            out.append((int(c) * x) % f.modulus if f.kind == FactorKind.ZMOD else Fraction(c) * x)
        return tuple(out)

    def vectors(self, limit: Optional[int] = None) -> List[Tuple[Any, ...]]:
        return self.arch.grid(limit or engine_config.verify_grid)

    def scalar_values(self) -> List[Fraction]:
        return self.scalar.sample()

    def scalar_add(self, c, d):
        return c + d

    def scalar_mul(self, c, d):
        return c * d

    @property
    def scalar_zero(self):
        return Fraction(0)

    @property
    def scalar_one(self):
        return Fraction(1)

    def parse(self, value):
        return self.arch.coerce(value)

    def render(self, v) -> List[str]:
        return self.arch.render(v)

    def render_scalar(self, c) -> str:
        return str(c)

    def contains(self, v) -> bool:
        return self.arch.contains(v)

    def unit(self, i: int) -> Tuple[Any, ...]:
        out = list(self.zero_vector())
        out[i] = self.factors[i].one
        return tuple(out)

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'kind': 'tuple', 'tags': self.arch.tags, 'scalars': self.scalar.tag}


Space = Union[FiniteSemivectorSpace, TupleSemivectorSpace]


def lattice_space(l: FiniteLattice, name: str = "") -> FiniteSemivectorSpace:
    """Lattice under join as a semivector space over C2; 0 sends to bottom, 1 fixes"""
    scalars = chain_lattice(2)
    action = [[l.bottom if c == scalars.zero else v for v in range(l.n)] for c in range(scalars.n)]
    return FiniteSemivectorSpace(scalars, l.labels, l.join, l.bottom, action,
                                 name=name or f"L{l.n} over C2")


def tuple_space(tags: Sequence[str], scalar: str = "Z0", name: str = "") -> TupleSemivectorSpace:
    return TupleSemivectorSpace(scalar, archetype_from_tags(tags), name)


def polynomial_space(max_degree: int, scalar: str = "Z0") -> TupleSemivectorSpace:
    """Polynomials of degree at most n with coefficients in the scalar semifield; coordinates are
    the coefficients of 1, x, ..., x^n"""
    if max_degree < 0:
        raise PreconditionFailed("degree bound must be nonnegative")
    return TupleSemivectorSpace(scalar, archetype_from_tags([scalar] * (max_degree + 1)),
                                name=f"{scalar}_{max_degree}[x]")


def poly_vector(sp: TupleSemivectorSpace, poly: SparsePoly) -> Tuple[Any, ...]:
    if poly.degree >= sp.arity:
        raise PreconditionFailed(f"degree {poly.degree} exceeds the space bound {sp.arity - 1}")
    return tuple(Fraction(poly.coefficient(e, 0)) for e in range(sp.arity))


def check_axioms(sp: Space, limit: int = 12) -> Verdict:
    """Replay the semivector space axioms; exhaustive for finite spaces, on a grid for tuples"""
    vecs = sp.vectors() if sp.is_finite else sp.vectors(limit)
    scal = sp.scalar_values()
    z, zs, one = sp.zero_vector(), sp.scalar_zero, sp.scalar_one
    add, act = sp.add, sp.act
    for x, y in product(vecs, repeat=2):
        if not sp.contains(add(x, y)):
            return Verdict(False, (sp.render(x), sp.render(y)), "addition leaves the space")
        if add(x, y) != add(y, x):
            return Verdict(False, (sp.render(x), sp.render(y)), "addition is not commutative")
    for x, y, w in product(vecs, repeat=3):
        if add(add(x, y), w) != add(x, add(y, w)):
            return Verdict(False, (sp.render(x), sp.render(y), sp.render(w)), "addition is not associative")
    for x in vecs:
        if add(x, z) != x:
            return Verdict(False, sp.render(x), "zero vector is not an identity")
        if one is not None and act(one, x) != x:
            return Verdict(False, sp.render(x), "1·v differs from v")
        if act(zs, x) != z:
            return Verdict(False, sp.render(x), "0·v differs from the zero vector")
    for c in scal:
        if act(c, z) != z:
            return Verdict(False, sp.render_scalar(c), "c·0 differs from the zero vector")
        for x in vecs:
            if not sp.contains(act(c, x)):
                return Verdict(False, (sp.render_scalar(c), sp.render(x)), "scalar action leaves the space")
    for c, d in product(scal, repeat=2):
        for x in vecs:
            if act(sp.scalar_add(c, d), x) != add(act(c, x), act(d, x)):
                return Verdict(False, (sp.render_scalar(c), sp.render_scalar(d), sp.render(x)),
                               "(c+d)v differs from cv + dv")
            if act(sp.scalar_mul(c, d), x) != act(c, act(d, x)):
                return Verdict(False, (sp.render_scalar(c), sp.render_scalar(d), sp.render(x)),
                               "(cd)v differs from c(dv)")
    for c in scal:
        for x, y in product(vecs, repeat=2):
            if act(c, add(x, y)) != add(act(c, x), act(c, y)):
                return Verdict(False, (sp.render_scalar(c), sp.render(x), sp.render(y)),
                               "c(v+w) differs from cv + cw")
    return Verdict(True, None, "" if sp.is_finite else "checked on a grid")


# ---------------------------------------------------------------------------
# Span and membership
# ---------------------------------------------------------------------------

@dataclass
class SpanResult:
    member: bool
    combination: Optional[List[Any]] = None
    complete: bool = True

    def __bool__(self) -> bool:
        return self.member

    def to_dict(self) -> Dict[str, Any]:
        return {'member': self.member,
                'combination': None if self.combination is None else [str(c) for c in self.combination],
                'complete': self.complete}


@dataclass
class SpanSet:
    space: Any = field(repr=False)
    generators: List[Any]
    members: Optional[FrozenSet[Any]] = None

    def contains(self, v) -> bool:
        if self.members is not None:
            return v in self.members
        return in_span(self.space, self.generators, v).member

    def labelled(self) -> Optional[List[str]]:
        if self.members is None:
            return None
        return [self.space.render(v) for v in sorted(self.members)]

    def to_dict(self) -> Dict[str, Any]:
        return {'generators': [self.space.render(g) for g in self.generators], 'members': self.labelled()}


def _vectors(sp: Space, A) -> List[Any]:
    out = []
    for a in A:
        if sp.is_finite:
            out.append(a if isinstance(a, int) else sp.parse(a))
        else:
            out.append(a if isinstance(a, tuple) else sp.parse(a))
    return out


def span(sp: Space, A: Sequence[Any]) -> SpanSet:
    """Closure under addition and scalar action; tuple spaces answer membership on demand"""
    gens = _vectors(sp, A)
    if not sp.is_finite:
        return SpanSet(sp, gens)
    members = {sp.zero_vector()} | set(gens)
    frontier = list(members)
    while frontier:
        x = frontier.pop()
        new = {sp.act(c, x) for c in sp.scalar_values()}
        new |= {sp.add(x, y) for y in list(members)}
        for v in new - members:
            members.add(v)
            frontier.append(v)
    return SpanSet(sp, gens, frozenset(members))


def _is_numeric(sp: TupleSemivectorSpace) -> bool:
    return all(f.kind != FactorKind.ZMOD for f in sp.factors)


def _nonneg_integer_combination(gens: List[Tuple], v: Tuple) -> Optional[List[int]]:
    """Exact box search: each coefficient is bounded by v_j / u_j over the generator's support"""
    k = len(gens)
    coeffs = [0] * k

    def bound(u, r) -> int:
        ratios = [r_j / u_j for u_j, r_j in zip(u, r) if u_j > 0]
        return int(min(ratios)) if ratios else 0

    def search(i: int, r: Tuple) -> bool:
        if i == k:
            return all(x == 0 for x in r)
        u = gens[i]
        for c in range(bound(u, r), -1, -1):
            rest = tuple(r_j - c * u_j for r_j, u_j in zip(r, u))
            if any(x < 0 for x in rest):
                continue
            coeffs[i] = c
            if search(i + 1, rest):
                return True
        coeffs[i] = 0
        return False

    return list(coeffs) if search(0, tuple(v)) else None


def _solve(columns: List[Tuple], v: Tuple) -> Optional[List[Fraction]]:
    """Unique solution of sum c_j columns_j = v, or None if dependent or inconsistent"""
    m = len(columns)
    rows = [[Fraction(columns[j][i]) for j in range(m)] + [Fraction(v[i])] for i in range(len(v))]
    r = 0
    for col in range(m):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            return None
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][col]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    if any(rows[i][m] != 0 for i in range(r, len(rows))):
        return None
    return [rows[i][m] for i in range(m)]


def _cone_combination(gens: List[Tuple], v: Tuple) -> Optional[List[Fraction]]:
    """Nonnegative rational combination; by Caratheodory a linearly independent subset suffices"""
    k = len(gens)
    if all(x == 0 for x in v):
        return [Fraction(0)] * k
    nonzero = [i for i, u in enumerate(gens) if any(x != 0 for x in u)]
    for size in range(1, min(len(nonzero), len(v)) + 1):
        for idx in combinations(nonzero, size):
            sol = _solve([gens[i] for i in idx], v)
            if sol is not None and all(c >= 0 for c in sol):
                out = [Fraction(0)] * k
                for i, c in zip(idx, sol):
                    out[i] = c
                return out
    return None


def _bounded_combination(sp: Space, gens: List[Any], v, values: Sequence[Any]) -> Tuple[Optional[List[Any]], bool]:
    cap = engine_config.subset_cap
    if len(values) ** len(gens) > cap:
        return None, False
    for coeffs in product(values, repeat=len(gens)):
        acc = sp.zero_vector()
        for c, g in zip(coeffs, gens):
            acc = sp.add(acc, sp.act(c, g))
        if acc == v:
            return list(coeffs), True
    return None, True


def in_span(sp: Space, A: Sequence[Any], v) -> SpanResult:
    """Membership of v in span(A) with an explicit combination when found"""
    gens = _vectors(sp, A)
    v = _vectors(sp, [v])[0]
    for i, g in enumerate(gens):
        if g == v:
            combo = [sp.scalar_zero] * len(gens)
            combo[i] = sp.scalar_one
            return SpanResult(True, combo)
    if sp.is_finite:
        combo, exhaustive = _bounded_combination(sp, gens, v, sp.scalar_values())
        if combo is not None:
            return SpanResult(True, combo)
        if exhaustive:
            return SpanResult(False)
        return SpanResult(v in span(sp, gens).members)
    if not gens:
        return SpanResult(v == sp.zero_vector(), [])
    if sp.scalar.kind != FactorKind.Z0 and _is_numeric(sp):
        combo = _cone_combination(gens, v)
        return SpanResult(combo is not None, combo)
    if _is_numeric(sp) and all(x >= 0 for g in gens for x in g):
        if any(x < 0 for x in v):
            return SpanResult(False)
        combo = _nonneg_integer_combination(gens, v)
        return SpanResult(combo is not None, None if combo is None else [Fraction(c) for c in combo])
    bound = engine_config.span_bound
    combo, _ = _bounded_combination(sp, gens, v, [Fraction(c) for c in range(bound + 1)])
    if combo is not None:
        return SpanResult(True, combo)
    logger.debug("bounded span search (coefficients <= %d) found no combination", bound)
    return SpanResult(False, None, complete=False)


# ---------------------------------------------------------------------------
# Independence, bases, representations
# ---------------------------------------------------------------------------

def is_independent(sp: Space, A: Sequence[Any]) -> Verdict:
    """No member lies in the span of the others"""
    gens = _vectors(sp, A)
    complete = True
    for i, a in enumerate(gens):
        others = gens[:i] + gens[i + 1:]
        result = in_span(sp, others, a)
        if result.member:
            witness = {'vector': sp.render(a),
                       'combination': None if result.combination is None
                       else [sp.render_scalar(c) for c in result.combination]}
            return Verdict(False, witness, "member lies in the span of the others")
        complete &= result.complete
    return Verdict(True, None, "" if complete else "bounded search; dependence not excluded")


@dataclass
class BasisReport:
    bases: List[List[Any]]
    unique: bool
    dimension: Optional[int]
    complete: bool
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {'bases': self.bases, 'unique': self.unique, 'dimension': self.dimension,
                'complete': self.complete, 'note': self.note}


def _finite_bases(sp: FiniteSemivectorSpace, size_cap: Optional[int]) -> BasisReport:
    nonzero = [v for v in range(sp.n) if v != sp.zero]
    cap = len(nonzero) if size_cap is None else min(size_cap, len(nonzero))
    found = []
    for size in range(cap + 1):
        for B in combinations(nonzero, size):
            if len(span(sp, B).members) == sp.n and is_independent(sp, B):
                found.append([sp.render(b) for b in B])
    complete = cap == len(nonzero)
    unique = complete and len(found) == 1
    return BasisReport(found, unique, len(found[0]) if unique else None, complete)


def _tuple_bases(sp: TupleSemivectorSpace) -> BasisReport:
    kinds = {f.kind for f in sp.factors}
    s = sp.scalar.kind
    if kinds == {s}:
        basis = [sp.unit(i) for i in range(sp.arity)]
        rendered = [sp.render(b) for b in basis]
        if not is_independent(sp, basis):
            return BasisReport([], False, None, False, "unit vectors are dependent")
        if s == FactorKind.Z0:
            atoms = all(is_indecomposable(sp, b) for b in basis)
            if atoms:
                return BasisReport([rendered], True, sp.arity, True,
                                   "unit vectors are indecomposable, so every spanning set contains them")
        return BasisReport([rendered], False, None, True, "positive rescalings of a basis are bases")
    if s == FactorKind.Z0 and kinds <= {FactorKind.Z0, FactorKind.Z}:
        basis = []
        for i, f in enumerate(sp.factors):
            basis.append(sp.unit(i))
            if f.kind == FactorKind.Z:
                neg = list(sp.zero_vector())
                neg[i] = Fraction(-1)
                basis.append(tuple(neg))
        return BasisReport([[sp.render(b) for b in basis]], False, None, False,
                           "signed unit vectors span; uniqueness not decided")
    if s in (FactorKind.Q0, FactorKind.R0) and kinds <= {s, FactorKind.Q, FactorKind.R}:
        basis = []
        for i, f in enumerate(sp.factors):
            basis.append(sp.unit(i))
            if f.kind in (FactorKind.Q, FactorKind.R):
                neg = list(sp.zero_vector())
                neg[i] = Fraction(-1)
                basis.append(tuple(neg))
        return BasisReport([[sp.render(b) for b in basis]], False, None, True,
                           "positive rescalings of a basis are bases")
    return BasisReport([], False, None, True, "space is not finitely generated over its scalars")


def bases(sp: Space, size_cap: Optional[int] = None) -> BasisReport:
    """All bases up to size_cap (finite) or the standard basis with a uniqueness argument (tuples);
    dimension is reported only for a certified unique basis"""
    if sp.is_finite:
        return _finite_bases(sp, size_cap)
    return _tuple_bases(sp)


@dataclass
class RepresentationCount:
    count: int
    representations: List[List[str]]

    def to_dict(self) -> Dict[str, Any]:
        return {'count': self.count, 'representations': self.representations}


def representation_count(sp: Space, basis: Sequence[Any], v) -> RepresentationCount:
    """Every coefficient assignment over the finite scalars that reproduces v"""
    if not sp.is_finite:
        raise PreconditionFailed("representation counting needs finite scalars")
    gens = _vectors(sp, basis)
    target = _vectors(sp, [v])[0]
    reps = []
    for coeffs in product(sp.scalar_values(), repeat=len(gens)):
        acc = sp.zero_vector()
        for c, g in zip(coeffs, gens):
            acc = sp.add(acc, sp.act(c, g))
        if acc == target:
            reps.append([sp.render_scalar(c) for c in coeffs])
    return RepresentationCount(len(reps), reps)


def is_indecomposable(sp: Space, v) -> Verdict:
    """v is nonzero and not a sum of two nonzero vectors"""
    v = _vectors(sp, [v])[0]
    z = sp.zero_vector()
    if v == z:
        return Verdict(False, None, "zero vector")
    if sp.is_finite:
        for x, y in product(range(sp.n), repeat=2):
            if x != z and y != z and sp.add(x, y) == v:
                return Verdict(False, (sp.render(x), sp.render(y)), "decomposes")
        return Verdict(True)
    for i, (f, a) in enumerate(zip(sp.factors, v)):
        if f.kind in NONNEG_KINDS:
            if a == 0:
                continue
            candidates = [a / 2] if f.kind != FactorKind.Z0 else [Fraction(1)]
        else:
            candidates = [b for b in f.sample() if b != f.zero]
        for b in candidates:
            x = list(z)
            x[i] = b
            x = tuple(x)
            y = list(v)
            y[i] = _difference(f, a, b)
            y = tuple(y)
            if y[i] is not None and x != z and y != z and sp.contains(y):
                return Verdict(False, (sp.render(x), sp.render(y)), "decomposes")
    return Verdict(True, None, "not a sum of two nonzero vectors")


def _difference(f: Factor, p, q):
    if f.kind in NONNEG_KINDS:
        return p - q if p >= q else None
    return f.add(p, f.neg(q))


# ---------------------------------------------------------------------------
# Smarandache semivector spaces
# ---------------------------------------------------------------------------

def is_s_semivector(sp: Space) -> Verdict:
    """The additive monoid of vectors is an S-semigroup"""
    if sp.is_finite:
        return is_s_semigroup(sp.addition)
    return sp.arch.is_s_semigroup()


def valid_scalar_choices(factors: Sequence[str]) -> List[str]:
    """Semifields over which the product can be an S-semivector space; empty without a
    group-like factor"""
    kinds = [Factor.parse(f).kind for f in factors]
    if not any(k in (FactorKind.Z, FactorKind.Q, FactorKind.R) for k in kinds):
        return []
    if any(k in (FactorKind.Z, FactorKind.Z0) for k in kinds):
        return ["Z0"]
    if any(k in (FactorKind.Q, FactorKind.Q0) for k in kinds):
        return ["Z0", "Q0"]
    return ["Z0", "Q0", "R0"]


class _SubsetView:
    def __init__(self, members: List[Any], contains: Callable[[Any], bool]):
        self.members = members
        self.contains = contains


def _subset_view(sp: Space, W) -> _SubsetView:
    if sp.is_finite:
        labels = W.get('subset', []) if isinstance(W, dict) else W
        members = sorted({sp.parse(w) for w in labels})
        lookup = frozenset(members)
        return _SubsetView(members, lambda v: v in lookup)
    subset = W if isinstance(W, ProductSubset) else ProductSubset.parse(W)
    if len(subset.components) != sp.arity:
        raise TypeMismatch(f"descriptor has {len(subset.components)} components, space has {sp.arity}",
                           path="subset")
    return _SubsetView(subset.sample(sp.arch, engine_config.verify_grid),
                       lambda v: subset.contains(sp.arch, v))


def _describe(sp: Space, W) -> Any:
    if sp.is_finite:
        labels = W.get('subset', []) if isinstance(W, dict) else W
        return [str(w) for w in labels]
    subset = W if isinstance(W, ProductSubset) else ProductSubset.parse(W)
    return subset.to_dict()


def _subspace_clauses(sp: Space, w: _SubsetView, rec: ClauseReplay, scalars: Sequence[Any],
                      name: str = "subset") -> bool:
    mark = rec.mark()
    whole = sp.vectors()
    rec.check(f"{name} is a proper subset of the space", any(not w.contains(v) for v in whole))
    rec.check(f"{name} contains the zero vector", w.contains(sp.zero_vector()))
    rec.check(f"{name} closed under +", all(w.contains(sp.add(x, y)) for x, y in product(w.members, repeat=2)))
    rec.check(f"{name} closed under the scalar action",
              all(w.contains(sp.act(c, x)) for c in scalars for x in w.members))
    return rec.passed_since(mark)


def _has_group(sp: Space, W, w: _SubsetView) -> bool:
    if sp.is_finite:
        members = w.members
        pos = {x: i for i, x in enumerate(members)}
        if any(sp.add(x, y) not in pos for x in members for y in members):
            return False
        rows = [[pos[sp.add(x, y)] for y in members] for x in members]
        return bool(is_s_semigroup(FiniteMagma.from_rows([sp.render(x) for x in members], rows)))
    subset = W if isinstance(W, ProductSubset) else ProductSubset.parse(W)
    return subset.has_nontrivial_group(sp.arch)


def _space_certificate(sp, prop: SpaceProperty, witness, rec: ClauseReplay, notes=None) -> Certificate:
    notes = list(notes or [])
    if not sp.is_finite:
        notes.append(f"clauses replayed on a grid of at most {engine_config.verify_grid} vectors")
    return Certificate(prop.value, sp.name, rec.ok, witness, sp.is_finite, rec.checks, notes,
                       "search" if sp.is_finite else "verify-grid")


def is_subsemivector(sp: Space, W) -> Verdict:
    rec = ClauseReplay()
    ok = _subspace_clauses(sp, _subset_view(sp, W), rec, sp.scalar_values())
    failed = [c.clause for c in rec.checks if not c.passed]
    return Verdict(ok, failed or None)


def certify_s_subsemivector(sp: Space, W) -> Certificate:
    """W is a subsemivector space whose additive monoid is an S-semigroup"""
    rec = ClauseReplay()
    rec.check("space is an S-semivector space", is_s_semivector(sp).holds)
    w = _subset_view(sp, W)
    _subspace_clauses(sp, w, rec, sp.scalar_values())
    rec.check("subset contains a proper nontrivial additive group", _has_group(sp, W, w))
    return _space_certificate(sp, SpaceProperty.S_SUBSEMIVECTOR, {'subset': _describe(sp, W)}, rec)


def _scalar_subset(sp: Space, P) -> Tuple[List[Any], bool, str]:
    """Scalar values of P, whether P is a proper sub-semifield, and its rendering"""
    if sp.is_finite:
        labels = P.get('subset', []) if isinstance(P, dict) else P
        members = sorted({sp.scalars.index(str(p)) for p in labels})
        proper = len(members) < sp.scalars.n and is_semifield_subset(sp.scalars, [str(p) for p in labels])
        return members, proper, [str(p) for p in labels]
    factor = Factor.parse(P)
    order = {k: i for i, k in enumerate(SCALAR_KINDS)}
    proper = factor.kind in order and order[factor.kind] < order[sp.scalar.kind]
    return factor.sample(), proper, factor.tag


def certify_s_pseudo_semivector(sp: Space, W, P) -> Certificate:
    """W is not a subsemivector space over the scalars but is one over the proper semifield P"""
    rec = ClauseReplay()
    scalars, proper, rendered = _scalar_subset(sp, P)
    rec.check("P is a proper sub-semifield of the scalars", proper)
    w = _subset_view(sp, W)
    _subspace_clauses(sp, w, rec, scalars)
    escape = next(((c, x) for c in sp.scalar_values() for x in w.members
                   if not w.contains(sp.act(c, x))), None)
    rec.check("subset is not closed under the full scalar action", escape is not None)
    witness = {'subset': _describe(sp, W), 'scalars': rendered}
    if escape is not None:
        witness['escape'] = {'scalar': sp.render_scalar(escape[0]), 'vector': sp.render(escape[1])}
    return _space_certificate(sp, SpaceProperty.S_PSEUDO_SEMIVECTOR, witness, rec)


def certify_s_anti_semivector(vectors: Union[ArchetypeProduct, Sequence[str]], field_tag: str, W,
                              semifield_tag: str) -> Certificate:
    """A vector space over a field holding a subset that is only a semivector space over a
    semifield inside the field"""
    arch = vectors if isinstance(vectors, ArchetypeProduct) else archetype_from_tags(vectors)
    rec = ClauseReplay()
    field_ = Factor.parse(field_tag)
    semifield = Factor.parse(semifield_tag)
    rec.check("scalars form a field", field_.kind in FIELD_KINDS)
    rec.check("the field acts on every factor",
              all(f.kind in FIELD_KINDS and (field_.kind == FactorKind.Q or f.kind == FactorKind.R)
                  for f in arch.factors))
    rec.check("semifield lies inside the field", semifield.kind in FIELD_SEMIFIELDS.get(field_.kind, set()))
    sp = TupleSemivectorSpace(semifield, arch, name=f"{arch.name} over {field_.tag}")
    w = _subset_view(sp, W)
    _subspace_clauses(sp, w, rec, semifield.sample())
    rec.check("subset is not an additive group",
              any(not w.contains(sp.arch.neg(x)) for x in w.members))
    witness = {'vectors': arch.tags, 'field': field_.tag, 'subset': _describe(sp, W),
               'semifield': semifield.tag}
    return _space_certificate(sp, SpaceProperty.S_ANTI_SEMIVECTOR, witness, rec)


def certify_s_basis(sp: Space, B: Sequence[Any], P) -> Certificate:
    """B is independent and spans the declared S-subsemivector space P"""
    rec = ClauseReplay()
    w = _subset_view(sp, P)
    _subspace_clauses(sp, w, rec, sp.scalar_values(), name="P")
    rec.check("P contains a proper nontrivial additive group", _has_group(sp, P, w))
    gens = _vectors(sp, B)
    rec.check("B lies inside P", all(w.contains(b) for b in gens))
    independent = is_independent(sp, gens)
    rec.check("B is independent", independent.holds)
    rec.check("B spans P", all(in_span(sp, gens, v).member for v in w.members))
    notes = [independent.reason] if independent.reason else []
    return _space_certificate(sp, SpaceProperty.S_BASIS,
                              {'basis': [sp.render(b) for b in gens], 'subspace': _describe(sp, P)},
                              rec, notes)


@dataclass
class SpanningSearch:
    found: Optional[List[Any]]
    examined: int
    entry_bound: int
    coefficient_bound: int

    def to_dict(self) -> Dict[str, Any]:
        return {'found': self.found, 'examined': self.examined, 'entry_bound': self.entry_bound,
                'coefficient_bound': self.coefficient_bound}


def _generators(sp: TupleSemivectorSpace) -> List[Tuple]:
    out = []
    for i, f in enumerate(sp.factors):
        if f.kind not in (FactorKind.Z0, FactorKind.Z):
            raise PreconditionFailed(f"{f.tag} is not finitely generated over {sp.scalar.tag}")
        out.append(sp.unit(i))
        if f.kind == FactorKind.Z:
            neg = list(sp.zero_vector())
            neg[i] = Fraction(-1)
            out.append(tuple(neg))
    return out


def smaller_spanning_search(sp: TupleSemivectorSpace, size: int, bound: int = 2) -> SpanningSearch:
    """Search every spanning set of `size` vectors with entries in [-bound, bound]"""
    if sp.scalar.kind != FactorKind.Z0:
        raise PreconditionFailed("spanning search runs over Z0 scalars")
    targets = _generators(sp)
    axes = []
    for f in sp.factors:
        lo = 0 if f.kind == FactorKind.Z0 else -bound
        axes.append([Fraction(x) for x in range(lo, bound + 1)])
    candidates = [v for v in product(*axes) if any(x != 0 for x in v)]
    examined = 0
    for B in combinations(candidates, size):
        examined += 1
        if all(in_span(sp, list(B), t).member for t in targets):
            return SpanningSearch([sp.render(b) for b in B], examined, bound, engine_config.span_bound)
    logger.info("no %d-element spanning set among %d candidates", size, examined)
    return SpanningSearch(None, examined, bound, engine_config.span_bound)


# ---------------------------------------------------------------------------
# S-linear maps
# ---------------------------------------------------------------------------

@dataclass
class LinearMap:
    """Componentwise formula: output i is sum of coefficient * input j over rows[i]"""
    rows: List[Dict[int, Fraction]]

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'LinearMap':
        rows = data.get('rows')
        if not isinstance(rows, list):
            raise SpecError("map needs a list of rows", path="map.rows")
        try:
            return cls([{int(j): Fraction(str(c)) for j, c in row.items()} for row in rows])
        except (ValueError, ZeroDivisionError, AttributeError):
            raise TypeMismatch("map rows must map input indices to numbers", path="map.rows")

    def __call__(self, x: Tuple) -> Tuple:
        return tuple(sum((c * x[j] for j, c in row.items()), Fraction(0)) for row in self.rows)

    def to_dict(self) -> Dict[str, Any]:
        return {'rows': [{str(j): str(c) for j, c in row.items()} for row in self.rows]}


def check_s_linear_map(T: Callable[[Any], Any], V: Space, W: Space, P, C) -> Verdict:
    """T(c·p1 + p2) = c·T(p1) + T(p2) and T(p) in C for every p1, p2 in the group P; T is
    unconstrained outside P"""
    if V.is_finite != W.is_finite:
        raise PreconditionFailed("both spaces must be finite or both tuple spaces")
    if not V.is_finite and V.scalar.kind != W.scalar.kind:
        raise PreconditionFailed("spaces must share their semifield of scalars")
    p = _subset_view(V, P)
    c = _subset_view(W, C)
    if not _has_group(V, P, p) and len(p.members) > 1:
        logger.debug("declared P carries no nontrivial group")
    for x in p.members:
        if not c.contains(T(x)):
            return Verdict(False, {'p': V.render(x)}, "T(p) leaves C")
    for s in V.scalar_values():
        for p1, p2 in product(p.members, repeat=2):
            lhs = T(V.add(V.act(s, p1), p2))
            rhs = W.add(W.act(s, T(p1)), T(p2))
            if lhs != rhs:
                return Verdict(False, {'c': V.render_scalar(s), 'p1': V.render(p1), 'p2': V.render(p2)},
                               "T(c·p1 + p2) differs from c·T(p1) + T(p2)")
    return Verdict(True, None, "" if V.is_finite else "checked on a grid")
