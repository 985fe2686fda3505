"""
Semiring Engine - Posets and Lattices
Finite posets, meet/join tables, Hasse diagrams and lattice predicates
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Any, Optional, Tuple, FrozenSet, Iterable, Sequence, Union

import networkx as nx

from algebra_models import (
    Verdict, CycleDetected, DuplicateLabel, UnknownElement, NotALattice,
    NotBoolean, AxiomViolation,
)

logger = logging.getLogger(__name__)

Table = Tuple[Tuple[int, ...], ...]
ElementRef = Union[int, str]


@dataclass(frozen=True)
class FinitePoset:
    elements: Tuple[str, ...]
    leq: FrozenSet[Tuple[int, int]]
    _index: Dict[str, int] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, '_index', {label: i for i, label in enumerate(self.elements)})

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, x: ElementRef) -> int:
        if isinstance(x, int) and not isinstance(x, bool):
            if 0 <= x < self.n:
                return x
            raise UnknownElement(x)
        if x not in self._index:
            raise UnknownElement(x)
        return self._index[x]

    def le(self, x: ElementRef, y: ElementRef) -> bool:
        return (self.index(x), self.index(y)) in self.leq

    def to_dict(self) -> Dict[str, Any]:
        pairs = sorted(self.leq)
        return {'elements': list(self.elements),
                'leq': [[self.elements[i], self.elements[j]] for i, j in pairs if i != j]}


def poset_from_leq(elements: Sequence[str], leq_pairs: Iterable[Tuple[str, str]]) -> FinitePoset:
    """Build a poset from any relation given by label pairs: reflexive-transitive
    closure first, then the antisymmetry check"""
    labels = tuple(str(e) for e in elements)
    seen = set()
    for label in labels:
        if label in seen:
            raise DuplicateLabel(label)
        seen.add(label)
    index = {label: i for i, label in enumerate(labels)}
    order = nx.DiGraph()
    order.add_nodes_from(range(len(labels)))
    for lo, hi in leq_pairs:
        if str(lo) not in index:
            raise UnknownElement(lo)
        if str(hi) not in index:
            raise UnknownElement(hi)
        i, j = index[str(lo)], index[str(hi)]
        if i != j:
            order.add_edge(i, j)
    if not nx.is_directed_acyclic_graph(order):
        u, v = nx.find_cycle(order)[0][:2]
        raise CycleDetected((labels[u], labels[v]))
    closure = nx.transitive_closure_dag(order)
    leq = frozenset(closure.edges()) | frozenset((i, i) for i in order.nodes)
    return FinitePoset(labels, leq)


def _strict_order(p: FinitePoset) -> nx.DiGraph:
    order = nx.DiGraph()
    order.add_nodes_from(range(p.n))
    order.add_edges_from((i, j) for (i, j) in p.leq if i != j)
    return order


@dataclass(frozen=True)
class FiniteLattice:
    poset: FinitePoset
    meet: Table
    join: Table
    bottom: int
    top: int

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.poset.elements

    @property
    def n(self) -> int:
        return self.poset.n

    def index(self, x: ElementRef) -> int:
        return self.poset.index(x)

    def label(self, i: int) -> str:
        return self.poset.elements[i]

    def le(self, x: ElementRef, y: ElementRef) -> bool:
        return self.poset.le(x, y)

    def meet_of(self, x: ElementRef, y: ElementRef) -> int:
        return self.meet[self.index(x)][self.index(y)]

    def join_of(self, x: ElementRef, y: ElementRef) -> int:
        return self.join[self.index(x)][self.index(y)]

    def to_dict(self) -> Dict[str, Any]:
        return {'elements': list(self.labels),
                'meet': [list(row) for row in self.meet],
                'join': [list(row) for row in self.join],
                'bottom': self.label(self.bottom), 'top': self.label(self.top)}


def _bound(p: FinitePoset, i: int, j: int, lower: bool) -> Optional[int]:
    if lower:
        candidates = [k for k in range(p.n) if (k, i) in p.leq and (k, j) in p.leq]
        best = [k for k in candidates if all((c, k) in p.leq for c in candidates)]
    else:
        candidates = [k for k in range(p.n) if (i, k) in p.leq and (j, k) in p.leq]
        best = [k for k in candidates if all((k, c) in p.leq for c in candidates)]
    return best[0] if best else None


def as_lattice(p: FinitePoset) -> FiniteLattice:
    """Compute meet and join tables by exhaustive inf/sup search"""
    if p.n == 0:
        raise AxiomViolation("nonempty", None)
    meet = [[0] * p.n for _ in range(p.n)]
    join = [[0] * p.n for _ in range(p.n)]
    for i in range(p.n):
        for j in range(i, p.n):
            inf = _bound(p, i, j, lower=True)
            if inf is None:
                raise NotALattice((p.elements[i], p.elements[j]), "infimum")
            sup = _bound(p, i, j, lower=False)
            if sup is None:
                raise NotALattice((p.elements[i], p.elements[j]), "supremum")
            meet[i][j] = meet[j][i] = inf
            join[i][j] = join[j][i] = sup
    bottom = next(k for k in range(p.n) if all((k, x) in p.leq for x in range(p.n)))
    top = next(k for k in range(p.n) if all((x, k) in p.leq for x in range(p.n)))
    return FiniteLattice(p, tuple(map(tuple, meet)), tuple(map(tuple, join)), bottom, top)


def lattice_from_covers(elements: Sequence[str], covers: Iterable[Tuple[str, str]]) -> FiniteLattice:
    return as_lattice(poset_from_leq(elements, covers))


def lattice_from_tables(labels: Sequence[str], meet: Sequence[Sequence[int]],
                        join: Sequence[Sequence[int]]) -> FiniteLattice:
    """Build a lattice from explicit meet/join tables; order is read off the meet table
    and the tables must agree with the inf/sup it induces"""
    n = len(labels)
    pairs = [(labels[i], labels[j]) for i in range(n) for j in range(n) if meet[i][j] == i]
    lattice = as_lattice(poset_from_leq(labels, pairs))
    for i, j in product(range(n), repeat=2):
        if lattice.meet[i][j] != meet[i][j]:
            raise AxiomViolation("meet is infimum", (labels[i], labels[j]))
        if lattice.join[i][j] != join[i][j]:
            raise AxiomViolation("join is supremum", (labels[i], labels[j]))
    return lattice


def lattice_law_violation(l: FiniteLattice) -> Verdict:
    """Check commutativity, associativity, absorption and idempotence table-wise"""
    m, j = l.meet, l.join
    rng = range(l.n)
    for x in rng:
        if m[x][x] != x or j[x][x] != x:
            return Verdict(False, (l.label(x),), "idempotence")
    for x, y in product(rng, repeat=2):
        if m[x][y] != m[y][x] or j[x][y] != j[y][x]:
            return Verdict(False, (l.label(x), l.label(y)), "commutativity")
        if m[x][j[x][y]] != x or j[x][m[x][y]] != x:
            return Verdict(False, (l.label(x), l.label(y)), "absorption")
    for x, y, z in product(rng, repeat=3):
        if m[m[x][y]][z] != m[x][m[y][z]] or j[j[x][y]][z] != j[x][j[y][z]]:
            return Verdict(False, (l.label(x), l.label(y), l.label(z)), "associativity")
    return Verdict(True)


@dataclass(frozen=True)
class HasseDiagram:
    nodes: Tuple[str, ...]
    covers: Tuple[Tuple[str, str], ...]

    def to_dot(self, name: str = "hasse") -> str:
        """Render as a bottom-to-top DOT digraph; byte-stable for identical input"""
        lines = [f'digraph {_dot_id(name)} {{', '\trankdir=BT;']
        for node in self.nodes:
            lines.append(f'\t{_dot_id(node)} [label={_dot_id(node)}];')
        for lower, upper in self.covers:
            lines.append(f'\t{_dot_id(lower)} -> {_dot_id(upper)};')
        lines.append('}')
        return "\n".join(lines) + "\n"

    def to_dict(self) -> Dict[str, Any]:
        return {'nodes': list(self.nodes), 'covers': [list(c) for c in self.covers]}


def _dot_id(text: str) -> str:
    return '"' + str(text).replace('\\', '\\\\').replace('"', '\\"') + '"'


def hasse(l_or_p: Union[FiniteLattice, FinitePoset]) -> HasseDiagram:
    """Transitive reduction of the order; edges sorted by (lower, upper) index"""
    p = l_or_p.poset if isinstance(l_or_p, FiniteLattice) else l_or_p
    reduced = nx.transitive_reduction(_strict_order(p))
    covers = tuple((p.elements[i], p.elements[j]) for i, j in sorted(reduced.edges()))
    return HasseDiagram(p.elements, covers)


def hasse_closure(d: HasseDiagram) -> FinitePoset:
    return poset_from_leq(d.nodes, d.covers)


def is_distributive(l: FiniteLattice) -> Verdict:
    """x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) for all triples; witness is the first failing
    triple in input order"""
    m, j = l.meet, l.join
    for x, y, z in product(range(l.n), repeat=3):
        if m[x][j[y][z]] != j[m[x][y]][m[x][z]]:
            return Verdict(False, (l.label(x), l.label(y), l.label(z)), "distributivity")
    return Verdict(True)


def is_modular(l: FiniteLattice) -> Verdict:
    m, j = l.meet, l.join
    for x, y, z in product(range(l.n), repeat=3):
        if (x, z) not in l.poset.leq:
            continue
        if j[x][m[y][z]] != m[j[x][y]][z]:
            return Verdict(False, (l.label(x), l.label(y), l.label(z)), "modularity")
    return Verdict(True)


def satisfies_median_identity(l: FiniteLattice) -> bool:
    m, j = l.meet, l.join
    for x, y, z in product(range(l.n), repeat=3):
        left = j[j[m[x][y]][m[y][z]]][m[z][x]]
        right = m[m[j[x][y]][j[y][z]]][j[z][x]]
        if left != right:
            return False
    return True


def complements(l: FiniteLattice, x: ElementRef) -> FrozenSet[str]:
    i = l.index(x)
    return frozenset(l.label(y) for y in range(l.n)
                     if l.meet[i][y] == l.bottom and l.join[i][y] == l.top)


def is_boolean(l: FiniteLattice) -> Verdict:
    distributive = is_distributive(l)
    if not distributive:
        return Verdict(False, distributive.witness, "not distributive")
    for x in range(l.n):
        if not complements(l, x):
            return Verdict(False, (l.label(x),), "uncomplemented element")
    return Verdict(True)


def atoms(l: FiniteLattice) -> List[str]:
    covers = hasse(l).covers
    bottom = l.label(l.bottom)
    return [upper for lower, upper in covers if lower == bottom]


@dataclass(frozen=True)
class AtomIsomorphism:
    mapping: Dict[str, FrozenSet[str]]
    atom_order: Tuple[str, ...]
    target: FiniteLattice

    def as_label_map(self) -> Dict[str, str]:
        """Map each source label to the matching power-set lattice label"""
        k = len(self.atom_order)
        return {src: _subset_label([a for a in self.atom_order if a in members], k)
                for src, members in self.mapping.items()}

    def to_dict(self) -> Dict[str, Any]:
        return {src: [a for a in self.atom_order if a in dst] for src, dst in self.mapping.items()}


def boolean_atom_iso(b: FiniteLattice) -> AtomIsomorphism:
    """Explicit isomorphism onto the power set of the atoms, checked table-wise"""
    if not is_boolean(b):
        raise NotBoolean("lattice is not Boolean")
    atom_labels = atoms(b)
    atom_idx = [b.index(a) for a in atom_labels]
    psi = {b.label(x): frozenset(b.label(a) for a in atom_idx if b.le(a, x))
           for x in range(b.n)}
    if len(set(psi.values())) != b.n or b.n != 2 ** len(atom_labels):
        raise NotBoolean("atom map is not bijective")
    for x, y in product(range(b.n), repeat=2):
        lx, ly = b.label(x), b.label(y)
        if psi[b.label(b.meet[x][y])] != psi[lx] & psi[ly]:
            raise NotBoolean(f"meet not preserved at {(lx, ly)}")
        if psi[b.label(b.join[x][y])] != psi[lx] | psi[ly]:
            raise NotBoolean(f"join not preserved at {(lx, ly)}")
    return AtomIsomorphism(psi, tuple(atom_labels), power_set_lattice(atom_labels))


# ---------------------------------------------------------------------------
# Standard constructors
# ---------------------------------------------------------------------------

def chain_labels(n: int) -> List[str]:
    if n < 1:
        raise AxiomViolation("chain size >= 1", n)
    if n == 1:
        return ["0"]
    return ["0"] + [f"a{i}" for i in range(1, n - 1)] + ["1"]


def chain_poset(n: int) -> FinitePoset:
    labels = chain_labels(n)
    return poset_from_leq(labels, zip(labels, labels[1:]))


def chain_lattice(n: int) -> FiniteLattice:
    return as_lattice(chain_poset(n))


def _subset_label(members: Sequence[str], k: int) -> str:
    if not members:
        return "0"
    if len(members) == k:
        return "1"
    return "+".join(members)


def power_set_lattice(ground: Union[int, Sequence[str]]) -> FiniteLattice:
    """Subsets of `ground` under inclusion; "0" is the empty set and "1" the full set"""
    if isinstance(ground, int):
        ground = [chr(ord('a') + i) if ground <= 26 else f"x{i + 1}" for i in range(ground)]
    ground = [str(g) for g in ground]
    k = len(ground)
    masks = sorted(range(2 ** k), key=lambda m: (bin(m).count("1"), [-(m >> i & 1) for i in range(k)]))
    members = [[ground[i] for i in range(k) if m >> i & 1] for m in masks]
    labels = [_subset_label(ms, k) for ms in members]
    pairs = [(labels[a], labels[b]) for a in range(len(masks)) for b in range(len(masks))
             if masks[a] & masks[b] == masks[a]]
    return as_lattice(poset_from_leq(labels, pairs))
