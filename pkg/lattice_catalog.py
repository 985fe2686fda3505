"""
Lattice Catalog for the Semiring Engine
Named finite lattices (and one non-lattice poset) used as fixtures and by the structure-spec loader
"""

from typing import Dict, List, Any, Optional

from poset_lattice import FiniteLattice, FinitePoset, lattice_from_covers, poset_from_leq

LATTICE_CATALOG = [
    {
        "name": "pentagon",
        "description": "Five-element non-modular lattice N5; b has the two complements a and c",
        "elements": ["0", "a", "b", "c", "1"],
        "covers": [["0", "a"], ["a", "c"], ["c", "1"], ["0", "b"], ["b", "1"]],
        "is_lattice": True,
        "distributive": False,
        "modular": False,
    },
    {
        "name": "diamond",
        "description": "Five-element modular, non-distributive lattice M3",
        "elements": ["0", "a", "b", "c", "1"],
        "covers": [["0", "a"], ["0", "b"], ["0", "c"], ["a", "1"], ["b", "1"], ["c", "1"]],
        "is_lattice": True,
        "distributive": False,
        "modular": True,
    },
    {
        "name": "hexagon",
        "description": "Six-element non-modular lattice built from two incomparable 2-chains",
        "elements": ["0", "a", "b", "c", "d", "1"],
        "covers": [["0", "a"], ["a", "b"], ["b", "1"], ["0", "c"], ["c", "d"], ["d", "1"]],
        "is_lattice": True,
        "distributive": False,
        "modular": False,
    },
    {
        "name": "square",
        "description": "Four-element Boolean lattice {0, a, b, 1} with a·b = 0",
        "elements": ["0", "a", "b", "1"],
        "covers": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]],
        "is_lattice": True,
        "distributive": True,
        "modular": True,
    },
    {
        "name": "cube",
        "description": "Eight-element Boolean lattice on the atoms a, b, c",
        "elements": ["0", "a", "b", "c", "a+b", "a+c", "b+c", "1"],
        "covers": [["0", "a"], ["0", "b"], ["0", "c"],
                   ["a", "a+b"], ["a", "a+c"], ["b", "a+b"], ["b", "b+c"],
                   ["c", "a+c"], ["c", "b+c"],
                   ["a+b", "1"], ["a+c", "1"], ["b+c", "1"]],
        "is_lattice": True,
        "distributive": True,
        "modular": True,
    },
    {
        "name": "chain5",
        "description": "Five-element chain C5",
        "elements": ["0", "a1", "a2", "a3", "1"],
        "covers": [["0", "a1"], ["a1", "a2"], ["a2", "a3"], ["a3", "1"]],
        "is_lattice": True,
        "distributive": True,
        "modular": True,
    },
    {
        "name": "tower_with_square",
        "description": "Ten elements: chain 0<a<b<c, square c<d,e<g, chain g<f<h<1",
        "elements": ["0", "a", "b", "c", "d", "e", "g", "f", "h", "1"],
        "covers": [["0", "a"], ["a", "b"], ["b", "c"], ["c", "d"], ["c", "e"],
                   ["d", "g"], ["e", "g"], ["g", "f"], ["f", "h"], ["h", "1"]],
        "is_lattice": True,
        "distributive": True,
        "modular": True,
    },
    {
        "name": "double_square",
        "description": "Two squares glued at c: 0<a,b<c and c<d,e<1",
        "elements": ["0", "a", "b", "c", "d", "e", "1"],
        "covers": [["0", "a"], ["0", "b"], ["a", "c"], ["b", "c"],
                   ["c", "d"], ["c", "e"], ["d", "1"], ["e", "1"]],
        "is_lattice": True,
        "distributive": True,
        "modular": True,
    },
    {
        "name": "forked_chain",
        "description": "Chain 0<a<b topped by the square b<c,d<1; a semifield that is not a chain",
        "elements": ["0", "a", "b", "c", "d", "1"],
        "covers": [["0", "a"], ["a", "b"], ["b", "c"], ["b", "d"], ["c", "1"], ["d", "1"]],
        "is_lattice": True,
        "distributive": True,
        "modular": True,
    },
    {
        "name": "side_branch",
        "description": "Chain 0<a<b<d<1 with c hanging between b and 1",
        "elements": ["0", "a", "b", "c", "d", "1"],
        "covers": [["0", "a"], ["a", "b"], ["b", "d"], ["d", "1"], ["b", "c"], ["c", "1"]],
        "is_lattice": True,
        "distributive": True,
        "modular": True,
    },
    {
        "name": "raised_square",
        "description": "Square a<b,c<d lifted on 0<a and capped by d<1",
        "elements": ["0", "a", "b", "c", "d", "1"],
        "covers": [["0", "a"], ["a", "b"], ["a", "c"], ["b", "d"], ["c", "d"], ["d", "1"]],
        "is_lattice": True,
        "distributive": True,
        "modular": True,
    },
    {
        "name": "square_with_tail",
        "description": "Square 0<a,b<c followed by the chain c<d<e<1; a·b = 0",
        "elements": ["0", "a", "b", "c", "d", "e", "1"],
        "covers": [["0", "a"], ["0", "b"], ["a", "c"], ["b", "c"],
                   ["c", "d"], ["d", "e"], ["e", "1"]],
        "is_lattice": True,
        "distributive": True,
        "modular": True,
    },
    {
        "name": "bowtie",
        "description": "Six-element poset 0<a,b<c,d<1 where a and b have no least upper bound",
        "elements": ["0", "a", "b", "c", "d", "1"],
        "covers": [["0", "a"], ["0", "b"], ["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"],
                   ["c", "1"], ["d", "1"]],
        "is_lattice": False,
        "distributive": None,
        "modular": None,
    },
]


def get_lattice_record(name: str) -> Optional[Dict[str, Any]]:
    """Get catalog record by name"""
    for record in LATTICE_CATALOG:
        if record['name'] == name:
            return record
    return None


def get_poset_by_name(name: str) -> Optional[FinitePoset]:
    record = get_lattice_record(name)
    if record is None:
        return None
    return poset_from_leq(record['elements'], [tuple(c) for c in record['covers']])


def get_lattice_by_name(name: str) -> Optional[FiniteLattice]:
    """Build the named lattice; raises NotALattice for catalog posets that are not lattices"""
    record = get_lattice_record(name)
    if record is None:
        return None
    return lattice_from_covers(record['elements'], [tuple(c) for c in record['covers']])


def search_lattices(distributive: Optional[bool] = None, lattices_only: bool = True) -> List[Dict[str, Any]]:
    """Search catalog records with optional filters"""
    results = LATTICE_CATALOG
    if lattices_only:
        results = [r for r in results if r['is_lattice']]
    if distributive is not None:
        results = [r for r in results if r['distributive'] == distributive]
    return results


def list_lattice_names() -> List[str]:
    return [record['name'] for record in LATTICE_CATALOG]


# Constants for easy access
FIXTURE_LATTICE_NAMES = [r['name'] for r in LATTICE_CATALOG if r['is_lattice']]
DISTRIBUTIVE_LATTICE_NAMES = [r['name'] for r in search_lattices(distributive=True)]
TOTAL_LATTICES = len(FIXTURE_LATTICE_NAMES)
