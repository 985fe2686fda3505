import pytest

from lattice_catalog import (
    LATTICE_CATALOG, FIXTURE_LATTICE_NAMES, DISTRIBUTIVE_LATTICE_NAMES, get_lattice_record,
    get_lattice_by_name, get_poset_by_name, search_lattices, list_lattice_names,
)
from poset_lattice import is_distributive, is_modular


@pytest.mark.parametrize("name", FIXTURE_LATTICE_NAMES)
def test_recorded_flags_match_computed(name):
    record = get_lattice_record(name)
    l = get_lattice_by_name(name)
    assert l.n == len(record['elements'])
    assert is_distributive(l).holds == record['distributive']
    assert is_modular(l).holds == record['modular']


def test_names_are_unique():
    names = list_lattice_names()
    assert len(names) == len(set(names)) == len(LATTICE_CATALOG)


def test_unknown_name():
    assert get_lattice_record("nonesuch") is None
    assert get_lattice_by_name("nonesuch") is None
    assert get_poset_by_name("nonesuch") is None


def test_bowtie_is_listed_only_as_poset():
    assert "bowtie" not in FIXTURE_LATTICE_NAMES
    assert get_poset_by_name("bowtie").n == 6
    assert "bowtie" in [r['name'] for r in search_lattices(lattices_only=False)]


def test_search_by_distributivity():
    non_distributive = {r['name'] for r in search_lattices(distributive=False)}
    assert non_distributive == {"pentagon", "diamond", "hexagon"}
    assert set(DISTRIBUTIVE_LATTICE_NAMES).isdisjoint(non_distributive)
