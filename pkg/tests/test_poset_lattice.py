import pytest
from hypothesis import given, settings, strategies as st

from algebra_models import CycleDetected, DuplicateLabel, NotALattice, NotBoolean, AxiomViolation
from lattice_catalog import get_poset_by_name
from poset_lattice import (
    poset_from_leq, lattice_from_covers, lattice_from_tables, lattice_law_violation, hasse,
    hasse_closure, is_distributive, is_modular, is_boolean, complements, atoms, boolean_atom_iso,
    chain_labels, chain_lattice, power_set_lattice, satisfies_median_identity, as_lattice,
)


@st.composite
def dags(draw, max_size=7):
    """Random order relations: pairs i < j only, so never cyclic"""
    n = draw(st.integers(min_value=1, max_value=max_size))
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12))
    labels = [f"e{i}" for i in range(n)]
    return labels, [(labels[i], labels[j]) for i, j in pairs if i < j]


class TestPosets:
    def test_closure_is_reflexive_and_transitive(self):
        p = poset_from_leq(["x", "y", "z"], [("x", "y"), ("y", "z")])
        assert p.le("x", "x")
        assert p.le("x", "z")
        assert not p.le("z", "x")

    def test_cycle_is_rejected(self):
        with pytest.raises(CycleDetected):
            poset_from_leq(["x", "y"], [("x", "y"), ("y", "x")])

    def test_longer_cycle_is_rejected(self):
        with pytest.raises(CycleDetected) as info:
            poset_from_leq(["x", "y", "z"], [("x", "y"), ("y", "z"), ("z", "x")])
        assert set(info.value.pair) <= {"x", "y", "z"}

    def test_reflexive_pairs_are_allowed(self):
        p = poset_from_leq(["x", "y"], [("x", "x"), ("x", "y")])
        assert p.le("x", "y") and p.le("y", "y")

    def test_covers_drop_implied_pairs(self):
        p = poset_from_leq(["0", "a", "1"], [("0", "a"), ("a", "1"), ("0", "1")])
        assert hasse(p).covers == (("0", "a"), ("a", "1"))

    def test_duplicate_label_is_rejected(self):
        with pytest.raises(DuplicateLabel):
            poset_from_leq(["x", "x"], [])

    @given(dags())
    def test_hasse_closure_recovers_the_order(self, data):
        labels, pairs = data
        p = poset_from_leq(labels, pairs)
        assert hasse_closure(hasse(p)) == p

    def test_bowtie_is_not_a_lattice(self):
        with pytest.raises(NotALattice):
            as_lattice(get_poset_by_name("bowtie"))


class TestLattices:
    def test_chain_labels(self):
        assert chain_labels(1) == ["0"]
        assert chain_labels(4) == ["0", "a1", "a2", "1"]

    def test_meet_and_join_of_square(self, square):
        assert square.label(square.meet_of("a", "b")) == "0"
        assert square.label(square.join_of("a", "b")) == "1"

    def test_tables_round_trip(self, square):
        l2 = lattice_from_tables(square.labels, square.meet, square.join)
        assert l2.meet == square.meet and l2.join == square.join

    def test_inconsistent_tables_are_rejected(self, square):
        join = [list(row) for row in square.join]
        join[1][2] = join[2][1] = 1
        with pytest.raises(AxiomViolation):
            lattice_from_tables(square.labels, square.meet, join)

    @settings(max_examples=20)
    @given(st.integers(min_value=1, max_value=8))
    def test_chains_satisfy_lattice_laws(self, n):
        l = chain_lattice(n)
        assert lattice_law_violation(l)
        assert is_distributive(l)
        assert is_modular(l)

    def test_pentagon_fails_modularity(self, pentagon):
        assert not is_distributive(pentagon)
        verdict = is_modular(pentagon)
        assert not verdict
        assert verdict.reason == "modularity"

    def test_diamond_is_modular_not_distributive(self, diamond):
        assert is_modular(diamond)
        assert not is_distributive(diamond)
        assert not satisfies_median_identity(diamond)

    def test_distributive_matches_median_identity(self, cube, pentagon):
        assert satisfies_median_identity(cube)
        assert not satisfies_median_identity(pentagon)

    def test_boolean_chains(self):
        assert is_boolean(chain_lattice(2))
        assert not is_boolean(chain_lattice(3))

    @pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
    def test_power_sets_are_boolean(self, k):
        l = power_set_lattice(k)
        assert l.n == 2 ** k
        assert is_boolean(l)

    def test_complements_in_pentagon(self, pentagon):
        assert complements(pentagon, "b") == frozenset({"a", "c"})


class TestHasse:
    def test_square_covers(self, square):
        d = hasse(square)
        assert len(d.covers) == 4
        assert ("0", "a") in d.covers

    def test_dot_is_stable(self, square):
        first = hasse(square).to_dot("L4")
        second = hasse(lattice_from_covers(["0", "a", "b", "1"],
                                           [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])).to_dot("L4")
        assert first == second
        assert first.startswith('digraph "L4" {\n\trankdir=BT;')
        assert first.endswith("}\n")

    def test_dot_escapes_quotes(self):
        p = poset_from_leq(['a"b', "c"], [('a"b', "c")])
        assert '"a\\"b"' in hasse(p).to_dot()


class TestBooleanAlgebras:
    def test_atoms(self, square, cube):
        assert atoms(square) == ["a", "b"]
        assert atoms(cube) == ["a", "b", "c"]

    def test_square_maps_identically(self, square):
        assert boolean_atom_iso(square).as_label_map() == {"0": "0", "a": "a", "b": "b", "1": "1"}

    def test_cube_iso_preserves_size(self, cube):
        iso = boolean_atom_iso(cube)
        assert iso.target.n == 8
        assert iso.as_label_map()["a+b"] == "a+b"

    def test_non_boolean_is_rejected(self):
        with pytest.raises(NotBoolean):
            boolean_atom_iso(chain_lattice(3))
