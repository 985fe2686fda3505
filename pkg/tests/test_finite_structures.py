import pytest
from hypothesis import given, settings, strategies as st

from algebra_models import AxiomViolation, CapExceeded, KindFlag, MissingOne, Side, HomKind
from constructions import chain_lattice, zmod_ring, symmetric_group, cyclic_group, full_transformation, v_of
from finite_structures import (
    FiniteMagma, validate_semiring, characteristic, is_strict, classify_elements, closed_subsets,
    subsemirings, is_ideal, congruence_closure, is_compatible, is_congruence_simple,
    subgroups_of_mul_semigroup, is_s_semigroup, is_s_anti_group, check_hom, ring_kernel,
    check_inductive_star, zero_absorption_witness, closure_under, is_proper_semiring,
)
from poset_lattice import chain_poset

BOOLEAN_ADD = [[0, 1], [1, 1]]
BOOLEAN_MUL = [[0, 0], [0, 1]]


def labels_of(m, subsets):
    return {frozenset(m.labels[i] for i in g) for g in subsets}


class TestValidation:
    def test_boolean_semiring_from_tables(self):
        s = validate_semiring(["0", "1"], BOOLEAN_ADD, BOOLEAN_MUL, name="B")
        assert s.zero == 0 and s.one == 1
        assert s.has(KindFlag.SEMIFIELD)
        assert s.has(KindFlag.ADDITIVELY_IDEMPOTENT)
        assert not s.has(KindFlag.RING)

    def test_noncommutative_addition(self):
        with pytest.raises(AxiomViolation) as info:
            validate_semiring(["0", "1"], [[0, 1], [0, 1]], BOOLEAN_MUL)
        assert info.value.axiom == "additive commutativity"

    def test_missing_additive_identity(self):
        with pytest.raises(AxiomViolation):
            validate_semiring(["x", "y"], [[0, 0], [0, 0]], [[0, 0], [0, 0]])

    def test_table_entries_out_of_range(self):
        with pytest.raises(AxiomViolation):
            FiniteMagma.from_rows(["x"], [[3]])

    def test_distributivity_is_checked(self):
        # max does not distribute over xor
        with pytest.raises(AxiomViolation) as info:
            validate_semiring(["0", "1"], [[0, 1], [1, 0]], [[0, 1], [1, 1]])
        assert "distributivity" in info.value.axiom

    def test_large_tables_are_checked_on_every_triple(self):
        n = 65
        labels = [str(i) for i in range(n)]
        add = [[max(i, j) for j in range(n)] for i in range(n)]
        mul = [[min(i, j) for j in range(n)] for i in range(n)]
        chain = validate_semiring(labels, add, mul)
        assert chain.has(KindFlag.ADDITIVELY_IDEMPOTENT)
        assert 'validation' not in chain.tags
        mul[10][20] = mul[20][10] = 5
        with pytest.raises(AxiomViolation):
            validate_semiring(labels, add, mul)

    def test_associativity_witness(self):
        # x·y = x + 1 mod 3 on the left operand only
        m = FiniteMagma.from_rows(["0", "1", "2"], [[1, 1, 1], [2, 2, 2], [0, 0, 0]])
        verdict = m.is_associative()
        assert not verdict
        assert verdict.witness == ("0", "0", "0")

    def test_zero_absorption_is_a_flag(self):
        s = validate_semiring(["0", "1"], BOOLEAN_ADD, [[1, 1], [1, 1]])
        assert not s.has(KindFlag.ZERO_ABSORBING)
        assert zero_absorption_witness(s) == "0"

    def test_z7_is_a_field(self):
        s = zmod_ring(7)
        assert s.has(KindFlag.FIELD)
        assert s.has(KindFlag.CONGRUENCE_SIMPLE)
        assert not is_proper_semiring(s)

    def test_chain_is_a_proper_semiring(self, c5):
        assert is_proper_semiring(c5)
        assert c5.has(KindFlag.LATTICE_DERIVED)


class TestCharacteristic:
    @pytest.mark.parametrize("n", [2, 3, 5, 7, 23, 28])
    def test_zmod(self, n):
        assert str(characteristic(zmod_ring(n))) == f"finite:{n}"

    @pytest.mark.parametrize("n", range(2, 9))
    def test_chains_have_no_characteristic(self, n):
        assert str(characteristic(chain_lattice(n))) == "undefined"


class TestElementClasses:
    def test_z10(self, z10):
        classes = classify_elements(z10)
        assert classes.units == ["1", "3", "7", "9"]
        assert classes.inverses["3"] == "7"
        assert "2" in classes.zero_divisors and "5" in classes.zero_divisors
        assert classes.idempotents == ["0", "1", "5", "6"]

    def test_square_zero_divisors(self, square_semiring):
        classes = classify_elements(square_semiring)
        assert classes.zero_divisors == ["a", "b"]
        assert ("a", "b") in classes.zero_divisor_pairs
        assert classes.units == ["1"]

    def test_strictness(self, c5, z10):
        assert is_strict(c5)
        verdict = is_strict(z10)
        assert not verdict
        assert verdict.reason == "nonzero elements sum to zero"


class TestSubstructures:
    def test_closure_under_is_idempotent(self, z12):
        tables = [z12.add.table, z12.mul.table]
        once = closure_under(tables, [4])
        assert closure_under(tables, once) == once
        assert {z12.label(i) for i in once} == {"0", "4", "8"}

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=2, max_value=12), st.data())
    def test_closure_is_extensive_and_monotone(self, n, data):
        s = zmod_ring(n)
        tables = [s.add.table, s.mul.table]
        a = data.draw(st.frozensets(st.integers(0, n - 1), min_size=1))
        b = a | data.draw(st.frozensets(st.integers(0, n - 1)))
        assert a <= closure_under(tables, a)
        assert closure_under(tables, a) <= closure_under(tables, b)

    def test_subsemirings_of_chain(self):
        census = subsemirings(chain_lattice(3))
        assert census.complete
        # every nonempty subset of a chain is closed under max and min
        assert len(census.subsets) == 7

    def test_cap_marks_census_incomplete(self, boolean_16):
        census = closed_subsets([boolean_16.add.table, boolean_16.mul.table], boolean_16.n, cap=5)
        assert not census.complete
        with pytest.raises(CapExceeded):
            subsemirings(boolean_16, cap=5, raise_on_cap=True)

    def test_ideals(self, z12):
        assert is_ideal(z12, ["0", "4", "8"])
        verdict = is_ideal(z12, ["0", "1"])
        assert not verdict

    def test_one_sided_ideal_in_chain(self, c5):
        assert is_ideal(c5, ["0", "a1"], Side.LEFT)


class TestCongruences:
    def test_z12_congruence_mod_6(self, z12):
        c = congruence_closure(z12, "0", "6")
        assert c.n_classes == 6
        assert c.related(z12.index("1"), z12.index("7"))
        assert is_compatible(z12, c)

    def test_field_is_simple(self):
        assert is_congruence_simple(zmod_ring(5))

    def test_z12_is_not_simple(self, z12):
        verdict = is_congruence_simple(z12)
        assert not verdict

    def test_v_of_two_element_group(self):
        assert is_congruence_simple(v_of(symmetric_group(2)))


class TestSubgroups:
    def test_z12_multiplicative_groups(self, z12):
        found = labels_of(z12.mul, subgroups_of_mul_semigroup(z12.mul))
        for g in ({"1", "5"}, {"3", "9"}, {"4", "8"}, {"1", "5", "7", "11"}):
            assert frozenset(g) in found

    def test_anchored_search_matches_exhaustive(self, z12):
        anchored = subgroups_of_mul_semigroup(z12.mul)
        assert anchored == subgroups_of_mul_semigroup(z12.mul, method="exhaustive")

    def test_exhaustive_refuses_large_carriers(self):
        with pytest.raises(CapExceeded):
            subgroups_of_mul_semigroup(full_transformation(3), method="exhaustive")

    def test_s_semigroups(self, z12):
        assert is_s_semigroup(z12.mul)
        assert is_s_semigroup(full_transformation(3))
        assert not is_s_semigroup(cyclic_group(5))

    def test_finite_groups_are_not_s_anti(self):
        verdict = is_s_anti_group(symmetric_group(3))
        assert not verdict
        assert verdict.reason == "every sub-semigroup is a subgroup"


class TestHomomorphisms:
    def test_reduction_mod_3(self):
        z6, z3 = zmod_ring(6), zmod_ring(3)
        f = {str(x): str(x % 3) for x in range(6)}
        assert check_hom(f, z6, z3, HomKind.RING)
        assert ring_kernel(f, z6, z3) == ["0", "3"]

    def test_partial_map_is_rejected(self):
        verdict = check_hom({"0": "0"}, zmod_ring(2), zmod_ring(2))
        assert not verdict
        assert verdict.witness == ["1"]

    def test_lattice_map_collapsing_a_chain(self):
        c3, c2 = chain_lattice(3), chain_lattice(2)
        f = {"0": "0", "a1": "1", "1": "1"}
        assert check_hom(f, c3, c2, HomKind.LATTICE)


class TestInductiveStar:
    def test_boolean_chain_star(self):
        s = chain_lattice(3)
        order = chain_poset(3)
        report = check_inductive_star(s, order, {"0": "1", "a1": "1", "1": "1"})
        assert report.inductive

    def test_bad_star(self):
        s = chain_lattice(3)
        report = check_inductive_star(s, chain_poset(3), {"0": "0", "a1": "1", "1": "1"})
        assert not report.fixed_point
        assert not report.inductive

    def test_needs_identity(self):
        s = validate_semiring(["0", "x"], BOOLEAN_ADD, [[0, 0], [0, 0]])
        with pytest.raises(MissingOne):
            check_inductive_star(s, chain_poset(2), [1, 1])
