import pytest
from hypothesis import given, settings, strategies as st

from algebra_models import (
    AxiomViolation, CapExceeded, KindFlag, NoUnit, NotBoolean, NotStrict, PreconditionFailed, TooFewAtoms,
)
from archetypes import ArchetypeProduct, ArchetypeGroupAlgebra
from constructions import (
    INFINITY, direct_product, mixed_direct_product, matrix_semiring, MatrixSemiring, PolynomialSemiring,
    group_semiring, group_ring, atom_factorization, v_of, sub_structure, zmod_ring, chain_lattice,
    lattice_semiring, symmetric_group, cyclic_group, dihedral, full_transformation,
)
from finite_structures import validate_semiring
from lattice_catalog import get_lattice_by_name
from poset_lattice import is_boolean


class TestProducts:
    def test_product_of_chains_is_the_square(self, c2):
        p = direct_product([c2, c2])
        assert p.n == 4
        assert p.name == "C2xC2"
        assert p.lattice is not None and is_boolean(p.lattice)
        assert p.label(p.zero) == "(0,0)"

    def test_product_of_fields_is_not_a_field(self):
        p = direct_product([zmod_ring(2), zmod_ring(3)])
        assert p.has(KindFlag.RING)
        assert not p.has(KindFlag.FIELD)

    def test_empty_product(self):
        with pytest.raises(PreconditionFailed):
            direct_product([])

    def test_mixed_product_records_factor_kinds(self):
        p = mixed_direct_product([zmod_ring(3), "Z0", "Z"])
        assert isinstance(p, ArchetypeProduct)
        assert p.factor_kinds == ["field", "semifield", "ring"]
        assert p.tags == ["Z3", "Z0", "Z"]

    def test_finite_mixed_product_is_tagged(self, c2):
        p = mixed_direct_product([c2, zmod_ring(2)])
        assert p.tags['mixed'] is True
        assert p.tags['factor_kinds'] == ["semifield", "field"]


class TestMatrices:
    def test_square_matrices_do_not_commute(self, square_semiring):
        ms = MatrixSemiring(square_semiring, 2)
        a = ms.element([["a", "b"], ["0", "1"]])
        b = ms.element([["1", "a"], ["b", "b"]])
        assert ms.rows(ms.mul(a, b)) == [["1", "1"], ["b", "b"]]
        assert ms.rows(ms.mul(b, a)) == [["a", "1"], ["0", "b"]]

    def test_identity_and_zero(self, c5):
        ms = MatrixSemiring(c5, 2)
        x = ms.element([["a1", "0"], ["1", "a3"]])
        assert ms.mul(ms.identity(), x) == x
        assert ms.add(ms.zero_matrix(), x) == x
        assert ms.label(x) == "[[a1,0],[1,a3]]"

    def test_materialize_respects_the_cap(self, c2):
        ms = MatrixSemiring(c2, 2)
        assert ms.materialize().n == 16
        with pytest.raises(CapExceeded):
            ms.materialize(cap=10)

    def test_shape_is_checked(self, c2):
        with pytest.raises(AxiomViolation):
            MatrixSemiring(c2, 2).element([["0", "1"]])

    def test_tag_base_gives_an_archetype(self):
        m = matrix_semiring("Z0", 2)
        assert m.name == "M2(Z0)"
        assert not m.is_commutative()


class TestPolynomials:
    def test_square_of_binomial(self):
        r = PolynomialSemiring("Z0")
        p = r.poly({0: 1, 1: 1})
        assert r.render(r.mul(p, p)) == "1 + 2x + x^2"

    def test_finite_coefficients_cancel(self):
        r = PolynomialSemiring(zmod_ring(4))
        p = r.poly({1: "2"})
        assert r.render(r.mul(p, p)) == "0"
        assert r.mul(p, p).degree == -1

    def test_degree_bound(self):
        r = PolynomialSemiring("Z0", max_degree=2)
        assert r.name == "Z0_2[x]"
        with pytest.raises(AxiomViolation):
            r.poly({3: 1})

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.dictionaries(st.integers(0, 3), st.integers(0, 5), max_size=4), min_size=3, max_size=3))
    def test_multiplication_distributes(self, coeffs):
        r = PolynomialSemiring("Z0")
        p, q, s = (r.poly(c) for c in coeffs)
        assert r.mul(p, r.add(q, s)) == r.add(r.mul(p, q), r.mul(p, s))
        assert r.mul(r.add(q, s), p) == r.add(r.mul(q, p), r.mul(s, p))


class TestCarriers:
    @pytest.mark.parametrize("n,order", [(1, 1), (2, 2), (3, 6)])
    def test_symmetric_groups(self, n, order):
        g = symmetric_group(n)
        assert g.n == order
        assert g.is_group()

    def test_symmetric_group_composes_right_to_left(self):
        g = symmetric_group(3)
        assert g.labels == ("123", "132", "213", "231", "312", "321")
        assert g.labels[g.op(g.index("213"), g.index("132"))] == "231"
        assert g.labels[g.op(g.index("132"), g.index("213"))] == "312"

    def test_full_transformation_is_not_a_group(self):
        t = full_transformation(2)
        assert t.n == 4
        assert not t.is_group()

    def test_dihedral_is_noncommutative(self):
        d = dihedral(3)
        assert d.n == 6 and d.is_group()
        assert not d.is_commutative()

    def test_cyclic_labels(self):
        assert cyclic_group(4).labels == ("1", "g", "g^2", "g^3")


GROUP_TERMS = st.dictionaries(st.sampled_from(["1", "g", "g^2"]), st.sampled_from(["0", "a", "b", "1"]), max_size=3)


class TestGroupSemirings:
    def test_s3_over_two_element_chain(self, c2):
        gs = group_semiring(c2, symmetric_group(3))
        assert gs.size == 64
        assert gs.tags == {'construction': 'group_semiring', 's-group-semiring': True}
        assert gs.non_commuting_pair() is not None

    def test_coefficients_must_be_strict(self):
        with pytest.raises(NotStrict):
            group_semiring(zmod_ring(3), cyclic_group(2))

    def test_coefficients_need_a_unit(self):
        no_one = validate_semiring(["0", "x"], [[0, 1], [1, 1]], [[0, 0], [0, 0]])
        with pytest.raises(NoUnit):
            group_semiring(no_one, cyclic_group(2))

    def test_labels(self, square_semiring):
        gs = group_semiring(square_semiring, cyclic_group(3))
        x = gs.element({"g": "a", "1": "1"})
        assert gs.label(x) == "1+a*g"
        assert gs.label(gs.zero()) == "0"
        assert gs.in_carrier(gs.embed_carrier("g^2"))
        assert not gs.in_carrier(x)
        assert gs.label(gs.embed_coeff("a")) == "a*1"

    def test_materialize_small_group_semiring(self, c2):
        s = group_semiring(c2, cyclic_group(2)).materialize()
        assert s.n == 4
        assert s.has(KindFlag.COMMUTATIVE_MUL)

    @settings(max_examples=40, deadline=None)
    @given(GROUP_TERMS, GROUP_TERMS, GROUP_TERMS)
    def test_multiplication_distributes(self, x, y, z):
        gs = group_semiring(lattice_semiring(get_lattice_by_name("square")), cyclic_group(3))
        a, b, c = gs.element(x), gs.element(y), gs.element(z)
        assert gs.mul(a, gs.add(b, c)) == gs.add(gs.mul(a, b), gs.mul(a, c))


class TestGroupRings:
    def test_z2_c2_has_zero_divisors(self):
        gr = group_ring(2, cyclic_group(2))
        verdict = gr.find_zero_divisors()
        assert verdict
        assert verdict.witness == ("1+g", "1+g")

    def test_tag_coefficients_give_a_group_algebra(self):
        assert isinstance(group_ring("Q", cyclic_group(3)), ArchetypeGroupAlgebra)

    def test_ring_mode_needs_a_ring(self, c2):
        with pytest.raises(PreconditionFailed):
            group_ring(c2, cyclic_group(2))


class TestAtomFactorization:
    @pytest.mark.parametrize("i", range(5))
    def test_every_power_factors_over_the_square(self, square_semiring, i):
        f = atom_factorization(square_semiring, 5, i)
        assert f.verify()
        assert f.k != f.r
        assert (f.k + f.r) % 5 == i

    def test_cube_coefficients(self, cube):
        f = atom_factorization(lattice_semiring(cube), 7, 3)
        assert f.verify()
        assert f.atom == "a"

    def test_record(self, square_semiring):
        record = atom_factorization(square_semiring, 5, 2).to_dict()
        assert record['k'] == 0 and record['r'] == 2
        assert record['target'] == "g^2"
        assert record['atom'] == "a" and record['partner'] == "b"

    def test_chain_coefficients_are_rejected(self):
        with pytest.raises(NotBoolean):
            atom_factorization(chain_lattice(3), 5, 1)
        with pytest.raises(TooFewAtoms):
            atom_factorization(chain_lattice(2), 5, 1)

    def test_no_split_in_order_two(self, square_semiring):
        with pytest.raises(PreconditionFailed):
            atom_factorization(square_semiring, 2, 0)


class TestAdjunction:
    def test_v_of_cyclic_group(self):
        v = v_of(cyclic_group(2))
        assert list(v.labels) == ["1", "g", INFINITY]
        inf = v.index(INFINITY)
        assert v.zero is None
        assert all(v.times(inf, x) == inf for x in range(v.n))
        assert v.plus(0, 1) == inf and v.plus(1, 1) == 1

    def test_sub_structure(self, z12):
        sub = sub_structure(z12, [z12.index(x) for x in ("0", "4", "8")])
        assert list(sub.labels) == ["0", "4", "8"]
        assert sub.label(sub.zero) == "0"
        assert sub.label(sub.one) == "4"

    def test_sub_structure_needs_closure(self, z12):
        with pytest.raises(AxiomViolation):
            sub_structure(z12, [0, 1])
