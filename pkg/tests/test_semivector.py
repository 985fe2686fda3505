from fractions import Fraction

import pytest

from algebra_models import PreconditionFailed, SpecError, TypeMismatch
from archetypes import Factor
from constructions import make_poly
from poset_lattice import chain_lattice
from semivector import (
    LinearMap, lattice_space, tuple_space, polynomial_space, poly_vector, check_axioms, span, in_span,
    is_independent, bases, representation_count, is_indecomposable, is_s_semivector,
    valid_scalar_choices, is_subsemivector, certify_s_subsemivector, certify_s_pseudo_semivector,
    certify_s_anti_semivector, certify_s_basis, smaller_spanning_search, check_s_linear_map,
)


@pytest.fixture
def plane():
    return tuple_space(["Z0", "Z0"])


@pytest.fixture
def c4_space():
    return lattice_space(chain_lattice(4))


class TestSpaces:
    def test_scalars_must_be_a_nonnegative_number_system(self):
        with pytest.raises(PreconditionFailed):
            tuple_space(["Z"], scalar="Z")

    def test_scalars_must_act_on_every_factor(self):
        with pytest.raises(PreconditionFailed):
            tuple_space(["Z0"], scalar="Q0")

    def test_axioms_hold_on_a_grid(self):
        verdict = check_axioms(tuple_space(["Z0", "Q"]))
        assert verdict
        assert verdict.reason == "checked on a grid"

    def test_lattice_space_axioms(self, square):
        assert check_axioms(lattice_space(square))

    def test_polynomial_coordinates(self):
        sp = polynomial_space(3)
        assert sp.arity == 4 and sp.name == "Z0_3[x]"
        p = make_poly({0: 1, 2: 1, 3: 1}, Factor.parse("Z0"))
        assert poly_vector(sp, p) == (1, 0, 1, 1)
        with pytest.raises(PreconditionFailed):
            poly_vector(polynomial_space(1), p)


class TestSpans:
    def test_member_with_combination(self, plane):
        result = in_span(plane, [["1", "1"], ["2", "1"], ["3", "0"]], ["3", "2"])
        assert result
        assert result.combination == [1, 1, 0]

    def test_non_member(self, plane):
        assert not in_span(plane, [["1", "1"], ["2", "1"], ["3", "0"]], ["1", "3"])

    def test_generator_is_its_own_combination(self, plane):
        assert in_span(plane, [["1", "2"]], ["1", "2"]).combination == [1]

    def test_cone_over_q0(self):
        sp = tuple_space(["Q0", "Q0"], scalar="Q0")
        result = in_span(sp, [["2", "0"], ["0", "3"]], ["1", "1"])
        assert result.combination == [Fraction(1, 2), Fraction(1, 3)]

    def test_finite_span_closure(self, c4_space):
        s = span(c4_space, ["a1"])
        assert s.labelled() == ["0", "a1"]


class TestIndependence:
    def test_independent_triple(self, plane):
        assert is_independent(plane, [["1", "1"], ["2", "1"], ["3", "0"]])

    def test_sum_is_dependent(self, plane):
        verdict = is_independent(plane, [["1", "0"], ["0", "1"], ["1", "1"]])
        assert not verdict
        assert verdict.witness['vector'] == ["1", "1"]

    def test_units_are_indecomposable(self, plane):
        assert is_indecomposable(plane, ["1", "0"])
        assert not is_indecomposable(plane, ["2", "0"])
        assert not is_indecomposable(plane, ["0", "0"])


class TestBases:
    def test_unique_standard_basis(self):
        report = bases(tuple_space(["Z0", "Z0", "Z0"]))
        assert report.unique and report.dimension == 3
        assert report.bases == [[["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]]

    def test_rescaled_bases_over_q0(self):
        report = bases(tuple_space(["Q0", "Q0"], scalar="Q0"))
        assert not report.unique
        assert report.dimension is None

    def test_signed_units_over_integers(self):
        report = bases(tuple_space(["Z0", "Z"]))
        assert not report.complete
        assert report.bases == [[["1", "0"], ["0", "1"], ["0", "-1"]]]

    def test_polynomials_of_bounded_degree(self):
        report = bases(polynomial_space(7))
        assert report.unique and report.dimension == 8

    def test_chain_lattice_space(self, c4_space):
        report = bases(c4_space)
        assert report.bases == [["a1", "a2", "1"]]
        assert report.dimension == 3

    @pytest.mark.parametrize("vector,count", [("1", 4), ("a2", 2), ("a1", 1), ("0", 1)])
    def test_representation_counts(self, c4_space, vector, count):
        assert representation_count(c4_space, ["a1", "a2", "1"], vector).count == count

    def test_representations_are_listed(self, c4_space):
        reps = representation_count(c4_space, ["a1", "a2", "1"], "a2").representations
        assert reps == [["0", "1", "0"], ["1", "1", "0"]]

    def test_counting_needs_finite_scalars(self, plane):
        with pytest.raises(PreconditionFailed):
            representation_count(plane, [["1", "0"]], ["1", "0"])


class TestSmarandacheSpaces:
    def test_s_semivector(self, c4_space):
        assert is_s_semivector(tuple_space(["Z", "Z0"]))
        assert not is_s_semivector(tuple_space(["Q0", "Q0"], scalar="Q0"))
        assert not is_s_semivector(c4_space)

    @pytest.mark.parametrize("tags,expected", [
        (["R0", "Q0", "Z"], ["Z0"]),
        (["Q", "Z0"], ["Z0"]),
        (["Q0", "Q0"], []),
        (["R", "Q0"], ["Z0", "Q0"]),
        (["R", "R0"], ["Z0", "Q0", "R0"]),
    ])
    def test_scalar_choices(self, tags, expected):
        assert valid_scalar_choices(tags) == expected

    def test_subsemivector_with_and_without_group(self):
        sp = tuple_space(["Q0", "Z0", "Z"])
        assert certify_s_subsemivector(sp, ["all", "all", "multiples:2"]).holds
        assert is_subsemivector(sp, ["all", "all", "nonneg_integers"])
        cert = certify_s_subsemivector(sp, ["all", "all", "nonneg_integers"])
        assert not cert.holds
        assert [c.clause for c in cert.transcript if not c.passed] == [
            "subset contains a proper nontrivial additive group"]

    def test_descriptor_arity_is_checked(self):
        with pytest.raises(TypeMismatch):
            is_subsemivector(tuple_space(["Z0", "Z"]), ["all"])

    def test_pseudo_semivector(self):
        sp = tuple_space(["Q", "R0"], scalar="Q0")
        cert = certify_s_pseudo_semivector(sp, ["nonneg_integers", "all"], "Z0")
        assert cert.holds
        assert cert.mode == "verify-grid"
        assert 'escape' in cert.witness

    def test_anti_semivector(self):
        cert = certify_s_anti_semivector(["R"], "Q", ["nonneg"], "Z0")
        assert cert.holds
        assert cert.witness['field'] == "Q"

    def test_anti_semivector_needs_a_field(self):
        assert not certify_s_anti_semivector(["R"], "Z0", ["nonneg"], "Z0").holds

    def test_s_basis(self):
        sp = tuple_space(["Z", "Z0"])
        cert = certify_s_basis(sp, [["1", "0"], ["-1", "0"]], ["all", "zero"])
        assert cert.holds

    def test_one_generator_never_spans_z(self):
        sp = tuple_space(["Z"])
        assert smaller_spanning_search(sp, 1, bound=1).found is None
        found = smaller_spanning_search(sp, 2, bound=1)
        assert found.found == [["-1"], ["1"]]
        assert found.examined == 1


class TestLinearMaps:
    def test_apply(self):
        t = LinearMap.from_dict({'rows': [{}, {"1": 2}]})
        assert t((Fraction(3), Fraction(5))) == (0, 10)
        assert LinearMap.from_dict(t.to_dict()) == t

    def test_bad_rows(self):
        with pytest.raises(SpecError):
            LinearMap.from_dict({'rows': "x"})
        with pytest.raises(TypeMismatch):
            LinearMap.from_dict({'rows': [{"a": 1}]})

    def test_map_preserving_the_group(self):
        t = LinearMap.from_dict({'rows': [{}, {"1": 2}]})
        verdict = check_s_linear_map(t, tuple_space(["Z0", "Q"]), tuple_space(["Z0", "R"]),
                                     ["zero", "all"], ["zero", "all"])
        assert verdict

    def test_map_leaving_the_group(self):
        t = LinearMap.from_dict({'rows': [{"1": 1}, {}]})
        verdict = check_s_linear_map(t, tuple_space(["Z0", "Q"]), tuple_space(["Z0", "R"]),
                                     ["zero", "all"], ["zero", "all"])
        assert not verdict
        assert verdict.reason == "T(p) leaves C"

    def test_spaces_must_share_scalars(self, c4_space):
        with pytest.raises(PreconditionFailed):
            check_s_linear_map(lambda v: v, c4_space, tuple_space(["Z0"]), ["0"], ["zero"])
