from fractions import Fraction

import pytest

from algebra_models import TypeMismatch, UnknownKind
from archetypes import (
    Factor, FactorKind, ComponentSet, ProductSubset, ArchetypeMatrix, ArchetypeGroupAlgebra,
    archetype_from_tags, element_key,
)
from constructions import cyclic_group


class TestFactors:
    @pytest.mark.parametrize("tag,kind", [("Z0", FactorKind.Z0), ("Q0", FactorKind.Q0), ("R", FactorKind.R),
                                          ("Z", FactorKind.Z)])
    def test_parse_number_systems(self, tag, kind):
        assert Factor.parse(tag).kind == kind
        assert Factor.parse(tag).tag == tag

    def test_parse_zmod(self):
        f = Factor.parse(" Z6 ")
        assert f.kind == FactorKind.ZMOD and f.modulus == 6
        assert f.tag == "Z6"

    @pytest.mark.parametrize("tag", ["Z1", "N", "Zx", ""])
    def test_parse_rejects_unknown_tags(self, tag):
        with pytest.raises(UnknownKind):
            Factor.parse(tag)

    def test_coerce_respects_the_carrier(self):
        assert Factor.parse("Q").coerce("3/4") == Fraction(3, 4)
        assert Factor.parse("Z10").coerce(13) == 3
        with pytest.raises(TypeMismatch):
            Factor.parse("Z0").coerce("1/2")
        with pytest.raises(TypeMismatch):
            Factor.parse("Q0").coerce(-1)
        with pytest.raises(TypeMismatch):
            Factor.parse("Z").coerce("abc")

    def test_inverses(self):
        assert Factor.parse("Z10").inverse(3) == 7
        assert Factor.parse("Z10").inverse(5) is None
        assert Factor.parse("Q0").inverse(Fraction(2)) == Fraction(1, 2)
        assert Factor.parse("Z0").inverse(Fraction(2)) is None

    def test_negation_in_nonnegative_factors(self):
        f = Factor.parse("Q0")
        assert f.neg(Fraction(0)) == 0
        assert f.neg(Fraction(1)) is None


class TestComponentSets:
    def test_parse_and_render(self):
        assert ComponentSet.parse("multiples:3").render() == "multiples:3"
        assert ComponentSet.parse("values:1,2").param == ("1", "2")
        with pytest.raises(UnknownKind):
            ComponentSet.parse("bogus")

    def test_multiples(self):
        z = Factor.parse("Z")
        threes = ComponentSet.parse("multiples:3")
        assert threes.contains(z, Fraction(6))
        assert not threes.contains(z, Fraction(4))

    def test_multiples_modulo_n_use_the_gcd(self):
        z12 = Factor.parse("Z12")
        assert ComponentSet.parse("multiples:8").contains(z12, 4)
        assert not ComponentSet.parse("multiples:8").contains(z12, 2)

    def test_nontrivial_groups(self):
        z = Factor.parse("Z")
        assert ComponentSet.parse("integers").has_nontrivial_group(z)
        assert not ComponentSet.parse("nonneg").has_nontrivial_group(z)
        assert not ComponentSet.parse("zero").has_nontrivial_group(z)
        assert ComponentSet.parse("values:0,5").has_nontrivial_group(Factor.parse("Z10"))


class TestProductSubsets:
    def test_adjoined_zero_is_sampled_first(self):
        arch = archetype_from_tags(["Q0", "Q0"])
        subset = ProductSubset.parse({'components': ["positive", "positive"], 'adjoin_zero': True})
        points = subset.sample(arch)
        assert points[0] == arch.zero()
        assert subset.contains(arch, arch.zero())
        assert all(subset.contains(arch, p) for p in points)

    def test_round_trip_through_dict(self):
        subset = ProductSubset.parse(["zero", "multiples:2"])
        assert ProductSubset.parse(subset.to_dict()) == subset


class TestProducts:
    def test_characteristic(self):
        assert str(archetype_from_tags(["Z10", "Z0"]).characteristic()) == "zero"
        assert str(archetype_from_tags(["Z4", "Z6"]).characteristic()) == "finite:12"

    def test_strictness_follows_factors(self):
        assert archetype_from_tags(["Z0", "Q0"]).is_strict()
        verdict = archetype_from_tags(["Z0", "Z"]).is_strict()
        assert not verdict
        assert verdict.reason == "component 1 has additive inverses"

    def test_additive_s_semigroups(self):
        assert not archetype_from_tags(["Z0", "Z0"]).is_s_semigroup()
        verdict = archetype_from_tags(["Z10"]).is_s_semigroup()
        assert verdict
        assert verdict.witness == {'components': ["multiples:2"], 'adjoin_zero': False}
        assert not archetype_from_tags(["Z7"]).is_s_semigroup()

    def test_classify_elements(self):
        arch = archetype_from_tags(["Z0", "Z0"])
        classes = arch.classify_elements([[1, 0], [0, 1], [1, 1]])
        assert classes.zero_divisors == [["1", "0"], ["0", "1"]]
        assert classes.idempotents == [["1", "0"], ["0", "1"], ["1", "1"]]
        assert classes.units == [["1", "1"]]
        assert classes.inverses == {"(1,1)": ["1", "1"]}


class TestMatrices:
    def test_product_is_not_commutative(self):
        m = ArchetypeMatrix(Factor.parse("Z"), 2)
        a, b = m.coerce([[1, 1], [0, 1]]), m.coerce([[1, 0], [1, 1]])
        assert m.render(m.mul(a, b)) == [["2", "1"], ["1", "1"]]
        assert m.render(m.mul(b, a)) == [["1", "1"], ["1", "2"]]
        assert not m.is_commutative()

    def test_identity(self):
        m = ArchetypeMatrix(Factor.parse("Z0"), 3)
        x = m.coerce([[1, 2, 0], [0, 1, 4], [5, 0, 1]])
        assert m.mul(m.one(), x) == x == m.mul(x, m.one())
        assert m.name == "M3(Z0)"


class TestGroupAlgebras:
    def test_convolution(self):
        a = ArchetypeGroupAlgebra(Factor.parse("Z0"), cyclic_group(2))
        x = a.coerce({"1": 1, "g": 1})
        assert a.render(a.mul(x, x)) == {"1": "2", "g": "2"}
        assert a.mul(a.one(), x) == x

    def test_zero_divisor_in_characteristic_two(self):
        a = ArchetypeGroupAlgebra(Factor.parse("Z2"), cyclic_group(2))
        x = a.coerce({"1": 1, "g": 1})
        assert a.mul(x, x) == a.zero()
        assert element_key(a.render(a.zero())) == "0"


def test_element_keys():
    assert element_key({"e": "1", "g": "2"}) == "1*e+2*g"
    assert element_key([["1", "0"], ["0", "1"]]) == "1,0;0,1"
    assert element_key(["3", "0"]) == "(3,0)"
