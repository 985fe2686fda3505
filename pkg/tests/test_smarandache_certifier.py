import random

import pytest

from algebra_models import (
    Certificate, MissingParam, NotFound, PreconditionFailed, PropertyName, UnknownProperty,
)
from archetypes import archetype_from_tags
from claims_corpus import load_claims
from cli_reporting import build_subject
from constructions import chain_lattice, zmod_ring
from finite_structures import Structure, validate_semiring
from smarandache_certifier import (
    PROPERTY_CATALOG, as_subject, certify, verify_certificate, mutate_witness, is_semifield, is_s_commutative,
    is_prime_semifield, find_s_zero_divisors, find_s_units, find_s_idempotents,
)

PROPERTY_NAMES = {p.value for p in PropertyName}


def failed_clauses(cert):
    return [c.clause for c in cert.transcript if not c.passed]


class TestSemifields:
    def test_chains_are_semifields(self, c5):
        assert is_semifield(c5)

    def test_z10_is_not_strict(self, z10):
        verdict = is_semifield(z10)
        assert not verdict
        assert verdict.reason == "not strict"

    def test_prime_semifields(self, c2, c5):
        assert is_prime_semifield(c2)
        verdict = is_prime_semifield(c5)
        assert not verdict
        assert verdict.reason == "proper semifield"

    def test_z0_is_prime(self):
        assert is_prime_semifield(archetype_from_tags(["Z0"]))
        assert not is_prime_semifield(archetype_from_tags(["Q0"]))

    def test_prime_semifield_certificate(self, c2):
        cert = certify(c2, "prime-semifield")
        assert cert.holds and cert.verified

    def test_longer_chain_is_not_prime(self, c5):
        with pytest.raises(NotFound) as info:
            certify(c5, "prime-semifield")
        assert info.value.complete


class TestSearches:
    def test_chain_holds_the_two_element_semifield(self, c5):
        cert = certify(c5, "s-semiring-1")
        assert cert.holds
        assert cert.witness['semifield']['subset'] == ["0", "1"]
        assert cert.witness['semifield']['zero'] == "0"
        assert cert.mode == "search"

    def test_two_element_chain_has_no_proper_semifield(self, c2):
        with pytest.raises(NotFound):
            certify(c2, "s-semiring-1")

    def test_field_inside_z10_times_z0(self):
        cert = certify(archetype_from_tags(["Z10", "Z0"]), "s-semiring-2")
        assert cert.holds
        assert cert.witness['field']['one'] == ["6", "0"]

    def test_archetype_certificates_are_grid_replays(self):
        cert = certify(archetype_from_tags(["Z0"]), "s-semifield-1")
        assert cert.holds
        assert cert.mode == "verify-grid"
        assert any("grid" in note for note in cert.notes)

    def test_q0_holds_no_k_semi_algebra(self):
        with pytest.raises(NotFound):
            certify(archetype_from_tags(["Q0"]), "s-semifield-1")

    def test_finite_rings_hold_no_semiring(self):
        with pytest.raises(NotFound):
            certify(zmod_ring(6), "s-anti-semiring")

    def test_z_holds_the_semiring_z0(self):
        assert certify(archetype_from_tags(["Z"]), "s-anti-semiring").holds

    def test_weak_semifield_chain(self):
        cert = certify(chain_lattice(4), "s-weak-semifield")
        assert cert.holds
        assert set(cert.witness) == {'semifield', 'algebra'}

    def test_subset_properties_need_a_subset(self, c5):
        with pytest.raises(MissingParam):
            certify(c5, "s-subsemiring")

    def test_subset_labels_are_checked(self, c5):
        with pytest.raises(PreconditionFailed):
            certify(c5, "s-ideal", subset=["0", "nope"])

    def test_unknown_property(self, c5):
        with pytest.raises(UnknownProperty):
            certify(c5, "s-nonsense")

    def test_ideal_in_chain(self, c5):
        cert = certify(c5, "s-ideal", subset=["0", "a1", "a2", "a3", "1"])
        assert cert.holds

    def test_s_commutative(self, c5, z10):
        assert is_s_commutative(c5)
        assert not is_s_commutative(z10)


class TestElementProperties:
    def test_s_units_of_z10(self, z10):
        found = find_s_units(z10)
        # 3 and 7 through 9 · 9 = 1
        assert [(c.witness["x"], c.witness["y"]) for c in found] == [("3", "7"), ("7", "3")]
        assert all(c.holds for c in found)

    def test_s_unit_needs_identity(self):
        s = validate_semiring(["0", "x"], [[0, 1], [1, 1]], [[0, 0], [0, 0]])
        with pytest.raises(PreconditionFailed):
            find_s_units(s)

    def test_s_zero_divisor_in_z12(self, z12):
        cert = certify(z12, "s-zero-divisor", witness={"a": "6", "b": "6", "x": "2", "y": "4"})
        assert cert.holds
        assert cert.mode == "verify"
        assert find_s_zero_divisors(z12, limit=1)

    def test_chain_has_no_s_zero_divisor(self, c5):
        with pytest.raises(NotFound):
            certify(c5, "s-zero-divisor")

    def test_s_idempotent_in_z10(self, z10):
        cert = certify(z10, "s-idempotent", witness={"a": "1", "b": "9"})
        assert cert.holds
        assert find_s_idempotents(z10)

    def test_s_idempotent_needs_a_distinct_root(self, z10):
        cert = certify(z10, "s-idempotent", witness={"a": "5", "b": "5"})
        assert not cert.holds
        assert "b differs from a" in failed_clauses(cert)


class TestVerification:
    def test_verify_s_unit(self, z10):
        cert = certify(z10, "s-unit", witness={"x": "3", "y": "7", "a": "9", "b": "9"})
        assert cert.holds
        assert cert.verified

    def test_bad_auxiliary_element(self, z10):
        cert = certify(z10, "s-unit", witness={"x": "3", "y": "7", "a": "9", "b": "3"})
        assert not cert.holds
        assert failed_clauses(cert) == ["a, b lie outside {x, y, 1}", "a·b = 1"]

    def test_unknown_label_fails_cleanly(self, z10):
        cert = certify(z10, "s-unit", witness={"x": "3", "y": "seven", "a": "9", "b": "9"})
        assert not cert.holds
        assert failed_clauses(cert) == ["x, y, a, b belong to the subject"]

    def test_archetype_zero_divisor(self):
        subject = archetype_from_tags(["Z0"] * 4)
        witness = {"a": ["0", "0", "4", "2"], "b": ["5", "0", "0", "0"], "x": ["2", "8", "0", "0"],
                   "y": ["0", "1", "0", "0"]}
        assert certify(subject, "s-zero-divisor", witness=witness).holds
        witness['y'] = ["0", "0", "0", "0"]
        assert not certify(subject, "s-zero-divisor", witness=witness).holds

    def test_tampered_tables_are_caught(self, c5):
        cert = certify(c5, "s-semiring-1")
        cert.witness['semifield']['add'][0][1] = "a2"
        replayed = verify_certificate(c5, cert)
        assert not replayed.holds
        assert "semifield induced tables match the subject" in failed_clauses(replayed)


class TestCertificates:
    def test_verification_code_is_stable(self, c5):
        first, second = certify(c5, "s-semiring-1"), certify(c5, "s-semiring-1")
        code = first.generate_verification_code()
        assert len(code) == 12 and code == code.upper()
        assert code == second.generate_verification_code()
        assert first.to_dict()['verification_code'] == code

    def test_code_depends_on_the_witness(self, z10):
        a = certify(z10, "s-unit", witness={"x": "3", "y": "7", "a": "9", "b": "9"})
        b = certify(z10, "s-unit", witness={"x": "7", "y": "3", "a": "9", "b": "9"})
        assert a.generate_verification_code() != b.generate_verification_code()

    def test_dict_round_trip(self, c5):
        cert = certify(c5, "s-semiring-1")
        assert Certificate.from_dict(cert.to_dict()) == cert

    def test_catalog_covers_every_property(self):
        assert {entry['name'] for entry in PROPERTY_CATALOG} == PROPERTY_NAMES


POSITIVE_CLAIMS = [c for c in load_claims()
                   if c.check in ("certify", "verify") and c.expected == "holds"
                   and c.args.get('property') in PROPERTY_NAMES]

# the subject itself is the witness, so there is nothing to mutate
WHOLE_SUBJECT_PROPERTIES = {"semifield", "prime-semifield"}


def _positive_certificate(claim):
    subject = as_subject(build_subject(claim.subject))
    a = claim.args
    cert = certify(subject, a['property'], witness=a.get('witness'), subset=a.get('subset'),
                   side=a.get('side', "two_sided"), semifield=a.get('semifield'))
    assert cert.holds
    return subject, cert


def test_positive_claims_cover_both_subject_families():
    kinds = {isinstance(as_subject(build_subject(c.subject)), Structure) for c in POSITIVE_CLAIMS}
    assert kinds == {True, False}


@pytest.mark.slow
@pytest.mark.parametrize("claim", POSITIVE_CLAIMS, ids=lambda c: c.id)
def test_mutated_witnesses_fail(claim):
    subject, cert = _positive_certificate(claim)
    if claim.args['property'] in WHOLE_SUBJECT_PROPERTIES:
        assert cert.witness == {}
        with pytest.raises(PreconditionFailed):
            mutate_witness(cert, subject, random.Random(7))
        return
    rng = random.Random(7)
    for _ in range(20):
        mutated = mutate_witness(cert, subject, rng)
        assert mutated.witness != cert.witness
        assert not verify_certificate(subject, mutated).holds


class TestArchetypeMutations:
    def test_non_invertible_leaves_the_semiring(self):
        z = archetype_from_tags(["Z"])
        cert = certify(z, "s-anti-semiring")
        rng = random.Random(3)
        for _ in range(20):
            mutated = mutate_witness(cert, z, rng)
            assert not verify_certificate(z, mutated).holds

    def test_descriptor_is_mutated(self):
        z0 = archetype_from_tags(["Z0"])
        cert = certify(z0, "s-semifield-1")
        mutated = mutate_witness(cert, z0, random.Random(0))
        assert mutated.witness['algebra']['subset']['components'] == ["zero"]
        assert "algebra has a nonzero element" in failed_clauses(verify_certificate(z0, mutated))

    def test_bare_elements_go_to_zero(self):
        subject = archetype_from_tags(["Z0"] * 4)
        witness = {"a": ["0", "0", "4", "2"], "b": ["5", "0", "0", "0"], "x": ["2", "8", "0", "0"],
                   "y": ["0", "1", "0", "0"]}
        cert = certify(subject, "s-zero-divisor", witness=witness)
        mutated = mutate_witness(cert, subject, random.Random(1))
        changed = [k for k in witness if mutated.witness[k] != witness[k]]
        assert len(changed) == 1
        assert mutated.witness[changed[0]] == ["0", "0", "0", "0"]
