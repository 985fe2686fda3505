import json

import pytest

from algebra_models import SpecError
from claims_corpus import CHECKS, Claim, load_claims, replay_claim, run_claims
from cli_reporting import cmd_claims, main


def strip_timing(ledger):
    return [{k: v for k, v in entry.items() if k != 'seconds'} for entry in ledger]


@pytest.fixture(scope="module")
def claims():
    return load_claims()


class TestLedger:
    def test_corpus_size(self, claims):
        assert len(claims) >= 60

    def test_ids_are_unique(self, claims):
        ids = [c.id for c in claims]
        assert len(ids) == len(set(ids))

    def test_every_check_is_known(self, claims):
        assert {c.check for c in claims} <= set(CHECKS)

    def test_duplicate_ids_are_rejected(self, tmp_path):
        record = {"id": "dup", "check": "order", "expected": 2, "subject": {"kind": "zmod", "n": 2}}
        path = tmp_path / "claims.json"
        path.write_text(json.dumps({"claims": [record, record]}), encoding="utf-8")
        with pytest.raises(SpecError):
            load_claims(str(path))

    def test_missing_expected(self):
        with pytest.raises(SpecError):
            Claim.from_dict({"id": "x", "check": "order"})


class TestReplay:
    @pytest.mark.slow
    def test_every_claim_passes(self):
        ledger = run_claims()
        failed = [(e['id'], e['observed'], e.get('error')) for e in ledger if not e['passed']]
        assert failed == []

    def test_filter_glob(self):
        ledger = run_claims("lattice-chain-*")
        assert ledger
        assert all(e['id'].startswith("lattice-chain-") for e in ledger)

    def test_order_and_workers_do_not_change_the_ledger(self, claims):
        subset = [c for c in claims if c.id.startswith("lattice-")]
        forward = run_claims(workers=1, claims=subset)
        backward = run_claims(workers=4, claims=list(reversed(subset)))
        assert strip_timing(forward) == strip_timing(backward)
        assert [e['id'] for e in forward] == sorted(c.id for c in subset)

    def test_unknown_check_is_a_failed_entry(self):
        result = replay_claim(Claim("odd", "no_such_check", True))
        assert not result.passed
        assert result.error['error'] == "UnknownCheck"

    def test_engine_errors_are_recorded(self):
        claim = Claim.from_dict({"id": "not-a-lattice", "check": "atoms", "expected": [],
                                 "subject": {"kind": "zmod", "n": 4}})
        result = replay_claim(claim)
        assert not result.passed
        assert result.error['error'] == "PreconditionFailed"

    def test_crashing_check_does_not_stop_the_ledger(self):
        broken = Claim("broken-args", "scalar_choices", [])
        order = Claim.from_dict({"id": "z6-order", "check": "order", "expected": 6,
                                 "subject": {"kind": "zmod", "n": 6}})
        ledger = run_claims(workers=2, claims=[broken, order])
        assert [e['id'] for e in ledger] == ["broken-args", "z6-order"]
        assert ledger[0]['passed'] is False
        assert ledger[0]['error']['error'] == "KeyError"
        assert ledger[1]['passed'] is True

    def test_wrong_expectation_fails(self):
        claim = Claim.from_dict({"id": "z6-order", "check": "order", "expected": 7,
                                 "subject": {"kind": "zmod", "n": 6}})
        result = replay_claim(claim)
        assert not result.passed
        assert result.observed == 6


class TestClaimsCommand:
    def test_report(self):
        report = cmd_claims("lattice-pentagon-*")
        assert report['success']
        assert report['total'] == report['passed'] >= 1
        assert report['failed'] == []

    def test_main(self, capsys):
        assert main(["claims", "--filter", "lattice-diamond-*", "--workers", "2"]) == 0
        assert "claims: 1/1 passed" in capsys.readouterr().err
