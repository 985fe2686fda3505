import json

import pytest

from algebra_models import MissingParam, TypeMismatch, UnknownField, UnknownKind
from cli_reporting import (
    EXIT_FALSE, EXIT_INCOMPLETE, EXIT_INPUT, EXIT_OK, StructureSpec, build_subject, cmd_certify,
    cmd_classify, cmd_hasse, cmd_validate, main, parse_spec, serialize_spec,
)
from constructions import GroupSemiring
from finite_structures import Structure
from semivector import TupleSemivectorSpace

GROUP_SEMIRING = {
    "kind": "group_semiring",
    "coeff": {"kind": "chain_lattice", "n": 2},
    "carrier": {"kind": "symmetric_group", "n": 3},
}

XOR_MAX = {"kind": "table", "labels": ["0", "1"], "add": [[0, 1], [1, 0]], "mul": [[0, 1], [1, 1]]}


def write_json(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


class TestParseSpec:
    def test_nested_spec(self):
        spec = parse_spec(json.dumps(GROUP_SEMIRING))
        assert spec.kind == "group_semiring"
        assert isinstance(spec.params['coeff'], StructureSpec)
        assert spec.params['carrier'].params == {'n': 3}

    def test_canonical_text_is_stable(self):
        spec = parse_spec(GROUP_SEMIRING)
        text = serialize_spec(spec)
        assert text == serialize_spec(parse_spec(text))
        assert " " not in text
        assert text.startswith('{"carrier":')

    @pytest.mark.parametrize("data,error,path", [
        ({}, MissingParam, "kind"),
        ({"kind": "hypercube"}, UnknownKind, "kind"),
        ({"kind": "zmod"}, MissingParam, "n"),
        ({"kind": "zmod", "n": 1}, TypeMismatch, "n"),
        ({"kind": "zmod", "n": True}, TypeMismatch, "n"),
        ({"kind": "zmod", "n": 4, "m": 2}, UnknownField, "m"),
        ({"kind": "group_semiring", "coeff": {"kind": "chain_lattice"}, "carrier": {"kind": "cyclic_group", "n": 2}},
         MissingParam, "coeff.n"),
        ({"kind": "direct_product", "factors": ["Z0", 3]}, TypeMismatch, "factors.1"),
        ({"kind": "table", "labels": ["0"], "add": [[0]], "mul": [["0"]]}, TypeMismatch, "mul.0"),
        ({"kind": "lattice", "elements": ["0", "1"]}, MissingParam, "catalog"),
    ])
    def test_errors_carry_a_path(self, data, error, path):
        with pytest.raises(error) as info:
            parse_spec(data)
        assert info.value.path == path

    def test_invalid_json(self):
        with pytest.raises(TypeMismatch) as info:
            parse_spec('{"kind": ')
        assert "line 1" in info.value.message


class TestBuildSubject:
    def test_builders(self):
        assert isinstance(build_subject(GROUP_SEMIRING), GroupSemiring)
        assert isinstance(build_subject({"kind": "tuple_space", "tags": ["Z", "Z0"]}), TupleSemivectorSpace)
        lattice = build_subject({"kind": "lattice", "catalog": "pentagon"})
        assert isinstance(lattice, Structure) and lattice.n == 5

    def test_nested_group_semiring_coefficients_are_materialized(self):
        product = build_subject({"kind": "direct_product", "factors": [
            {"kind": "group_semiring", "coeff": {"kind": "chain_lattice", "n": 2},
             "carrier": {"kind": "cyclic_group", "n": 2}},
            {"kind": "chain_lattice", "n": 2}]})
        assert isinstance(product, Structure)
        assert product.n == 8


class TestCommands:
    def test_validate_group_semiring(self):
        report = cmd_validate(GROUP_SEMIRING)
        assert report['success'] and report['exit_code'] == EXIT_OK

    def test_validate_rejects_a_failed_axiom(self):
        report = cmd_validate(XOR_MAX)
        assert report['exit_code'] == EXIT_FALSE
        assert report['valid'] is False
        assert report['violation']['error'] == "AxiomViolation"

    def test_input_errors_exit_with_three(self):
        report = cmd_validate({"kind": "zmod", "n": 0})
        assert report['exit_code'] == EXIT_INPUT
        assert report['error']['error'] == "TypeMismatch"
        assert report['error']['path'] == "n"

    def test_classify_zmod(self):
        report = cmd_classify({"kind": "zmod", "n": 10})
        assert report['characteristic'] == "finite:10"
        assert report['semifield']['holds'] is False

    def test_classify_chain(self):
        report = cmd_classify({"kind": "chain_lattice", "n": 3})
        assert report['characteristic'] == "undefined"
        assert report['semifield']['holds'] is True

    def test_oversized_materialization_is_incomplete(self):
        report = cmd_classify({"kind": "matrix", "base": {"kind": "chain_lattice", "n": 3}, "dim": 3})
        assert report['exit_code'] == EXIT_INCOMPLETE
        assert report['error']['error'] == "CapExceeded"

    def test_certify_found(self):
        report = cmd_certify({"kind": "chain_lattice", "n": 5}, "s-semiring-1")
        assert report['exit_code'] == EXIT_OK
        assert len(report['certificate']['verification_code']) == 12

    def test_certify_not_found_is_false(self):
        report = cmd_certify({"kind": "chain_lattice", "n": 2}, "s-semiring-1")
        assert report['exit_code'] == EXIT_FALSE
        assert report['found'] is False
        assert report['not_found']['complete'] is True

    def test_certify_accepts_a_certificate_as_witness(self):
        spec = {"kind": "zmod", "n": 10}
        first = cmd_certify(spec, "s-unit", witness={"x": "3", "y": "7", "a": "9", "b": "9"})
        again = cmd_certify(spec, "s-unit", witness=first['certificate'])
        assert again['certificate']['verification_code'] == first['certificate']['verification_code']

    def test_certify_space_property(self):
        report = cmd_certify({"kind": "tuple_space", "tags": ["Q0", "Z0", "Z"]}, "s-subsemivector",
                             subset=["all", "all", "multiples:2"])
        assert report['exit_code'] == EXIT_OK
        assert report['certificate']['mode'] == "verify-grid"

    def test_space_property_needs_a_space(self):
        report = cmd_certify({"kind": "zmod", "n": 4}, "s-basis")
        assert report['exit_code'] == EXIT_INPUT
        assert report['error']['error'] == "PreconditionFailed"

    def test_unknown_property(self):
        report = cmd_certify({"kind": "zmod", "n": 4}, "s-bogus")
        assert report['exit_code'] == EXIT_INPUT
        assert report['error']['error'] == "UnknownProperty"

    def test_hasse(self):
        report = cmd_hasse({"kind": "lattice", "catalog": "diamond"})
        assert report['boolean']['holds'] is False
        assert report['modular']['holds'] is True
        assert report['dot'].startswith('digraph "hasse" {')


class TestMain:
    def test_validate_from_file(self, tmp_path, capsys):
        code = main(["validate", write_json(tmp_path / "z6.json", {"kind": "zmod", "n": 6})])
        assert code == EXIT_OK
        out = json.loads(capsys.readouterr().out)
        assert out['structure']['order'] == 6

    def test_missing_file(self, tmp_path, capsys):
        assert main(["validate", str(tmp_path / "absent.json")]) == EXIT_INPUT
        assert "spec file not found" in capsys.readouterr().err

    def test_spec_that_is_not_utf8(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_bytes(b'{"kind": "zmod", "n": 5, "name": "\xff\xfe"}')
        assert main(["validate", str(path)]) == EXIT_INPUT
        assert "TypeMismatch" in capsys.readouterr().out

    def test_witness_that_is_not_utf8(self, tmp_path):
        spec = write_json(tmp_path / "z10.json", {"kind": "zmod", "n": 10})
        witness = tmp_path / "w.json"
        witness.write_bytes(b'{"x": "\xff"}')
        assert main(["certify", spec, "--property", "s-unit", "--witness", str(witness)]) == EXIT_INPUT

    def test_certify_with_witness_file(self, tmp_path, capsys):
        spec = write_json(tmp_path / "z10.json", {"kind": "zmod", "n": 10})
        witness = write_json(tmp_path / "w.json", {"x": "3", "y": "7", "a": "9", "b": "9"})
        code = main(["certify", spec, "--property", "s-unit", "--witness", witness])
        assert code == EXIT_OK
        captured = capsys.readouterr()
        assert json.loads(captured.out)['certificate']['holds'] is True
        assert "certify s-unit: holds=True" in captured.err

    def test_certify_subset_argument(self, tmp_path):
        spec = write_json(tmp_path / "c5.json", {"kind": "chain_lattice", "n": 5})
        assert main(["certify", spec, "--property", "s-ideal", "--subset", '["0","a1","a2","a3","1"]']) == EXIT_OK
        assert main(["certify", spec, "--property", "s-ideal", "--subset", "[0,"]) == EXIT_INPUT

    def test_hasse_writes_dot(self, tmp_path):
        spec = write_json(tmp_path / "c2.json", {"kind": "chain_lattice", "n": 2, "name": "two"})
        out = tmp_path / "two.dot"
        assert main(["hasse", spec, "-o", str(out)]) == EXIT_OK
        assert out.read_text(encoding="utf-8") == (
            'digraph "two" {\n\trankdir=BT;\n\t"0" [label="0"];\n\t"1" [label="1"];\n\t"0" -> "1";\n}\n')
