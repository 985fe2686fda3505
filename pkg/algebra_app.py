"""
Semiring Engine - Flask Web Application
JSON API over the validate, classify, certify, hasse and claims commands
"""

import logging

from flask import Flask, request, jsonify
from flask_cors import CORS
from werkzeug.exceptions import HTTPException

from algebra_models import AlgebraError, Certificate, CapExceeded, PropertyName
from claims_corpus import run_claims
from cli_reporting import (
    EXIT_INCOMPLETE, cmd_validate, cmd_classify, cmd_certify, cmd_hasse, build_subject,
)
from engine_config import engine_config, setup_logging
from lattice_catalog import get_lattice_record, search_lattices
from semivector import SpaceProperty
from smarandache_certifier import PROPERTY_CATALOG, verify_certificate

logger = logging.getLogger(__name__)

app = Flask(__name__)
CORS(app)

# command reports use exit codes; map them onto HTTP statuses
STATUS_BY_EXIT = {0: 200, 1: 200, 2: 200, 3: 400}


@app.errorhandler(AlgebraError)
def handle_algebra_error(error):
    status = 200 if isinstance(error, CapExceeded) else 400
    body = {'success': False, 'error': error.to_dict()}
    if isinstance(error, CapExceeded):
        body['exit_code'] = EXIT_INCOMPLETE
    return jsonify(body), status


@app.errorhandler(Exception)
def handle_server_error(error):
    if isinstance(error, HTTPException):
        return jsonify({'success': False, 'error': error.name, 'details': error.description}), error.code
    logger.exception("unhandled error")
    return jsonify({
        'success': False,
        'error': 'Internal server error',
        'details': str(error),
        'type': 'server_error'
    }), 500


def _body():
    data = request.get_json(silent=True)
    if not isinstance(data, dict):
        raise AlgebraError("request body must be a JSON object")
    return data


def _spec(data):
    if 'spec' not in data:
        raise AlgebraError("missing field 'spec'", path="spec")
    return data['spec']


def _respond(report):
    return jsonify(report), STATUS_BY_EXIT.get(report.get('exit_code', 0), 200)


@app.route('/health')
def health():
    return jsonify({'success': True, 'status': 'ok', 'settings': engine_config.to_dict()})


@app.route('/api/validate', methods=['POST'])
def api_validate():
    """Axiom report for a structure spec"""
    return _respond(cmd_validate(_spec(_body())))


@app.route('/api/classify', methods=['POST'])
def api_classify():
    data = _body()
    return _respond(cmd_classify(_spec(data), cap=data.get('cap')))


@app.route('/api/certify', methods=['POST'])
def api_certify():
    """Search for or verify a certificate"""
    data = _body()
    if 'property' not in data:
        raise AlgebraError("missing field 'property'", path="property")
    report = cmd_certify(_spec(data), data['property'], witness=data.get('witness'), cap=data.get('cap'),
                         subset=data.get('subset'), side=data.get('side', 'two_sided'),
                         semifield=data.get('semifield'), options=data.get('options'))
    return _respond(report)


@app.route('/api/certificates/verify', methods=['POST'])
def api_verify_certificate():
    """Replay a stored certificate against the subject it names"""
    data = _body()
    if 'certificate' not in data:
        raise AlgebraError("missing field 'certificate'", path="certificate")
    stored = data['certificate']
    try:
        certificate = Certificate.from_dict(stored)
    except TypeError as e:
        raise AlgebraError(f"malformed certificate: {e}", path="certificate")
    PropertyName.parse(certificate.property)
    replayed = verify_certificate(build_subject(_spec(data)), certificate)
    code_matches = stored.get('verification_code') in (None, replayed.generate_verification_code())
    return jsonify({
        'success': replayed.holds and code_matches,
        'holds': replayed.holds,
        'verification_code_matches': code_matches,
        'certificate': replayed.to_dict()
    })


@app.route('/api/hasse', methods=['POST'])
def api_hasse():
    return _respond(cmd_hasse(_spec(_body())))


@app.route('/api/properties')
def api_properties():
    spaces = [{'name': p.value, 'needs_subset': p != SpaceProperty.S_LINEAR_MAP, 'space': True}
              for p in SpaceProperty]
    return jsonify({'success': True, 'properties': PROPERTY_CATALOG + spaces})


@app.route('/api/lattices')
def api_lattices():
    distributive = request.args.get('distributive')
    if distributive is not None:
        distributive = distributive.lower() == 'true'
    records = search_lattices(distributive=distributive, lattices_only=False)
    return jsonify({
        'success': True,
        'lattices': [{'name': r['name'], 'description': r['description'], 'is_lattice': r['is_lattice'],
                      'order': len(r['elements'])} for r in records]
    })


@app.route('/api/lattices/<name>')
def api_lattice(name):
    record = get_lattice_record(name)
    if record is None:
        return jsonify({'success': False, 'error': f"no catalog lattice named {name!r}"}), 404
    return jsonify({'success': True, 'lattice': record})


@app.route('/api/claims')
def api_claims():
    """Replay the claims corpus, optionally filtered by an id glob"""
    ledger = run_claims(request.args.get('filter'), request.args.get('workers', type=int))
    failed = [entry['id'] for entry in ledger if not entry['passed']]
    return jsonify({'success': not failed, 'total': len(ledger), 'passed': len(ledger) - len(failed),
                    'failed': failed, 'ledger': ledger})


if __name__ == '__main__':
    setup_logging()
    print("Starting Semiring Engine API...")
    print("Visit http://localhost:5000/health to check the service")
    app.run(debug=False, host='0.0.0.0', port=5000)
