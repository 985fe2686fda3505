import pytest

from algebra_app import app

Z10 = {"kind": "zmod", "n": 10}
S_UNIT = {"x": "3", "y": "7", "a": "9", "b": "9"}


@pytest.fixture
def client():
    app.config['TESTING'] = True
    with app.test_client() as client:
        yield client


def test_health(client):
    response = client.get('/health')
    assert response.status_code == 200
    assert response.get_json()['settings']['materialize_cap'] == 4096


class TestCommands:
    def test_validate(self, client):
        response = client.post('/api/validate', json={'spec': {"kind": "chain_lattice", "n": 3}})
        assert response.status_code == 200
        assert response.get_json()['valid'] is True

    def test_bad_spec_is_a_client_error(self, client):
        response = client.post('/api/validate', json={'spec': {"kind": "hypercube"}})
        assert response.status_code == 400
        assert response.get_json()['error']['error'] == "UnknownKind"

    def test_body_must_be_json(self, client):
        response = client.post('/api/validate', data="not json", content_type="text/plain")
        assert response.status_code == 400

    def test_classify(self, client):
        body = client.post('/api/classify', json={'spec': Z10}).get_json()
        assert body['characteristic'] == "finite:10"

    def test_certify(self, client):
        body = client.post('/api/certify', json={'spec': Z10, 'property': "s-unit", 'witness': S_UNIT}).get_json()
        assert body['success']
        assert body['certificate']['holds'] is True

    def test_certify_needs_a_property(self, client):
        response = client.post('/api/certify', json={'spec': Z10})
        assert response.status_code == 400
        assert response.get_json()['error']['path'] == "property"

    def test_not_found_is_reported_not_raised(self, client):
        response = client.post('/api/certify', json={'spec': {"kind": "chain_lattice", "n": 2},
                                                     'property': "s-semiring-1"})
        assert response.status_code == 200
        assert response.get_json()['exit_code'] == 1

    def test_hasse(self, client):
        body = client.post('/api/hasse', json={'spec': {"kind": "power_set", "k": 2}}).get_json()
        assert body['boolean']['holds'] is True
        assert len(body['diagram']['covers']) == 4


class TestCertificateReplay:
    def stored(self, client):
        return client.post('/api/certify', json={'spec': Z10, 'property': "s-unit",
                                                 'witness': S_UNIT}).get_json()['certificate']

    def test_stored_certificate_replays(self, client):
        body = client.post('/api/certificates/verify',
                           json={'spec': Z10, 'certificate': self.stored(client)}).get_json()
        assert body['success'] and body['verification_code_matches']

    def test_edited_witness_is_caught(self, client):
        certificate = self.stored(client)
        certificate['witness']['b'] = "3"
        body = client.post('/api/certificates/verify', json={'spec': Z10, 'certificate': certificate}).get_json()
        assert not body['success']
        assert body['holds'] is False

    def test_missing_certificate(self, client):
        assert client.post('/api/certificates/verify', json={'spec': Z10}).status_code == 400


class TestCatalog:
    def test_properties(self, client):
        names = {p['name'] for p in client.get('/api/properties').get_json()['properties']}
        assert {"s-semiring-1", "s-unit", "s-basis", "s-linear-map"} <= names

    def test_lattices(self, client):
        lattices = client.get('/api/lattices').get_json()['lattices']
        assert "pentagon" in {r['name'] for r in lattices}

    def test_non_distributive_filter(self, client):
        lattices = client.get('/api/lattices?distributive=false').get_json()['lattices']
        names = {r['name'] for r in lattices}
        assert {"pentagon", "diamond"} <= names
        assert "square" not in names

    def test_lattice_record(self, client):
        assert client.get('/api/lattices/diamond').get_json()['lattice']['modular'] is True
        assert client.get('/api/lattices/nonesuch').status_code == 404

    def test_claims(self, client):
        body = client.get('/api/claims?filter=lattice-chain-*').get_json()
        assert body['success']
        assert body['total'] == body['passed'] == 7
