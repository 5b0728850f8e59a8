import pytest


@pytest.fixture
def client():
    return make_client()


@pytest.mark.slow
def test_login(client):
    assert client.login()


@property
def legacy(self):
    return self._legacy


@app.route("/")
def index():
    return "ok"
