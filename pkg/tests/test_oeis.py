import pytest

from cylkings import oeis, oracle
from cylkings.oeis import (
    FIXTURES, bfile_url, default_cache_dir, load_sequence, parse_bfile,
    render_bfile,
)


def test_bfile_roundtrip():
    text = "# comment\n\n0 1\n1 1\n2 0\n"
    terms = parse_bfile(text)
    assert terms == {0: 1, 1: 1, 2: 0}
    assert parse_bfile(render_bfile(terms)) == terms
    with pytest.raises(ValueError):
        parse_bfile("17\n")


def test_url():
    assert bfile_url("A002464") == "https://oeis.org/A002464/b002464.txt"


def test_fixtures_match_engine():
    for n in range(1, 12):
        assert FIXTURES["A002464"][n] == oracle.count_kings(n)
        assert FIXTURES["A002493"][n] == oracle.count_cyl_kings(n)
    assert FIXTURES["A002464"][0] == 1


def test_unknown_id():
    with pytest.raises(KeyError):
        load_sequence("A000045")


def test_offline_uses_fixture(tmp_path):
    seq = load_sequence("A002493", offline=True, cache_dir=tmp_path)
    assert seq.source == "embedded-fixture"
    assert seq[5] == 10


def test_cache_preferred_when_online(tmp_path):
    (tmp_path / "b002464.txt").write_text("4 2\n5 14\n")
    seq = load_sequence("A002464", offline=False, cache_dir=tmp_path)
    assert seq.source == "cached"
    assert seq.terms == {4: 2, 5: 14}


def test_network_failure_falls_back(tmp_path, monkeypatch):
    def boom(*a, **k):
        raise OSError("no network")
    monkeypatch.setattr(oeis.urllib.request, "urlopen", boom)
    seq = load_sequence("A002493", offline=False, cache_dir=tmp_path / "c")
    assert seq.source == "embedded-fixture"


def test_cache_dir_precedence(monkeypatch, tmp_path):
    monkeypatch.setenv("CYLKINGS_CACHE_DIR", str(tmp_path / "env"))
    assert default_cache_dir() == tmp_path / "env"
    assert default_cache_dir(str(tmp_path / "flag")) == tmp_path / "flag"
    monkeypatch.delenv("CYLKINGS_CACHE_DIR")
    assert default_cache_dir().name == "cylkings"
