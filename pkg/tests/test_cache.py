import hashlib

import pytest

from flagheight.cache import (
    MAGIC,
    cache_cosets,
    cache_path,
    read_cosets,
    write_cosets,
)
from flagheight.rootsys import build_root_system
from flagheight.weyl import coset_representatives


@pytest.fixture(scope="module")
def a3():
    return build_root_system("A3")


def test_round_trip(tmp_path, a3):
    cosets = coset_representatives(a3, set())
    path = cache_path(str(tmp_path), a3, set())
    write_cosets(path, a3, cosets)
    loaded = read_cosets(path, a3, set())
    assert loaded is not None
    assert [w.word for w in loaded.reps] == [w.word for w in cosets.reps]
    assert [w.matrix for w in loaded.reps] == [w.matrix for w in cosets.reps]


def test_cache_cosets_writes_then_hits(tmp_path, a3):
    c1 = cache_cosets(str(tmp_path), a3, {0, 1})
    assert cache_path(str(tmp_path), a3, {0, 1})
    c2 = cache_cosets(str(tmp_path), a3, {0, 1})
    assert [w.word for w in c1.reps] == [w.word for w in c2.reps]
    assert len(c1.reps) == 4


def test_d4_example(tmp_path):
    rs = build_root_system("D4")
    cosets = cache_cosets(str(tmp_path), rs, {1, 2, 3})
    assert len(cosets.reps) == 8


def test_missing_file(tmp_path, a3):
    assert read_cosets(str(tmp_path / "nope.bin"), a3, set()) is None


def test_bad_magic(tmp_path, a3):
    path = cache_path(str(tmp_path), a3, set())
    write_cosets(path, a3, coset_representatives(a3, set()))
    blob = open(path, "rb").read()
    open(path, "wb").write(b"XXXXXXXX" + blob[8:])
    assert read_cosets(path, a3, set()) is None


def test_corrupt_payload_detected(tmp_path, a3):
    path = cache_path(str(tmp_path), a3, set())
    write_cosets(path, a3, coset_representatives(a3, set()))
    blob = bytearray(open(path, "rb").read())
    blob[-1] ^= 0xFF
    open(path, "wb").write(bytes(blob))
    assert read_cosets(path, a3, set()) is None
    # cache_cosets falls back to recomputation
    cosets = cache_cosets(str(tmp_path), a3, set())
    assert len(cosets.reps) == 24


def test_stale_version_is_miss(tmp_path, a3, monkeypatch):
    import flagheight.cache as cache_mod

    path = cache_path(str(tmp_path), a3, set())
    write_cosets(path, a3, coset_representatives(a3, set()))
    monkeypatch.setattr(cache_mod, "CACHE_VERSION", "999")
    assert read_cosets(path, a3, set()) is None


def test_wrong_group_is_miss(tmp_path, a3):
    b2 = build_root_system("A1xA1xA1")
    path = cache_path(str(tmp_path), a3, set())
    write_cosets(path, a3, coset_representatives(a3, set()))
    assert read_cosets(path, b2, set()) is None


def test_magic_is_stable():
    assert len(MAGIC) == 8
    assert MAGIC == b"FLGHCST\x01"


def test_content_hash_is_sha256(tmp_path, a3):
    path = cache_path(str(tmp_path), a3, set())
    write_cosets(path, a3, coset_representatives(a3, set()))
    blob = open(path, "rb").read()
    assert blob[8:40] == hashlib.sha256(blob[40:]).digest()
