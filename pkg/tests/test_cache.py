import logging

import numpy as np
import pytest

from diffspec import cache
from diffspec.errors import CacheError
from diffspec.field import build_field


def test_build_writes_then_reuses(tmp_path):
    F = build_field(5, 3, cache_dir=tmp_path)
    files = list(tmp_path.glob("*.tbl"))
    assert len(files) == 1 and files[0].name.startswith("F5^3-")
    G = build_field(5, 3, cache_dir=tmp_path)
    assert np.array_equal(F.antilog, G.antilog) and np.array_equal(F.log, G.log)
    assert np.array_equal(F.antilog, build_field(5, 3).antilog)


def test_header_contents(tmp_path):
    F = build_field(7, 2, cache_dir=tmp_path)
    (info,) = cache.entries(tmp_path)
    assert (info["p"], info["n"], info["alpha"], info["count"]) == (7, 2, F.alpha, 48)
    assert tuple(info["modulus"]) == F.params.modulus


def test_corrupt_file_is_ignored(tmp_path, caplog):
    F = build_field(3, 3, cache_dir=tmp_path)
    path = cache.path_for(tmp_path, F.params)
    raw = bytearray(path.read_bytes())
    raw[60] ^= 0xFF
    path.write_bytes(bytes(raw))
    with pytest.raises(CacheError):
        cache.read_header(path)
    with caplog.at_level(logging.WARNING):
        assert cache.load(tmp_path, F.params, F.alpha) is None
    assert "checksum" in caplog.text
    # rebuilding recomputes and rewrites a good file
    G = build_field(3, 3, cache_dir=tmp_path)
    assert np.array_equal(G.antilog, F.antilog)
    cache.read_header(path)


def test_mismatched_alpha_is_ignored(tmp_path):
    F = build_field(3, 2, cache_dir=tmp_path)
    assert cache.load(tmp_path, F.params, F.alpha + 1) is None


def test_clear(tmp_path):
    build_field(3, 2, cache_dir=tmp_path)
    build_field(5, 2, cache_dir=tmp_path)
    assert cache.clear(tmp_path) == 2
    assert cache.entries(tmp_path) == []


def test_not_a_table(tmp_path):
    bad = tmp_path / "junk.tbl"
    bad.write_bytes(b"nope" * 20)
    (info,) = cache.entries(tmp_path)
    assert "error" in info
