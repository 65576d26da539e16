"""On-disk cache of antilog tables.

One file per (p, n, modulus), named by a content hash of those three.
Layout, all little-endian::

    b"DSPC"  u16 version  u32 p  u16 n  (n+1) x u32 modulus  u64 alpha
    u8 width  u64 count  count x width-byte antilog entries  32-byte sha256

The trailing digest covers every preceding byte.
"""

from __future__ import annotations

import hashlib
import logging
import os
import struct
from pathlib import Path

import numpy as np

from .errors import CacheError

log = logging.getLogger(__name__)

MAGIC = b"DSPC"
VERSION = 1
SUFFIX = ".tbl"


def default_dir() -> Path:
    return Path(os.environ.get("DIFFSPEC_CACHE", "./.diffspec-cache"))


def key(params) -> str:
    h = hashlib.sha256(f"{params.p}|{params.n}|{','.join(map(str, params.modulus))}".encode())
    return h.hexdigest()[:16]


def path_for(cache_dir, params) -> Path:
    return Path(cache_dir) / f"F{params.p}^{params.n}-{key(params)}{SUFFIX}"


def _header(params, alpha, width, count):
    n = params.n
    return (MAGIC + struct.pack("<HIH", VERSION, params.p, n)
            + struct.pack(f"<{n + 1}I", *params.modulus)
            + struct.pack("<QBQ", alpha, width, count))


def save(cache_dir, params, alpha, antilog) -> Path:
    count = params.q - 1
    width = 4 if params.q <= 1 << 32 else 8
    body = _header(params, alpha, width, count)
    body += np.ascontiguousarray(antilog[:count], dtype=f"<u{width}").tobytes()
    path = path_for(cache_dir, params)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_bytes(body + hashlib.sha256(body).digest())
    os.replace(tmp, path)
    return path


def read_header(path):
    """Parse a cache file; returns (info dict, antilog entries) after checking the digest."""
    raw = Path(path).read_bytes()
    if len(raw) < 44 or raw[:4] != MAGIC:
        raise CacheError(f"{path}: not a diffspec table file")
    body, digest = raw[:-32], raw[-32:]
    if hashlib.sha256(body).digest() != digest:
        raise CacheError(f"{path}: checksum mismatch")
    version, p, n = struct.unpack_from("<HIH", body, 4)
    if version != VERSION:
        raise CacheError(f"{path}: unsupported version {version}")
    off = 12
    modulus = struct.unpack_from(f"<{n + 1}I", body, off)
    off += 4 * (n + 1)
    alpha, width, count = struct.unpack_from("<QBQ", body, off)
    off += 17
    entries = np.frombuffer(body, dtype=f"<u{width}", count=count, offset=off)
    info = {"path": str(path), "p": p, "n": n, "modulus": list(modulus), "alpha": alpha,
            "width": width, "count": count, "bytes": len(raw)}
    return info, entries


def load(cache_dir, params, alpha):
    """Return (antilog, log) from the cache, or None when absent or unusable."""
    path = path_for(cache_dir, params)
    if not path.exists():
        return None
    try:
        info, entries = read_header(path)
    except CacheError as exc:
        log.warning("ignoring cache file: %s", exc)
        return None
    if (info["p"], info["n"], tuple(info["modulus"]), info["alpha"]) != (
            params.p, params.n, params.modulus, alpha) or info["count"] != params.q - 1:
        log.warning("ignoring cache file %s: header does not match field", path)
        return None
    q = params.q
    antilog = np.empty(q, dtype=np.int64)
    antilog[: q - 1] = entries
    antilog[q - 1] = 1
    lg = np.full(q, -1, dtype=np.int64)
    lg[antilog[: q - 1]] = np.arange(q - 1, dtype=np.int64)
    if antilog[0] != 1 or np.count_nonzero(lg[1:] < 0):
        log.warning("ignoring cache file %s: table is not a permutation", path)
        return None
    return antilog, lg


def entries(cache_dir):
    out = []
    for path in sorted(Path(cache_dir).glob(f"*{SUFFIX}")):
        try:
            info, _ = read_header(path)
        except CacheError as exc:
            info = {"path": str(path), "error": str(exc)}
        out.append(info)
    return out


def clear(cache_dir) -> int:
    removed = 0
    for path in Path(cache_dir).glob(f"*{SUFFIX}"):
        path.unlink()
        removed += 1
    return removed
