"""Binary on-disk cache for Weyl coset enumerations.

Format: 8-byte magic, 32-byte SHA-256 of the payload, then the payload:
version / group / theta key strings (length-prefixed UTF-8), the number of
records, and one record per representative word (2-byte length, one byte
per letter; rank < 256).  A corrupt or stale file is never trusted: the
caller recomputes and rewrites, with a warning.
"""

from __future__ import annotations

import hashlib
import logging
import os
import struct

from .rootsys import RootSystem
from .weyl import CosetList, coset_representatives, element_from_word_unchecked

MAGIC = b"FLGHCST\x01"
CACHE_VERSION = "1"
ENV_CACHE_DIR = "FLAGHEIGHT_CACHE_DIR"

log = logging.getLogger(__name__)


def _encode_str(s: str) -> bytes:
    raw = s.encode()
    return struct.pack("<H", len(raw)) + raw


def _decode_str(buf: memoryview, off: int):
    (n,) = struct.unpack_from("<H", buf, off)
    off += 2
    return bytes(buf[off:off + n]).decode(), off + n


def _payload(group: str, theta, words) -> bytes:
    parts = [_encode_str(CACHE_VERSION), _encode_str(group),
             _encode_str(",".join(str(i) for i in sorted(theta)))]
    parts.append(struct.pack("<I", len(words)))
    for word in words:
        parts.append(struct.pack("<H", len(word)))
        parts.append(bytes(word))
    return b"".join(parts)


def cache_path(cache_dir: str, rs: RootSystem, theta) -> str:
    key = f"{rs.spec}__{'-'.join(str(i) for i in sorted(theta)) or 'borel'}"
    return os.path.join(cache_dir, f"cosets_{key}.bin")


def write_cosets(path: str, rs: RootSystem, cosets: CosetList) -> None:
    payload = _payload(str(rs.spec), sorted(cosets.theta),
                       [w.word for w in cosets.reps])
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "wb") as fh:
        fh.write(MAGIC + hashlib.sha256(payload).digest() + payload)


def read_cosets(path: str, rs: RootSystem, theta) -> CosetList | None:
    """Load a cached coset list; None on any mismatch (missing file, bad
    magic/hash, stale version, or wrong key)."""
    try:
        with open(path, "rb") as fh:
            blob = fh.read()
    except OSError:
        return None
    if len(blob) < 40 or blob[:8] != MAGIC:
        log.warning("coset cache %s: bad magic, recomputing", path)
        return None
    digest, payload = blob[8:40], blob[40:]
    if hashlib.sha256(payload).digest() != digest:
        log.warning("coset cache %s: hash mismatch, recomputing", path)
        return None
    buf = memoryview(payload)
    try:
        version, off = _decode_str(buf, 0)
        group, off = _decode_str(buf, off)
        theta_key, off = _decode_str(buf, off)
        (count,) = struct.unpack_from("<I", buf, off)
        off += 4
        words = []
        for _ in range(count):
            (n,) = struct.unpack_from("<H", buf, off)
            off += 2
            words.append(tuple(buf[off:off + n]))
            off += n
    except (struct.error, UnicodeDecodeError):
        log.warning("coset cache %s: truncated, recomputing", path)
        return None
    if version != CACHE_VERSION or group != str(rs.spec) \
            or theta_key != ",".join(str(i) for i in sorted(theta)):
        return None
    reps = tuple(element_from_word_unchecked(rs, w) for w in words)
    return CosetList(theta=frozenset(theta), reps=reps)


def cache_cosets(cache_dir: str, rs: RootSystem, theta,
                 cap: int | None = None) -> CosetList:
    """Fetch coset representatives through the on-disk cache."""
    from .weyl import DEFAULT_CAP

    path = cache_path(cache_dir, rs, theta)
    cached = read_cosets(path, rs, theta)
    if cached is not None:
        return cached
    cosets = coset_representatives(rs, theta, cap or DEFAULT_CAP)
    write_cosets(path, rs, cosets)
    return cosets
