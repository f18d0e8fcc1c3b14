"""On-disk cache of solve tables.

Binary layout (little endian)::

    b"PLAB1"
    u8 cop_rule, u8 robber_rule, u16 k, u32 n, 32-byte SHA-256 of adjacency
    u64 state count
    bit-packed status (np.packbits, ceil(states / 8) bytes)
    int32 capture times (states * 4 bytes)
"""

from __future__ import annotations

import json
import logging
import os
import struct
from pathlib import Path

import numpy as np

from .graphs import Graph
from .rules import MovementRule

logger = logging.getLogger(__name__)

MAGIC = b"PLAB1"
_HEADER = struct.Struct("<BBHI32sQ")
DEFAULT_DIR = "./plab-cache"


class CacheError(Exception):
    pass


def default_cache_dir(flag: str | None = None) -> Path:
    return Path(flag or os.environ.get("PLAB_CACHE_DIR") or DEFAULT_DIR)


def encode_table(table) -> bytes:
    header = _HEADER.pack(
        int(table.rule.cop_rule),
        int(table.rule.robber_rule),
        table.k,
        table.graph.n,
        bytes.fromhex(table.graph.digest),
        table.status.size,
    )
    return (
        MAGIC
        + header
        + np.packbits(table.status.astype(np.uint8)).tobytes()
        + table.ctime.astype("<i4").tobytes()
    )


def decode_table(data: bytes, g: Graph):
    from .rules import CopRule, RobberRule
    from .solver import SolveTable

    if not data.startswith(MAGIC):
        raise CacheError("bad magic")
    pos = len(MAGIC)
    try:
        cr, rr, k, n, digest, count = _HEADER.unpack_from(data, pos)
    except struct.error as exc:
        raise CacheError(f"truncated header: {exc}") from exc
    pos += _HEADER.size
    if digest.hex() != g.digest or n != g.n:
        raise CacheError("graph hash mismatch")
    nbits = (count + 7) // 8
    if len(data) != pos + nbits + 4 * count:
        raise CacheError("payload length mismatch")
    status = np.unpackbits(np.frombuffer(data, np.uint8, nbits, pos), count=count)
    ctime = np.frombuffer(data, "<i4", count, pos + nbits).astype(np.int32)
    if np.any((status == 1) != (ctime >= 0)):
        raise CacheError("status and capture times disagree")
    status.setflags(write=False)
    ctime.setflags(write=False)
    rule = MovementRule(CopRule(cr), RobberRule(rr))
    return SolveTable(g, k, rule, status, ctime)


class TableCache:
    def __init__(self, root: str | Path | None = None):
        self.root = default_cache_dir(None if root is None else str(root))

    def path_for(self, g: Graph, k: int, rule: MovementRule) -> Path:
        return self.root / f"{g.digest[:16]}-k{k}-{rule.name}.plab"

    def get(self, g: Graph, k: int, rule: MovementRule):
        p = self.path_for(g, k, rule)
        if not p.exists():
            return None
        try:
            table = decode_table(p.read_bytes(), g)
            if table.k != k or table.rule != rule:
                raise CacheError("key mismatch")
        except CacheError as exc:
            logger.warning("corrupt cache entry %s (%s); recomputing", p, exc)
            return None
        return table

    def put(self, table) -> Path:
        self.root.mkdir(parents=True, exist_ok=True)
        p = self.path_for(table.graph, table.k, table.rule)
        tmp = p.with_suffix(".tmp")
        tmp.write_bytes(encode_table(table))
        tmp.replace(p)
        return p

    def entries(self) -> list[Path]:
        if not self.root.exists():
            return []
        return sorted(self.root.glob("*.plab"))

    def clear(self) -> int:
        files = self.entries()
        for f in files:
            f.unlink()
        return len(files)


def export_json(table, path: str | Path) -> None:
    Path(path).write_text(json.dumps(table.to_json()))
