"""Byte-level striping of a file into n shards and single-shard repair.

Input bytes are read as a bit stream and cut into symbols of floor(log2 q)
bits, so every symbol is a valid field element.  The stream is zero-padded to
a whole number of k-symbol messages.  Shard j holds coordinate j of every
codeword, one field element per ``symbol_bytes(q)`` bytes, big-endian, after
an 8-byte header: b"ELRC", a version byte and the pad length in bits (3 bytes).
"""
from __future__ import annotations

from pathlib import Path

import numpy as np

from .artifact import atomic_write, symbol_bytes
from .errors import IndexOutOfRange, MalformedArtifact, MissingShards
from .gf import linalg
from .lrc import LrcCode, encode_many, repair_many

MAGIC = b"ELRC"
VERSION = 1
HEADER = 8


def bits_per_symbol(q: int) -> int:
    return q.bit_length() - 1


def shard_name(j: int) -> str:
    return f"shard_{j:04d}.bin"


def _header(pad_bits: int) -> bytes:
    return MAGIC + bytes([VERSION]) + pad_bits.to_bytes(3, "big")


def _parse(raw: bytes) -> tuple[int, bytes]:
    if len(raw) < HEADER or raw[:4] != MAGIC or raw[4] != VERSION:
        raise MalformedArtifact("not a shard file")
    return int.from_bytes(raw[5:8], "big"), raw[HEADER:]


def _to_symbols(data: bytes, b: int, k: int) -> tuple[np.ndarray, int]:
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8))
    block = b * k
    pad = (-bits.size) % block
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    weights = 1 << np.arange(b - 1, -1, -1, dtype=np.int64)
    return bits.reshape(-1, b).astype(np.int64) @ weights, pad


def _from_symbols(symbols: np.ndarray, b: int, pad: int) -> bytes:
    shifts = np.arange(b - 1, -1, -1, dtype=np.int64)
    bits = ((symbols[:, None] >> shifts) & 1).astype(np.uint8).ravel()
    if pad:
        bits = bits[:-pad]
    return np.packbits(bits).tobytes()


def _pack(values: np.ndarray, width: int) -> bytes:
    v = values.astype(">u8").view(np.uint8).reshape(-1, 8)
    return v[:, 8 - width:].tobytes()


def _unpack(raw: bytes, width: int) -> np.ndarray:
    a = np.frombuffer(raw, dtype=np.uint8)
    if a.size % width:
        raise MalformedArtifact("shard length is not a whole number of symbols")
    a = a.reshape(-1, width).astype(np.int64)
    out = np.zeros(a.shape[0], dtype=np.int64)
    for c in range(width):
        out = (out << 8) | a[:, c]
    return out


def encode_bytes(code: LrcCode, data: bytes) -> list[bytes]:
    """Shard contents (header included) for the given input."""
    q = code.field.q
    symbols, pad = _to_symbols(data, bits_per_symbol(q), code.k)
    words = encode_many(code, symbols.reshape(-1, code.k))
    width = symbol_bytes(q)
    return [_header(pad) + _pack(words[:, j], width) for j in range(code.n)]


def encode_file(code: LrcCode, src, out_dir) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for j, blob in enumerate(encode_bytes(code, Path(src).read_bytes())):
        path = out_dir / shard_name(j)
        atomic_write(path, blob)
        paths.append(path)
    return paths


def repair_shard(code: LrcCode, shard_dir, lost: int) -> bytes:
    """Rebuild shard ``lost`` from the other shards of its repair group."""
    if not 0 <= lost < code.n:
        raise IndexOutOfRange(f"shard index {lost} outside 0..{code.n - 1}")
    helpers, _ = code.repair_coefficients(lost)
    shard_dir = Path(shard_dir)
    cols, pad = [], None
    width = symbol_bytes(code.field.q)
    for j in helpers:
        path = shard_dir / shard_name(j)
        if not path.exists():
            raise MissingShards(f"shard {j}, needed to repair {lost}, is missing")
        pj, body = _parse(path.read_bytes())
        if pad is not None and pj != pad:
            raise MalformedArtifact("shards disagree on the pad length")
        pad = pj
        cols.append(_unpack(body, width))
    if len({c.size for c in cols}) > 1:
        raise MalformedArtifact("shards have different lengths")
    values = repair_many(code, np.stack(cols, axis=1), lost)
    return _header(pad or 0) + _pack(values, width)


def decode_shards(code: LrcCode, shard_dir) -> bytes:
    """Recover the original bytes from any information set of present shards."""
    F = code.field
    shard_dir = Path(shard_dir)
    present = [j for j in range(code.n) if (shard_dir / shard_name(j)).exists()]
    cols = []
    rank = 0
    for j in present:
        if rank == code.k:
            break
        if linalg.rank(F, code.generator[:, cols + [j]]) > rank:
            cols.append(j)
            rank += 1
    if rank < code.k:
        raise MissingShards(f"only rank {rank} of {code.k} recoverable from present shards")
    width = symbol_bytes(F.q)
    data, pad = [], 0
    for j in cols:
        pad, body = _parse((shard_dir / shard_name(j)).read_bytes())
        data.append(_unpack(body, width))
    C = np.stack(data, axis=1) if data else np.zeros((0, code.k), dtype=np.int64)
    # messages m satisfy m G_S = C, so m = C G_S^-1
    Ginv = _inverse(F, code.generator[:, cols])
    msgs = np.zeros_like(C)
    for i in range(code.k):
        msgs = F.vadd(msgs, F.vmul(C[:, i][:, None], Ginv[i][None, :]))
    return _from_symbols(msgs.ravel(), bits_per_symbol(F.q), pad)


def _inverse(F, A) -> np.ndarray:
    n = A.shape[0]
    R, _ = linalg.rref(F, np.hstack([A, np.eye(n, dtype=np.int64)]))
    return R[:, n:]
