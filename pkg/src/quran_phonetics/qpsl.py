"""Binary logit files.

Layout: b"QPSL", version (u8), level count (u8), then per level a u8 name
length, the UTF-8 name, u32 LE T, u32 LE V and T*V float32 LE values in
time-major order.
"""

from __future__ import annotations

import struct
from typing import BinaryIO, Mapping

import numpy as np

from .ctc import LogProbMatrix

MAGIC = b"QPSL"
VERSION = 1


class QPSLFormatError(ValueError):
    pass


def write_qpsl(stream: BinaryIO, levels: Mapping[str, np.ndarray | LogProbMatrix]) -> None:
    if not 1 <= len(levels) <= 255:
        raise QPSLFormatError("level count must be in 1..255")
    stream.write(MAGIC + bytes([VERSION, len(levels)]))
    for name, values in levels.items():
        arr = values.values if isinstance(values, LogProbMatrix) else np.asarray(values)
        if arr.ndim != 2:
            raise QPSLFormatError(f"{name}: expected a 2-d array")
        raw = name.encode("utf-8")
        if not 0 < len(raw) <= 255:
            raise QPSLFormatError(f"level name too long or empty: {name!r}")
        stream.write(bytes([len(raw)]) + raw)
        stream.write(struct.pack("<II", *arr.shape))
        stream.write(np.ascontiguousarray(arr, dtype="<f4").tobytes())


def _read_exact(stream: BinaryIO, n: int, what: str) -> bytes:
    data = stream.read(n)
    if len(data) != n:
        raise QPSLFormatError(f"truncated file while reading {what}")
    return data


def read_qpsl(stream: BinaryIO) -> dict[str, np.ndarray]:
    """Raw float32 grids per level, in file order."""
    if _read_exact(stream, 4, "magic") != MAGIC:
        raise QPSLFormatError("bad magic, not a QPSL file")
    version, count = _read_exact(stream, 2, "header")
    if version != VERSION:
        raise QPSLFormatError(f"unsupported version {version}")
    out: dict[str, np.ndarray] = {}
    for _ in range(count):
        (n,) = _read_exact(stream, 1, "name length")
        name = _read_exact(stream, n, "level name").decode("utf-8")
        T, V = struct.unpack("<II", _read_exact(stream, 8, "dimensions"))
        buf = _read_exact(stream, 4 * T * V, f"values of {name}")
        if name in out:
            raise QPSLFormatError(f"duplicate level {name!r}")
        out[name] = np.frombuffer(buf, dtype="<f4").reshape(T, V).astype(np.float64)
    if stream.read(1):
        raise QPSLFormatError("trailing bytes after last level")
    return out


def load_logits(stream: BinaryIO, renormalize: bool = False, atol: float = 1e-6) -> dict[str, LogProbMatrix]:
    return {
        name: LogProbMatrix.from_array(arr, renormalize=renormalize, atol=atol)
        for name, arr in read_qpsl(stream).items()
    }
