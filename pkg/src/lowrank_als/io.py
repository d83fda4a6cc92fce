"""Binary and CSV matrix serialization.

Binary layout (little-endian): magic ``ALSM``, version u32, field tag u8
(0 = real, 1 = complex), rows u64, cols u64, then row-major float64 entries
(re/im interleaved for complex).
"""

from __future__ import annotations

import struct

import numpy as np

from .matrix import as_matrix

MAGIC = b"ALSM"
VERSION = 1

_HEADER = struct.Struct("<4sIBQQ")


def save_matrix(path, a) -> None:
    """Write a matrix in the ALSM binary format."""
    a = as_matrix(a)
    tag = 1 if np.iscomplexobj(a) else 0
    with open(path, "wb") as f:
        f.write(_HEADER.pack(MAGIC, VERSION, tag, a.shape[0], a.shape[1]))
        dtype = "<c16" if tag else "<f8"
        np.ascontiguousarray(a).astype(dtype, copy=False).tofile(f)


def load_matrix(path) -> np.ndarray:
    """Read a matrix written by save_matrix."""
    with open(path, "rb") as f:
        header = f.read(_HEADER.size)
        if len(header) != _HEADER.size:
            raise ValueError(f"{path}: truncated header")
        magic, version, tag, rows, cols = _HEADER.unpack(header)
        if magic != MAGIC:
            raise ValueError(f"{path}: bad magic {magic!r}")
        if version != VERSION:
            raise ValueError(f"{path}: unsupported version {version}")
        if tag not in (0, 1):
            raise ValueError(f"{path}: bad field tag {tag}")
        dtype = "<c16" if tag else "<f8"
        data = np.fromfile(f, dtype=dtype, count=rows * cols)
    if data.size != rows * cols:
        raise ValueError(f"{path}: truncated payload")
    return data.astype(np.complex128 if tag else np.float64).reshape(rows, cols)


def save_csv(path, a) -> None:
    """Plain-text CSV export, intended for small matrices during debugging."""
    a = as_matrix(a)
    with open(path, "w") as f:
        for row in a:
            if np.iscomplexobj(a):
                cells = [f"{x.real:.17g}{x.imag:+.17g}j" for x in row]
            else:
                cells = [f"{x:.17g}" for x in row]
            f.write(",".join(cells) + "\n")


def load_csv(path) -> np.ndarray:
    rows = []
    with open(path) as f:
        for line in f:
            line = line.strip()
            if line:
                rows.append([complex(c) for c in line.split(",")])
    arr = np.array(rows)
    if not np.iscomplexobj(arr) or np.all(arr.imag == 0.0):
        return np.real(arr).astype(np.float64)
    return arr.astype(np.complex128)
