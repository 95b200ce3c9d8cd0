"""Hot inner loops, each in two flavours.

``*_nb`` functions are plain loops compiled with numba; ``*_np`` functions are
vectorised numpy. The module-level names without suffix point at whichever
flavour :data:`segrecube._accel.USE_NUMBA` selects. Both flavours are kept
importable so tests and the benchmark can compare them head to head.
"""
import numpy as np

from ._accel import USE_NUMBA, njit

# --------------------------------------------------------------------------
# 2x2 minors


@njit
def _max_minor_residual_nb(m):
    rows, cols = m.shape
    best = 0.0
    # compare squared moduli, one sqrt at the end
    for i in range(rows - 1):
        for k in range(i + 1, rows):
            for j in range(cols - 1):
                a = m[i, j]
                c = m[k, j]
                for l in range(j + 1, cols):
                    d = a * m[k, l] - m[i, l] * c
                    d2 = d.real * d.real + d.imag * d.imag
                    if d2 > best:
                        best = d2
    return np.sqrt(best)


def _max_minor_residual_np(m):
    rows, cols = m.shape
    if rows < 2 or cols < 2:
        return 0.0
    best = 0.0
    # one row at a time keeps peak memory at rows*cols^2
    for i in range(rows - 1):
        top = m[i]
        rest = m[i + 1 :]
        det = top[None, :, None] * rest[:, None, :] - top[None, None, :] * rest[:, :, None]
        best = max(best, float(np.abs(det).max()))
    return best


# --------------------------------------------------------------------------
# Hamming distance on packed words


@njit
def _hamming_codes_nb(a, b):
    out = np.empty(a.shape[0], dtype=np.int64)
    for t in range(a.shape[0]):
        # SWAR popcount
        x = a[t] ^ b[t]
        x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
        x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
        x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
        out[t] = (x * np.uint64(0x0101010101010101)) >> np.uint64(56)
    return out


def _hamming_codes_np(a, b):
    x = np.bitwise_xor(a, b)
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(x).astype(np.int64)
    as_bytes = x.astype(">u8").view(np.uint8).reshape(-1, 8)
    return np.unpackbits(as_bytes, axis=1).sum(axis=1).astype(np.int64)


# --------------------------------------------------------------------------
# hypercube edge list


@njit
def _hypercube_edges_nb(length):
    nverts = 1 << length
    nedges = length * (nverts >> 1)
    out = np.empty((nedges, 2), dtype=np.int64)
    t = 0
    for v in range(nverts):
        for b in range(length):
            u = v ^ (1 << b)
            if u > v:
                out[t, 0] = v
                out[t, 1] = u
                t += 1
    return out


def _hypercube_edges_np(length):
    verts = np.arange(1 << length, dtype=np.int64)
    parts = []
    for b in range(length):
        low = verts[(verts >> b) & 1 == 0]
        parts.append(np.stack([low, low | (1 << b)], axis=1))
    if not parts:
        return np.empty((0, 2), dtype=np.int64)
    edges = np.concatenate(parts)
    order = np.lexsort((edges[:, 1], edges[:, 0]))
    return edges[order]


if USE_NUMBA:
    max_minor_residual = _max_minor_residual_nb
    hamming_codes = _hamming_codes_nb
    hypercube_edges = _hypercube_edges_nb
else:
    max_minor_residual = _max_minor_residual_np
    hamming_codes = _hamming_codes_np
    hypercube_edges = _hypercube_edges_np

BACKEND = "numba" if USE_NUMBA else "numpy"
