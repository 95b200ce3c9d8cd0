"""Binary-word labels for iterated Segre embeddings and the hypercube they form.

For ``n`` factors ``P^1 x ... x P^1`` a word ``w`` of length ``n - 1`` records
which adjacent pairs have been merged by a Segre map: ``w[i] == 1`` means
factors ``i`` and ``i + 1`` (0-based) were embedded together. Words one bit
apart differ by a single Segre operation, so the words with Hamming
adjacency form the ``(n - 1)``-cube.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import LengthMismatchError, OverflowGuardError, SegreError

MAX_QUBITS = 24

_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


@dataclass(frozen=True, order=True)
class BinaryWord:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise SegreError(f"word entries must be 0 or 1: {self.bits!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def parse(cls, text: str) -> "BinaryWord":
        """Accepts ``"1001"`` or ``"(1001)"``."""
        return cls(tuple(int(ch) for ch in text.strip().strip("()")))

    @classmethod
    def from_code(cls, code: int, length: int) -> "BinaryWord":
        """Inverse of :attr:`code`; bit 1 is the most significant."""
        return cls(tuple((code >> (length - 1 - i)) & 1 for i in range(length)))

    @property
    def code(self) -> int:
        c = 0
        for b in self.bits:
            c = (c << 1) | b
        return c

    def __len__(self):
        return len(self.bits)

    def __getitem__(self, i):
        return self.bits[i]

    def __str__(self):
        return "".join(map(str, self.bits))

    def flip(self, i: int) -> "BinaryWord":
        bits = list(self.bits)
        bits[i] ^= 1
        return BinaryWord(tuple(bits))


@dataclass(frozen=True)
class SpaceSignature:
    """A product ``P^d1 x P^d2 x ...`` of projective spaces."""

    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if not dims or any(d < 1 for d in dims):
            raise SegreError(f"projective dimensions must be positive: {self.dims!r}")
        object.__setattr__(self, "dims", dims)

    def __str__(self):
        return " x ".join(f"P{d}" for d in self.dims)

    def pretty(self) -> str:
        return "×".join("ℙ" + str(d).translate(_SUPERSCRIPT) for d in self.dims)

    def __len__(self):
        return len(self.dims)

    @property
    def ambient_dim(self) -> int:
        """Dimension of the target of the full Segre embedding."""
        total = 1
        for d in self.dims:
            total *= d + 1
        return total - 1

    @property
    def qubits(self) -> int:
        """Number of qubits, defined when every factor is ``P^(2^r - 1)``."""
        total = 0
        for d in self.dims:
            r = (d + 1).bit_length() - 1
            if (1 << r) != d + 1:
                raise SegreError(f"P{d} is not the projective space of a qubit register")
            total += r
        return total

    def merge(self, j: int) -> "SpaceSignature":
        """Segre-embed factors ``j`` and ``j + 1`` into ``P^((a+1)(b+1)-1)``."""
        if not 0 <= j < len(self.dims) - 1:
            raise SegreError(f"no adjacent pair at factor {j} in {self}")
        d = self.dims
        merged = (d[j] + 1) * (d[j + 1] + 1) - 1
        return SpaceSignature(d[:j] + (merged,) + d[j + 2 :])


def hamming(a: BinaryWord, b: BinaryWord) -> int:
    if len(a) != len(b):
        raise LengthMismatchError(f"words of length {len(a)} and {len(b)}")
    return (a.code ^ b.code).bit_count()


def hamming_many(a: Sequence[int], b: Sequence[int]) -> np.ndarray:
    """Vectorised Hamming distance between packed word codes."""
    a = np.ascontiguousarray(a, dtype=np.uint64)
    b = np.ascontiguousarray(b, dtype=np.uint64)
    if a.shape != b.shape:
        raise LengthMismatchError(f"code arrays of shape {a.shape} and {b.shape}")
    return kernels.hamming_codes(a, b)


def signature_of(w: BinaryWord, base: Sequence[int] | None = None) -> SpaceSignature:
    """Product of projective spaces reached after the merges recorded in ``w``.

    ``base`` gives the starting factor dimensions (default all ``P^1``).
    """
    base = (1,) * (len(w) + 1) if base is None else tuple(base)
    if len(base) != len(w) + 1:
        raise LengthMismatchError(f"word of length {len(w)} needs {len(w) + 1} base factors")
    dims = [base[0]]
    for bit, d in zip(w.bits, base[1:]):
        if bit:
            dims[-1] = (dims[-1] + 1) * (d + 1) - 1
        else:
            dims.append(d)
    return SpaceSignature(tuple(dims))


def merge_index(w: BinaryWord, i: int) -> int:
    """Factor index in ``signature_of(w)`` whose right neighbour sits across boundary ``i``."""
    return sum(1 for b in w.bits[:i] if b == 0)


def neighbors(w: BinaryWord) -> frozenset[BinaryWord]:
    return frozenset(w.flip(i) for i in range(len(w)))


@dataclass(frozen=True, eq=False)
class HypercubeGraph:
    """Vertices are all words of length ``n - 1``; ``edges`` holds code pairs ``u < v``."""

    n: int
    edges: np.ndarray = field(repr=False)

    def __post_init__(self):
        e = np.array(self.edges, dtype=np.int64, copy=True).reshape(-1, 2)
        e.setflags(write=False)
        object.__setattr__(self, "edges", e)

    @property
    def length(self) -> int:
        return self.n - 1

    @property
    def vertex_count(self) -> int:
        return 1 << self.length

    @property
    def edge_count(self) -> int:
        return self.edges.shape[0]

    @cached_property
    def vertices(self) -> tuple[tuple[BinaryWord, SpaceSignature], ...]:
        words = (BinaryWord.from_code(c, self.length) for c in range(self.vertex_count))
        return tuple((w, signature_of(w)) for w in words)

    def edge_words(self) -> Iterable[tuple[BinaryWord, BinaryWord]]:
        L = self.length
        for u, v in self.edges:
            yield BinaryWord.from_code(int(u), L), BinaryWord.from_code(int(v), L)

    def __eq__(self, other):
        if not isinstance(other, HypercubeGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges.tobytes()))


def generate_hypercube(n: int) -> HypercubeGraph:
    """Embedding cube for ``n`` qubits: ``2**(n-1)`` words, edges at Hamming distance 1."""
    if n < 2:
        raise SegreError(f"need at least 2 qubits, got {n}")
    if n > MAX_QUBITS:
        raise OverflowGuardError(f"n={n} exceeds the materialisation cap of {MAX_QUBITS}")
    return HypercubeGraph(n, kernels.hypercube_edges(n - 1))


def to_dot(g: HypercubeGraph) -> str:
    lines = [f"graph segre_cube_{g.n} {{", "  node [shape=box];"]
    for w, sig in g.vertices:
        lines.append(f'  "{w}" [label="({w}) {sig}"];')
    for a, b in g.edge_words():
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: HypercubeGraph) -> str:
    doc = {
        "n": g.n,
        "vertex_count": g.vertex_count,
        "edge_count": g.edge_count,
        "vertices": [{"word": str(w), "dims": list(sig.dims), "label": str(sig)} for w, sig in g.vertices],
        "edges": [[str(a), str(b)] for a, b in g.edge_words()],
    }
    return json.dumps(doc)


def from_json(text: str) -> HypercubeGraph:
    doc = json.loads(text)
    n = int(doc["n"])
    edges = [(BinaryWord.parse(a).code, BinaryWord.parse(b).code) for a, b in doc["edges"]]
    g = HypercubeGraph(n, np.array(edges, dtype=np.int64).reshape(-1, 2))
    if len(doc["vertices"]) != g.vertex_count or doc["vertex_count"] != g.vertex_count:
        raise LengthMismatchError("vertex count does not match n")
    for entry, (w, sig) in zip(doc["vertices"], g.vertices):
        if entry["word"] != str(w) or tuple(entry["dims"]) != sig.dims:
            raise SegreError(f"vertex {entry['word']} disagrees with its signature")
    return g
