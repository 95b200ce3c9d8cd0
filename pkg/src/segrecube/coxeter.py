"""Type-A Coxeter chambers, the simply transitive S_N action, and permutation-error recovery.

Conventions:

* Permutations are stored 1-based as image lists, ``[2, 1, 3]`` sends 1->2, 2->1, 3->3.
* ``act(g, x)`` is the left action ``result[g(i)] = x[i]``, so
  ``act(g, act(h, x)) == act(g * h, x)``.
* The chamber of ``x`` is the permutation ``w`` with ``x[w(1)] < x[w(2)] < ...``.
* A state is placed in R^N through its probability vector, centred on the
  sum-zero hyperplane. Phases are invisible to the chamber.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence, Union

import numpy as np

from .errors import AmbiguousOnWallError, IndexOutOfRangeError, SegreError, SizeMismatchError
from .segre import SegreGenerator, ideal_generators
from .state import PureState

EPS_WALL = 1e-12


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise SegreError(f"not a permutation of 1..{len(images)}: {list(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(tuple(range(1, size + 1)))

    @classmethod
    def from_zero_based(cls, images: Sequence[int]) -> "Permutation":
        return cls(tuple(int(v) + 1 for v in images))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse the one-line form ``"[3,1,2]"``."""
        try:
            values = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SegreError(f"cannot parse permutation {text!r}") from exc
        if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
            raise SegreError(f"cannot parse permutation {text!r}")
        return cls(tuple(values))

    @classmethod
    def transposition(cls, size: int, i: int, j: int) -> "Permutation":
        images = list(range(1, size + 1))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    @property
    def zero_based(self) -> np.ndarray:
        return np.array(self.images, dtype=np.int64) - 1

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition ``(self * other)(i) == self(other(i))``."""
        if self.size != other.size:
            raise SizeMismatchError(f"cannot compose S_{self.size} with S_{other.size}")
        return Permutation(tuple(self.images[v - 1] for v in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    def __str__(self):
        return "[" + ",".join(map(str, self.images)) + "]"


@dataclass(frozen=True)
class ChamberId:
    order: Permutation

    def __str__(self):
        return str(self.order)


@dataclass(frozen=True)
class OnWall:
    """Point on one or more hyperplanes ``x_i = x_j``; ``pairs`` are 1-based, ``i < j``."""

    pairs: tuple[tuple[int, int], ...]

    def __str__(self):
        return "OnWall{" + ", ".join(f"({i},{j})" for i, j in self.pairs) + "}"


Chamber = Union[ChamberId, OnWall]


def chamber_of(x: Sequence[float], eps_wall: float = EPS_WALL) -> Chamber:
    x = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(x)):
        raise SegreError("point has non-finite coordinates")
    order = np.argsort(x, kind="stable")
    xs = x[order]
    if np.all(np.diff(xs) > eps_wall):
        return ChamberId(Permutation.from_zero_based(order))
    pairs = []
    for a in range(len(xs)):
        b = a + 1
        while b < len(xs) and xs[b] - xs[a] <= eps_wall:
            i, j = sorted((int(order[a]) + 1, int(order[b]) + 1))
            pairs.append((i, j))
            b += 1
    return OnWall(tuple(sorted(pairs)))


def act(g: Permutation, x: Sequence) -> np.ndarray:
    """Left action by coordinate permutation: ``result[g(i)] = x[i]``."""
    x = np.asarray(x)
    if x.shape[0] != g.size:
        raise SizeMismatchError(f"permutation of {g.size} points cannot act on length {x.shape[0]}")
    out = np.empty_like(x)
    out[g.zero_based] = x
    return out


def transporter(c1: ChamberId, c2: ChamberId) -> Permutation:
    """The unique ``g`` with ``g C1 = C2``."""
    if c1.order.size != c2.order.size:
        raise SizeMismatchError("chambers of different rank")
    return c2.order * c1.order.inverse()


def representative(c: ChamberId) -> np.ndarray:
    """A point strictly inside ``c`` on the sum-zero hyperplane."""
    size = c.order.size
    x = np.empty(size)
    x[c.order.zero_based] = np.arange(size, dtype=np.float64)
    return x - x.mean()


def all_chambers(size: int) -> list[ChamberId]:
    return [ChamberId(Permutation(p)) for p in permutations(range(1, size + 1))]


# --------------------------------------------------------------------------
# action on the Segre ideal


def act_on_generator(p: Permutation, q: Permutation, g: SegreGenerator, signed: bool = False):
    """Relabel rows by ``p`` and columns by ``q`` (both acting on 0-based indices).

    Returns the canonical generator, or ``(sign, generator)`` when ``signed``;
    each swap needed to restore ``i < k`` or ``j < l`` flips the sign.
    """
    if max(g.i, g.k) >= p.size or max(g.j, g.l) >= q.size:
        raise IndexOutOfRangeError(f"{g} lies outside a {p.size}x{q.size} grid")
    pz, qz = p.zero_based, q.zero_based
    i, k = int(pz[g.i]), int(pz[g.k])
    j, l = int(qz[g.j]), int(qz[g.l])
    sign = 1
    if i > k:
        i, k = k, i
        sign = -sign
    if j > l:
        j, l = l, j
        sign = -sign
    image = SegreGenerator(i, j, k, l)
    return (sign, image) if signed else image


def verify_ideal_invariance(m: int, n: int, p: Permutation, q: Permutation) -> bool:
    """Whether ``(p, q)`` permutes the generators of the P^m x P^n Segre ideal."""
    gens = ideal_generators(m, n)
    if p.size != m + 1 or q.size != n + 1:
        return False
    images = {act_on_generator(p, q, g) for g in gens}
    return len(images) == len(gens) and images == set(gens)


# --------------------------------------------------------------------------
# states in chambers


def chamber_point(s: PureState) -> np.ndarray:
    probs = np.abs(s.amplitudes) ** 2
    return probs - probs.mean()


def state_chamber(s: PureState) -> Chamber:
    return chamber_of(chamber_point(s))


def inject_error(s: PureState, g: Permutation) -> PureState:
    if g.size != s.dim:
        raise SizeMismatchError(f"error permutation on {g.size} indices, state has {s.dim} amplitudes")
    return PureState(s.num_qubits, act(g, s.amplitudes))


@dataclass(frozen=True)
class Recovery:
    transporter: Permutation
    corrected: PureState


def recover(original: ChamberId, corrupted: PureState) -> Recovery:
    """Undo a permutation error by transporting back to ``original``."""
    where = state_chamber(corrupted)
    if isinstance(where, OnWall):
        raise AmbiguousOnWallError(f"corrupted state lies on {where}", where.pairs)
    g = transporter(original, where)
    return Recovery(g, PureState(corrupted.num_qubits, act(g.inverse(), corrupted.amplitudes)))


@dataclass(frozen=True)
class ErrorRecord:
    original_chamber: ChamberId
    corrupted_chamber: ChamberId
    transporter: Permutation

    @property
    def same_chamber(self) -> bool:
        return self.original_chamber == self.corrupted_chamber

    def to_dict(self) -> dict:
        return {
            "original_chamber": str(self.original_chamber),
            "corrupted_chamber": str(self.corrupted_chamber),
            "transporter": str(self.transporter),
            "same_chamber": self.same_chamber,
        }


def simulate_error(s: PureState, g: Permutation) -> tuple[ErrorRecord, Recovery]:
    """Inject ``g`` into ``s``, locate both chambers and recover."""
    before = state_chamber(s)
    if isinstance(before, OnWall):
        raise AmbiguousOnWallError(f"original state lies on {before}", before.pairs)
    corrupted = inject_error(s, g)
    rec = recover(before, corrupted)
    after = state_chamber(corrupted)
    return ErrorRecord(before, after, rec.transporter), rec
