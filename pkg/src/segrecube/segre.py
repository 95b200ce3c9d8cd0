"""Segre embeddings and determinantal separability tests.

A state is separable across the cut after its first ``k`` qubits exactly when
the ``2**k x 2**(n-k)`` coefficient grid has rank one, i.e. when every 2x2
minor ``z_ij z_kl - z_il z_kj`` vanishes.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .errors import (
    CutOutOfRangeError,
    IndexOutOfRangeError,
    NotNormalizedError,
    NotRankOneError,
    OddArityError,
    WrongArityError,
)
from .state import EPS_NORM, ProjectivePoint, PureState

EPS_SEGRE = 1e-9
# below this modulus a phase is meaningless
EPS_PHASE = 1e-12


def segre_map(a: ProjectivePoint, b: ProjectivePoint) -> ProjectivePoint:
    """``[x_0:...:x_m] x [y_0:...:y_n] -> [x_0 y_0 : x_0 y_1 : ... : x_m y_n]`` (row-major)."""
    return ProjectivePoint(np.outer(a.coords, b.coords).reshape(-1))


@dataclass(frozen=True, order=True)
class SegreGenerator:
    """The binomial ``z_ij * z_kl - z_il * z_kj`` with ``i < k`` and ``j < l``."""

    i: int
    j: int
    k: int
    l: int  # noqa: E741

    def __post_init__(self):
        if not (0 <= self.i < self.k and 0 <= self.j < self.l):
            raise IndexOutOfRangeError(f"generator indices not canonical: {self!r}")

    def __str__(self):
        z = _zname
        return f"{z(self.i, self.j)}*{z(self.k, self.l)} - {z(self.i, self.l)}*{z(self.k, self.j)}"

    def evaluate(self, grid) -> complex:
        g = grid
        return complex(g[self.i, self.j] * g[self.k, self.l] - g[self.i, self.l] * g[self.k, self.j])


def _zname(r, c):
    return f"z{r}{c}" if r < 10 and c < 10 else f"z{r},{c}"


def ideal_generators(m: int, n: int) -> tuple[SegreGenerator, ...]:
    """All 2x2-minor generators of the Segre ideal of P^m x P^n.

    Ordered by row pair, then column pair; for ``(2, 2)`` this is the
    a..i listing of the nine quadrics.
    """
    if m < 1 or n < 1:
        raise IndexOutOfRangeError("projective dimensions must be at least 1")
    return tuple(
        SegreGenerator(i, j, k, l)
        for i in range(m + 1)
        for k in range(i + 1, m + 1)
        for j in range(n + 1)
        for l in range(j + 1, n + 1)
    )


def max_generator_residual(p: ProjectivePoint, m: int, n: int) -> float:
    """Largest generator modulus on ``p`` after scaling it to unit max modulus."""
    if p.dim != (m + 1) * (n + 1) - 1:
        raise IndexOutOfRangeError(f"point of dimension {p.dim} is not in P^{(m + 1) * (n + 1) - 1}")
    z = p.coords / np.abs(p.coords).max()
    return float(kernels.max_minor_residual(np.ascontiguousarray(z.reshape(m + 1, n + 1))))


# --------------------------------------------------------------------------
# coefficient grids


@dataclass(frozen=True, eq=False)
class AmplitudeMatrix:
    entries: np.ndarray
    cut: int

    def __post_init__(self):
        e = np.array(self.entries, dtype=np.complex128, copy=True)
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]


def _check_cut(s: PureState, k: int):
    if not 1 <= k <= s.num_qubits - 1:
        raise CutOutOfRangeError(f"cut {k} outside 1..{s.num_qubits - 1}")


def reshape(s: PureState, k: int) -> AmplitudeMatrix:
    _check_cut(s, k)
    return AmplitudeMatrix(s.amplitudes.reshape(1 << k, 1 << (s.num_qubits - k)), k)


def minors_residual(m) -> float:
    """Max modulus over all 2x2 minors."""
    grid = m.entries if isinstance(m, AmplitudeMatrix) else np.asarray(m, dtype=np.complex128)
    return float(kernels.max_minor_residual(np.ascontiguousarray(grid, dtype=np.complex128)))


def is_separable_at_cut(s: PureState, k: int, tol: float = EPS_SEGRE) -> bool:
    return minors_residual(reshape(s, k)) <= tol


@dataclass(frozen=True)
class CutVerdict:
    k: int
    residual: float
    separable: bool


@dataclass(frozen=True)
class SeparabilityReport:
    per_cut: tuple[CutVerdict, ...]
    product_state: bool

    def to_dict(self) -> dict:
        return {
            "cuts": [{"k": c.k, "residual": c.residual, "separable": c.separable} for c in self.per_cut],
            "product_state": self.product_state,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def is_product_state(s: PureState, tol: float = EPS_SEGRE) -> SeparabilityReport:
    """Check the ``n - 1`` consecutive cuts; fully factorizable iff all pass."""
    cuts = []
    for k in range(1, s.num_qubits):
        r = minors_residual(reshape(s, k))
        cuts.append(CutVerdict(k, r, r <= tol))
    return SeparabilityReport(tuple(cuts), all(c.separable for c in cuts))


@dataclass(frozen=True)
class Factorization:
    left: PureState
    right: PureState
    phase: complex


def recover_factors(s: PureState, k: int, tol: float = EPS_SEGRE) -> Factorization:
    """Split a state separable at cut ``k`` into normalized factors and a phase.

    ``phase * tensor(left, right)`` reproduces ``s``.
    """
    grid = reshape(s, k).entries
    if minors_residual(grid) > tol:
        raise NotRankOneError(f"state is entangled across cut {k}")
    pi, pj = np.unravel_index(int(np.argmax(np.abs(grid))), grid.shape)
    pivot = grid[pi, pj]
    left = grid[:, pj] / np.linalg.norm(grid[:, pj])
    right = grid[pi, :] / pivot
    right = right / np.linalg.norm(right)
    phase = complex(pivot / (left[pi] * right[pj]))
    return Factorization(PureState(k, left), PureState(s.num_qubits - k, right), phase)


# --------------------------------------------------------------------------
# entanglement measures


def _require_two_qubits(s: PureState):
    if s.num_qubits != 2:
        raise WrongArityError(f"defined for 2 qubits, got {s.num_qubits}")


def concurrence(s: PureState) -> float:
    _require_two_qubits(s)
    c00, c01, c10, c11 = s.amplitudes
    return float(2 * abs(c00 * c11 - c01 * c10))


def schmidt_coefficients(s: PureState, k: int) -> np.ndarray:
    """Singular values of the cut-``k`` grid, descending."""
    return np.linalg.svd(reshape(s, k).entries, compute_uv=False)


def schmidt_residual(s: PureState, k: int) -> float:
    """Second singular value: distance from ``s`` to the nearest rank-one point."""
    return float(schmidt_coefficients(s, k)[1])


@dataclass(frozen=True)
class OctantSplit:
    mag_residual: float
    # None when a modulus is too small for its phase to be defined
    phase_residual: Optional[float]


def octant_split(s: PureState) -> OctantSplit:
    """Split ``c00 c11 - c01 c10 = 0`` into a modulus and a phase equation.

    With ``c = a * exp(i v)`` and phases taken relative to ``c00``:
    ``a00 a11 - a01 a10`` and ``v01 + v10 - v11`` wrapped to (-pi, pi].
    """
    _require_two_qubits(s)
    c = s.amplitudes
    a = np.abs(c)
    mag = float(a[0] * a[3] - a[1] * a[2])
    if a.min() < EPS_PHASE:
        return OctantSplit(mag, None)
    # (v01 - v00) + (v10 - v00) - (v11 - v00)
    phase = float(np.angle(c[1] * c[2] * np.conj(c[0]) * np.conj(c[3])))
    if phase <= -math.pi:
        phase += 2 * math.pi
    return OctantSplit(mag, phase)


def is_maximally_entangled(s: PureState, tol: float = EPS_SEGRE) -> bool:
    """True iff the middle-cut grid is unitary up to the factor ``sqrt(N)``."""
    if s.num_qubits % 2:
        raise OddArityError(f"needs an even qubit count, got {s.num_qubits}")
    half = s.num_qubits // 2
    size = 1 << half
    c = s.amplitudes.reshape(size, size)
    gram = size * (c.conj().T @ c)
    return bool(np.max(np.abs(gram - np.eye(size))) <= tol)


def su2_matrix(alpha: complex, beta: complex) -> np.ndarray:
    """``[[alpha, beta], [-conj(beta), conj(alpha)]]``."""
    alpha, beta = complex(alpha), complex(beta)
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1) > EPS_NORM:
        raise NotNormalizedError("|alpha|^2 + |beta|^2 must equal 1")
    return np.array([[alpha, beta], [-beta.conjugate(), alpha.conjugate()]], dtype=np.complex128)


def su2_point(alpha: complex, beta: complex) -> ProjectivePoint:
    return ProjectivePoint(su2_matrix(alpha, beta).reshape(-1))

