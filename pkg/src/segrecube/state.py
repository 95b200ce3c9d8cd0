"""Pure multiqubit states, projective points, Pauli operators and the probability simplex.

Amplitudes are indexed big-endian: qubit 0 is the most significant bit, so
``|q0 q1 ... q(n-1)>`` lives at index ``q0*2**(n-1) + ... + q(n-1)``.
All values are immutable; every operation returns a new object.
"""
from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DimMismatchError,
    IndexOutOfRangeError,
    LengthMismatchError,
    NonFiniteError,
    NotHermitianError,
    NotNormalizedError,
    SegreError,
    StateFileError,
)

EPS_NORM = 1e-9
EPS_HERM = 1e-12
# pivot threshold, relative to the largest modulus
EPS_PIVOT = 1e-12


def _frozen(arr) -> np.ndarray:
    arr = np.array(arr, dtype=np.complex128, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized amplitude vector of ``num_qubits`` qubits.

    Build through :func:`new_state`, which validates; the constructor trusts
    its arguments.
    """

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "amplitudes", _frozen(self.amplitudes))

    def __eq__(self, other):
        if not isinstance(other, PureState):
            return NotImplemented
        return self.num_qubits == other.num_qubits and np.array_equal(self.amplitudes, other.amplitudes)

    def __hash__(self):
        return hash((self.num_qubits, self.amplitudes.tobytes()))

    def __len__(self):
        return self.amplitudes.shape[0]

    def __repr__(self):
        return f"PureState(num_qubits={self.num_qubits}, amplitudes={self.amplitudes!r})"

    @property
    def dim(self) -> int:
        return 1 << self.num_qubits

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def new_state(n: int, amps: Sequence[complex]) -> PureState:
    """Validate ``amps`` as an ``n``-qubit state. Never renormalizes."""
    if int(n) != n or n < 1:
        raise LengthMismatchError(f"qubit count must be a positive integer, got {n!r}")
    n = int(n)
    arr = np.asarray(amps, dtype=np.complex128).reshape(-1)
    if arr.shape[0] != 1 << n:
        raise LengthMismatchError(f"{n} qubits need {1 << n} amplitudes, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError("amplitudes contain NaN or infinity")
    total = float(np.sum(np.abs(arr) ** 2))
    if abs(total - 1.0) > EPS_NORM:
        raise NotNormalizedError(f"sum of squared moduli is {total!r}, expected 1")
    return PureState(n, arr)


def _from_vector(vec) -> PureState:
    vec = np.asarray(vec, dtype=np.complex128)
    n = vec.shape[0].bit_length() - 1
    return PureState(n, vec)


def basis_state(bits: str | Sequence[int]) -> PureState:
    """``basis_state("0101")`` is ``|0101>``."""
    bits = [int(b) for b in bits]
    if not bits or any(b not in (0, 1) for b in bits):
        raise SegreError(f"not a bitstring: {bits!r}")
    idx = int("".join(map(str, bits)), 2)
    vec = np.zeros(1 << len(bits), dtype=np.complex128)
    vec[idx] = 1.0
    return PureState(len(bits), vec)


def bell(kind: int = 0) -> PureState:
    """The four Bell states: 0 -> Phi+, 1 -> Phi-, 2 -> Psi+, 3 -> Psi-."""
    r = 1 / math.sqrt(2)
    table = {
        0: (r, 0, 0, r),
        1: (r, 0, 0, -r),
        2: (0, r, r, 0),
        3: (0, r, -r, 0),
    }
    return new_state(2, table[kind])


def ghz(n: int) -> PureState:
    vec = np.zeros(1 << n, dtype=np.complex128)
    vec[0] = vec[-1] = 1 / math.sqrt(2)
    return new_state(n, vec)


def random_state(n: int, rng: np.random.Generator) -> PureState:
    """Haar-random pure state (normalized complex Gaussian vector)."""
    vec = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return PureState(n, vec / np.linalg.norm(vec))


def random_product_state(n: int, rng: np.random.Generator) -> PureState:
    out = random_state(1, rng)
    for _ in range(n - 1):
        out = tensor(out, random_state(1, rng))
    return out


def tensor(a: PureState, b: PureState) -> PureState:
    vec = np.kron(a.amplitudes, b.amplitudes)
    return PureState(a.num_qubits + b.num_qubits, vec)


# --------------------------------------------------------------------------
# probability simplex


@dataclass(frozen=True, eq=False)
class SimplexPoint:
    probs: np.ndarray

    def __post_init__(self):
        p = np.array(self.probs, dtype=np.float64, copy=True)
        if np.any(p < 0) or abs(p.sum() - 1.0) > EPS_NORM:
            raise NotNormalizedError("simplex coordinates must be non-negative and sum to 1")
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)

    def __eq__(self, other):
        if not isinstance(other, SimplexPoint):
            return NotImplemented
        return np.array_equal(self.probs, other.probs)

    __hash__ = None

    @property
    def dim(self) -> int:
        return self.probs.shape[0] - 1


def probabilities(s: PureState) -> SimplexPoint:
    return SimplexPoint(np.abs(s.amplitudes) ** 2)


# --------------------------------------------------------------------------
# Pauli operators


class PauliOp(enum.Enum):
    R = "R"
    I = "I"  # noqa: E741
    S = "S"
    V = "V"

    @property
    def matrix(self) -> np.ndarray:
        return _PAULI[self]


def _const(rows):
    m = np.array(rows, dtype=np.complex128)
    m.setflags(write=False)
    return m


_PAULI = {
    PauliOp.R: _const([[1, 0], [0, -1]]),
    PauliOp.I: _const([[1, 0], [0, 1]]),
    PauliOp.S: _const([[0, 1], [1, 0]]),
    PauliOp.V: _const([[0, -1j], [1j, 0]]),
}


def pauli_apply(op: PauliOp, qubit_index: int, s: PureState) -> PureState:
    n = s.num_qubits
    if not 0 <= qubit_index < n:
        raise IndexOutOfRangeError(f"qubit index {qubit_index} outside 0..{n - 1}")
    psi = s.amplitudes.reshape((2,) * n)
    psi = np.tensordot(PauliOp(op).matrix, psi, axes=([1], [qubit_index]))
    psi = np.moveaxis(psi, 0, qubit_index)
    return PureState(n, psi.reshape(-1))


def pauli_decompose(h) -> tuple[float, float, float, float]:
    """Real coefficients ``(cI, cR, cS, cV)`` with ``h = cI*I + cR*R + cS*S + cV*V``."""
    h = np.asarray(h, dtype=np.complex128)
    if h.shape != (2, 2):
        raise DimMismatchError(f"expected a 2x2 matrix, got shape {h.shape}")
    if np.max(np.abs(h - h.conj().T)) > EPS_HERM:
        raise NotHermitianError("matrix is not Hermitian")
    c_i = (h[0, 0].real + h[1, 1].real) / 2
    c_r = (h[0, 0].real - h[1, 1].real) / 2
    c_s = (h[0, 1].real + h[1, 0].real) / 2
    c_v = (h[1, 0].imag - h[0, 1].imag) / 2
    return float(c_i), float(c_r), float(c_s), float(c_v)


def pauli_compose(coeffs) -> np.ndarray:
    c_i, c_r, c_s, c_v = coeffs
    return (
        c_i * _PAULI[PauliOp.I]
        + c_r * _PAULI[PauliOp.R]
        + c_s * _PAULI[PauliOp.S]
        + c_v * _PAULI[PauliOp.V]
    )


# --------------------------------------------------------------------------
# projective points


@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    """Homogeneous coordinates ``[x_0 : ... : x_dim]``."""

    coords: np.ndarray

    def __post_init__(self):
        c = _frozen(np.asarray(self.coords).reshape(-1))
        if c.shape[0] < 1:
            raise DimMismatchError("a projective point needs at least one coordinate")
        if not np.all(np.isfinite(c)):
            raise NonFiniteError("coordinates contain NaN or infinity")
        if not np.any(np.abs(c) > 0):
            raise SegreError("all coordinates are zero")
        object.__setattr__(self, "coords", c)

    @property
    def dim(self) -> int:
        return self.coords.shape[0] - 1

    def __len__(self):
        return self.coords.shape[0]

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return np.array_equal(self.coords, other.coords)

    def __hash__(self):
        return hash(self.coords.tobytes())

    def __repr__(self):
        return "[" + ":".join(_fmt(z) for z in self.coords) + "]"

    def canonical(self) -> np.ndarray:
        """Coordinates rescaled so the first significant entry equals 1."""
        mod = np.abs(self.coords)
        pivot = int(np.argmax(mod > EPS_PIVOT * mod.max()))
        return self.coords / self.coords[pivot]


def _fmt(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:g}"
    if z.real == 0:
        return f"{z.imag:g}i"
    return f"{z.real:g}{z.imag:+g}i"


def projective_equal(p: ProjectivePoint, q: ProjectivePoint, tol: float = 1e-9) -> bool:
    if p.dim != q.dim:
        raise DimMismatchError(f"dimensions differ: {p.dim} vs {q.dim}")
    return bool(np.max(np.abs(p.canonical() - q.canonical())) <= tol)


def as_point(s: PureState) -> ProjectivePoint:
    """The projective class of a state's amplitude vector."""
    return ProjectivePoint(s.amplitudes)


# --------------------------------------------------------------------------
# state files


def _reject_constant(name):
    raise NonFiniteError(f"non-finite number {name!r} in state file")


def state_from_json(text: str) -> PureState:
    """Parse ``{"qubits": n, "amplitudes": [[re, im], ...]}``."""
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise StateFileError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict) or "qubits" not in doc or "amplitudes" not in doc:
        raise StateFileError('state file needs "qubits" and "amplitudes" keys')
    n = doc["qubits"]
    pairs = doc["amplitudes"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise StateFileError(f'"qubits" must be a positive integer, got {n!r}')
    if not isinstance(pairs, list):
        raise StateFileError('"amplitudes" must be a list of [re, im] pairs')
    if len(pairs) != 1 << n:
        raise LengthMismatchError(f"{n} qubits need {1 << n} amplitude pairs, got {len(pairs)}")
    amps = []
    for pair in pairs:
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise StateFileError(f"amplitude entry {pair!r} is not a [re, im] pair")
        amps.append(complex(pair[0], pair[1]))
    return new_state(n, amps)


def state_to_json(s: PureState) -> str:
    pairs = [[float(z.real), float(z.imag)] for z in s.amplitudes]
    return json.dumps({"qubits": s.num_qubits, "amplitudes": pairs})


def load_state(path) -> PureState:
    with open(path, encoding="utf-8") as fh:
        return state_from_json(fh.read())
