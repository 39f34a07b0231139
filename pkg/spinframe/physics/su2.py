"""
Álgebra SU(2) para spin-1/2: spinores, matrizes 2×2 e rotações de Pauli

Convenção de sinais (ħ = 1, I_j = σ_j/2), fixada uma única vez:

    R_j(a) = exp(−i σ_j a/2)
    e^{ I_j a/(iħ)} = R_j(a)
    e^{−I_j a/(iħ)} = R_j(−a)

Todos os construtores de propagadores usam apenas este mapeamento.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from spinframe.config import numerics
from spinframe.core.exceptions import DomainError

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
for _m in (PAULI_X, PAULI_Y, PAULI_Z):
    _m.setflags(write=False)


def _frozen_matrix(entries) -> np.ndarray:
    matrix = np.array(entries, dtype=complex)
    if matrix.shape != (2, 2):
        raise DomainError(f"Esperada matriz 2×2, recebido shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise DomainError("Matriz com entradas não finitas")
    matrix.setflags(write=False)
    return matrix


def _check_angle(angle: float) -> float:
    if not math.isfinite(angle):
        raise DomainError(f"Ângulo não finito: {angle}")
    return float(angle)


@dataclass(frozen=True)
class Spinor:
    """Estado de um spin-1/2 na base {|↑⟩, |↓⟩} de I_z"""

    up: complex
    down: complex

    def __post_init__(self):
        if not (np.isfinite(self.up) and np.isfinite(self.down)):
            raise DomainError("Spinor com amplitudes não finitas")
        object.__setattr__(self, "up", complex(self.up))
        object.__setattr__(self, "down", complex(self.down))

    @classmethod
    def from_array(cls, vector) -> "Spinor":
        up, down = np.asarray(vector, dtype=complex).reshape(2)
        return cls(up, down)

    def as_array(self) -> np.ndarray:
        return np.array([self.up, self.down], dtype=complex)

    @property
    def norm2(self) -> float:
        return abs(self.up) ** 2 + abs(self.down) ** 2

    def is_normalized(self, tol: float = numerics.NORM_TOL) -> bool:
        return abs(self.norm2 - 1.0) <= tol

    def normalize(self) -> "Spinor":
        norm = math.sqrt(self.norm2)
        if norm == 0.0:
            raise DomainError("Não é possível normalizar o vetor nulo")
        return Spinor(self.up / norm, self.down / norm)

    def inner(self, other: "Spinor") -> complex:
        """⟨self|other⟩"""
        return complex(np.vdot(self.as_array(), other.as_array()))


SPIN_UP = Spinor(1.0, 0.0)
SPIN_DOWN = Spinor(0.0, 1.0)


def basis_state(m: float) -> Spinor:
    """Autoestado |m⟩ de I_z, m ∈ {+1/2, −1/2}"""
    if m == 0.5:
        return SPIN_UP
    if m == -0.5:
        return SPIN_DOWN
    raise DomainError(f"Rótulo de spin inválido: {m} (use +1/2 ou −1/2)")


@dataclass(frozen=True, eq=False)
class Unitary2:
    """Matriz unitária 2×2 (rotação ou propagador, a menos de fase global)"""

    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", _frozen_matrix(self.entries))

    def __matmul__(self, other):
        if isinstance(other, Unitary2):
            return multiply(self, other)
        if isinstance(other, Spinor):
            return apply(self, other)
        return NotImplemented

    @property
    def off_diagonal(self) -> complex:
        """⟨↓|U|↑⟩"""
        return complex(self.entries[1, 0])

    @property
    def diagonal(self) -> complex:
        """⟨↑|U|↑⟩"""
        return complex(self.entries[0, 0])

    def transition(self) -> float:
        """|⟨↓|U|↑⟩|²"""
        return abs(self.entries[1, 0]) ** 2

    def survival(self) -> float:
        """|⟨↑|U|↑⟩|²"""
        return abs(self.entries[0, 0]) ** 2

    def det(self) -> complex:
        return complex(np.linalg.det(self.entries))

    def is_unitary(self, tol: float = numerics.NORM_TOL) -> bool:
        product = self.entries.conj().T @ self.entries
        return bool(np.all(np.abs(product - np.eye(2)) <= tol))

    def allclose(self, other: "Unitary2", tol: float = numerics.NORM_TOL) -> bool:
        """Igualdade entrada a entrada"""
        return bool(np.all(np.abs(self.entries - other.entries) <= tol))

    def equals_up_to_phase(self, other: "Unitary2", tol: float = numerics.NORM_TOL) -> bool:
        """Igualdade a menos de uma fase global e^{iφ}"""
        overlap = np.trace(other.entries.conj().T @ self.entries)
        if abs(overlap) == 0.0:
            return False
        phase = overlap / abs(overlap)
        return bool(np.all(np.abs(self.entries - phase * other.entries) <= tol))


@dataclass(frozen=True, eq=False)
class Hermitian2:
    """Operador hermitiano 2×2 (Hamiltoniano, operador de quantização); sem invariante unitário"""

    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", _frozen_matrix(self.entries))

    def is_hermitian(self, tol: float = numerics.NORM_TOL) -> bool:
        return bool(np.all(np.abs(self.entries - self.entries.conj().T) <= tol))

    def eigenvalues(self) -> np.ndarray:
        """Autovalores em ordem crescente"""
        return np.linalg.eigvalsh(self.entries)

    def commutator(self, other: "Hermitian2") -> np.ndarray:
        return self.entries @ other.entries - other.entries @ self.entries

    def conjugated(self, u: Unitary2) -> "Hermitian2":
        """U·A·U†"""
        return Hermitian2(u.entries @ self.entries @ u.entries.conj().T)


IDENTITY = Unitary2(np.eye(2))


def rot_z(angle: float) -> Unitary2:
    """R_z(a) = exp(−iσ_z a/2) = diag(e^{−ia/2}, e^{ia/2})"""
    half = _check_angle(angle) / 2
    return Unitary2([[np.exp(-1j * half), 0.0], [0.0, np.exp(1j * half)]])


def rot_y(angle: float) -> Unitary2:
    """R_y(a) = exp(−iσ_y a/2) = [[cos a/2, −sin a/2], [sin a/2, cos a/2]]"""
    half = _check_angle(angle) / 2
    c, s = math.cos(half), math.sin(half)
    return Unitary2([[c, -s], [s, c]])


def rot_x(angle: float) -> Unitary2:
    """R_x(a) = exp(−iσ_x a/2)"""
    half = _check_angle(angle) / 2
    c, s = math.cos(half), math.sin(half)
    return Unitary2([[c, -1j * s], [-1j * s, c]])


def multiply(a: Unitary2, b: Unitary2) -> Unitary2:
    """Produto matricial a·b"""
    return Unitary2(a.entries @ b.entries)


def dagger(u: Unitary2) -> Unitary2:
    """Conjugado transposto u†"""
    return Unitary2(u.entries.conj().T)


def product(*factors: Unitary2) -> Unitary2:
    """Produto ordenado da esquerda para a direita, como impresso nas fórmulas"""
    result = IDENTITY
    for factor in factors:
        result = multiply(result, factor)
    return result


def apply(u: Unitary2, psi: Spinor) -> Spinor:
    """U|ψ⟩"""
    return Spinor.from_array(u.entries @ psi.as_array())


def transition_probability(final_basis: Spinor, u: Unitary2, initial: Spinor) -> float:
    """
    |⟨m|U|m′⟩|²

    Args:
        final_basis: Estado de medida ⟨m|
        u: Propagador
        initial: Estado inicial |m′⟩

    Raises:
        DomainError: se algum dos estados não estiver normalizado
    """
    for name, state in (("final_basis", final_basis), ("initial", initial)):
        if not state.is_normalized():
            raise DomainError(f"Estado '{name}' não normalizado (|ψ|² = {state.norm2:.15g})")

    amplitude = np.vdot(final_basis.as_array(), u.entries @ initial.as_array())
    return float(abs(amplitude) ** 2)
