# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""State algebra for one and two qubits.

Conversions between density matrices and Bloch vectors, von Neumann entropies,
partial trace and partial transpose, trace norm, and seeded random states used
by the property suites.

"""

from dataclasses import dataclass

import numpy as np
from scipy import linalg

from pyenm.errors import BlochOutOfBall, NotAState

# Tolerance of positivity checks (accumulated ODE error headroom)
PSD_TOL = 1e-9
# Tolerance of exact algebraic identities
ALGEBRA_TOL = 1e-12


########################
#  Pauli basis
########################

class PauliBasis:
    """Identity and Pauli matrices, and the normalized basis ``G_i = sigma_i / sqrt(2)``.

    Attributes
    ----------
    sigma <numpy.ndarray>
        Array of shape (4, 2, 2) holding sigma_0 = I, sigma_x, sigma_y, sigma_z

    G <numpy.ndarray>
        Array of shape (4, 2, 2) holding the orthonormal basis, Tr[G_i G_j] = delta_ij

    Examples
    --------
    >>> from pyenm.qstate import PauliBasis
    >>> gram = np.einsum('iab,jba->ij', PauliBasis.G, PauliBasis.G)
    >>> np.allclose(gram, np.eye(4))
    True

    """

    sigma = np.array([[[1, 0], [0, 1]],
                      [[0, 1], [1, 0]],
                      [[0, -1j], [1j, 0]],
                      [[1, 0], [0, -1]]], dtype=complex)
    G = sigma / np.sqrt(2)


SIGMA = PauliBasis.sigma
# Levi-Civita symbol epsilon_ijk
LEVI_CIVITA = np.zeros((3, 3, 3))
LEVI_CIVITA[0, 1, 2] = LEVI_CIVITA[1, 2, 0] = LEVI_CIVITA[2, 0, 1] = 1.0
LEVI_CIVITA[0, 2, 1] = LEVI_CIVITA[2, 1, 0] = LEVI_CIVITA[1, 0, 2] = -1.0


########################
#  State types
########################

@dataclass(frozen=True, eq=False)
class QubitState:
    """Single-qubit state carried both as a density matrix and as a Bloch vector.

    Use :meth:`from_bloch` or :meth:`from_matrix` rather than the constructor,
    they validate the input and keep both representations consistent.

    """

    rho: np.ndarray
    bloch: np.ndarray

    @classmethod
    def from_bloch(cls, r):
        r = np.asarray(r, dtype=float).reshape(3)
        if np.linalg.norm(r) > 1 + PSD_TOL:
            raise BlochOutOfBall('Bloch vector {} has norm {:.12g} > 1'.format(r, np.linalg.norm(r)))
        rho = 0.5 * (SIGMA[0] + np.einsum('k,kab->ab', r, SIGMA[1:]))
        return cls(rho=rho, bloch=r)

    @classmethod
    def from_matrix(cls, rho):
        rho = np.asarray(rho, dtype=complex).reshape(2, 2)
        _check_density(rho, ALGEBRA_TOL)
        r = np.real(np.einsum('kab,ba->k', SIGMA[1:], rho))
        return cls(rho=0.5 * (rho + rho.conj().T), bloch=r)

    @property
    def purity(self):
        return 0.5 * (1 + float(self.bloch @ self.bloch))


@dataclass(frozen=True, eq=False)
class TwoQubitState:
    """Two-qubit density matrix in the basis |00>, |01>, |10>, |11> (A first)."""

    rho: np.ndarray

    @classmethod
    def from_matrix(cls, rho):
        rho = np.asarray(rho, dtype=complex).reshape(4, 4)
        _check_density(rho, PSD_TOL)
        return cls(rho=0.5 * (rho + rho.conj().T))


def _check_density(rho, tol):
    if not np.all(np.isfinite(rho)):
        raise NotAState('Density matrix has non-finite entries')
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise NotAState('Density matrix is not Hermitian')
    if abs(np.trace(rho) - 1) > tol:
        raise NotAState('Density matrix has trace {:.12g}'.format(np.real(np.trace(rho))))
    min_eig = linalg.eigvalsh(0.5 * (rho + rho.conj().T))[0]
    if min_eig < -PSD_TOL:
        raise NotAState('Density matrix has eigenvalue {:.3e} < 0'.format(min_eig))


def as_matrix(state):
    """Return the density matrix of a state object or of an array-like."""
    if hasattr(state, 'rho'):
        return state.rho
    return np.asarray(state, dtype=complex)


########################
#  Conversions
########################

def bloch_to_density(r):
    """Return the :class:`QubitState` with Bloch vector ``r``.

    Parameters
    ----------
    r <array-like>
        Real 3-vector with norm at most one

    Examples
    --------
    >>> bloch_to_density([0, 0, 1]).rho.real
    array([[1., 0.],
           [0., 0.]])

    """
    return QubitState.from_bloch(r)


def density_to_bloch(rho):
    """Return the Bloch vector r_k = Tr[sigma_k rho] of a qubit state."""
    if isinstance(rho, QubitState):
        return rho.bloch.copy()
    return QubitState.from_matrix(rho).bloch


def pure_state(alpha, beta=0.0):
    """Return the polarization state cos(alpha)|H> + exp(-i beta) sin(alpha)|V>.

    |H> and |V> are identified with |0> and |1>. Angles are in radians.
    """
    psi = np.array([np.cos(alpha), np.exp(-1j * beta) * np.sin(alpha)])
    return QubitState.from_matrix(np.outer(psi, psi.conj()))


def bell_state():
    """Return the projector on (|00> + |11>)/sqrt(2)."""
    phi = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
    return TwoQubitState(rho=np.outer(phi, phi.conj()))


def product_state(rho_a, rho_b):
    return TwoQubitState(rho=np.kron(as_matrix(rho_a), as_matrix(rho_b)))


########################
#  Entropies
########################

def von_neumann_entropy(rho):
    """Von Neumann entropy S(rho) = -Tr[rho log2 rho] in bits.

    Eigenvalues within the positivity tolerance of zero are clamped to zero.

    Parameters
    ----------
    rho <QubitState, TwoQubitState or numpy.ndarray>
        Density matrix of any dimension

    Examples
    --------
    >>> round(von_neumann_entropy(np.diag([0.75, 0.25])), 6)
    0.811278

    """
    rho = as_matrix(rho)
    p = linalg.eigvalsh(0.5 * (rho + rho.conj().T))
    if p[0] < -PSD_TOL:
        raise NotAState('Density matrix has eigenvalue {:.3e} < 0'.format(p[0]))
    p = p[p > PSD_TOL]
    return float(max(0.0, -np.sum(p * np.log2(p))))


def binary_entropy(p):
    """Binary entropy h(p) = -p log2 p - (1-p) log2 (1-p), vectorized."""
    p = np.clip(np.asarray(p, dtype=float), 0.0, 1.0)
    with np.errstate(divide='ignore', invalid='ignore'):
        out = (np.where(p > 0, -p * np.log2(p), 0.0)
               + np.where(p < 1, -(1 - p) * np.log2(1 - p), 0.0))
    return out if out.ndim else float(out)


########################
#  Partial operations
########################

def partial_trace(rho, subsystem='B'):
    """Trace out one qubit of a two-qubit state.

    Parameters
    ----------
    rho <TwoQubitState or numpy.ndarray>
        Two-qubit density matrix

    subsystem <'A' or 'B'>
        The qubit that is traced out

    Returns
    -------
    QubitState
        State of the remaining qubit

    """
    tensor = as_matrix(rho).reshape(2, 2, 2, 2)
    if subsystem == 'B':
        reduced = np.einsum('ajbj->ab', tensor)
    elif subsystem == 'A':
        reduced = np.einsum('iaib->ab', tensor)
    else:
        raise ValueError('subsystem must be "A" or "B", got {!r}'.format(subsystem))
    return QubitState.from_matrix(reduced)


def partial_transpose(rho, subsystem='B'):
    """Transpose one qubit of a two-qubit operator (``T_B`` by default)."""
    tensor = as_matrix(rho).reshape(2, 2, 2, 2)
    if subsystem == 'B':
        tensor = tensor.transpose(0, 3, 2, 1)
    elif subsystem == 'A':
        tensor = tensor.transpose(2, 1, 0, 3)
    else:
        raise ValueError('subsystem must be "A" or "B", got {!r}'.format(subsystem))
    return tensor.reshape(4, 4)


def trace_norm(m):
    """Trace norm ||M||_1 = Tr sqrt(M^dagger M), the sum of singular values."""
    m = np.atleast_2d(np.asarray(m, dtype=complex))
    if not np.any(m):
        return 0.0
    return float(np.sum(linalg.svdvals(m)))


def trace_distance(rho, sigma):
    """Trace norm of the difference of two operators (no factor 1/2)."""
    return trace_norm(as_matrix(rho) - as_matrix(sigma))


########################
#  Random states
########################

def random_bloch_vector(rng, pure=False):
    """Draw a Bloch vector uniformly from the ball (or the sphere if ``pure``)."""
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    if pure:
        return v
    return v * rng.uniform() ** (1.0 / 3.0)


def random_density_matrix(rng, dim=4, rank=None):
    """Draw a density matrix from the Ginibre ensemble of the given rank."""
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_x_state(rng, mixed_marginal=False):
    """Draw a two-qubit X-state (non-zero entries on the diagonal and anti-diagonal only).

    Parameters
    ----------
    rng <numpy.random.Generator>
        Random number generator

    mixed_marginal <bool>
        If True, the reduced state of qubit A is maximally mixed
        (rho_11 + rho_22 = rho_33 + rho_44 = 1/2)

    """
    if mixed_marginal:
        diag = np.concatenate([0.5 * rng.dirichlet([1.0, 1.0]), 0.5 * rng.dirichlet([1.0, 1.0])])
    else:
        diag = rng.dirichlet(np.ones(4))
    rho = np.diag(diag).astype(complex)
    phases = np.exp(1j * rng.uniform(0, 2 * np.pi, size=2))
    rho[0, 3] = rng.uniform() * np.sqrt(diag[0] * diag[3]) * phases[0]
    rho[1, 2] = rng.uniform() * np.sqrt(diag[1] * diag[2]) * phases[1]
    rho[3, 0] = np.conj(rho[0, 3])
    rho[2, 1] = np.conj(rho[1, 2])
    return TwoQubitState(rho=rho)
