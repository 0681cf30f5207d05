# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""Process matrices and the polarization-optics realization of the ENM channel.

The process matrix of a qubit map is ``F_ij = Tr[G_i Lambda(G_j)]`` in the
normalized Pauli basis ``G_i = sigma_i / sqrt(2)``. The optical setup mixes
two branches, each a polarization dephasing in a birefringent crystal framed
by wave plates, into the eternally non-Markovian channel with
``r -> ((1 + |kappa|) r1 / 2, (1 + |kappa|) r2 / 2, |kappa| r3)``.

"""

from collections import namedtuple
from dataclasses import dataclass

import numpy as np

from pyenm.lindblad import AffineMap
from pyenm.qstate import SIGMA, PauliBasis, QubitState

ProcessMatrix = namedtuple('ProcessMatrix', ['F', 'eigenvalues'])
SpectrumSample = namedtuple('SpectrumSample', ['s', 'moduli', 'product'])

# Precision used to detect ties between eigenvalue moduli
TIE_DECIMALS = 12


########################
#  Process matrix
########################

def _sorted_eigenvalues(F):
    eigenvalues = np.linalg.eigvals(F)
    order = np.lexsort((-eigenvalues.real, -np.round(np.abs(eigenvalues), TIE_DECIMALS)))
    return eigenvalues[order]


def f_matrix(channel):
    """Process matrix of a qubit map in the normalized Pauli basis.

    Parameters
    ----------
    channel <AffineMap>
        Hermiticity- and trace-preserving qubit map

    Returns
    -------
    ProcessMatrix
        Real 4x4 matrix ``F`` and its eigenvalues, sorted by decreasing
        modulus (ties by decreasing real part)

    Examples
    --------
    >>> from pyenm.lindblad import AffineMap
    >>> np.allclose(f_matrix(AffineMap.identity()).F, np.eye(4))
    True

    """
    G = PauliBasis.G
    images = np.array([channel.apply_operator(g) for g in G])
    F = np.real(np.einsum('iab,jba->ij', G, images))
    return ProcessMatrix(F=F, eigenvalues=_sorted_eigenvalues(F))


def basis_decompose(i):
    """Write ``G_i`` (i = 1, 2, 3) as ``(rho_1 - rho_2) / c`` with two states.

    Returns
    -------
    (QubitState, QubitState, float)
        The eigenstates of sigma_i with eigenvalues +1 and -1, and c = sqrt(2)

    """
    if i not in (1, 2, 3):
        raise ValueError('Pauli index must be 1, 2 or 3, got {!r}'.format(i))
    axis = np.zeros(3)
    axis[i - 1] = 1.0
    return QubitState.from_bloch(axis), QubitState.from_bloch(-axis), np.sqrt(2.0)


def f_matrix_from_states(channel):
    """Process matrix assembled from the channel outputs of legitimate input states.

    Column 0 uses the maximally mixed state, columns 1 to 3 use the pairs of
    :func:`basis_decompose`, as a tomography experiment would.
    """
    G = PauliBasis.G
    columns = [np.sqrt(2.0) * channel.apply_operator(0.5 * SIGMA[0])]
    for j in (1, 2, 3):
        rho_1, rho_2, c = basis_decompose(j)
        columns.append((channel.apply_operator(rho_1.rho) - channel.apply_operator(rho_2.rho)) / c)
    F = np.real(np.einsum('iab,jba->ij', G, np.array(columns)))
    return ProcessMatrix(F=F, eigenvalues=_sorted_eigenvalues(F))


########################
#  Optical elements
########################

def half_wave_plate(theta):
    """Jones matrix of a half-wave plate with fast axis at ``theta`` degrees."""
    c, s = np.cos(np.deg2rad(2 * theta)), np.sin(np.deg2rad(2 * theta))
    return np.array([[c, s], [s, -c]], dtype=complex)


def quarter_wave_plate(theta):
    """Jones matrix of a quarter-wave plate with fast axis at ``theta`` degrees."""
    c, s = np.cos(np.deg2rad(theta)), np.sin(np.deg2rad(theta))
    return np.array([[c ** 2 + 1j * s ** 2, (1 - 1j) * s * c],
                     [(1 - 1j) * s * c, s ** 2 + 1j * c ** 2]], dtype=complex)


def unitary_map(u):
    """Bloch rotation ``R_ij = Tr[sigma_i u sigma_j u^dagger] / 2`` of a 2x2 unitary."""
    u = np.asarray(u, dtype=complex)
    R = 0.5 * np.real(np.einsum('iab,bc,jcd,da->ij', SIGMA[1:], u, SIGMA[1:], u.conj().T))
    return AffineMap(M=R, v=np.zeros(3))


def dephasing_channel(kappa_modulus):
    """Polarization dephasing: transverse components contracted by ``|kappa|``."""
    return AffineMap(M=np.diag([kappa_modulus, kappa_modulus, 1.0]), v=np.zeros(3))


def mix_maps(maps, weights):
    """Convex combination of affine maps."""
    weights = np.asarray(weights, dtype=float)
    if np.any(weights < 0) or not np.isclose(weights.sum(), 1.0):
        raise ValueError('Weights must be non-negative and sum to one, got {}'.format(weights))
    return AffineMap(M=sum(w * m.M for w, m in zip(weights, maps)),
                     v=sum(w * m.v for w, m in zip(weights, maps)))


# Wave-plate settings of the two interferometer branches
BRANCH_UNITARIES = (half_wave_plate(22.5),
                    half_wave_plate(22.5) @ quarter_wave_plate(0.0))


########################
#  Optical model
########################

@dataclass(frozen=True)
class OpticalModel:
    """Gaussian frequency spectrum of the photons and birefringence of the crystal.

    Attributes
    ----------
    delta <float>
        Standard deviation of the frequency distribution (Hz)

    delta_n <float>
        Refractive index difference n_H - n_V

    omega0 <float>
        Central frequency (Hz)

    """

    delta: float = 1.44e12
    delta_n: float = 0.0089
    omega0: float = 2.33e15

    def __post_init__(self):
        if self.delta <= 0:
            raise ValueError('delta must be positive, got {}'.format(self.delta))

    def exponent(self, t):
        """Dimensionless decoherence exponent ``s = delta^2 delta_n^2 t^2 / 2``."""
        return 0.5 * (self.delta * self.delta_n * t) ** 2

    def time_for_exponent(self, s):
        if s < 0:
            raise ValueError('Exponent must be non-negative, got {}'.format(s))
        return np.sqrt(2.0 * s) / (self.delta * abs(self.delta_n)) if self.delta_n else np.inf


def kappa(model, t):
    """Decoherence factor ``exp(-s - i delta_n omega0 t)`` of the Gaussian spectrum.

    Examples
    --------
    >>> abs(kappa(OpticalModel(), 0.0))
    1.0

    """
    return complex(np.exp(-model.exponent(t) - 1j * model.delta_n * model.omega0 * t))


def _optical_channel(kappa_modulus):
    dephasing = dephasing_channel(kappa_modulus)
    branches = []
    for u in BRANCH_UNITARIES:
        branches.append(unitary_map(u.conj().T).compose(dephasing.compose(unitary_map(u))))
    return mix_maps(branches, [0.5, 0.5])


def enm_channel_from_optics(model, t):
    """Bloch map realized by the optical setup at interaction time ``t``.

    Each branch applies ``u``, the crystal dephasing and ``u^dagger``; the two
    branches are mixed with equal weights. Path phases are compensated, so only
    ``|kappa|`` enters.
    """
    return _optical_channel(abs(kappa(model, t)))


def spectrum_moduli(s):
    """Eigenvalue moduli ``(1, (1 + e^-s) / 2, (1 + e^-s) / 2, e^-s)`` of the optical channel."""
    if s < 0:
        raise ValueError('Exponent must be non-negative, got {}'.format(s))
    decay = np.exp(-s)
    return np.array([1.0, 0.5 * (1.0 + decay), 0.5 * (1.0 + decay), decay])


def process_spectrum(s):
    """Eigenvalue moduli of the simulated optical channel at exponent ``s`` and their product.

    Examples
    --------
    >>> round(process_spectrum(0.91).product, 6)
    0.197949

    """
    moduli = np.abs(f_matrix(_optical_channel(np.exp(-s))).eigenvalues)
    return SpectrumSample(s=float(s), moduli=moduli, product=float(np.prod(moduli)))
