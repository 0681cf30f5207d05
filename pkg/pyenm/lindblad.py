# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""Qubit dynamics generated by a time-dependent decoherence matrix.

The dissipator is written in the Pauli basis,

.. math::

    \\mathcal{L}_t \\rho = \\frac{1}{2} \\sum_{ij} \\gamma_{ij}(t)
        \\left(\\sigma_j \\rho \\sigma_i - \\frac{1}{2}\\{\\sigma_i \\sigma_j, \\rho\\}\\right)
        - i [\\tfrac{\\omega}{2} \\sigma_z, \\rho],

so that the Bloch vector obeys the affine linear system
``dr/dt = (gamma^S - tr(gamma) 1) r + xi`` with ``xi_k = -i sum_ij eps_ijk gamma_ij``.
For the phase-covariant decoherence matrix this gives ``dr3/dt = -2a r3 - 2x``.

The module propagates the whole affine map ``r(t) = M_t r(0) + v_t`` rather than a
single state, so that Choi states of the total and of the intermediate maps are
available on the whole time grid.

"""

from collections import namedtuple
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import linalg
from scipy.integrate import solve_ivp
from scipy.optimize import minimize

from nipype import logging

from pyenm.errors import (IntegratorDiverged, NonHermitianGamma, OptimizerFailed,
                          SingularIntermediateMap)
from pyenm.qstate import (ALGEBRA_TOL, LEVI_CIVITA, PSD_TOL, SIGMA, TwoQubitState,
                          as_matrix, partial_trace, trace_distance)

LOGGER = logging.getLogger('nipype.utils')

# Generator of the rotation induced by H = (omega / 2) sigma_z on (r1, r2)
ROTATION = np.array([[0.0, -1.0, 0.0],
                     [1.0, 0.0, 0.0],
                     [0.0, 0.0, 0.0]])

# Beyond this condition number M_s is treated as singular
MAX_CONDITION_NUMBER = 1e12

DEFAULT_GRID_POINTS = 400
DEFAULT_GRID_START = 1e-4


########################
#  Generator data
########################

@dataclass(frozen=True, eq=False)
class DecoherenceMatrix:
    """Time-dependent decoherence matrix and optional sigma_z rotation rate.

    Attributes
    ----------
    gamma <callable>
        Function of time returning a 3x3 Hermitian matrix (rates, 1/time)

    hamiltonian_rate <float>
        Rate omega of the additional Hamiltonian H = (omega / 2) sigma_z

    Examples
    --------
    >>> from pyenm.lindblad import DecoherenceMatrix
    >>> depolarizing = DecoherenceMatrix(lambda t: 0.5 * np.eye(3))
    >>> depolarizing(1.0).shape
    (3, 3)

    """

    gamma: Callable[[float], np.ndarray]
    hamiltonian_rate: float = 0.0

    def __call__(self, t):
        return check_gamma(self.gamma(t))

    @classmethod
    def constant(cls, gamma, hamiltonian_rate=0.0):
        gamma = check_gamma(gamma)
        return cls(lambda t: gamma, hamiltonian_rate)


@dataclass(frozen=True, eq=False)
class BlochGenerator:
    """Affine generator of the Bloch vector, ``dr/dt = A r + xi``."""

    A: np.ndarray
    xi: np.ndarray


def check_gamma(gamma):
    """Return ``gamma`` as a complex 3x3 array after checking finiteness and Hermiticity."""
    gamma = np.asarray(gamma, dtype=complex)
    if gamma.shape != (3, 3):
        raise NonHermitianGamma('Decoherence matrix must be 3x3, got shape {}'.format(gamma.shape))
    if not np.all(np.isfinite(gamma)):
        raise NonHermitianGamma('Decoherence matrix has non-finite entries')
    if np.max(np.abs(gamma - gamma.conj().T)) > ALGEBRA_TOL:
        raise NonHermitianGamma('Decoherence matrix is not Hermitian')
    return gamma


def bloch_generator(gamma, omega=0.0):
    """Return the :class:`BlochGenerator` of a decoherence matrix.

    Parameters
    ----------
    gamma <numpy.ndarray>
        3x3 Hermitian decoherence matrix at a given time

    omega <float>
        Rotation rate of the Hamiltonian (omega / 2) sigma_z

    """
    gamma = check_gamma(gamma)
    # gamma^S = (gamma + gamma^T) / 2 is the real part for Hermitian gamma
    gamma_s = 0.5 * (gamma + gamma.T)
    A = np.real(gamma_s) - np.real(np.trace(gamma)) * np.eye(3) + omega * ROTATION
    xi = -1j * np.einsum('ijk,ij->k', LEVI_CIVITA, gamma)
    return BlochGenerator(A=A, xi=np.real(xi))


def lindbladian_apply(gamma, rho, omega=0.0):
    """Apply the generator to a qubit state and return d(rho)/dt.

    Parameters
    ----------
    gamma <numpy.ndarray>
        3x3 Hermitian decoherence matrix

    rho <QubitState or numpy.ndarray>
        Qubit density matrix

    omega <float>
        Rotation rate of the Hamiltonian (omega / 2) sigma_z

    Examples
    --------
    >>> from pyenm.qstate import bloch_to_density
    >>> drho = lindbladian_apply(np.diag([0, 0, 1]), bloch_to_density([1, 0, 0]))
    >>> np.round(drho.real, 12)
    array([[ 0. , -0.5],
           [-0.5,  0. ]])

    """
    gamma = check_gamma(gamma)
    rho = as_matrix(rho)
    paulis = SIGMA[1:]
    jump = np.einsum('ij,jab,bc,icd->ad', gamma, paulis, rho, paulis)
    decay = np.einsum('ij,iab,jbc->ac', gamma, paulis, paulis)
    dissipator = 0.5 * (jump - 0.5 * (decay @ rho + rho @ decay))
    hamiltonian = 0.5 * omega * SIGMA[3]
    return dissipator - 1j * (hamiltonian @ rho - rho @ hamiltonian)


########################
#  Affine Bloch maps
########################

@dataclass(frozen=True, eq=False)
class AffineMap:
    """Hermiticity- and trace-preserving qubit map acting as ``r -> M r + v``."""

    M: np.ndarray
    v: np.ndarray

    @classmethod
    def identity(cls):
        return cls(M=np.eye(3), v=np.zeros(3))

    def apply(self, r):
        return self.M @ np.asarray(r, dtype=float) + self.v

    def apply_operator(self, op):
        """Apply the linear extension of the map to any 2x2 operator."""
        op = np.asarray(op, dtype=complex)
        x0 = np.trace(op)
        x = np.einsum('kab,ba->k', SIGMA[1:], op)
        y = self.M @ x + x0 * self.v
        return 0.5 * (x0 * SIGMA[0] + np.einsum('k,kab->ab', y, SIGMA[1:]))

    def compose(self, first):
        """Return the map ``self o first`` (``first`` acts first)."""
        return AffineMap(M=self.M @ first.M, v=self.M @ first.v + self.v)

    def inverse(self):
        if np.linalg.cond(self.M) > MAX_CONDITION_NUMBER:
            raise SingularIntermediateMap('Linear part has condition number {:.3e}'.format(
                np.linalg.cond(self.M)))
        m_inv = np.linalg.inv(self.M)
        return AffineMap(M=m_inv, v=-m_inv @ self.v)


@dataclass(frozen=True, eq=False)
class PropagatedMap:
    """Affine maps ``(M_t, v_t)`` on an ascending time grid starting at 0.

    Attributes
    ----------
    times <numpy.ndarray>
        Time grid of shape (n,)

    M <numpy.ndarray>
        Linear parts, shape (n, 3, 3)

    v <numpy.ndarray>
        Affine parts, shape (n, 3)

    initial <numpy.ndarray>
        Bloch vector whose trajectory is reported by :attr:`trajectory`

    """

    times: np.ndarray
    M: np.ndarray
    v: np.ndarray
    initial: np.ndarray

    def index(self, t):
        k = int(np.argmin(np.abs(self.times - t)))
        if not np.isclose(self.times[k], t, rtol=1e-12, atol=1e-12):
            raise ValueError('Time {} is not on the propagation grid'.format(t))
        return k

    def at(self, t):
        k = self.index(t)
        return AffineMap(M=self.M[k], v=self.v[k])

    def maps(self):
        return [AffineMap(M=m, v=v) for m, v in zip(self.M, self.v)]

    def bloch(self, r0):
        return np.einsum('nij,j->ni', self.M, np.asarray(r0, dtype=float)) + self.v

    @property
    def trajectory(self):
        return self.bloch(self.initial)


def default_grid(t_end, points=DEFAULT_GRID_POINTS):
    """Return 0 followed by ``points`` log-spaced times on [1e-4, t_end]."""
    if t_end <= DEFAULT_GRID_START:
        return np.array([0.0, t_end]) if t_end > 0 else np.array([0.0])
    return np.concatenate([[0.0], np.geomspace(DEFAULT_GRID_START, t_end, points)])


def propagate(gen, r0=None, t_end=None, grid=None, rtol=1e-10, atol=1e-12, method='RK45'):
    """Integrate the Bloch affine map generated by ``gen``.

    The 12-dimensional system (the columns of ``M_t`` and ``v_t``) is integrated
    jointly with an adaptive Runge-Kutta scheme.

    Parameters
    ----------
    gen <DecoherenceMatrix>
        Generator of the dynamics

    r0 <array-like>
        Initial Bloch vector reported by ``PropagatedMap.trajectory`` (default: origin)

    t_end <float>
        Final time, used to build the default grid when ``grid`` is None

    grid <array-like>
        Ascending non-negative time points; 0 is prepended when missing

    rtol, atol <float>
        Integrator tolerances

    method <string>
        Any explicit method accepted by :func:`scipy.integrate.solve_ivp`

    Returns
    -------
    PropagatedMap

    Examples
    --------
    >>> from pyenm.lindblad import DecoherenceMatrix, propagate
    >>> pmap = propagate(DecoherenceMatrix.constant(np.eye(3)), t_end=1.0)
    >>> np.allclose(pmap.M[-1], np.exp(-2.0) * np.eye(3))
    True

    """
    if grid is None:
        if t_end is None or t_end < 0:
            raise ValueError('propagate needs t_end >= 0 or an explicit grid')
        grid = default_grid(t_end)
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or np.any(np.diff(grid) <= 0) or grid[0] < 0:
        raise ValueError('Time grid must be strictly ascending and non-negative')
    if grid[0] > 0:
        grid = np.concatenate([[0.0], grid])
    r0 = np.zeros(3) if r0 is None else np.asarray(r0, dtype=float)

    omega = gen.hamiltonian_rate

    def rhs(t, y):
        generator = bloch_generator(gen(t), omega)
        m = y[:9].reshape(3, 3)
        dm = generator.A @ m
        dv = generator.A @ y[9:] + generator.xi
        return np.concatenate([dm.ravel(), dv])

    y0 = np.concatenate([np.eye(3).ravel(), np.zeros(3)])
    n = grid.size
    if grid[-1] == 0:
        ys = y0[:, None]
    else:
        sol = solve_ivp(rhs, (0.0, grid[-1]), y0, method=method, t_eval=grid,
                        rtol=rtol, atol=atol)
        if not sol.success or sol.y.shape[1] != n or not np.all(np.isfinite(sol.y)):
            raise IntegratorDiverged('Propagation stopped: {}'.format(sol.message))
        LOGGER.debug('Propagated %d grid points with %d right-hand side evaluations', n, sol.nfev)
        ys = sol.y
    M = ys[:9].T.reshape(n, 3, 3)
    v = ys[9:].T
    return PropagatedMap(times=grid, M=M, v=v, initial=r0)


########################
#  Choi states
########################

def choi_of_map(channel):
    """Choi state ``(id x Lambda)|Phi+><Phi+|`` of an affine Bloch map.

    The reference qubit comes first and the channel output second, so the
    covariant closed form carries the shift ``-(c/4) diag(1, -1, 1, -1)``.
    The returned matrix is positive semidefinite iff the map is completely
    positive; it is not validated.

    """
    rho = np.zeros((4, 4), dtype=complex)
    for i in range(2):
        for j in range(2):
            unit = np.zeros((2, 2), dtype=complex)
            unit[i, j] = 1.0
            rho[2 * i:2 * i + 2, 2 * j:2 * j + 2] = 0.5 * channel.apply_operator(unit)
    return TwoQubitState(rho=rho)


def choi_min_eigenvalue(channel):
    rho = choi_of_map(channel).rho
    return float(linalg.eigvalsh(0.5 * (rho + rho.conj().T))[0])


def apply_local_channel(channel, rho_ab, subsystem='A'):
    """Apply ``channel`` to one qubit of a two-qubit operator.

    Parameters
    ----------
    channel <AffineMap>
        Qubit map

    rho_ab <TwoQubitState or numpy.ndarray>
        Two-qubit operator

    subsystem <'A' or 'B'>
        ``'A'`` computes (Lambda x id) rho, ``'B'`` computes (id x Lambda) rho

    """
    tensor = as_matrix(rho_ab).reshape(2, 2, 2, 2).copy()
    out = np.empty_like(tensor)
    for k in range(2):
        for l in range(2):
            if subsystem == 'A':
                out[:, k, :, l] = channel.apply_operator(tensor[:, k, :, l])
            elif subsystem == 'B':
                out[k, :, l, :] = channel.apply_operator(tensor[k, :, l, :])
            else:
                raise ValueError('subsystem must be "A" or "B", got {!r}'.format(subsystem))
    return TwoQubitState(rho=out.reshape(4, 4))


########################
#  Markovianity
########################

def is_cp_divisible(gen, grid):
    """Check positivity of the decoherence matrix on a grid.

    Returns
    -------
    (bool, float or None)
        Whether min eig gamma(t) >= -1e-9 at every grid point, and the
        earliest violating time otherwise

    """
    for t in np.asarray(grid, dtype=float):
        if linalg.eigvalsh(gen(t))[0] < -PSD_TOL:
            return False, float(t)
    return True, None


def intermediate_map(pmap, s, t):
    """Return ``V_{t,s}`` with ``Lambda_t = V_{t,s} o Lambda_s`` and its Choi min eigenvalue.

    A negative eigenvalue certifies that the step from ``s`` to ``t`` is not
    completely positive.

    """
    if t < s:
        raise ValueError('intermediate_map requires t >= s, got s={}, t={}'.format(s, t))
    lambda_s = pmap.at(s)
    lambda_t = pmap.at(t)
    step = lambda_t.compose(lambda_s.inverse())
    return step, choi_min_eigenvalue(step)


def divisibility_profile(pmap):
    """Choi min eigenvalue of the intermediate map between consecutive grid points."""
    values = []
    for s, t in zip(pmap.times[:-1], pmap.times[1:]):
        values.append(intermediate_map(pmap, s, t)[1])
    return np.array(values)


def trace_distance_profile(pmap, rho, sigma):
    """Trace distance between two evolved qubit states along the grid."""
    return np.array([trace_distance(channel.apply_operator(as_matrix(rho)),
                                    channel.apply_operator(as_matrix(sigma)))
                     for channel in pmap.maps()])


########################
#  Loss of correlations
########################

Proposition1Row = namedtuple('Proposition1Row', ['t', 'distance', 'witness_distance', 'bound', 'holds'])


def _ball_grid(points_per_axis):
    axis = np.linspace(-1.0, 1.0, points_per_axis)
    cube = np.stack(np.meshgrid(axis, axis, axis, indexing='ij'), axis=-1).reshape(-1, 3)
    return cube[np.linalg.norm(cube, axis=1) <= 1.0 + 1e-12]


def _bloch_operators(vectors):
    return 0.5 * (SIGMA[0] + np.einsum('nk,kab->nab', vectors, SIGMA[1:]))


def _clamp_to_ball(u):
    norm = np.linalg.norm(u)
    return u / norm if norm > 1.0 else u


def product_state_distance(rho_ab, starts=(), points_per_axis=9, tol=1e-6):
    """Minimize ``||rho_ab - sigma_A x sigma_B||_1`` over product states.

    A coarse grid over both Bloch balls is followed by Nelder-Mead refinement
    started from the best grid point and from every product state in ``starts``.

    Parameters
    ----------
    rho_ab <TwoQubitState or numpy.ndarray>
        Two-qubit operator

    starts <list of (array-like, array-like)>
        Additional pairs of Bloch vectors used as starting points

    points_per_axis <int>
        Resolution of the coarse grid on each Bloch-ball axis

    tol <float>
        Requested accuracy on the distance

    Returns
    -------
    (float, numpy.ndarray, numpy.ndarray)
        The distance and the optimal Bloch vectors of sigma_A and sigma_B

    """
    rho = as_matrix(rho_ab)
    ball = _ball_grid(points_per_axis)
    ops = _bloch_operators(ball)
    best = (np.inf, None, None)
    for i, op_a in enumerate(ops):
        products = np.einsum('ab,ncd->nacbd', op_a, ops).reshape(-1, 4, 4)
        norms = np.sum(np.abs(np.linalg.eigvalsh(rho[None] - products)), axis=1)
        j = int(np.argmin(norms))
        if norms[j] < best[0]:
            best = (float(norms[j]), ball[i], ball[j])

    def objective(params):
        r_a = _clamp_to_ball(params[:3])
        r_b = _clamp_to_ball(params[3:])
        sigma = np.kron(_bloch_operators(r_a[None])[0], _bloch_operators(r_b[None])[0])
        return float(np.sum(np.abs(linalg.eigvalsh(rho - sigma))))

    candidates = [(best[1], best[2])] + [(np.asarray(a, float), np.asarray(b, float)) for a, b in starts]
    converged = False
    for r_a, r_b in candidates:
        x0 = np.concatenate([r_a, r_b])
        res = minimize(objective, x0, method='Nelder-Mead',
                       options={'xatol': 1e-8, 'fatol': 1e-3 * tol,
                                'maxiter': 20000, 'maxfev': 40000})
        converged = converged or res.success
        if res.fun < best[0]:
            best = (float(res.fun), _clamp_to_ball(res.x[:3]), _clamp_to_ball(res.x[3:]))
    if not converged:
        raise OptimizerFailed('Product-state minimization did not converge')
    return best


def verify_proposition1(gen, rho_ab, grid, c, onset=0.0):
    """Check the exponential loss of correlations for ``gamma(t) >= c 1`` after ``onset``.

    For every grid time the minimal trace distance of ``(Lambda_t x id) rho_ab``
    to product states is compared with ``2 exp(-2 c (t - onset))``. The product
    state ``Phi_t(rho_A) x rho_B``, where ``Phi_t`` prepares the state with Bloch
    vector ``v_t``, is evaluated too and seeds the minimization.

    Returns
    -------
    list of Proposition1Row

    Examples
    --------
    >>> from pyenm.lindblad import DecoherenceMatrix, verify_proposition1
    >>> from pyenm.qstate import bell_state
    >>> rows = verify_proposition1(DecoherenceMatrix.constant(0.5 * np.eye(3)),
    ...                            bell_state(), [0.5, 1.0], c=0.5)  # doctest: +SKIP
    >>> all(row.holds for row in rows)  # doctest: +SKIP
    True

    """
    rho_ab = as_matrix(rho_ab)
    pmap = propagate(gen, grid=grid)
    rho_b = partial_trace(rho_ab, 'A')
    rows = []
    for t in np.asarray(grid, dtype=float):
        channel = pmap.at(t)
        evolved = apply_local_channel(channel, rho_ab, 'A').rho
        witness = np.kron(_bloch_operators(channel.v[None])[0], rho_b.rho)
        witness_distance = trace_distance(evolved, witness)
        marginal_a = partial_trace(evolved, 'B').bloch
        marginal_b = partial_trace(evolved, 'A').bloch
        distance, _, _ = product_state_distance(
            evolved, starts=[(channel.v, rho_b.bloch), (marginal_a, marginal_b)])
        bound = 2.0 * np.exp(-2.0 * c * (t - onset)) if t >= onset else np.inf
        holds = bool(distance <= bound + 1e-6)
        LOGGER.debug('t=%g: product-state distance %.3e, witness %.3e, bound %.3e',
                     t, distance, witness_distance, bound)
        rows.append(Proposition1Row(float(t), distance, witness_distance, bound, holds))
    return rows
