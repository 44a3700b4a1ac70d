"""Independent reference computations used to freeze expected values.

Everything here is deliberately written against plain numpy primitives
(series sums, explicit loops, RK4 + spectral derivatives) so the tests
never validate the library against itself.
"""

import numpy as np

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
ID2 = np.eye(2, dtype=complex)


def expm_series(a, terms=30):
    """Matrix exponential by truncated Taylor series."""
    a = np.asarray(a, dtype=complex)
    out = np.eye(a.shape[0], dtype=complex)
    term = np.eye(a.shape[0], dtype=complex)
    for n in range(1, terms + 1):
        term = term @ a / n
        out = out + term
    return out


def kron_by_blocks(a, b):
    """Kronecker product assembled block by block."""
    a = np.asarray(a)
    b = np.asarray(b)
    m, n = a.shape
    p, q = b.shape
    out = np.zeros((m * p, n * q), dtype=complex)
    for i in range(m):
        for j in range(n):
            out[i * p:(i + 1) * p, j * q:(j + 1) * q] = a[i, j] * b
    return out


def matmul_by_loops(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=complex)
    for i in range(a.shape[0]):
        for j in range(b.shape[1]):
            acc = 0.0 + 0.0j
            for k in range(a.shape[1]):
                acc += a[i, k] * b[k, j]
            out[i, j] = acc
    return out


def spectral_dx(values, length):
    """Spectral x-derivative of (..., M, C) samples on a periodic axis."""
    m = values.shape[-2]
    k = np.fft.fftfreq(m, d=length / m) * 2 * np.pi
    return np.fft.ifft(1j * k[:, None] * np.fft.fft(values, axis=-2), axis=-2)


def rk4_integrate(rhs, y0, t_axis, substeps):
    """Classic RK4 with fixed substeps between requested sample times."""
    out = np.empty((len(t_axis),) + y0.shape, dtype=complex)
    out[0] = y = np.array(y0, dtype=complex)
    for i in range(1, len(t_axis)):
        dt = (t_axis[i] - t_axis[i - 1]) / substeps
        for _ in range(substeps):
            k1 = rhs(y)
            k2 = rhs(y + 0.5 * dt * k1)
            k3 = rhs(y + 0.5 * dt * k2)
            k4 = rhs(y + dt * k3)
            y = y + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
        out[i] = y
    return out


def smooth_periodic_samples(x, ncomp, rng, max_mode=2, scale=0.3):
    """A few low Fourier modes with random complex coefficients."""
    vals = np.zeros((len(x), ncomp), dtype=complex)
    for mode in range(-max_mode, max_mode + 1):
        c = rng.normal(size=ncomp) + 1j * rng.normal(size=ncomp)
        vals += np.exp(1j * mode * x)[:, None] * c[None, :] * scale
    return vals


def integrate_right_chiral_2comp(m_points, t_axis, w, rng, substeps=40, length=2 * np.pi,
                                 mass_sign=+1.0):
    """Reference solution of d_t phi = -sigma_x d_x phi + i w sigma_y phi*
    on a periodic x axis (the right-chiral two-component equation reduced
    to one spatial direction).  mass_sign=-1 gives the left-chiral mirror
    d_t phi = +sigma_x d_x phi - i w sigma_y phi*."""
    x = np.arange(m_points) * length / m_points
    phi0 = smooth_periodic_samples(x, 2, rng)

    def rhs(phi):
        dphi = spectral_dx(phi, length)
        return mass_sign * (-(dphi @ SX.T)) + mass_sign * 1j * w * (phi.conj() @ SY.T)

    return x, rk4_integrate(rhs, phi0, t_axis, substeps)


def integrate_coupled_1p1(m_points, t_axis, w, rng, substeps=40, length=2 * np.pi):
    """Reference solution of the coupled 1+1 chiral pair

        i d_t phi1 = -i d_x phi1 + w phi2
        i d_t phi2 = +i d_x phi2 + w phi1

    on a periodic x axis.  ``w`` is a constant or a callable w(x).
    Returns (x, values[k, n, 2])."""
    x = np.arange(m_points) * length / m_points
    w_x = np.asarray([w(xi) for xi in x]) if callable(w) else np.full(m_points, w)
    psi0 = smooth_periodic_samples(x, 2, rng)

    def rhs(psi):
        dpsi = spectral_dx(psi, length)
        out = np.empty_like(psi)
        out[:, 0] = -dpsi[:, 0] - 1j * w_x * psi[:, 1]
        out[:, 1] = +dpsi[:, 1] - 1j * w_x * psi[:, 0]
        return out

    return x, rk4_integrate(rhs, psi0, t_axis, substeps)
