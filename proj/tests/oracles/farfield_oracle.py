"""Far-field oracle: exact free evolution of the ground state through the
free-particle propagator (Gauss-Legendre in x'), no FFT involved.

Prints sup_{|p|<=3pi} |(t/m)|psi(p t/m, t)|^2 - P1(p)| for t = 50, 100, 200
(a = m = hbar = 1).
"""
import numpy as np

xs, ws = np.polynomial.legendre.leggauss(400)
psi0 = np.cos(np.pi * xs / 2)


def P1(p):
    p = np.asarray(p, dtype=float)
    d = p - np.pi / 2
    out = np.empty_like(p)
    small = np.abs(np.abs(p) - np.pi / 2) < 1e-6
    out[~small] = (np.pi / 2) * np.cos(p[~small]) ** 2 / (p[~small] ** 2 - (np.pi / 2) ** 2) ** 2
    out[small] = 1 / (2 * np.pi)
    return out


def psi_t(x, t):
    kern = np.exp(1j * (x[:, None] - xs[None, :]) ** 2 / (2 * t))
    return np.sqrt(1 / (2j * np.pi * t)) * (kern * (ws * psi0)[None, :]).sum(axis=1)


ps = np.linspace(-3 * np.pi, 3 * np.pi, 6001)
for t in (50.0, 100.0, 200.0):
    dens = np.abs(psi_t(ps * t, t)) ** 2
    print(t, np.max(np.abs(t * dens - P1(ps))))

# spreading: Delta x(t)^2 = <x^2>_0 + <p^2> t^2 for a real initial state
x2 = 1 / 3 - 2 / np.pi**2
print("dx(50)", np.sqrt(x2 + (np.pi / 2) ** 2 * 50**2))
