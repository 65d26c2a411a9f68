"""Independent oracles for the square-well momentum tests.

Uses closed-form Fourier integrals and mpmath adaptive quadrature only;
none of the C++ library code paths are involved. The printed numbers are
frozen into tests/*.cpp.
"""
import mpmath as mp

mp.mp.dps = 30
pi = mp.pi


def phi(n, p):
    # a = hbar = 1; continuous amplitude from the closed-form integral
    k = n * pi / 2
    def s(u):
        return mp.mpf(1) if u == 0 else mp.sin(u) / u
    if n % 2:
        return (s(k - p) + s(k + p)) / mp.sqrt(2 * pi)
    return -1j * (s(k - p) - s(k + p)) / mp.sqrt(2 * pi)


def density(n, p):
    return abs(phi(n, p)) ** 2


print("energy n=1..3", [n * n * pi**2 / 8 for n in (1, 2, 3)])
print("phi1(0)", phi(1, 0), 4 / (pi * mp.sqrt(2 * pi)))
print("P1(0)", density(1, 0), 8 / pi**3)
print("P1(pi/2)", density(1, pi / 2), 1 / (2 * pi))

x2 = mp.quad(lambda x: x * x * mp.cos(pi * x / 2) ** 2, [-1, 1])
dx = mp.sqrt(x2)
print("dx", dx, "product", dx * pi / 2)

# mass of P_n inside the union of windows |p -+ n pi/2| < pi/2
for n in (1, 2, 4, 8, 16, 32):
    c = n * pi / 2
    w = pi / 2
    lo, hi = c - w, c + w
    if lo < 0:  # windows overlap through p = 0
        pts = [0] + [c + j * pi / 2 for j in range(-1, 2) if c + j * pi / 2 > 0]
        mass = 2 * mp.quad(lambda p: density(n, p), sorted(set(pts)))
    else:
        pts = [lo + j * (hi - lo) / 8 for j in range(9)]
        mass = 2 * mp.quad(lambda p: density(n, p), pts)
    print("window n=%d mass=%s defect=%s" % (n, mp.nstr(mass, 17), mp.nstr(1 - mass, 17)))

# mass of P_1 inside |p| <= 40 (grid integral sanity)
print("mass |p|<40", 2 * mp.quad(lambda p: density(1, p), mp.linspace(0, 40, 41)))
