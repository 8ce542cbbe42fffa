"""Independent oracles for the frozen values in the C++ tests.

Run: python3 tests/oracles/derive_oracles.py
Everything here is written from the formulas directly (mpmath / numpy / fractions),
sharing no code with the library.
"""
from fractions import Fraction

import mpmath as mp
import numpy as np

mp.mp.dps = 40


def psi(t):
    t = mp.mpf(t)
    if t <= 0:
        return mp.mpf(0)
    if t >= 1:
        return mp.mpf(1)
    f = lambda s: mp.e ** (-1 / s)
    return f(t) / (f(t) + f(1 - t))


def chi(x):
    r = abs(mp.mpf(x))
    if r <= mp.mpf(5) / 4:
        return mp.mpf(1)
    if r >= mp.mpf(8) / 5:
        return mp.mpf(0)
    return psi((mp.mpf(8) / 5 - r) / (mp.mpf(8) / 5 - mp.mpf(5) / 4))


def omega(alpha, x):
    x = mp.mpf(x)
    return -x * abs(x) ** alpha


def main():
    c = chi(mp.mpf(3) / 2)
    print("chi(3/2)                 =", mp.nstr(c, 20))
    print("chi_k(2,3) = 1-chi(3/2)  =", mp.nstr(1 - c, 20))
    print("||cos3x||_{H^1}          =", mp.nstr(mp.sqrt(mp.pi * (4 * c**2 + 16 * (1 - c) ** 2)), 20))

    # inverse-resonance gap, alpha = 1, (xa, xb, x2, x3) = (40, 2, -45, 3)
    om = lambda x: Fraction(-x * abs(x))
    O = lambda a, b, c_: om(a) + om(b) + om(c_)
    gap = abs(1 / O(40, -45 + 2, 3) - 1 / O(42, -45, 3))
    print("inv gap (40,2,-45,3)     =", gap, "=", float(gap))

    # resonance windows |Omega| / (|xi1*|^a |xi3*|) over nonzero zero-sum triples, |xi_i| <= box
    for a in (0.25, 0.5, 0.75):
        for box in (256, 512):
            p = np.arange(1, box + 1, dtype=np.float64)
            lo, hi = np.inf, 0.0
            for q in range(1, box // 2 + 1):
                pp = p[(p >= q) & (p + q <= box)]
                top = pp + q
                val = np.abs(-(pp ** (1 + a)) - q ** (1 + a) + top ** (1 + a)) / (top**a * q)
                lo = min(lo, val.min())
                hi = max(hi, val.max())
            print(f"resonance window a={a} box={box}: [{lo:.17g}, {hi:.17g}]")

    # Hamiltonian of cos x + cos 2x at alpha = 1 by symbolic-style quadrature
    u = lambda x: mp.cos(x) + mp.cos(2 * x)
    quad = mp.mpf(1) / 2 * (mp.pi * 1 + mp.pi * 2)  # 1/2 int |D^{1/2} u|^2 = 1/2 sum_k |k| pi
    cubic = mp.quad(lambda x: u(x) ** 3, [0, 2 * mp.pi])
    print("H(cos x + cos 2x, a=1)   =", mp.nstr(quad - cubic / 3, 20), " pi =", mp.nstr(mp.pi, 20))

    # S_phi with phi = 1 on static cos x
    print("6 pi^4                   =", mp.nstr(6 * mp.pi**4, 20))


if __name__ == "__main__":
    main()
