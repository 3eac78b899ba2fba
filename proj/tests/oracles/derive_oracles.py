"""Independent reference values frozen into the C++ tests.

Run with: python3 tests/oracles/derive_oracles.py
Uses mpmath/scipy/numpy only; shares no code with the library.
"""
import math

import mpmath as mp
import numpy as np
from scipy import stats

mp.mp.dps = 30
ln2 = mp.log(2)
gamma_e = mp.euler

print("spectrum (1..8) Y1 =", mp.mpf(1 + 2 + mp.log(6, 2) + 3) / 4)

psi0, psi2 = mp.mpf("3.423696"), mp.mpf("1.387207")
print("cov N=2^10 (5,5) =", psi0 / 32)
print("cov N=2^10 (4,6) =", 4 * psi2 / 64)

z = mp.sqrt(2) * mp.erfinv(mp.mpf("0.95"))
half = z * mp.mpf("0.5") * mp.mpf("0.5") / 10
print("z_0.025 =", z)
print("asymptotic CI H =", 0.5 - half, 0.5 + half, " alpha =", 1 / (0.5 + half), 1 / (0.5 - half))

print("C for alpha=2, sigma0=1:", gamma_e / (2 * ln2))
print("C for alpha=1, sigma0=3:", mp.log(3, 2) + gamma_e / ln2)

print("Pareto(1.5) P{X>10} =", mp.power(10, -1.5))
print("sigma_alpha Pareto(1,1) at 2 =", -2 * mp.log(1 - mp.mpf(1) / 2))
print("Pareto exact-rate x^a (sigma^a(x) - 1) at x=100:", 100 * (-100 * mp.log(1 - mp.mpf(1) / 100) - 1), "limit 1/2")

print("Gamma(1/2) =", mp.gamma(0.5))
print("log2 mean (alpha=1) =", gamma_e / ln2, " log2 var =", mp.pi**2 / (6 * ln2**2))
print("FrechetMaxProduct(1,1,2,1) cdf(1) =", mp.e**-2)

# Monte Carlo cross-checks of the moment identities (10^7 draws).
rng = np.random.default_rng(12345)
u = rng.random(10_000_000)
zf = (-np.log(u)) ** (-0.5)
print("MC E Z (alpha=2) =", zf.mean(), "+/-", zf.std() / math.sqrt(zf.size))
lz = np.log2(1.0 / (-np.log(u)))
print("MC E log2 Z (alpha=1) =", lz.mean(), "+/-", lz.std() / math.sqrt(lz.size))

# Rate constant: C1 * int x^-2 f'(x) exp(-1/x) dx with C1 = 1/2, f = log2.
rate = mp.quad(lambda x: x**-2 * (1 / (x * ln2)) * mp.e ** (-1 / x), [0, 1, mp.inf]) / 2
print("rate constant =", rate, " 1/(2 ln 2) =", 1 / (2 * ln2))

# Stable CDF oracles: Cauchy (alpha=1, beta=0) and Levy (alpha=1/2, beta=1).
print("Cauchy cdf(1), cdf(-3) =", stats.cauchy.cdf(1.0), stats.cauchy.cdf(-3.0))
print("Levy cdf(2), cdf(0.3) =", stats.levy.cdf(2.0), stats.levy.cdf(0.3))
for a, b, x in [(1.5, 0.0, 1.0), (1.5, 0.5, -0.7), (0.8, -0.3, 2.0), (1.0, 0.7, 1.3), (1.9, 1.0, 0.4)]:
    print(f"levy_stable S1 alpha={a} beta={b} cdf({x}) =", stats.levy_stable.cdf(x, a, b))
print("student t(3) cdf(2.5) =", stats.t.cdf(2.5, 3), "  t(0.5) cdf(-4) =", stats.t.cdf(-4.0, 0.5))
