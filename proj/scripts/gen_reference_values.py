#!/usr/bin/env python3
"""Regenerate every frozen reference literal asserted by the C++ test suite.

All values are computed independently of the C++ code: closed forms and
zeta/theta spot values with mpmath arbitrary-precision arithmetic, divisor
statistics with an exact integer sieve.  Run and compare against the literals
in tests/ when touching the numerical kernels.
"""
import numpy as np
import mpmath as mp

mp.mp.dps = 30
GAMMA = mp.euler


def emit(name, val, digits=25):
    print(f"{name} = {mp.nstr(val, digits, strip_zeros=False)}")


print("== closed-form constants ==")
emit("euler_gamma", GAMMA)
emit("zeta_half", mp.zeta(0.5))
emit("zeta_3_2", mp.zeta(1.5))
emit("zeta_3", mp.zeta(3))
C_closed = 2 * mp.zeta(1.5) ** 4 / (3 * mp.sqrt(2 * mp.pi) * mp.zeta(3))
emit("C_mean_square", C_closed)
emit("sum_d2_n32", mp.zeta(1.5) ** 4 / mp.zeta(3))

print("\n== divisor error terms at small arguments ==")
# delta(2): sum_{n<=2} d(n) = 3 minus the smooth term at x = 2.
emit("delta_at_2", 3 - 2 * (mp.log(2) + 2 * GAMMA - 1))
# delta_star(1): (1/2) * (-d(1)+d(2)-d(3)+d(4)) = 2, minus x(log x + 2g - 1).
emit("delta_star_at_1", 2 - 2 * GAMMA)
# Single series term at x = 4: front * d(1) * cos(8 pi - pi/4), negated.
emit("voronoi_x4_n1", -mp.sqrt(2) / (2 * mp.pi))

print("\n== zeta(1/2+it) spot values ==")
for t in [0.5, 2, 5, 14.134725, 25, 29.99, 30, 47.3, 100, 314.159,
          1000.5, 10000, 123456.789, 1000000]:
    z = mp.zeta(mp.mpc(0.5, t))
    print(f"t={t!r}: re={mp.nstr(mp.re(z), 20)} im={mp.nstr(mp.im(z), 20)} "
          f"abs2={mp.nstr(abs(z) ** 2, 20)}")

print("\n== theta spot values ==")
for t in [0, 0.5, 1, 2, 5, 9.9, 10, 14.134725, 30, 100, 10000, 1000000]:
    print(f"t={t!r}: theta={mp.nstr(mp.siegeltheta(t), 22)}")

print("\n== mean-square reference integrals ==")
mp.mp.dps = 20
f = lambda t: abs(mp.zeta(mp.mpc(0.5, t))) ** 2
I2 = mp.quad(f, [0, 0.5, 1, 1.5, 2])
print("int_0^2 |zeta|^2   =", mp.nstr(I2, 18))
print("E(2)               =",
      mp.nstr(I2 - 2 * (mp.log(2 / (2 * mp.pi)) + 2 * GAMMA - 1), 18))
I100 = mp.mpf(0)
for a in range(100):
    I100 += mp.quad(f, [a, a + 0.5, a + 1])
print("int_0^100 |zeta|^2 =", mp.nstr(I100, 18))
print("E(100)             =",
      mp.nstr(I100 - 100 * (mp.log(100 / (2 * mp.pi)) + 2 * GAMMA - 1), 18))

print("\n== divisor sieve statistics ==")
NMAX = 10 ** 6
d = np.zeros(NMAX + 1, dtype=np.int64)
for k in range(1, NMAX + 1):
    d[k::k] += 1
print("d(12) =", d[12])
print("sum_{n<=10} d^2 =", int((d[1:11] ** 2).sum()))
print("sum_{n<=1e6} d  =", int(d[1 : NMAX + 1].sum()))
g = float(GAMMA)
delta_1e6 = d[1 : NMAX + 1].sum() - NMAX * (np.log(NMAX) + 2 * g - 1)
print("Delta(1e6)      =", delta_1e6)
print("prefix_alt[4]   =", int(-d[1] + d[2] - d[3] + d[4]))
d2 = d.astype(np.float64) ** 2
for X in [10 ** 4, 10 ** 5, 10 ** 6]:
    s = d2[1 : X + 1].sum()
    print(f"sum_{{n<={X}}} d^2 = {int(s)}  "
          f"ratio to X log^3 X / pi^2 = {s / (X * np.log(X) ** 3 / np.pi ** 2):.6f}")

print("\n== partial sums of the series constant ==")
pref = float(2 / (3 * mp.sqrt(2 * mp.pi)))
for M in [10, 1000]:
    ps = (d2[1 : M + 1] / np.arange(1, M + 1, dtype=np.float64) ** 1.5).sum()
    print(f"M={M}: series = {pref * ps:.9f}")
