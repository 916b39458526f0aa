"""Reference values frozen into the C++ unit tests.

Every number here comes from mpmath (arbitrary precision) or scipy's ODE integrator, both
independent of the library under test. Run `python3 freeze_values.py` to regenerate; the
printed values are pasted into tests/*.cpp.
"""
import numpy as np
from mpmath import mp, mpf, mpc, besselj, bessely, besseli, besselk, hyp2f1, findroot, diff, sqrt, tanh, sech, pi
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

mp.dps = 40


def show(label, value):
    if isinstance(value, mpc):
        print(f"{label}: {mp.nstr(value.real, 17)} {mp.nstr(value.imag, 17)}")
    else:
        print(f"{label}: {mp.nstr(value, 17)}")


print("# Bessel")
show("J(0.75, 3.3)", besselj(0.75, 3.3))
show("Y(0.75, 3.3)", bessely(0.75, 3.3))
show("J(0, 12.5)", besselj(0, 12.5))
show("J(2.5, 0.4)", besselj(2.5, 0.4))
show("J(3, 50)", besselj(3, 50))
show("J(7.5, 90)", besselj(7.5, 90))
show("I(0.25, 2.5)", besseli(0.25, 2.5))
show("I(1, 0.05)", besseli(1, 0.05))
show("K(0.75, 0.7)", besselk(0.75, 0.7))
show("K(0.5, 20)", besselk(0.5, 20))
show("K(1, 1e-3)", besselk(1, mpf("1e-3")))
show("J(0.5, 1+2i)", besselj(0.5, mpc(1, 2)))
show("I(0.75, 3-1i)", besseli(0.75, mpc(3, -1)))
show("J(0.5, 1e-40)", besselj(0.5, mpf("1e-40")))

print("# 2F1")
show("2F1(0.3,0.7;1.5;0.4)", hyp2f1(0.3, 0.7, 1.5, 0.4))
show("2F1(0.3,0.7;1.5;0.9)", hyp2f1(0.3, 0.7, 1.5, 0.9))
show("2F1(0.25+i,0.25-i;0.5;0.8)", hyp2f1(mpc(0.25, 1), mpc(0.25, -1), 0.5, 0.8))
show("2F1(1,1;2;0.9)", hyp2f1(1, 1, 2, 0.9))
show("2F1(0.5,0.5;1;0.99)", hyp2f1(0.5, 0.5, 1, 0.99))
show("2F1(-3,2.5;1.5;0.7)", hyp2f1(-3, 2.5, 1.5, 0.7))
show("2F1(0.2,0.3;1.25;1)", hyp2f1(0.2, 0.3, 1.25, 1))
show("2F1(1.5,-1.5;0.5;0.999)", hyp2f1(1.5, -1.5, 0.5, 0.999))

print("# exponential quantization roots of J_a(k) + 2k J_a'(k)")
for alpha in (0, mpf(1) / 2, 1):
    f = lambda k: besselj(alpha, k) + 2 * k * diff(lambda t: besselj(alpha, t), k)
    roots = []
    k = mpf("0.01")
    prev = f(k)
    while len(roots) < 4:
        k2 = k + mpf("0.01")
        cur = f(k2)
        if prev * cur < 0:
            roots.append(findroot(f, (k, k2), solver="anderson"))
        k, prev = k2, cur
    print(f"alpha={mp.nstr(alpha, 3)}:", " ".join(mp.nstr(r, 17) for r in roots))

print("# states")
# soliton MM n=2: nu = 0, even sector k=1: sech^{1/2} 2F1(3/2, -3/2; 1/2; tanh^2)
x = mpf("0.8")
show("soliton MM n=2 psi(0.8)", sech(x) ** mpf("0.5") * hyp2f1(1.5, -1.5, 0.5, tanh(x) ** 2))
# biquadratic BDD n=3: omega=2, nu=(1-3)/4=-1/2, odd sector k=1
x = mpf("1.7")
r = 1 + x * x
nu = mpf(-1) / 2
show("biquadratic BDD n=3 psi(1.7)", x * r ** (-(mpf(1) / 2 + nu + mpf(1) / 2)) * hyp2f1(1 + mpf(1) / 2 + 1, 2 * nu - mpf(1) / 2 - 1, 1.5, x * x / r))
# quadratic BDD scattering, even, E = 1.25 (V_inf = 1/4, s = 0)
x = mpf("1.3")
r = 1 + x * x
nuc = mpc(0, -0.5) * sqrt(mpf(1))
p = nuc + mpf(1) / 4
show("quadratic BDD scattering even E=1.25 psi(1.3)", r ** (-p) * hyp2f1(p, p, 0.5, x * x / r))
# quadratic LK scattering, odd, E = 0.75 (V_inf = -1/4, ab = 0)
p = mpf(1) / 2 + mpc(0, -0.5) * sqrt(mpf(1)) + mpf(1) / 4
show("quadratic LK scattering odd E=0.75 psi(1.3)", x * r ** (-p) * hyp2f1(p, p, 1.5, x * x / r))
# parabolic BDD, E = 2, x = 0.6 (alpha = 3/4)
x = mpf("0.6")
show("parabolic BDD E=2 psi(0.6)", x ** mpf(1.5) * besselj(0.75, sqrt(2) * x * x))
show("parabolic BDD E=-2 psi(0.6)", x ** mpf(1.5) * besseli(0.75, sqrt(2) * x * x))


print("# heterostructure, independent shooting with scipy")


def hetero(m1, m2, ell, a, b):
    s1, s2 = np.sqrt(m1), np.sqrt(m2)
    chi = (s2 + s1) / (s2 - s1) * ell
    eta = (s2 - s1) ** 2 / (16 * ell * ell)
    return chi, eta


def rhs_factory(chi, eta, a, b, e):
    def rhs(x, y):
        u = x + chi
        m = 4 * eta * u * u
        g, gp = 2 / u, -2 / (u * u)
        U = -((a + b) / 2 * gp - (a * b + (a + b) / 2) * g * g) / m
        return [y[1], (2 / u) * y[1] + m * (U - e) * y[0]]
    return rhs


def scatter(m1, m2, ell, a, b, e):
    chi, eta = hetero(m1, m2, ell, a, b)
    k1, k2 = np.sqrt(m1 * e), np.sqrt(m2 * e)
    y0 = [np.exp(1j * k2 * ell), 1j * k2 * np.exp(1j * k2 * ell)]
    sol = solve_ivp(rhs_factory(chi, eta, a, b, e), (ell, -ell), y0, method="DOP853", rtol=1e-13, atol=1e-15)
    psi, dpsi = sol.y[0, -1], sol.y[1, -1]
    A = 0.5 * (psi + dpsi / (1j * k1)) * np.exp(-1j * k1 * ell)
    B = 0.5 * (psi - dpsi / (1j * k1)) * np.exp(1j * k1 * ell)
    return abs(B / A) ** 2, abs(1 / A) ** 2


def mismatch(m1, m2, ell, a, b, e):
    chi, eta = hetero(m1, m2, ell, a, b)
    q1, q2 = np.sqrt(-m1 * e), np.sqrt(-m2 * e)
    sol = solve_ivp(rhs_factory(chi, eta, a, b, e), (-ell, ell), [1.0, q1], method="DOP853", rtol=1e-13, atol=1e-15)
    return (sol.y[1, -1] + q2 * sol.y[0, -1]) / abs(sol.y[0, -1])


print("chi, eta:", repr(hetero(0.5, 1.0, 1.0, 0, 0)))
for name, (a, b) in {"BDD": (0.0, 0.0), "ZK": (-0.5, -0.5)}.items():
    for e in (3.5, 7.0, 13.5, 54.0, 80.0, 1000.0):
        r2, t2 = scatter(0.5, 1.0, 1.0, a, b, e)
        print(f"{name} E={e}: R2={r2:.15e} T2={t2:.15e}")
for name, (a, b) in {"ZK": (-0.5, -0.5), "LK": (0.0, -0.5), "MM": (-0.25, -0.25)}.items():
    root = brentq(lambda e: mismatch(0.5, 1.0, 1.0, a, b, e), -0.05, -1e-4, xtol=1e-15)
    print(f"{name} shallow bound state: {root:.15e}")
print("BDD mismatch sign at -50, -1e-6:", mismatch(0.5, 1.0, 1.0, 0, 0, -50.0), mismatch(0.5, 1.0, 1.0, 0, 0, -1e-6))
root = brentq(lambda e: mismatch(0.05, 5.0, 2.0, -0.5, -0.5, e), -20, -5, xtol=1e-14)
print(f"ZK deep configuration (0.05, 5, 2) bound state: {root:.15e}")
