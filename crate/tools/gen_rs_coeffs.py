#!/usr/bin/env python3
"""Generate Chebyshev tables for the Riemann-Siegel remainder coefficients.

The remainder of the Riemann-Siegel formula is modelled as

    R(t) = (-1)^(N-1) * (2pi/t)^(1/4) * sum_j C_j(p) * x^j,

with tau = sqrt(t/2pi), N = floor(tau), p = tau - N, x = 1/tau.

Rather than transcribing the classical closed forms for C_j (derivatives of
the psi function), each C_j(p) is extracted numerically: for fixed p we pick
several N, evaluate the true remainder siegelz(t) - mainsum(t) at high
precision, and solve the small Vandermonde system in x.  The extracted values
are then fit with Chebyshev series on p in [0, 1].

Output: ../crates/core/src/zeta/coeffs.rs plus a validation summary on stdout.
"""

import numpy as np
from numpy.polynomial import chebyshev as C
import mpmath as mp

mp.mp.dps = 60

N_LIST = [16, 20, 24, 32, 40, 48, 64, 80, 96, 128]
N_COEFFS = 8          # fit C0..C7, keep C0..C4
KEEP = 5
GRID = 96             # Chebyshev sample points in p
DEGREE = 56           # fitted Chebyshev degree


def main_sum(t, n_terms):
    th = mp.siegeltheta(t)
    s = mp.mpf(0)
    for n in range(1, n_terms + 1):
        s += mp.cos(th - t * mp.log(n)) / mp.sqrt(n)
    return 2 * s


def extract_cj(p):
    """Solve for C_0..C_{N_COEFFS-1} at fractional part p."""
    rows, rhs = [], []
    for N in N_LIST:
        tau = mp.mpf(N) + p
        t = 2 * mp.pi * tau ** 2
        rem = mp.siegelz(t) - main_sum(t, N)
        y = (-1) ** (N - 1) * mp.sqrt(tau) * rem
        x = 1 / tau
        rows.append([x ** j for j in range(N_COEFFS)])
        rhs.append(y)
    A = mp.matrix(rows)
    b = mp.matrix(rhs)
    sol = mp.qr_solve(A, b)[0]
    return [sol[j] for j in range(N_COEFFS)]


def cheb_nodes(n):
    k = np.arange(n)
    return 0.5 * (1.0 - np.cos(np.pi * (k + 0.5) / n))  # in (0,1)


def main():
    ps = cheb_nodes(GRID)
    vals = np.zeros((KEEP, GRID))
    for i, p in enumerate(ps):
        cj = extract_cj(mp.mpf(float(p)))
        for j in range(KEEP):
            vals[j, i] = float(cj[j])
        if i % 16 == 0:
            print(f"  extracted p-node {i}/{GRID}")

    u = 2.0 * ps - 1.0  # map [0,1] -> [-1,1]
    series = []
    for j in range(KEEP):
        cf = C.chebfit(u, vals[j], DEGREE)
        # truncate trailing noise
        keep = len(cf)
        while keep > 8 and abs(cf[keep - 1]) < 1e-18:
            keep -= 1
        series.append(cf[:keep])
        resid = np.max(np.abs(C.chebval(u, cf) - vals[j]))
        print(f"C{j}: degree {keep - 1}, fit residual {resid:.3e}")

    derivs = [C.chebder(series[j], 1, scl=2.0) for j in range(KEEP)]  # d/dp

    # validation at N values not used in the fit
    print("validating against siegelz ...")
    worst = mp.mpf(0)
    for N in [11, 37, 57, 200]:
        for pv in [0.07, 0.33, 0.52, 0.81, 0.97]:
            tau = mp.mpf(N) + mp.mpf(pv)
            t = 2 * mp.pi * tau ** 2
            u1 = 2 * pv - 1
            x = 1.0 / float(tau)
            r = 0.0
            for j in range(KEEP):
                r += float(C.chebval(u1, series[j])) * x ** j
            z = main_sum(t, N) + (-1) ** (N - 1) * r / mp.sqrt(tau)
            err = abs(z - mp.siegelz(t))
            worst = max(worst, err)
    print(f"max |Z - siegelz| on validation set: {mp.nstr(worst, 3)}")

    with open("../crates/core/src/zeta/coeffs.rs", "w") as f:
        f.write(
            "//! Chebyshev tables for the Riemann-Siegel remainder "
            "coefficients C0..C4\n"
            "//! and their p-derivatives, on p in [0, 1] "
            "(argument u = 2p - 1).\n"
            "//!\n"
            "//! Generated by tools/gen_rs_coeffs.py; do not edit by hand.\n\n"
        )
        for j in range(KEEP):
            f.write(f"pub(crate) const C{j}: &[f64] = &[\n")
            for v in series[j]:
                f.write(f"    {float(v)!r},\n")
            f.write("];\n\n")
        for j in range(KEEP):
            f.write(f"pub(crate) const C{j}_DP: &[f64] = &[\n")
            for v in derivs[j]:
                f.write(f"    {float(v)!r},\n")
            f.write("];\n\n")
    print("wrote crates/core/src/zeta/coeffs.rs")


if __name__ == "__main__":
    main()
