#!/usr/bin/env python3
"""Scan the one-parameter families: for tau on the imaginary axis and small
levels n, print the Fricke pair, the family coefficients (a, b), and the
degeneracy flag.  The n = 1 family degenerates along the whole axis (the
Fricke involution fixes it pointwise there), higher levels only at isolated
fixed points.

Usage: python scripts/fricke_scan.py [n] [steps]
"""

import sys

import mpmath

from k3lab import modular as md
from k3lab.weierstrass import is_degenerate_numeric


def main() -> int:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    steps = int(sys.argv[2]) if len(sys.argv) > 2 else 8
    print(f"level n = {n}")
    print(f"{'Im(tau)':>10s} {'j1':>16s} {'j2':>16s} "
          f"{'a':>14s} {'b':>14s}  degenerate")
    with mpmath.workprec(256):
        for k in range(steps):
            y = mpmath.mpf(1) + mpmath.mpf(k) / steps
            tau = mpmath.mpc(0, y)
            j1, j2 = md.fricke_pair(tau, n)
            a, b = md.family_coefficients(tau, n)
            flag = is_degenerate_numeric(a, b, tolerance=mpmath.mpf(10) ** -20)
            print(f"{mpmath.nstr(y, 6):>10s} {mpmath.nstr(mpmath.re(j1), 10):>16s} "
                  f"{mpmath.nstr(mpmath.re(j2), 10):>16s} "
                  f"{mpmath.nstr(mpmath.re(a), 8):>14s} "
                  f"{mpmath.nstr(mpmath.re(b), 8):>14s}  {flag}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
