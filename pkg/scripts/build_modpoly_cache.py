#!/usr/bin/env python3
"""Prebuild the modular-polynomial cache (levels 1..3) and print a summary.

Usage: python scripts/build_modpoly_cache.py [cache_dir]
Honors K3LAB_CACHE_DIR when no directory is given.
"""

import sys
import time

from k3lab import modular as md


def main() -> int:
    cache_dir = sys.argv[1] if len(sys.argv) > 1 else None
    for n in (1, 2, 3):
        started = time.monotonic()
        phi = md.modular_polynomial(n, cache_dir)
        elapsed = time.monotonic() - started
        largest = max(abs(v) for v in phi.coefficients.values())
        print(f"level {n}: {len(phi.coefficients)} terms, "
              f"largest coefficient {largest}, {elapsed:.3f} s "
              f"-> {md.cache_path(n, cache_dir)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
