"""k3lab: exact verification toolkit for a mirror family of elliptic K3 surfaces.

The library mechanizes every computation behind a two-parameter family of
K3 surfaces y^2 + z + 1/z + x^3 + a*x + b = 0 and its identification with
double covers of Kummer surfaces of products of elliptic curves:

* ``exact``        -- multivariate polynomials and rational functions over Q
* ``lattice``      -- integer Gram lattices, Dynkin graphs, invariants
* ``kummer``       -- divisor-class calculus on Kummer surfaces of E1 x E2
* ``toric``        -- the reflexive simplex, its dual, and the 19-curve tree
* ``weierstrass``  -- Weierstrass models and Kodaira fiber classification
* ``shioda_inose`` -- the explicit fibration polynomials and (a, b) formulas
* ``modular``      -- numeric j-function, Fricke pairs, modular polynomials
* ``cli``          -- the ``k3lab`` command line front end
"""

__version__ = "0.1.0"
