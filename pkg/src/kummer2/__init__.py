"""Exact computations around Kummer surfaces Km(C x C) in characteristic two.

Subpackages and modules:

* ``gf2k``        -- GF(2^k) arithmetic, polynomials, Groebner colength
* ``liealg``      -- the restricted Lie algebra a x| b and its square
* ``kummer``      -- diagonal vector fields on C x C and the quotient surface
* ``lattice``     -- integral lattices, discriminant forms, overlattices
* ``f2quad``      -- quadratic forms over F_2
* ``curveconfig`` -- dual graphs of (-2)-curves and fibre checks
* ``cli``         -- command-line front end (``python -m kummer2``)
"""

__version__ = "0.1.0"
