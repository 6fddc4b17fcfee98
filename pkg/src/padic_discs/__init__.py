"""p-adic hyperbolic discs: exact Hilbert distances, the tree projection and
the triangle/hexagonal-lattice picture."""
