# Simplicial complexes, central symmetry, prisms and homology
