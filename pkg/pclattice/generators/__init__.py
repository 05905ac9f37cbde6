# Lattice generators
