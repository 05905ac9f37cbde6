# Finite abelian groups
