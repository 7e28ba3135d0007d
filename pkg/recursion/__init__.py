# Topological recursion for the Poincare polynomials F_{g,n}
