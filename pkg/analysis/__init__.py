# Cross-validation of the recursion against independent formulas
