# Integral ribbon graph counts N_{g,n}(p)
