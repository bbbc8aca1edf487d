"""Baby bead modules and the isotypical decomposition of H_0(Lie(V); Lie_{<=2}(V)^{(x) n}).

Exact rational arithmetic throughout (FLINT via python-flint).  The main
entry points:

    homology.decompose_h0      brute-force H_0 cokernels on bead modules
    closedform.general_isotypical   the explicit map computing a rho-slice
    freelie.h0_multilinear     the free Lie algebra oracle
"""

__version__ = "0.1.0"
