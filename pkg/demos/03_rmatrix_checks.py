"""4x4 R-matrices: Yang-Baxter, triangularity, and the exp{r} construction.

Two matrices are in the catalog.  The first belongs to the two-parameter
standard-plus-twist gl(2) family; it satisfies the quantum Yang-Baxter
equation but is not triangular, and becomes triangular only in the limit
where the standard parameter vanishes.  The second belongs to the pure twist
family; it is triangular, and is exactly the exponential of the classical
r-matrix evaluated in the fundamental representation.

Both matrices are checked two ways: as truncated series in the deformation
parameters, and exactly, with e^{a} traded for a fresh polynomial symbol so
the QYBE residual is a polynomial identity with no truncation at all.
"""

from hopfc import catalog, rmatrix


def zero(m):
    return rmatrix.mat_is_zero(m)


for name in rmatrix.rmat_names():
    print(name)
    Rs = rmatrix.get_rmat(name, order=6)
    Re = rmatrix.get_rmat(name, exact=True)
    print("  QYBE, series N=6:", zero(rmatrix.qybe_residual(Rs)))
    print("  QYBE, exact:     ", zero(rmatrix.qybe_residual(Re)))
    print("  triangular:      ", zero(rmatrix.triangularity_residual(Rs)))
    print()

print("limits of the two-parameter matrix:")
R = rmatrix.get_rmat("gl2.Iplus.standard", order=6)
Ra = rmatrix.rmat_limit(R, "a")
print("  a -> 0:       QYBE", zero(rmatrix.qybe_residual(Ra)),
      "| triangular", zero(rmatrix.triangularity_residual(Ra)))
Rp = rmatrix.rmat_limit(R, "a_plus")
print("  a_plus -> 0:  QYBE", zero(rmatrix.qybe_residual(Rp)))
print()

r = catalog.classical_r("gl2.II.nonstandard")
E = rmatrix.exp_wedge_rep(r, order=6)
diff = rmatrix.mat_sub(E, rmatrix.get_rmat("gl2.II.nonstandard", order=6))
print("exp{rho(x)rho(r)} equals the printed twist matrix:", zero(diff))
