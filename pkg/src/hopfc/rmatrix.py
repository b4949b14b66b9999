"""4x4 R-matrix verification: quantum Yang-Baxter equation on the triple
tensor product, exp-of-r construction in the fundamental representation,
parameter limits, and triangularity."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .bialgebra import WedgeTensor
from .errors import DivergenceError, LookupError_, StructureError
from .series import (
    DEFAULT_FLOOR,
    EXACT_FLOOR,
    EXACT_ORDER,
    ParamSpace,
    Series,
    analytic_series,
)

F = Fraction


# ---------------------------------------------------------------------------
# matrices of Series
# ---------------------------------------------------------------------------

def mat_zero(space, n, order, floor):
    z = Series.zero(space, order, floor)
    return [[z for _ in range(n)] for _ in range(n)]


def mat_identity(space, n, order, floor):
    m = mat_zero(space, n, order, floor)
    one = Series.one(space, order, floor)
    for i in range(n):
        m[i][i] = one
    return m


def mat_mul(a, b):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            s = None
            for k in range(n):
                if a[i][k] and b[k][j]:
                    v = a[i][k] * b[k][j]
                    s = v if s is None else s + v
            row.append(s if s is not None else a[0][0] * 0)
        out.append(row)
    return out


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def mat_is_zero(a):
    return all(not x for row in a for x in row)


def mat_nonzero_entries(a):
    return [((i, j), str(x)) for i, row in enumerate(a) for j, x in enumerate(row) if x]


def kron(a, b):
    na, nb = len(a), len(b)
    out = []
    for i1 in range(na):
        for i2 in range(nb):
            row = []
            for j1 in range(na):
                for j2 in range(nb):
                    row.append(a[i1][j1] * b[i2][j2])
            out.append(row)
    return out


# ---------------------------------------------------------------------------
# QYBE and triangularity
# ---------------------------------------------------------------------------

def _space_of(r4):
    return r4[0][0].space, r4[0][0].order, r4[0][0].floor


def _embed_slots(r4, slots):
    """Embed a 4x4 (2x2 (x) 2x2) matrix into the 8x8 triple tensor product,
    acting on the two slots named in ``slots``."""
    space, order, floor = _space_of(r4)
    zero = Series.zero(space, order, floor)
    out = [[zero for _ in range(8)] for _ in range(8)]
    a, b = slots
    free = [s for s in range(3) if s not in slots][0]

    def unpack(idx):
        return ((idx >> 2) & 1, (idx >> 1) & 1, idx & 1)

    def pack(bits):
        return (bits[0] << 2) | (bits[1] << 1) | bits[2]

    for i in range(8):
        ib = unpack(i)
        for j in range(8):
            jb = unpack(j)
            if ib[free] != jb[free]:
                continue
            ri = (ib[a] << 1) | ib[b]
            rj = (jb[a] << 1) | jb[b]
            out[i][j] = r4[ri][rj]
    return out


def qybe_residual(r4):
    """R12 R13 R23 - R23 R13 R12 on the triple tensor product."""
    r12 = _embed_slots(r4, (0, 1))
    r13 = _embed_slots(r4, (0, 2))
    r23 = _embed_slots(r4, (1, 2))
    return mat_sub(mat_mul(mat_mul(r12, r13), r23),
                   mat_mul(mat_mul(r23, r13), r12))


def flip_slots(r4):
    """R21 = P R P with P the flip of the two tensor factors."""
    out = [[None] * 4 for _ in range(4)]
    for i1 in range(2):
        for i2 in range(2):
            for j1 in range(2):
                for j2 in range(2):
                    out[(i2 << 1) | i1][(j2 << 1) | j1] = r4[(i1 << 1) | i2][(j1 << 1) | j2]
    return out


def triangularity_residual(r4):
    """R21 R - identity (zero iff the matrix is triangular)."""
    space, order, floor = _space_of(r4)
    return mat_sub(mat_mul(flip_slots(r4), r4), mat_identity(space, 4, order, floor))


def rmat_limit(r4, name):
    """Zero-slice of one parameter in every entry; negative powers raise."""
    out = []
    for i, row in enumerate(r4):
        new_row = []
        for j, c in enumerate(row):
            k = c.space.index(name)
            bad = [e for e in c.terms if e[k] < 0]
            if bad:
                raise DivergenceError(
                    [c._render_term(e, c.terms[e]) for e in sorted(bad)],
                    context=f"entry ({i},{j}) under {name} -> 0",
                )
            new_row.append(c.zero_slice(name))
        out.append(new_row)
    return out


# ---------------------------------------------------------------------------
# fundamental representation and exp{r}
# ---------------------------------------------------------------------------

#: classical fundamental representation: generator name -> 2x2 rational matrix
FUNDAMENTAL_REP = {
    "J3": ((F(1), F(0)), (F(0), F(-1))),
    "Jp": ((F(0), F(1)), (F(0), F(0))),
    "Jm": ((F(0), F(0)), (F(1), F(0))),
    "I": ((F(1), F(0)), (F(0), F(1))),
}


def _rep_matrix(name, space, order, floor):
    raw = FUNDAMENTAL_REP[name]
    return [[Series.const(space, raw[i][j], order, floor) for j in range(2)]
            for i in range(2)]


def exp_wedge_rep(r: WedgeTensor, order, rep=None):
    """Evaluate a classical r-matrix in rep (x) rep and exponentiate.

    Entries of rho(r) carry parameter weight >= 1, so the exponential series
    terminates at the truncation order."""
    rep = FUNDAMENTAL_REP if rep is None else rep
    space = r.space
    floor = DEFAULT_FLOOR
    x = mat_zero(space, 4, order, floor)
    for (i, j), c in r.entries.items():
        ni, nj = r.gens.names[i], r.gens.names[j]
        a = _rep_matrix(ni, space, order, floor)
        b = _rep_matrix(nj, space, order, floor)
        c = c.truncate(order, floor)
        x = mat_add(x, mat_scale(mat_sub(kron(a, b), kron(b, a)), c))
    for row in x:
        for c in row:
            if c and (c.min_wdeg() or 0) <= 0:
                raise StructureError("exp argument has a weight-0 entry")
    out = mat_identity(space, 4, order, floor)
    pw = mat_identity(space, 4, order, floor)
    fact = F(1)
    for k in range(1, order + 1):
        pw = mat_mul(pw, x)
        fact *= k
        out = mat_add(out, mat_scale(pw, F(1) / fact))
    return out


# ---------------------------------------------------------------------------
# the two printed matrices
# ---------------------------------------------------------------------------

def _build_family_I(order, floor=DEFAULT_FLOOR):
    """Series mode in (a, a_plus): q = e^a, h = (a_plus/2)(e^a - 1)/a."""
    space = ParamSpace.make("a", "a_plus")
    one = Series.one(space, order, floor)
    zero = Series.zero(space, order, floor)
    a = Series.symbol(space, "a", order, floor)
    q = analytic_series("exp", a)
    h = Series.symbol(space, "a_plus", order, floor, coeff=F(1, 2)) \
        * analytic_series("expm1_over_arg", a)
    return [
        [one, h, -(q * h), h * h],
        [zero, q, one - q * q, q * h],
        [zero, zero, q, -h],
        [zero, zero, zero, one],
    ]


def _build_family_I_exact():
    """Exact mode: Q and h as independent polynomial symbols; the QYBE check
    becomes an exact polynomial identity."""
    space = ParamSpace.make(("Q", 1, False), ("h", 1, False))
    one = Series.one(space, EXACT_ORDER, EXACT_FLOOR)
    zero = Series.zero(space, EXACT_ORDER, EXACT_FLOOR)
    q = Series.symbol(space, "Q", EXACT_ORDER, EXACT_FLOOR)
    h = Series.symbol(space, "h", EXACT_ORDER, EXACT_FLOOR)
    return [
        [one, h, -(q * h), h * h],
        [zero, q, one - q * q, q * h],
        [zero, zero, q, -h],
        [zero, zero, zero, one],
    ]


def _build_family_II(order, floor=DEFAULT_FLOOR):
    """Series mode in (b, b_plus): p = (b_plus/2)(e^b - 1)/b."""
    space = ParamSpace.make("b", "b_plus")
    one = Series.one(space, order, floor)
    zero = Series.zero(space, order, floor)
    b = Series.symbol(space, "b", order, floor)
    eb = analytic_series("exp", b)
    emb = analytic_series("exp", -b)
    p = Series.symbol(space, "b_plus", order, floor, coeff=F(1, 2)) \
        * analytic_series("expm1_over_arg", b)
    return [
        [one, -(emb * p), p, -(emb * p * p)],
        [zero, emb, zero, emb * p],
        [zero, zero, eb, -p],
        [zero, zero, zero, one],
    ]


def _build_family_II_exact():
    """Exact mode: B = e^b invertible, p polynomial; floor -4 covers the
    B^{-3} reached by triple products."""
    space = ParamSpace.make(("B", 0, True), ("p", 1, False))
    one = Series.one(space, EXACT_ORDER, DEFAULT_FLOOR)
    zero = Series.zero(space, EXACT_ORDER, DEFAULT_FLOOR)
    b = Series.symbol(space, "B", EXACT_ORDER, DEFAULT_FLOOR)
    bm = b ** -1
    p = Series.symbol(space, "p", EXACT_ORDER, DEFAULT_FLOOR)
    return [
        [one, -(bm * p), p, -(bm * p * p)],
        [zero, bm, zero, bm * p],
        [zero, zero, b, -p],
        [zero, zero, zero, one],
    ]


_RMAT_BUILDERS = {
    "gl2.Iplus.standard": (_build_family_I, _build_family_I_exact),
    "gl2.II.nonstandard": (_build_family_II, _build_family_II_exact),
}


def rmat_names():
    return sorted(_RMAT_BUILDERS)


@lru_cache(maxsize=None)
def get_rmat(name, order=4, exact=False):
    if name not in _RMAT_BUILDERS:
        raise LookupError_(name, rmat_names())
    series_builder, exact_builder = _RMAT_BUILDERS[name]
    return exact_builder() if exact else series_builder(order)
