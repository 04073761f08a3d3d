"""Explicit matrices for the generator polynomials and exhaustive
verification of the defining relations on the pattern basis.

A_r(u) acts diagonally; B_r(u) and C_r(u) are rebuilt column by column from
their values at each pattern's own nodes u = -l_{ri}^{(k)} by Lagrange
interpolation (one term per node, zero when the shifted array fails
interlacing).
"""

from fractions import Fraction

from .arith import (
    UniPoly,
    poly_to_inv_series,
    series_arg_shift,
    series_inverse,
)
from .errors import DegenerateNodes, InvariantViolation, OrderError
from .patterns import entry_slots, enumerate_patterns, shift_pattern
from .sparse import SparseMatrix


class Representation:
    """Pattern basis plus the polynomial generator matrices."""

    def __init__(self, pyramid, weight, basis, A, B, C):
        self.pyramid = pyramid
        self.weight = weight
        self.basis = basis
        self.index = {mu.key(): idx for idx, mu in enumerate(basis)}
        self.dim = len(basis)
        self.A = A  # A[r] for r=1..n, UniPoly over SparseMatrix
        self.B = B  # B[r] for r=1..n-1
        self.C = C

    @property
    def n(self):
        return self.pyramid.n

    def a_coefficient(self, r, k):
        """Matrix a_r^{(k)}: coefficient of u^{(p_1+...+p_r)-k} in A_r(u)."""
        block = self.pyramid.row_block_size(r)
        c = self.A[r].coeff(block - k)
        return c if c is not None else SparseMatrix(self.dim)


def evaluate(pm, u0, dim=None):
    """Exact evaluation of a matrix-valued polynomial at a scalar point."""
    if not pm.coeffs:
        return SparseMatrix(dim) if dim is not None else None
    u0 = Fraction(u0)
    acc = pm.coeffs[-1]
    for c in reversed(pm.coeffs[:-1]):
        acc = acc * u0 + c
    return acc


def _lagrange_basis(nodes):
    """Scalar Lagrange basis polynomials for the given distinct nodes."""
    polys = []
    for j, xj in enumerate(nodes):
        num = UniPoly([Fraction(1)])
        den = Fraction(1)
        for m, xm in enumerate(nodes):
            if m == j:
                continue
            num = num * UniPoly([-xm, Fraction(1)])
            den *= xj - xm
        polys.append(UniPoly([c / den for c in num.coeffs]))
    return polys


def build_representation(pyramid, weight):
    """Construct the pattern basis and the A/B/C polynomial matrices."""
    basis = enumerate_patterns(weight)
    index = {mu.key(): idx for idx, mu in enumerate(basis)}
    N = len(basis)
    n = pyramid.n

    A = {}
    for r in range(1, n + 1):
        block = pyramid.row_block_size(r)
        coeff_entries = [dict() for _ in range(block + 1)]
        for col, mu in enumerate(basis):
            # eigenvalue prod_i lambda_{ri}(u-i+1) = prod_slots (u + l)
            eig = UniPoly.from_roots([-l for l in mu.row_l_values(r)])
            for d, c in enumerate(eig.coeffs):
                if c:
                    coeff_entries[d][(col, col)] = c
        A[r] = UniPoly(
            [SparseMatrix(N, {i: {j: v} for (i, j), v in ent.items()})
             for d, ent in enumerate(coeff_entries)]
        )

    B, C = {}, {}
    for r in range(1, n):
        block = pyramid.row_block_size(r)
        bco = [dict() for _ in range(block)]
        cco = [dict() for _ in range(block)]
        for col, mu in enumerate(basis):
            nodes = [-l for l in mu.row_l_values(r)]
            if len(set(nodes)) != len(nodes):
                raise DegenerateNodes(
                    "repeated l-values in row %d of pattern %r" % (r, mu)
                )
            lag = _lagrange_basis(nodes)
            for slot_idx, (i, k) in enumerate(entry_slots(pyramid, r)):
                u0 = nodes[slot_idx]
                up = shift_pattern(mu, r, i, k, +1)
                if up is not None:
                    coeff = Fraction(-1)
                    for j in range(1, r + 2):
                        coeff *= mu.lam(r + 1, j, u0 - j + 1)
                    if coeff:
                        tgt = index[up.key()]
                        for d, c in enumerate(lag[slot_idx].coeffs):
                            if c:
                                key = (tgt, col)
                                bco[d][key] = bco[d].get(key, Fraction(0)) + coeff * c
                down = shift_pattern(mu, r, i, k, -1)
                if down is not None:
                    coeff = Fraction(1)
                    for j in range(1, r):
                        coeff *= mu.lam(r - 1, j, u0 - j + 1)
                    if coeff:
                        tgt = index[down.key()]
                        for d, c in enumerate(lag[slot_idx].coeffs):
                            if c:
                                key = (tgt, col)
                                cco[d][key] = cco[d].get(key, Fraction(0)) + coeff * c
        B[r] = UniPoly([SparseMatrix.from_entries(
            N, ((i, j, v) for (i, j), v in ent.items())) for ent in bco])
        C[r] = UniPoly([SparseMatrix.from_entries(
            N, ((i, j, v) for (i, j), v in ent.items())) for ent in cco])

    rep = Representation(pyramid, weight, basis, A, B, C)
    _sanity_check(rep)
    return rep


def _sanity_check(rep):
    pyr = rep.pyramid
    for r in range(1, pyr.n + 1):
        block = pyr.row_block_size(r)
        if rep.A[r].degree != block:
            raise InvariantViolation("deg A_%d = %d, expected %d"
                                     % (r, rep.A[r].degree, block))
        if rep.A[r].coeffs[-1] != SparseMatrix.identity(rep.dim):
            raise InvariantViolation("A_%d is not monic" % r)
        if not all(m.is_diagonal() for m in rep.A[r].coeffs):
            raise InvariantViolation("A_%d is not diagonal" % r)
    for r in range(1, pyr.n):
        bound = pyr.row_block_size(r) - 1
        for name, p in (("B", rep.B[r]), ("C", rep.C[r])):
            if p.degree > bound:
                raise InvariantViolation(
                    "deg %s_%d = %d exceeds the bound %d" % (name, r, p.degree, bound)
                )


class SeriesGenerators:
    """Matrices of the series generators through a truncation order."""

    def __init__(self, rep, order, d, dprime, e, f, a):
        self.rep = rep
        self.order = order
        self._d = d          # {i: [M_0..M_R]}
        self._dprime = dprime
        self._e = e          # {i: [M_0..M_R]}, zeros below the start index
        self._f = f
        self.a_series = a    # kept for the gamma/center modules
        self._zero = SparseMatrix(rep.dim)
        self._id = SparseMatrix.identity(rep.dim)

    def _get(self, table, i, r):
        if r < 0:
            return self._zero
        if r > self.order:
            raise OrderError("index %d beyond the verified order %d" % (r, self.order))
        return table[i][r]

    def d(self, i, r):
        return self._get(self._d, i, r)

    def dprime(self, i, r):
        return self._get(self._dprime, i, r)

    def e(self, i, r):
        return self._get(self._e, i, r)

    def f(self, i, r):
        return self._get(self._f, i, r)

    def e_start(self, i):
        p = self.rep.pyramid
        return p.p(i + 1) - p.p(i) + 1


def generator_series(rep, R):
    """Recover d_i, d_i', e_i, f_i coefficient matrices through order R."""
    if R < 1:
        raise OrderError("truncation order must be >= 1")
    pyr = rep.pyramid
    n = pyr.n
    N = rep.dim
    ident = SparseMatrix.identity(N)
    one_series = None

    a = {}
    for i in range(1, n + 1):
        roots = [(j, pyr.p(j + 1)) for j in range(i)]
        a[i] = poly_to_inv_series(rep.A[i], roots, R)
        if a[i].coeffs[0] != ident:
            raise InvariantViolation("a_%d(u) does not start at the identity" % i)

    d = {}
    ainv = {}
    for i in range(1, n + 1):
        ainv[i] = series_inverse(a[i])
        left = ainv[i] * a[i]
        right = a[i] * ainv[i]
        if one_series is None:
            one_series = left
        for r in range(R + 1):
            want = ident if r == 0 else SparseMatrix(N)
            if left.coeffs[r] != want or right.coeffs[r] != want:
                raise InvariantViolation("a_%d inverse is not two-sided" % i)
        if i == 1:
            d[1] = a[1]
        else:
            d[i] = series_arg_shift(ainv[i - 1] * a[i], i - 1)

    dprime = {i: series_inverse(d[i]) for i in range(1, n + 1)}

    e, f = {}, {}
    for i in range(1, n):
        eroots = [(j, pyr.p(j + 1)) for j in range(i - 1)] + [(i - 1, pyr.p(i + 1))]
        eraw = poly_to_inv_series(rep.B[i], eroots, R)
        e[i] = series_arg_shift(ainv[i] * eraw, i - 1)
        froots = [(j, pyr.p(j + 1)) for j in range(i)]
        fraw = poly_to_inv_series(rep.C[i], froots, R)
        f[i] = series_arg_shift(fraw * ainv[i], i - 1)

    gens = SeriesGenerators(
        rep, R,
        {i: d[i].coeffs for i in d},
        {i: dprime[i].coeffs for i in dprime},
        {i: e[i].coeffs for i in e},
        {i: f[i].coeffs for i in f},
        a,
    )
    _series_invariants(gens)
    return gens


def _series_invariants(gens):
    rep = gens.rep
    pyr = rep.pyramid
    N = rep.dim
    zero = SparseMatrix(N)
    ident = SparseMatrix.identity(N)
    R = gens.order
    for i in range(1, pyr.n + 1):
        if gens.d(i, 0) != ident:
            raise InvariantViolation("d_%d^{(0)} is not the identity" % i)
        # defining property of d'
        for r in range(R + 1):
            acc = zero
            for t in range(r + 1):
                acc = acc + gens.d(i, t) * gens.dprime(i, r - t)
            if acc != (ident if r == 0 else zero):
                raise InvariantViolation("d_%d' fails its defining relation at r=%d"
                                         % (i, r))
    for r in range(pyr.p(1) + 1, R + 1):
        if gens.d(1, r) != zero:
            raise InvariantViolation("d_1^{(%d)} nonzero past p_1" % r)
    for i in range(1, pyr.n):
        start = gens.e_start(i)
        for r in range(0, min(start, R + 1)):
            if gens.e(i, r) != zero:
                raise InvariantViolation(
                    "e_%d^{(%d)} nonzero below the start index %d" % (i, r, start)
                )
        if gens.f(i, 0) != zero:
            raise InvariantViolation("f_%d^{(0)} nonzero" % i)


def _first_diff(got, want):
    delta = got - want
    for i, j, v in delta.entries():
        return "entry (%d,%d) differs by %s" % (i, j, v)
    return None


class RelationReport:
    def __init__(self):
        self.families = []  # (name, instances, failures)

    def add(self, name, instances, failures):
        self.families.append((name, instances, failures))

    @property
    def ok(self):
        return all(not fails for _, _, fails in self.families)

    def total_instances(self):
        return sum(c for _, c, _ in self.families)


def verify_defining_relations(rep, R, gens=None):
    """Evaluate every defining relation for all admissible indices <= R."""
    if gens is None or gens.order < 2 * R:
        gens = generator_series(rep, 2 * R)
    pyr = rep.pyramid
    n = pyr.n
    N = rep.dim
    zero = SparseMatrix(N)
    report = RelationReport()

    def estart(i):
        return gens.e_start(i)

    def check(name, cases):
        fails = []
        count = 0
        for label, got, want in cases:
            count += 1
            if got != want:
                fails.append("%s: %s" % (label, _first_diff(got, want)))
        report.add(name, count, fails)

    def cases_dd():
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for r in range(1, R + 1):
                    for s in range(1, R + 1):
                        yield ("i=%d j=%d r=%d s=%d" % (i, j, r, s),
                               gens.d(i, r).commutator(gens.d(j, s)), zero)
    check("[d,d]=0", cases_dd())

    def cases_ef():
        for i in range(1, n):
            for j in range(1, n):
                for r in range(estart(i), R + 1):
                    for s in range(1, R + 1):
                        lhs = gens.e(i, r).commutator(gens.f(j, s))
                        rhs = zero
                        if i == j:
                            for t in range(r + s):
                                rhs = rhs - gens.dprime(i, t) * gens.d(i + 1, r + s - t - 1)
                        yield ("i=%d j=%d r=%d s=%d" % (i, j, r, s), lhs, rhs)
    check("[e,f]", cases_ef())

    def cases_de():
        for i in range(1, n + 1):
            for j in range(1, n):
                sign = (1 if i == j else 0) - (1 if i == j + 1 else 0)
                for r in range(1, R + 1):
                    for s in range(estart(j), R + 1):
                        lhs = gens.d(i, r).commutator(gens.e(j, s))
                        rhs = zero
                        if sign:
                            for t in range(r):
                                rhs = rhs + gens.d(i, t) * gens.e(j, r + s - t - 1)
                            rhs = sign * rhs
                        yield ("i=%d j=%d r=%d s=%d" % (i, j, r, s), lhs, rhs)
    check("[d,e]", cases_de())

    def cases_df():
        for i in range(1, n + 1):
            for j in range(1, n):
                sign = (1 if i == j + 1 else 0) - (1 if i == j else 0)
                for r in range(1, R + 1):
                    for s in range(1, R + 1):
                        lhs = gens.d(i, r).commutator(gens.f(j, s))
                        rhs = zero
                        if sign:
                            for t in range(r):
                                rhs = rhs + gens.f(j, r + s - t - 1) * gens.d(i, t)
                            rhs = sign * rhs
                        yield ("i=%d j=%d r=%d s=%d" % (i, j, r, s), lhs, rhs)
    check("[d,f]", cases_df())

    def cases_ee_same():
        for i in range(1, n):
            for r in range(estart(i), R + 1):
                for s in range(estart(i), R + 1):
                    lhs = (gens.e(i, r).commutator(gens.e(i, s + 1))
                           - gens.e(i, r + 1).commutator(gens.e(i, s)))
                    rhs = gens.e(i, r) * gens.e(i, s) + gens.e(i, s) * gens.e(i, r)
                    yield ("i=%d r=%d s=%d" % (i, r, s), lhs, rhs)
    check("e same-row", cases_ee_same())

    def cases_ff_same():
        for i in range(1, n):
            for r in range(1, R + 1):
                for s in range(1, R + 1):
                    lhs = (gens.f(i, r + 1).commutator(gens.f(i, s))
                           - gens.f(i, r).commutator(gens.f(i, s + 1)))
                    rhs = gens.f(i, r) * gens.f(i, s) + gens.f(i, s) * gens.f(i, r)
                    yield ("i=%d r=%d s=%d" % (i, r, s), lhs, rhs)
    check("f same-row", cases_ff_same())

    def cases_ee_adj():
        for i in range(1, n - 1):
            for r in range(estart(i), R + 1):
                for s in range(estart(i + 1), R + 1):
                    lhs = (gens.e(i, r).commutator(gens.e(i + 1, s + 1))
                           - gens.e(i, r + 1).commutator(gens.e(i + 1, s)))
                    rhs = -(gens.e(i, r) * gens.e(i + 1, s))
                    yield ("i=%d r=%d s=%d" % (i, r, s), lhs, rhs)
    check("e adjacent", cases_ee_adj())

    def cases_ff_adj():
        for i in range(1, n - 1):
            for r in range(1, R + 1):
                for s in range(1, R + 1):
                    lhs = (gens.f(i, r + 1).commutator(gens.f(i + 1, s))
                           - gens.f(i, r).commutator(gens.f(i + 1, s + 1)))
                    rhs = -(gens.f(i + 1, s) * gens.f(i, r))
                    yield ("i=%d r=%d s=%d" % (i, r, s), lhs, rhs)
    check("f adjacent", cases_ff_adj())

    def cases_far():
        for i in range(1, n):
            for j in range(1, n):
                if abs(i - j) <= 1:
                    continue
                for r in range(estart(i), R + 1):
                    for s in range(estart(j), R + 1):
                        yield ("e i=%d j=%d r=%d s=%d" % (i, j, r, s),
                               gens.e(i, r).commutator(gens.e(j, s)), zero)
                for r in range(1, R + 1):
                    for s in range(1, R + 1):
                        yield ("f i=%d j=%d r=%d s=%d" % (i, j, r, s),
                               gens.f(i, r).commutator(gens.f(j, s)), zero)
    check("distant rows", cases_far())

    def cases_serre_e():
        for i in range(1, n):
            for j in range(1, n):
                if abs(i - j) != 1:
                    continue
                for r in range(estart(i), R + 1):
                    for s in range(estart(i), R + 1):
                        for t in range(estart(j), R + 1):
                            lhs = (gens.e(i, r).commutator(
                                      gens.e(i, s).commutator(gens.e(j, t)))
                                   + gens.e(i, s).commutator(
                                      gens.e(i, r).commutator(gens.e(j, t))))
                            yield ("i=%d j=%d r=%d s=%d t=%d" % (i, j, r, s, t),
                                   lhs, zero)
    check("Serre e", cases_serre_e())

    def cases_serre_f():
        for i in range(1, n):
            for j in range(1, n):
                if abs(i - j) != 1:
                    continue
                for r in range(1, R + 1):
                    for s in range(1, R + 1):
                        for t in range(1, R + 1):
                            lhs = (gens.f(i, r).commutator(
                                      gens.f(i, s).commutator(gens.f(j, t)))
                                   + gens.f(i, s).commutator(
                                      gens.f(i, r).commutator(gens.f(j, t))))
                            yield ("i=%d j=%d r=%d s=%d t=%d" % (i, j, r, s, t),
                                   lhs, zero)
    check("Serre f", cases_serre_f())

    def cases_quotient():
        for r in range(pyr.p(1) + 1, gens.order + 1):
            yield ("r=%d" % r, gens.d(1, r), zero)
    check("d_1 vanishing", cases_quotient())

    return report
