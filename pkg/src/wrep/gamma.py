"""The commutative subalgebra spanned by the A-coefficients: characters
on the pattern basis, joint-spectrum fibers, and the factorial fiber
bound."""

from fractions import Fraction
from itertools import combinations
from math import factorial

from .errors import InvariantViolation


def gamma_coefficients(rep):
    """All generator matrices a_r^{(k)}, keyed by (r, k)."""
    out = {}
    for r in range(1, rep.n + 1):
        for k in range(1, rep.pyramid.row_block_size(r) + 1):
            out[(r, k)] = rep.a_coefficient(r, k)
    return out


def gamma_commutes(rep):
    """True when every pair of A-coefficients commutes on the basis."""
    mats = list(gamma_coefficients(rep).values())
    return all(not a.commutator(b) for a, b in combinations(mats, 2))


def elementary_symmetric(values, k):
    values = list(values)
    acc = Fraction(0)
    for combo in combinations(values, k):
        term = Fraction(1)
        for v in combo:
            term *= v
        acc += term
    return acc


def character_of(rep, mu):
    """Character of the commutative subalgebra at the pattern mu:
    (r, k) -> e_k(l-values of row r).

    Cross-checked against the diagonal entries of the matrices, so the
    combinatorial formula and the acting operators must agree."""
    col = rep.index[mu.key()]
    chi = {}
    for r in range(1, rep.n + 1):
        lvals = mu.row_l_values(r)
        for k in range(1, len(lvals) + 1):
            predicted = elementary_symmetric(lvals, k)
            actual = rep.a_coefficient(r, k).get(col, col)
            if predicted != actual:
                raise InvariantViolation(
                    "character mismatch at pattern %r, a_%d^{(%d)}: "
                    "symmetric-function value %s vs matrix entry %s"
                    % (mu, r, k, predicted, actual)
                )
            chi[(r, k)] = predicted
    return chi


def fibers(rep):
    """Partition of the basis by joint character.

    Returns (fibers, all_singletons) where fibers maps the flattened
    character tuple to the list of basis patterns realizing it."""
    out = {}
    for mu in rep.basis:
        chi = character_of(rep, mu)
        key = tuple(chi[k] for k in sorted(chi))
        out.setdefault(key, []).append(mu)
    all_singletons = all(len(v) == 1 for v in out.values())
    return out, all_singletons


def fiber_bound(pyr):
    """prod_{r<n} (p_1 + ... + p_r)!, the conjectured fiber-size bound."""
    b = 1
    for r in range(1, pyr.n):
        b *= factorial(pyr.row_block_size(r))
    return b


def check_fiber_bound(rep):
    """Largest fiber size and whether it respects the factorial bound."""
    fib, _ = fibers(rep)
    biggest = max(len(v) for v in fib.values())
    return biggest, biggest <= fiber_bound(rep.pyramid)
