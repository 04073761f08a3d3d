"""Pyramid combinatorics and the numeric parameters attached to a shape."""

from .errors import InvariantViolation, ShapeError


def _is_unimodal(q):
    k = 0
    while k + 1 < len(q) and q[k] <= q[k + 1]:
        k += 1
    while k + 1 < len(q) and q[k] >= q[k + 1]:
        k += 1
    return k == len(q) - 1


def rows_from_columns(q):
    """Row lengths p_i = #{j : q_j >= i}, sorted ascending."""
    q = tuple(int(x) for x in q)
    if not q or any(x <= 0 for x in q):
        raise ShapeError("columns must be a nonempty tuple of positive integers")
    if not _is_unimodal(q):
        raise ShapeError("column tuple %r is not unimodal" % (q,))
    n = max(q)
    p = [sum(1 for x in q if x >= i) for i in range(1, n + 1)]
    return tuple(sorted(p))


def columns_from_rows(p):
    """Left-justified column tuple of the pyramid with the given rows."""
    p = tuple(int(x) for x in p)
    if not p or any(x <= 0 for x in p):
        raise ShapeError("rows must be a nonempty tuple of positive integers")
    if any(p[i] > p[i + 1] for i in range(len(p) - 1)):
        raise ShapeError("row tuple %r is not nondecreasing" % (p,))
    n = len(p)
    return tuple(sum(1 for r in p if r >= j) for j in range(1, p[-1] + 1))


class Pyramid:
    """Unimodal column diagram; canonical form is the row tuple."""

    __slots__ = ("rows", "cols")

    def __init__(self, rows=None, cols=None):
        if (rows is None) == (cols is None):
            raise ShapeError("give exactly one of rows= or cols=")
        if cols is not None:
            self.rows = rows_from_columns(cols)
            self.cols = tuple(int(x) for x in cols)
        else:
            self.rows = tuple(int(x) for x in rows)
            self.cols = columns_from_rows(rows)  # validates too

    @property
    def n(self):
        return len(self.rows)

    @property
    def m(self):
        return sum(self.rows)

    def p(self, i):
        """Row length p_i, 1-based."""
        return self.rows[i - 1]

    def row_block_size(self, r):
        """p_1 + ... + p_r."""
        return sum(self.rows[:r])

    def __eq__(self, other):
        return isinstance(other, Pyramid) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Pyramid(rows=%r)" % (self.rows,)


def gk_parameters(pyr):
    """(k, m) with k the brick leg-length sum, m the brick count.

    Evaluates both the column formula sum q_i(q_i-1)/2 and the row formula
    (n-1)p_1 + ... + p_{n-1}; they must agree.
    """
    k_cols = sum(q * (q - 1) // 2 for q in pyr.cols)
    n = pyr.n
    k_rows = sum((n - i) * pyr.rows[i - 1] for i in range(1, n + 1))
    if k_cols != k_rows:
        raise InvariantViolation(
            "leg-length count disagrees: columns give %d, rows give %d"
            % (k_cols, k_rows)
        )
    return k_cols, pyr.m


def pbw_variable_count(pyr):
    """Number of graded generators t_{ij}^{(r)}: i>=j with r<=p_j, and
    i<j with p_j-p_i+1 <= r <= p_j."""
    n = pyr.n
    count = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i >= j:
                count += pyr.p(j)
            else:
                count += pyr.p(j) - (pyr.p(j) - pyr.p(i) + 1) + 1
    return count


def gk_dimension(pyr):
    """sum_i (2(n-i)+1) p_i, cross-checked against the PBW variable count."""
    n = pyr.n
    dim = sum((2 * (n - i) + 1) * pyr.rows[i - 1] for i in range(1, n + 1))
    if dim != pbw_variable_count(pyr):
        raise InvariantViolation(
            "GK dimension %d disagrees with the PBW variable count %d"
            % (dim, pbw_variable_count(pyr))
        )
    return dim


def gamma_generator_count(pyr):
    """Number of x-variables: sum_r (p_1+...+p_r)."""
    return sum(pyr.row_block_size(r) for r in range(1, pyr.n + 1))


def shift_group_rank(pyr):
    """Rank of the free abelian shift group: sum_{r<n} (p_1+...+p_r)."""
    return sum(pyr.row_block_size(r) for r in range(1, pyr.n))


def parse_pyramid_literal(text):
    """Parse 'rows: 1 2 3 5' or 'cols: 1 3 4 2 1'."""
    text = text.strip()
    if ":" not in text:
        raise ShapeError("pyramid literal must start with 'rows:' or 'cols:'")
    kind, _, rest = text.partition(":")
    kind = kind.strip().lower()
    try:
        values = tuple(int(tok) for tok in rest.split())
    except ValueError:
        raise ShapeError("pyramid literal entries must be integers: %r" % text)
    if kind == "rows":
        return Pyramid(rows=values)
    if kind == "cols":
        return Pyramid(cols=values)
    raise ShapeError("unknown pyramid literal kind %r" % kind)
