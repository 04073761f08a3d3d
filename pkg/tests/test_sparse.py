from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wrep.errors import SingularLead
from wrep.sparse import SparseMatrix, use_kernel
from wrep import sparse as sparse_mod


def entry_list(dim):
    return st.lists(
        st.tuples(
            st.integers(0, dim - 1),
            st.integers(0, dim - 1),
            st.fractions(min_value=-9, max_value=9, max_denominator=5),
        ),
        max_size=12,
    )


def test_basic_algebra():
    a = SparseMatrix.from_entries(2, [(0, 0, 1), (0, 1, 2), (1, 1, 3)])
    b = SparseMatrix.from_entries(2, [(0, 0, 1), (1, 0, 4)])
    assert (a + b).get(1, 0) == 4
    assert (a * b).get(0, 0) == 9
    assert (2 * a).get(0, 1) == 4
    assert (a - a) == SparseMatrix(2)
    assert not (a - a)


def test_identity_and_scalar_part():
    i3 = SparseMatrix.identity(3)
    assert (Fraction(5, 2) * i3).scalar_part() == Fraction(5, 2)
    assert SparseMatrix(3).scalar_part() == 0
    assert SparseMatrix.from_entries(3, [(0, 0, 1)]).scalar_part() is None
    assert SparseMatrix.diagonal([1, 2, 3]).is_diagonal()


def test_inverse():
    a = SparseMatrix.from_entries(2, [(0, 0, 1), (0, 1, 2), (1, 0, 3), (1, 1, 4)])
    assert a * a.inverse() == SparseMatrix.identity(2)
    with pytest.raises(SingularLead):
        SparseMatrix.from_entries(2, [(0, 0, 1), (1, 0, 1)]).inverse()


def test_commutator():
    a = SparseMatrix.from_entries(2, [(0, 1, 1)])
    b = SparseMatrix.from_entries(2, [(1, 0, 1)])
    c = a.commutator(b)
    assert c.get(0, 0) == 1 and c.get(1, 1) == -1


@settings(max_examples=30)
@given(entry_list(5), entry_list(5))
def test_kernels_agree(ea, eb):
    a = SparseMatrix.from_entries(5, ea)
    b = SparseMatrix.from_entries(5, eb)
    results = {}
    original = sparse_mod.KERNEL_BACKEND
    try:
        for backend in ("python", "cython"):
            try:
                use_kernel(backend)
            except ImportError:
                continue
            results[backend] = (a * b, a + b)
    finally:
        use_kernel(original)
    if len(results) == 2:
        assert results["python"] == results["cython"]
