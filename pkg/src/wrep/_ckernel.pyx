# cython: language_level=3
"""Compiled sparse kernels over arbitrary-precision rational objects.

Mirrors the API of wrep._pykernel; the payoff is the tight dict loops,
the arithmetic itself stays exact Python-object arithmetic.
"""

BACKEND = "cython"


def matmul(dict arows, dict brows):
    cdef dict out = {}
    cdef dict acc, arow, brow
    for i, arow in arows.items():
        acc = {}
        for k, av in arow.items():
            brow = <dict> brows.get(k)
            if brow is None or not brow:
                continue
            for j, bv in brow.items():
                prod = av * bv
                if j in acc:
                    acc[j] = acc[j] + prod
                else:
                    acc[j] = prod
        acc = {j: v for j, v in acc.items() if v}
        if acc:
            out[i] = acc
    return out


def add(dict arows, dict brows):
    cdef dict out = {}
    cdef dict row, brow
    for i, row in arows.items():
        out[i] = dict(row)
    for i, brow in brows.items():
        row = <dict> out.get(i)
        if row is None:
            out[i] = dict(brow)
            continue
        for j, bv in brow.items():
            if j in row:
                s = row[j] + bv
                if s:
                    row[j] = s
                else:
                    del row[j]
            else:
                row[j] = bv
        if not row:
            del out[i]
    return out


def scale(dict arows, c):
    cdef dict out = {}
    cdef dict row
    for i, row in arows.items():
        out[i] = {j: v * c for j, v in row.items()}
    return out
