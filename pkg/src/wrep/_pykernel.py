"""Pure-Python sparse kernels (dict-of-rows representation).

Same API as the compiled module ``wrep._ckernel``; ``wrep.sparse`` picks
whichever is importable.
"""

BACKEND = "python"


def matmul(arows, brows):
    """Product of two matrices given as {row: {col: value}} dicts."""
    out = {}
    for i, arow in arows.items():
        acc = {}
        for k, av in arow.items():
            brow = brows.get(k)
            if not brow:
                continue
            for j, bv in brow.items():
                prod = av * bv
                if j in acc:
                    acc[j] += prod
                else:
                    acc[j] = prod
        acc = {j: v for j, v in acc.items() if v}
        if acc:
            out[i] = acc
    return out


def add(arows, brows):
    """Entrywise sum of two dict-of-rows matrices."""
    out = {i: dict(row) for i, row in arows.items()}
    for i, brow in brows.items():
        row = out.setdefault(i, {})
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


def scale(arows, c):
    """Matrix times a scalar; c must be nonzero."""
    return {i: {j: v * c for j, v in row.items()} for i, row in arows.items()}
