"""Pure-Python sparse kernels.

A matrix is a list of columns; each column is a dict ``{row: value}`` holding
nonzero entries only.  ``p == 0`` means the values are exact rationals,
otherwise they are residues in ``0..p-1``.  The compiled module
``_ckernels`` implements the same two functions with the same contract.
"""

BACKEND = "python"


def matmul(f_cols, g_cols, nrows, p):
    """Columns of f @ g, where f has ``nrows`` rows."""
    out = []
    for gcol in g_cols:
        acc = {}
        for k, gv in gcol.items():
            for r, fv in f_cols[k].items():
                acc[r] = acc.get(r, 0) + fv * gv
        if p:
            col = {}
            for r, v in acc.items():
                v %= p
                if v:
                    col[r] = v
        else:
            col = {r: v for r, v in acc.items() if v}
        out.append(col)
    return out


def kron(f_cols, f_nrows, g_cols, g_nrows, p):
    """Columns of the Kronecker product f (x) g, left factor major."""
    out = []
    g_items = [list(gc.items()) for gc in g_cols]
    for fc in f_cols:
        f_items = list(fc.items())
        for gi in g_items:
            col = {}
            for r1, a in f_items:
                base = r1 * g_nrows
                if p:
                    for r2, b in gi:
                        col[base + r2] = a * b % p
                else:
                    for r2, b in gi:
                        col[base + r2] = a * b
            out.append(col)
    return out
