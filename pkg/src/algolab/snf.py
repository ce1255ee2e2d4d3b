"""Smith normal form over the integers.

Used for the torsion structure of finitely generated abelian groups given by
relation matrices; the transforms are returned so callers can move element
coordinates into the diagonalized presentation.
"""


def smith_normal_form(a):
    """Returns (d, u, v) with u @ a @ v = d, u and v unimodular, d diagonal
    and d[i][i] dividing d[i+1][i+1]."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    d = [list(map(int, row)) for row in a]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        if i != j:
            d[i], d[j] = d[j], d[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in d:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        if q:
            d[dst] = [x + q * y for x, y in zip(d[dst], d[src])]
            u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, q):
        if q:
            for row in d:
                row[dst] += q * row[src]
            for row in v:
                row[dst] += q * row[src]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    n = min(rows, cols)

    def clear_from(t):
        """Diagonalize the block starting at (t, t)."""
        while t < n:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if d[i][j]:
                        pivot = (i, j)
                        break
                if pivot:
                    break
            if pivot is None:
                return
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            while True:
                # Euclidean passes; each swap strictly shrinks |pivot|.
                for i in range(t + 1, rows):
                    if d[i][t]:
                        add_row(t, i, -(d[i][t] // d[t][t]))
                        if d[i][t]:
                            swap_rows(t, i)
                for j in range(t + 1, cols):
                    if d[t][j]:
                        add_col(t, j, -(d[t][j] // d[t][t]))
                        if d[t][j]:
                            swap_cols(t, j)
                if all(d[i][t] == 0 for i in range(t + 1, rows)) and all(
                    d[t][j] == 0 for j in range(t + 1, cols)
                ):
                    break
            if d[t][t] < 0:
                negate_row(t)
            t += 1

    clear_from(0)
    # enforce the divisibility chain d[i] | d[i+1]
    while True:
        bad = None
        for i in range(n - 1):
            if d[i][i] and d[i + 1][i + 1] % d[i][i] != 0:
                bad = i
                break
        if bad is None:
            break
        add_col(bad + 1, bad, 1)
        clear_from(bad)
    return d, u, v


def diagonal_of(d):
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def abelian_group_structure(relations, ngens):
    """Invariant factors and free rank of Z^ngens / row-span(relations)."""
    if not relations:
        return [], ngens
    d, _, _ = smith_normal_form(relations)
    diag = [x for x in diagonal_of(d) if x != 0]
    torsion = [x for x in diag if x != 1]
    free_rank = ngens - len(diag)
    return torsion, free_rank
