"""Pure-Python versions of the hot loops; used when the compiled module is absent."""

from itertools import permutations

IMPLEMENTATION = "python"


def girth_csr(n, indptr, indices):
    """Shortest cycle length of an undirected simple graph in CSR form; 0 if acyclic."""
    best = 0
    dist = [-1] * n
    parent = [-1] * n
    queue = [0] * n
    for root in range(n):
        if best == 3:
            break
        for i in range(n):
            dist[i] = -1
        dist[root] = 0
        parent[root] = -1
        head = 0
        tail = 1
        queue[0] = root
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            # a cycle through root found at this depth can't be beaten deeper
            if best and 2 * du + 1 >= best:
                break
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    queue[tail] = w
                    tail += 1
                elif w != parent[u]:
                    c = du + dist[w] + 1
                    if best == 0 or c < best:
                        best = c
    return best


def _columns_orderable(ncols, support, bad):
    # DP over placed-column subsets; bad[j] lists rows whose zero at column j
    # is boxed in vertically, so that row's ones must all lie on one side of j.
    full = (1 << ncols) - 1
    reachable = {0: None}
    frontier = [0]
    while frontier:
        nxt = []
        for placed in frontier:
            for j in range(ncols):
                bit = 1 << j
                if placed & bit:
                    continue
                ok = True
                for i in bad[j]:
                    a = placed & support[i]
                    if a and a != support[i]:
                        ok = False
                        break
                if not ok:
                    continue
                new = placed | bit
                if new not in reachable:
                    reachable[new] = (placed, j)
                    nxt.append(new)
        frontier = nxt
    if full not in reachable:
        return None
    order = []
    state = full
    while state:
        prev, j = reachable[state]
        order.append(j)
        state = prev
    order.reverse()
    return order


def cross_free_search(rows, ncols):
    """Search row/column orders of a 0/1 matrix avoiding the cross pattern.

    ``rows`` holds one bitmask per row (bit j set when entry (i, j) is 1).
    Returns ``(row_order, col_order)`` or ``None``.
    """
    nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return list(range(nrows)), list(range(ncols))
    for perm in permutations(range(nrows)):
        if nrows > 1 and perm[0] > perm[-1]:
            continue  # the pattern is symmetric under reversing rows
        support = [rows[p] for p in perm]
        bad = [[] for _ in range(ncols)]
        for j in range(ncols):
            bit = 1 << j
            above = False
            for i in range(nrows):
                if support[i] & bit:
                    above = True
                elif above:
                    for k in range(i + 1, nrows):
                        if support[k] & bit:
                            bad[j].append(i)
                            break
        order = _columns_orderable(ncols, support, bad)
        if order is not None:
            return list(perm), order
    return None
