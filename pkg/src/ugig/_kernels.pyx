# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot loops in ``_kernels_py``; same signatures."""

from libc.stdlib cimport malloc, free

IMPLEMENTATION = "cython"


def girth_csr(int n, indptr, indices):
    cdef int *ip = <int *> malloc((n + 1) * sizeof(int))
    cdef int m = len(indices)
    cdef int *ix = <int *> malloc((m + 1) * sizeof(int))
    cdef int *dist = <int *> malloc((n + 1) * sizeof(int))
    cdef int *parent = <int *> malloc((n + 1) * sizeof(int))
    cdef int *queue = <int *> malloc((n + 1) * sizeof(int))
    cdef int i, k, root, head, tail, u, w, du, c
    cdef int best = 0
    try:
        for i in range(n + 1):
            ip[i] = indptr[i]
        for i in range(m):
            ix[i] = indices[i]
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
                if best and 2 * du + 1 >= best:
                    break
                for k in range(ip[u], ip[u + 1]):
                    w = ix[k]
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
    finally:
        free(ip)
        free(ix)
        free(dist)
        free(parent)
        free(queue)


cdef bint _next_permutation(int *a, int n):
    cdef int i = n - 2
    cdef int j, t
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = a[i]; a[i] = a[j]; a[j] = t
        i += 1
        j -= 1
    return True


def cross_free_search(rows, int ncols):
    cdef int nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return list(range(nrows)), list(range(ncols))
    if nrows > 16 or ncols > 16:
        raise ValueError("compiled cross-free search supports at most 16x16")
    cdef int perm[16]
    cdef unsigned int src[16]
    cdef unsigned int support[16]
    cdef unsigned int badmask[16]      # rows boxed in vertically at column j
    cdef int nstates = 1 << ncols
    cdef unsigned char *seen = <unsigned char *> malloc(nstates)
    cdef int *prev = <int *> malloc(nstates * sizeof(int))
    cdef int *stack = <int *> malloc(nstates * sizeof(int))
    cdef int i, j, k, top, placed, nxt, state
    cdef unsigned int bit, a, full = <unsigned int> (nstates - 1)
    cdef bint above, ok
    try:
        for i in range(nrows):
            perm[i] = i
            src[i] = rows[i]
        while True:
            if nrows == 1 or perm[0] < perm[nrows - 1]:
                for i in range(nrows):
                    support[i] = src[perm[i]]
                for j in range(ncols):
                    badmask[j] = 0
                    bit = 1u << j
                    above = False
                    for i in range(nrows):
                        if support[i] & bit:
                            above = True
                        elif above:
                            for k in range(i + 1, nrows):
                                if support[k] & bit:
                                    badmask[j] |= 1u << i
                                    break
                for state in range(nstates):
                    seen[state] = 0
                seen[0] = 1
                top = 0
                stack[top] = 0
                top += 1
                while top > 0 and not seen[full]:
                    top -= 1
                    placed = stack[top]
                    for j in range(ncols):
                        bit = 1u << j
                        if placed & bit:
                            continue
                        nxt = placed | bit
                        if seen[nxt]:
                            continue
                        ok = True
                        for i in range(nrows):
                            if badmask[j] & (1u << i):
                                a = placed & support[i]
                                if a and a != support[i]:
                                    ok = False
                                    break
                        if ok:
                            seen[nxt] = 1
                            prev[nxt] = j
                            stack[top] = nxt
                            top += 1
                if seen[full]:
                    order = []
                    state = full
                    while state:
                        j = prev[state]
                        order.append(j)
                        state &= ~(1 << j)
                    order.reverse()
                    return [perm[i] for i in range(nrows)], order
            if not _next_permutation(perm, nrows):
                return None
    finally:
        free(seen)
        free(prev)
        free(stack)
