# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops for the exhaustive searches.

Both kernels release the GIL so a thread pool can run chunks side by side.
Tables hold F_p values in the narrowest unsigned type that fits p (see
``kernels.table_dtype``); arithmetic is done in int64.
"""

from libc.stdint cimport int64_t, uint8_t, uint16_t, uint32_t
from libc.stdlib cimport malloc, free

ctypedef fused elem_t:
    uint8_t
    uint16_t
    uint32_t


def scan(const elem_t[:, :, ::1] table, int64_t p,
         const elem_t[::1] base, int64_t base_key,
         const int64_t[::1] mid_degrees, const int64_t[::1] mid_weights,
         int64_t mid_lo, int64_t mid_hi,
         const int64_t[::1] inner_vals, int64_t inner_weight,
         int64_t target, int64_t[::1] hist, int64_t[::1] best_keys):
    """Count entries equal to ``target`` for every candidate of one task.

    A candidate is base + sum_d table[d-1, a_d] + table[0, v] (mod p) where
    the middle coefficients a_d run through the odometer range
    [mid_lo, mid_hi) over F_q and v runs through ``inner_vals``.
    ``hist[c]`` is incremented for every candidate with count c.  Keys of
    candidates reaching the largest count are written to ``best_keys``
    (overflow is reported through the returned total).

    Returns (best_count, n_best).
    """
    cdef Py_ssize_t ncols = table.shape[2]
    cdef Py_ssize_t q = table.shape[1]
    cdef Py_ssize_t nmid = mid_degrees.shape[0]
    cdef Py_ssize_t ninner = inner_vals.shape[0]
    cdef Py_ssize_t cap = best_keys.shape[0]
    cdef Py_ssize_t j, d, s
    cdef int64_t t, rem, key_mid, key, v
    cdef int best = -1
    cdef int64_t nbest = 0
    cdef int cnt
    cdef const elem_t *rowp
    cdef elem_t *need = <elem_t *> malloc(ncols * sizeof(elem_t))
    cdef int64_t *digits = <int64_t *> malloc((nmid + 1) * sizeof(int64_t))
    cdef int64_t acc
    if need == NULL or digits == NULL:
        free(need)
        free(digits)
        raise MemoryError()
    try:
        with nogil:
            for t in range(mid_lo, mid_hi):
                rem = t
                key_mid = base_key
                for s in range(nmid):
                    digits[s] = rem % q
                    rem = rem // q
                    key_mid = key_mid + digits[s] * mid_weights[s]
                for j in range(ncols):
                    acc = base[j]
                    for s in range(nmid):
                        acc = acc + table[mid_degrees[s] - 1, digits[s], j]
                    acc = (target - acc) % p
                    if acc < 0:
                        acc = acc + p
                    need[j] = <elem_t> acc
                for s in range(ninner):
                    v = inner_vals[s]
                    rowp = &table[0, v, 0]
                    cnt = 0
                    for j in range(ncols):
                        cnt = cnt + (rowp[j] == need[j])
                    hist[cnt] += 1
                    if cnt > best:
                        best = cnt
                        nbest = 0
                    if cnt == best:
                        if nbest < cap:
                            best_keys[nbest] = key_mid + v * inner_weight
                        nbest += 1
    finally:
        free(need)
        free(digits)
    return best, nbest


def gray_scan(const elem_t[:, ::1] gen, int64_t p, int m, const int64_t[::1] digit_weights,
              int64_t lo, int64_t hi):
    """Walk reflected base-p Gray codes with indices in [lo, hi).

    ``gen`` holds one generator row per F_p digit of the message; digit t
    has lex-key weight ``digit_weights[t]``.  Index 0 (the zero message) is
    skipped.  Each step changes one digit by +-1 and updates the cached
    codeword with one row, O(n) work.

    Returns (min_weight, count_at_min, lexmin_key_at_min).
    """
    cdef Py_ssize_t ndig = gen.shape[0]
    cdef Py_ssize_t ncols = gen.shape[1]
    cdef Py_ssize_t t, u, j
    cdef int64_t idx, rem, key = 0
    cdef int64_t best_w = ncols + 1, best_cnt = 0, best_key = -1
    cdef int w, par
    cdef int64_t c, delta
    cdef const elem_t *rowp
    cdef elem_t *word = <elem_t *> malloc(ncols * sizeof(elem_t))
    cdef int *b = <int *> malloc(ndig * sizeof(int))
    cdef int *g = <int *> malloc(ndig * sizeof(int))
    if word == NULL or b == NULL or g == NULL:
        free(word)
        free(b)
        free(g)
        raise MemoryError()
    try:
        with nogil:
            if lo < 1:
                lo = 1
            if lo < hi:
                # Gray digits of index lo, most significant digit first.
                rem = lo
                for t in range(ndig):
                    b[t] = rem % p
                    rem = rem // p
                par = 0
                for u in range(ndig):
                    t = ndig - 1 - u
                    if par == 0:
                        g[t] = b[t]
                    else:
                        g[t] = p - 1 - b[t]
                    par = (par + g[t]) & 1
                for j in range(ncols):
                    word[j] = 0
                key = 0
                for t in range(ndig):
                    key = key + g[t] * digit_weights[t]
                    if g[t] != 0:
                        for j in range(ncols):
                            word[j] = <elem_t> ((<int64_t> word[j] + <int64_t> g[t] * gen[t, j]) % p)
                w = 0
                for j in range(ncols):
                    w = w + (word[j] != 0)
                best_w = w
                best_cnt = 1
                best_key = key
                for idx in range(lo + 1, hi):
                    t = 0
                    while b[t] == p - 1:
                        b[t] = 0
                        t += 1
                    b[t] += 1
                    par = 0
                    for u in range(t + 1, ndig):
                        par = par + g[u]
                    if par & 1:
                        delta = p - 1
                        g[t] -= 1
                        key = key - digit_weights[t]
                    else:
                        delta = 1
                        g[t] += 1
                        key = key + digit_weights[t]
                    rowp = &gen[t, 0]
                    w = 0
                    for j in range(ncols):
                        c = (<int64_t> word[j] + delta * <int64_t> rowp[j]) % p
                        word[j] = <elem_t> c
                        w = w + (c != 0)
                    if w < best_w:
                        best_w = w
                        best_cnt = 1
                        best_key = key
                    elif w == best_w:
                        best_cnt += 1
                        if key < best_key:
                            best_key = key
    finally:
        free(word)
        free(b)
        free(g)
    return best_w, best_cnt, best_key
