"""Pure numpy versions of the search kernels in ``_kernels.pyx``.

Same signatures and return values; used when the compiled module is not
available or when ``ASBOUND_PURE=1`` is set.
"""

import numpy as np


def scan(table, p, base, base_key, mid_degrees, mid_weights, mid_lo, mid_hi,
         inner_vals, inner_weight, target, hist, best_keys):
    q = table.shape[1]
    inner_vals = np.asarray(inner_vals, dtype=np.int64)
    inner_rows = table[0][inner_vals]
    base = np.asarray(base, dtype=np.int64)
    cap = best_keys.shape[0]
    best, nbest = -1, 0
    for t in range(mid_lo, mid_hi):
        rem, key_mid, acc = t, base_key, base.copy()
        for d, w in zip(mid_degrees, mid_weights):
            digit = rem % q
            rem //= q
            key_mid += digit * int(w)
            acc += table[int(d) - 1, digit]
        need = (target - acc) % p
        counts = np.count_nonzero(inner_rows == need, axis=1)
        np.add.at(hist, counts, 1)
        top = int(counts.max())
        if top > best:
            best, nbest = top, 0
        if top == best:
            hits = inner_vals[counts == top]
            keys = key_mid + hits * inner_weight
            room = max(0, cap - nbest)
            best_keys[nbest:nbest + min(room, keys.size)] = keys[:room]
            nbest += keys.size
    return best, nbest


def _gray_digits(index, p, ndig):
    b = [(index // p**t) % p for t in range(ndig)]
    g = [0] * ndig
    par = 0
    for t in reversed(range(ndig)):
        g[t] = b[t] if par == 0 else p - 1 - b[t]
        par = (par + g[t]) & 1
    return b, g


def gray_scan(gen, p, m, digit_weights, lo, hi):
    ndig, ncols = gen.shape
    lo = max(lo, 1)
    if lo >= hi:
        return ncols + 1, 0, -1
    gen = np.asarray(gen, dtype=np.int64)
    weights = [int(w) for w in digit_weights]
    b, g = _gray_digits(lo, p, ndig)
    word = (np.asarray(g, dtype=np.int64) @ gen) % p
    key = sum(gt * w for gt, w in zip(g, weights))
    best_w, best_cnt, best_key = int(np.count_nonzero(word)), 1, key
    for _ in range(lo + 1, hi):
        t = 0
        while b[t] == p - 1:
            b[t] = 0
            t += 1
        b[t] += 1
        if sum(g[t + 1:]) & 1:
            g[t] -= 1
            key -= weights[t]
            word -= gen[t]
        else:
            g[t] += 1
            key += weights[t]
            word += gen[t]
        word %= p
        w = int(np.count_nonzero(word))
        if w < best_w:
            best_w, best_cnt, best_key = w, 1, key
        elif w == best_w:
            best_cnt += 1
            best_key = min(best_key, key)
    return best_w, best_cnt, best_key
