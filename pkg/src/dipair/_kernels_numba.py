"""Numba-compiled hot kernels (default backend when numba imports).

Mirrors `_kernels_numpy`: DFS path enumeration, square-move union-find
classification over a lexsorted path matrix, and the associativity sweep.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def _enumerate(indptr, heads, aids, u, v, n_paths, max_len):
    paths = np.full((n_paths, max(max_len, 1)), -1, dtype=np.int32)
    lengths = np.zeros(n_paths, dtype=np.int32)
    stack_v = np.empty(max_len + 2, dtype=np.int64)
    stack_c = np.empty(max_len + 2, dtype=np.int64)
    arcbuf = np.empty(max_len + 1, dtype=np.int32)
    depth = 0
    stack_v[0] = u
    stack_c[0] = indptr[u]
    out = 0
    while depth >= 0:
        vert = stack_v[depth]
        cur = stack_c[depth]
        if vert == v and cur == indptr[vert]:
            for t in range(depth):
                paths[out, t] = arcbuf[t]
            lengths[out] = depth
            out += 1
        if cur < indptr[vert + 1]:
            stack_c[depth] = cur + 1
            arcbuf[depth] = aids[cur]
            depth += 1
            stack_v[depth] = heads[cur]
            stack_c[depth] = indptr[heads[cur]]
        else:
            depth -= 1
    return paths, lengths, out


def enumerate_paths(indptr, heads, aids, u, v, n_paths, max_len):
    paths, lengths, out = _enumerate(indptr, heads, aids, u, v, n_paths, max_len)
    return paths[:, :max_len], lengths, out


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def _cmp_virtual(mat, mid, r, j, a2, b2):
    """Compare row `mid` against row `r` with (j, j+1) replaced by (a2, b2)."""
    for t in range(mat.shape[1]):
        if t == j:
            y = a2
        elif t == j + 1:
            y = b2
        else:
            y = mat[r, t]
        x = mat[mid, t]
        if x < y:
            return -1
        if x > y:
            return 1
    return 0


@njit(cache=True)
def classify_paths(mat, swap_keys, swap_a, swap_b, n_edges):
    n, length = mat.shape
    parent = np.arange(n, dtype=np.int64)
    if length >= 2 and len(swap_keys):
        for r in range(n):
            for j in range(length - 1):
                if mat[r, j] < 0 or mat[r, j + 1] < 0:
                    break
                key = np.int64(mat[r, j]) * n_edges + mat[r, j + 1]
                lo = np.searchsorted(swap_keys, key, side="left")
                hi = np.searchsorted(swap_keys, key, side="right")
                for t in range(lo, hi):
                    a2 = swap_a[t]
                    b2 = swap_b[t]
                    # binary search the swapped row among the lexsorted rows
                    lo2 = 0
                    hi2 = n
                    found = -1
                    while lo2 < hi2:
                        mid = (lo2 + hi2) // 2
                        c = _cmp_virtual(mat, mid, r, j, a2, b2)
                        if c == 0:
                            found = mid
                            break
                        if c < 0:
                            lo2 = mid + 1
                        else:
                            hi2 = mid
                    if found < 0:
                        # swapped path not in the given set: nothing to merge
                        continue
                    ra = _find(parent, r)
                    rb = _find(parent, found)
                    if ra != rb:
                        if rb < ra:
                            ra, rb = rb, ra
                        parent[rb] = ra
    labels = np.empty(n, dtype=np.int64)
    for r in range(n):
        labels[r] = _find(parent, r)
    return labels


def compose_product(ct, base, nf, bu, fv, m_i, m_j, m_b, m_f, f, g):
    i = m_i[f]
    j = m_j[f]
    k = m_j[g]
    b = ct[bu[k], bu[j], bu[i], m_b[g], m_b[f]]
    w = ct[fv[i], fv[j], fv[k], m_f[f], m_f[g]]
    if b < 0 or w < 0:
        return -1
    return int(base[i, k]) + int(b) * int(nf[i, k]) + int(w)


@njit(cache=True)
def assoc_check_product(m_i, m_j, m_b, m_f, in_ptr, in_ids, out_ptr, out_ids,
                        base, nf, bu, fv, ct):
    bad = 0
    max_out = 0
    for o in range(len(out_ptr) - 1):
        d = out_ptr[o + 1] - out_ptr[o]
        if d > max_out:
            max_out = d
    gh_b = np.empty(max_out, dtype=np.int64)
    gh_w = np.empty(max_out, dtype=np.int64)
    for g in range(len(m_i)):
        j = m_i[g]
        k = m_j[g]
        nh = out_ptr[k + 1] - out_ptr[k]
        nfs = in_ptr[j + 1] - in_ptr[j]
        if nh == 0 or nfs == 0:
            continue
        for t in range(nh):
            h = out_ids[out_ptr[k] + t]
            l = m_j[h]
            gh_b[t] = ct[bu[l], bu[k], bu[j], m_b[h], m_b[g]]
            gh_w[t] = ct[fv[j], fv[k], fv[l], m_f[g], m_f[h]]
        for s in range(nfs):
            f = in_ids[in_ptr[j] + s]
            i = m_i[f]
            b_fg = ct[bu[k], bu[j], bu[i], m_b[g], m_b[f]]
            w_fg = ct[fv[i], fv[j], fv[k], m_f[f], m_f[g]]
            if b_fg < 0 or w_fg < 0:
                bad += 1
                continue
            for t in range(nh):
                h = out_ids[out_ptr[k] + t]
                l = m_j[h]
                lhs_b = ct[bu[l], bu[k], bu[i], m_b[h], b_fg]
                lhs_w = ct[fv[i], fv[k], fv[l], w_fg, m_f[h]]
                rhs_b = ct[bu[l], bu[j], bu[i], gh_b[t], m_b[f]]
                rhs_w = ct[fv[i], fv[j], fv[l], m_f[f], gh_w[t]]
                if (lhs_b < 0 or lhs_w < 0 or rhs_b < 0 or rhs_w < 0
                        or gh_b[t] < 0 or gh_w[t] < 0):
                    bad += 1
                elif lhs_b != rhs_b or lhs_w != rhs_w:
                    bad += 1
    return bad
