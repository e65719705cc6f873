"""Pure-numpy implementations of the hot kernels.

Active when DIPAIR_BACKEND=numpy or when numba is unavailable.  Same
contracts as `_kernels_numba`: path enumeration over a pruned CSR skeleton,
square-move classification of equal-length path matrices, and the exhaustive
associativity sweep over a product-structured composition table.
"""

from __future__ import annotations

import numpy as np

NAME = "numpy"


def enumerate_paths(indptr, heads, aids, u, v, n_paths, max_len):
    """All directed paths u -> v in a pruned DAG, as a -1 padded arc matrix.

    Every arc in the CSR input has a co-reachable head, so each partial path
    extends to at least one full path.  Rows come out grouped by length; the
    caller sorts lexicographically.
    """
    paths = np.full((n_paths, max_len), -1, dtype=np.int32)
    lengths = np.zeros(n_paths, dtype=np.int32)
    out = 0
    cur = np.zeros((1, 0), dtype=np.int32)
    ends = np.array([u], dtype=np.int64)
    depth = 0
    while len(ends):
        done = ends == v
        k = int(done.sum())
        if k:
            paths[out:out + k, :depth] = cur[done]
            lengths[out:out + k] = depth
            out += k
        cur = cur[~done]
        ends = ends[~done]
        if not len(ends):
            break
        deg = indptr[ends + 1] - indptr[ends]
        rep = np.repeat(np.arange(len(ends)), deg)
        starts = np.repeat(indptr[ends], deg)
        offs = np.arange(len(rep)) - np.repeat(np.cumsum(deg) - deg, deg)
        aidx = starts + offs
        nxt = np.empty((len(rep), depth + 1), dtype=np.int32)
        nxt[:, :depth] = cur[rep]
        nxt[:, depth] = aids[aidx]
        cur = nxt
        ends = heads[aidx].astype(np.int64)
        depth += 1
    return paths, lengths, out


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def classify_paths(mat, swap_keys, swap_a, swap_b, n_edges):
    """Union rows of `mat` (lexsorted, equal length) related by square moves.

    A move replaces the two-arc subpath (a, b) at some position by the pair
    recorded in the swap table.  Returns the union-find root per row.
    """
    n, length = mat.shape
    uf = _UnionFind(n)
    if n and length >= 2 and len(swap_keys):
        hit_rows, hit_js, hit_a, hit_b = [], [], [], []
        for j in range(length - 1):
            col = mat[:, j].astype(np.int64) * n_edges + mat[:, j + 1]
            col[(mat[:, j] < 0) | (mat[:, j + 1] < 0)] = -1  # -1 padding
            lo = np.searchsorted(swap_keys, col, "left")
            hi = np.searchsorted(swap_keys, col, "right")
            width = hi - lo
            for off in range(int(width.max()) if len(width) else 0):
                sel = np.nonzero(width > off)[0]
                if not len(sel):
                    break
                idx = lo[sel] + off
                hit_rows.append(sel)
                hit_js.append(np.full(len(sel), j))
                hit_a.append(swap_a[idx])
                hit_b.append(swap_b[idx])
        if hit_rows:
            rows = np.concatenate(hit_rows)
            js = np.concatenate(hit_js)
            nb = mat[rows].copy()
            nb[np.arange(len(rows)), js] = np.concatenate(hit_a)
            nb[np.arange(len(rows)), js + 1] = np.concatenate(hit_b)
            stacked = np.vstack([mat, nb])
            _, inv = np.unique(stacked, axis=0, return_inverse=True)
            inv = inv.ravel()
            pos = np.full(int(inv.max()) + 1, -1, dtype=np.int64)
            pos[inv[:n]] = np.arange(n)
            targets = pos[inv[n:]]
            for r, t in zip(rows.tolist(), targets.tolist()):
                if t >= 0:  # swapped path may fall outside the given set
                    uf.union(r, t)
    return np.array([uf.find(r) for r in range(n)], dtype=np.int64)


def compose_product(ct, base, nf, bu, fv, m_i, m_j, m_b, m_f, f, g):
    """Composite morphism id for f: i->j followed by g: j->k."""
    i = m_i[f]
    j = m_j[f]
    k = m_j[g]
    b = ct[bu[k], bu[j], bu[i], m_b[g], m_b[f]]
    w = ct[fv[i], fv[j], fv[k], m_f[f], m_f[g]]
    if b < 0 or w < 0:
        return -1
    return int(base[i, k]) + int(b) * int(nf[i, k]) + int(w)


def assoc_check_product(m_i, m_j, m_b, m_f, in_ptr, in_ids, out_ptr, out_ids,
                        base, nf, bu, fv, ct):
    """Count associativity violations over all composable triples.

    Vectorized per middle morphism g: for f into src(g) and h out of dst(g),
    compare compose(compose(f, g), h) with compose(f, compose(g, h)).
    """
    bad = 0
    n_mor = len(m_i)
    for g in range(n_mor):
        j = m_i[g]
        k = m_j[g]
        fs = in_ids[in_ptr[j]:in_ptr[j + 1]]
        hs = out_ids[out_ptr[k]:out_ptr[k + 1]]
        if not len(fs) or not len(hs):
            continue
        fi = m_i[fs]
        hl = m_j[hs]
        b_fg = ct[bu[k], bu[j], bu[fi], m_b[g], m_b[fs]]
        w_fg = ct[fv[fi], fv[j], fv[k], m_f[fs], m_f[g]]
        b_gh = ct[bu[hl], bu[k], bu[j], m_b[hs], m_b[g]]
        w_gh = ct[fv[j], fv[k], fv[hl], m_f[g], m_f[hs]]
        if (b_fg < 0).any() or (w_fg < 0).any() or (b_gh < 0).any() or (w_gh < 0).any():
            bad += 1
            continue
        # (fg)h vs f(gh) on the f x h grid; legs compose independently
        col = lambda a: a[:, None]
        row = lambda a: a[None, :]
        mid_k = np.broadcast_to(bu[k], (len(fs), len(hs)))
        mid_j = np.broadcast_to(bu[j], (len(fs), len(hs)))
        lhs_b = ct[row(bu[hl]), mid_k, col(bu[fi]), row(m_b[hs]), col(b_fg)]
        rhs_b = ct[row(bu[hl]), mid_j, col(bu[fi]), row(b_gh), col(m_b[fs])]
        mid_k = np.broadcast_to(fv[k], (len(fs), len(hs)))
        mid_j = np.broadcast_to(fv[j], (len(fs), len(hs)))
        lhs_w = ct[col(fv[fi]), mid_k, row(fv[hl]), col(w_fg), row(m_f[hs])]
        rhs_w = ct[col(fv[fi]), mid_j, row(fv[hl]), col(m_f[fs]), row(w_gh)]
        nf_il = nf[col(fi), row(hl)]
        lhs = lhs_b.astype(np.int64) * nf_il + lhs_w
        rhs = rhs_b.astype(np.int64) * nf_il + rhs_w
        bad += int((lhs != rhs).sum())
        bad += int((lhs_b < 0).sum() + (lhs_w < 0).sum()
                   + (rhs_b < 0).sum() + (rhs_w < 0).sum())
    return bad
