"""Batched per-edge 8-cycle counting over constant-size edge neighborhoods.

For each edge e = (a, b) the counter extracts the radius-4 ball around e,
then runs a depth-first enumeration of simple paths of length 7 from a to b
inside the ball (never using e itself); each such path closes exactly one
8-cycle through e.  Ball extraction and the path search touch a constant
number of vertices per edge, so a full pass is linear in the edge count.

The numba-compiled kernel and the pure-Python twin implement the identical
algorithm (same pruning, same traversal order) and return identical counts
and step totals.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap


# A radius-4 ball around an edge of a simple cubic graph has at most 62
# vertices (2 + 4 + 8 + 16 + 32), so local ids fit one 64-bit visited mask.
_BALL_CAP = 64


@njit(cache=True)
def _census_kernel(nbrs, eu, ev, num_vertices):  # pragma: no cover - compiled
    m = eu.shape[0]
    sigma = np.zeros(m, np.int64)
    steps = 0
    stamp = np.full(num_vertices, -1, np.int64)
    loc = np.empty(num_vertices, np.int32)
    verts = np.empty(_BALL_CAP, np.int32)
    vdist = np.empty(_BALL_CAP, np.int32)
    ladj = np.empty(_BALL_CAP * 3, np.int32)
    ldeg = np.empty(_BALL_CAP, np.int32)
    distb = np.empty(_BALL_CAP, np.int32)
    bq = np.empty(_BALL_CAP, np.int32)
    st_v = np.empty(8, np.int32)
    st_it = np.empty(8, np.int32)

    for e in range(m):
        a = eu[e]
        b = ev[e]
        # radius-4 ball around both endpoints; local ids in discovery order
        stamp[a] = e
        loc[a] = 0
        verts[0] = a
        vdist[0] = 0
        stamp[b] = e
        loc[b] = 1
        verts[1] = b
        vdist[1] = 0
        cnt = 2
        head = 0
        while head < cnt:
            gv = verts[head]
            d = vdist[head]
            head += 1
            if d == 4:
                continue
            for j in range(3):
                w = nbrs[3 * gv + j]
                if stamp[w] != e:
                    stamp[w] = e
                    loc[w] = cnt
                    verts[cnt] = w
                    vdist[cnt] = d + 1
                    cnt += 1
        # induced adjacency inside the ball
        for i in range(cnt):
            deg = 0
            gv = verts[i]
            for j in range(3):
                w = nbrs[3 * gv + j]
                if stamp[w] == e:
                    ladj[3 * i + deg] = loc[w]
                    deg += 1
            ldeg[i] = deg
        # distances to b inside the ball, with e itself removed (lower bound
        # on remaining path length, used to prune dead branches)
        for i in range(cnt):
            distb[i] = 127
        distb[1] = 0
        bq[0] = 1
        qh = 0
        qt = 1
        while qh < qt:
            x = bq[qh]
            qh += 1
            dx = distb[x]
            if dx >= 7:
                continue
            for j in range(ldeg[x]):
                y = ladj[3 * x + j]
                if (x == 1 and y == 0) or (x == 0 and y == 1):
                    continue
                if distb[y] > dx + 1:
                    distb[y] = dx + 1
                    bq[qt] = y
                    qt += 1
        # iterative DFS from a (local id 0); paths never pass through b, so
        # the direct step a->b (edge e) is never taken as a path edge
        count = 0
        visited = 1
        depth = 0
        st_v[0] = 0
        st_it[0] = 0
        while depth >= 0:
            cur = st_v[depth]
            it = st_it[depth]
            if it < ldeg[cur]:
                st_it[depth] = it + 1
                w = ladj[3 * cur + it]
                if w == 1:
                    steps += 1
                    if depth == 6:
                        count += 1
                    continue
                if (visited >> w) & 1:
                    continue
                nd = depth + 1
                if nd >= 7:
                    continue
                if distb[w] > 7 - nd:
                    continue
                steps += 1
                visited |= 1 << w
                depth = nd
                st_v[depth] = w
                st_it[depth] = 0
            else:
                visited &= ~(1 << st_v[depth])
                depth -= 1
        sigma[e] = count
    return sigma, steps


def _census_python(nbrs, eu, ev, num_vertices):
    """Pure-Python twin of the compiled kernel; identical counts and steps."""
    m = len(eu)
    sigma = np.zeros(m, np.int64)
    steps = 0
    stamp = [-1] * num_vertices
    loc = [0] * num_vertices
    nbrs = list(nbrs)
    for e in range(m):
        a = int(eu[e])
        b = int(ev[e])
        stamp[a] = e
        loc[a] = 0
        stamp[b] = e
        loc[b] = 1
        verts = [a, b]
        vdist = [0, 0]
        head = 0
        while head < len(verts):
            gv = verts[head]
            d = vdist[head]
            head += 1
            if d == 4:
                continue
            for j in range(3):
                w = nbrs[3 * gv + j]
                if stamp[w] != e:
                    stamp[w] = e
                    loc[w] = len(verts)
                    verts.append(w)
                    vdist.append(d + 1)
        cnt = len(verts)
        ladj = [0] * (3 * cnt)
        ldeg = [0] * cnt
        for i in range(cnt):
            deg = 0
            gv = verts[i]
            for j in range(3):
                w = nbrs[3 * gv + j]
                if stamp[w] == e:
                    ladj[3 * i + deg] = loc[w]
                    deg += 1
            ldeg[i] = deg
        distb = [127] * cnt
        distb[1] = 0
        bq = [1]
        qh = 0
        while qh < len(bq):
            x = bq[qh]
            qh += 1
            dx = distb[x]
            if dx >= 7:
                continue
            for j in range(ldeg[x]):
                y = ladj[3 * x + j]
                if (x == 1 and y == 0) or (x == 0 and y == 1):
                    continue
                if distb[y] > dx + 1:
                    distb[y] = dx + 1
                    bq.append(y)
        count = 0
        visited = 1
        depth = 0
        st_v = [0] * 8
        st_it = [0] * 8
        while depth >= 0:
            cur = st_v[depth]
            it = st_it[depth]
            if it < ldeg[cur]:
                st_it[depth] = it + 1
                w = ladj[3 * cur + it]
                if w == 1:
                    steps += 1
                    if depth == 6:
                        count += 1
                    continue
                if (visited >> w) & 1:
                    continue
                nd = depth + 1
                if nd >= 7:
                    continue
                if distb[w] > 7 - nd:
                    continue
                steps += 1
                visited |= 1 << w
                depth = nd
                st_v[depth] = w
                st_it[depth] = 0
            else:
                visited &= ~(1 << st_v[depth])
                depth -= 1
        sigma[e] = count
    return sigma, steps


def census(nbrs, eu, ev, num_vertices, force_python: bool = False):
    """Per-edge 8-cycle counts and the total path-extension step counter."""
    if NUMBA_AVAILABLE and not force_python:
        sigma, steps = _census_kernel(nbrs, eu, ev, num_vertices)
    else:
        sigma, steps = _census_python(nbrs, eu, ev, num_vertices)
    return sigma, int(steps)
