# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled trace kernel; same contract as the pure-Python one.

The slice is kept in a C integer array and the component/orientation
sweep runs over flat C adjacency arrays, so a word of length m with s
strands traces in O(m·w + s) with small constants.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memmove

from ..errors import DanglingStrand, DiagramError, LevelOutOfRange
from .pure import TraceResult

DEF LEFT_CUSP = 0
DEF RIGHT_CUSP = 1
DEF CROSSING = 2


def trace(events, int n_initial=0, port_links=()):
    """See ``frontkit._kernel.pure.trace``; identical inputs and outputs."""
    cdef int m = len(events)
    cdef int cap = n_initial + 2 * m + 1
    cdef int *slice_ids = <int *> malloc(cap * sizeof(int))
    # joins as flat triples (a, b, flip)
    cdef int *join_a = <int *> malloc((m + len(port_links) + 1) * sizeof(int))
    cdef int *join_b = <int *> malloc((m + len(port_links) + 1) * sizeof(int))
    cdef int *join_f = <int *> malloc((m + len(port_links) + 1) * sizeof(int))
    if not slice_ids or not join_a or not join_b or not join_f:
        raise MemoryError()
    cdef int n_joins = 0
    cdef int k = n_initial
    cdef int next_id = n_initial
    cdef int idx, kind, level, i, upper, lower, desc, asc
    cdef int max_width = n_initial
    event_strands = []
    crossing_events = []
    left_cusp_of = []
    right_cusp_of = []
    try:
        for i in range(n_initial):
            slice_ids[i] = i
        for idx in range(m):
            kind = events[idx][0]
            level = events[idx][1]
            if kind == LEFT_CUSP:
                if level < 1 or level > k + 1:
                    raise LevelOutOfRange(
                        f"left cusp at level {level} with {k} strands", idx
                    )
                upper = next_id
                lower = next_id + 1
                next_id += 2
                memmove(slice_ids + level + 1, slice_ids + level - 1,
                        (k - level + 1) * sizeof(int))
                slice_ids[level - 1] = upper
                slice_ids[level] = lower
                k += 2
                join_a[n_joins] = upper
                join_b[n_joins] = lower
                join_f[n_joins] = 1
                n_joins += 1
                left_cusp_of.append((idx, upper, lower))
                event_strands.append((upper, lower))
            elif kind == RIGHT_CUSP:
                if level < 1 or level > k - 1:
                    raise LevelOutOfRange(
                        f"right cusp at level {level} with {k} strands", idx
                    )
                upper = slice_ids[level - 1]
                lower = slice_ids[level]
                memmove(slice_ids + level - 1, slice_ids + level + 1,
                        (k - level - 1) * sizeof(int))
                k -= 2
                join_a[n_joins] = upper
                join_b[n_joins] = lower
                join_f[n_joins] = 1
                n_joins += 1
                right_cusp_of.append((idx, upper, lower))
                event_strands.append((upper, lower))
            elif kind == CROSSING:
                if level < 1 or level > k - 1:
                    raise LevelOutOfRange(
                        f"crossing at level {level} with {k} strands", idx
                    )
                desc = slice_ids[level - 1]
                asc = slice_ids[level]
                slice_ids[level - 1] = asc
                slice_ids[level] = desc
                crossing_events.append((idx, desc, asc))
                event_strands.append((desc, asc))
            else:
                raise DiagramError(f"unknown event kind {kind}", idx)
            if k > max_width:
                max_width = k

        if k != len(port_links):
            raise DanglingStrand(
                f"word ends with {k} strands, expected {len(port_links)}"
            )
        for final_pos, initial_pos in port_links:
            join_a[n_joins] = slice_ids[final_pos]
            join_b[n_joins] = initial_pos
            join_f[n_joins] = 0
            n_joins += 1

        return _finish(
            slice_ids, k, next_id, n_initial, max_width,
            join_a, join_b, join_f, n_joins,
            event_strands, crossing_events, left_cusp_of, right_cusp_of,
        )
    finally:
        free(slice_ids)
        free(join_a)
        free(join_b)
        free(join_f)


cdef _finish(
    int *slice_ids, int k, int n, int n_initial, int max_width,
    int *join_a, int *join_b, int *join_f, int n_joins,
    list event_strands, list crossing_events,
    list left_cusp_of, list right_cusp_of,
):
    # CSR adjacency over the join graph (each join is an undirected edge).
    cdef int *deg = <int *> malloc((n + 1) * sizeof(int))
    cdef int *off = <int *> malloc((n + 2) * sizeof(int))
    cdef int *nbr = <int *> malloc((2 * n_joins + 1) * sizeof(int))
    cdef int *nbr_f = <int *> malloc((2 * n_joins + 1) * sizeof(int))
    cdef int *comp_of = <int *> malloc((n + 1) * sizeof(int))
    cdef int *orient = <int *> malloc((n + 1) * sizeof(int))
    cdef int *stack = <int *> malloc((n + 1) * sizeof(int))
    if (not deg or not off or not nbr or not nbr_f or not comp_of
            or not orient or not stack):
        raise MemoryError()
    cdef int i, j, a, b, s, t, want, top, n_components, root, comp
    cdef int idx, desc, asc, sign, ca, cb, upper
    try:
        for i in range(n):
            deg[i] = 0
        for j in range(n_joins):
            deg[join_a[j]] += 1
            deg[join_b[j]] += 1
        off[0] = 0
        for i in range(n):
            off[i + 1] = off[i] + deg[i]
            deg[i] = 0
        for j in range(n_joins):
            a = join_a[j]
            b = join_b[j]
            nbr[off[a] + deg[a]] = b
            nbr_f[off[a] + deg[a]] = join_f[j]
            deg[a] += 1
            nbr[off[b] + deg[b]] = a
            nbr_f[off[b] + deg[b]] = join_f[j]
            deg[b] += 1

        for i in range(n):
            comp_of[i] = -1
            orient[i] = 0
        n_components = 0
        for root in range(n):
            if comp_of[root] >= 0:
                continue
            comp = n_components
            n_components += 1
            comp_of[root] = comp
            orient[root] = 1
            stack[0] = root
            top = 1
            while top > 0:
                top -= 1
                s = stack[top]
                for j in range(off[s], off[s] + deg[s]):
                    t = nbr[j]
                    want = -orient[s] if nbr_f[j] else orient[s]
                    if comp_of[t] < 0:
                        comp_of[t] = comp
                        orient[t] = want
                        stack[top] = t
                        top += 1
                    elif orient[t] != want:
                        raise DiagramError(
                            "inconsistent orientation around a component"
                        )

        left_cusps = [0] * n_components
        right_cusps = [0] * n_components
        up_cusps = [0] * n_components
        down_cusps = [0] * n_components
        self_writhe = [0] * n_components
        inter_sums = {}
        crossings = []

        for item in left_cusp_of:
            upper = item[1]
            ca = comp_of[upper]
            left_cusps[ca] += 1
            if orient[upper] > 0:
                up_cusps[ca] += 1
            else:
                down_cusps[ca] += 1
        for item in right_cusp_of:
            upper = item[1]
            ca = comp_of[upper]
            right_cusps[ca] += 1
            if orient[upper] < 0:
                up_cusps[ca] += 1
            else:
                down_cusps[ca] += 1

        for item in crossing_events:
            idx = item[0]
            desc = item[1]
            asc = item[2]
            sign = orient[desc] * orient[asc]
            ca = comp_of[desc]
            cb = comp_of[asc]
            crossings.append((idx, desc, asc, sign))
            if ca == cb:
                self_writhe[ca] += sign
            else:
                key = (ca, cb) if ca < cb else (cb, ca)
                inter_sums[key] = inter_sums.get(key, 0) + sign

        res = TraceResult()
        res.n_strands = n
        res.initial_strands = list(range(n_initial))
        res.final_strands = [slice_ids[i] for i in range(k)]
        res.event_strands = event_strands
        res.strand_component = [comp_of[i] for i in range(n)]
        res.strand_orient = [orient[i] for i in range(n)]
        res.n_components = n_components
        res.crossings = crossings
        res.left_cusps = left_cusps
        res.right_cusps = right_cusps
        res.up_cusps = up_cusps
        res.down_cusps = down_cusps
        res.self_writhe = self_writhe
        res.inter_sums = inter_sums
        res.max_width = max_width
        return res
    finally:
        free(deg)
        free(off)
        free(nbr)
        free(nbr_f)
        free(comp_of)
        free(orient)
        free(stack)
