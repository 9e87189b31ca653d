# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled face-lattice kernel on 64-bit vertex masks.

Mirror of ``_kernel_py.lattice_kernel``; callers must route polytopes with
more than 64 vertices to the Python version.
"""
from libc.stdint cimport uint64_t
from libcpp.vector cimport vector
from libcpp.unordered_map cimport unordered_map
from libcpp.pair cimport pair
from libcpp.algorithm cimport sort

from polygap._kernel_py import LatticeSizeError

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil


cdef inline uint64_t _lowbit(uint64_t x) nogil:
    return x & (~x + 1)


def lattice_kernel(facet_masks, int nverts, Py_ssize_t limit):
    if nverts > 64:
        raise ValueError("compiled kernel handles at most 64 vertices")
    cdef vector[uint64_t] facets
    for m in facet_masks:
        facets.push_back(<uint64_t>m)
    cdef Py_ssize_t nf = facets.size()
    cdef uint64_t full
    if nverts == 64:
        full = <uint64_t>0xFFFFFFFFFFFFFFFF
    else:
        full = ((<uint64_t>1) << nverts) - 1

    cdef unordered_map[uint64_t, Py_ssize_t] index
    cdef vector[uint64_t] queue
    cdef Py_ssize_t i, j, k
    cdef uint64_t f, h, g, c, rest, low

    for i in range(nf):
        if index.count(facets[i]) == 0:
            index[facets[i]] = queue.size()
            queue.push_back(facets[i])
    if index.count(full) == 0:
        index[full] = queue.size()
        queue.push_back(full)
    i = 0
    while i < <Py_ssize_t>queue.size():
        f = queue[i]
        i += 1
        for j in range(nf):
            h = f & facets[j]
            if index.count(h) == 0:
                index[h] = queue.size()
                queue.push_back(h)
                if <Py_ssize_t>queue.size() > limit:
                    raise LatticeSizeError(f"more than {limit} faces")
    if index.count(0) == 0:
        queue.push_back(0)

    cdef Py_ssize_t n = queue.size()
    cdef vector[pair[int, uint64_t]] order
    order.reserve(n)
    for i in range(n):
        order.push_back(pair[int, uint64_t](popcount64(queue[i]), queue[i]))
    sort(order.begin(), order.end())

    cdef vector[uint64_t] faces
    faces.reserve(n)
    index.clear()
    for i in range(n):
        index[order[i].second] = i
        faces.push_back(order[i].second)

    cdef vector[int] rank = vector[int](n, 0)
    cdef vector[uint64_t] containing
    cdef vector[uint64_t] cands
    cdef vector[Py_ssize_t] cov_lo
    cdef vector[Py_ssize_t] cov_hi
    cdef bint minimal, dup
    cdef Py_ssize_t ci
    for i in range(n):
        f = faces[i]
        containing.clear()
        for j in range(nf):
            if facets[j] & f == f:
                containing.push_back(facets[j])
        cands.clear()
        rest = full & ~f
        while rest:
            low = _lowbit(rest)
            rest ^= low
            c = full
            for j in range(<Py_ssize_t>containing.size()):
                if containing[j] & low:
                    c &= containing[j]
            dup = False
            for k in range(<Py_ssize_t>cands.size()):
                if cands[k] == c:
                    dup = True
                    break
            if not dup:
                cands.push_back(c)
        for k in range(<Py_ssize_t>cands.size()):
            c = cands[k]
            minimal = True
            for j in range(<Py_ssize_t>cands.size()):
                g = cands[j]
                if g != c and g & c == g:
                    minimal = False
                    break
            if not minimal:
                continue
            ci = index[c]
            cov_lo.push_back(i)
            cov_hi.push_back(ci)
            if rank[ci] < rank[i] + 1:
                rank[ci] = rank[i] + 1

    cdef bint graded = True
    for k in range(<Py_ssize_t>cov_lo.size()):
        if rank[cov_hi[k]] != rank[cov_lo[k]] + 1:
            graded = False
            break
    return [faces[i] for i in range(n)], [rank[i] for i in range(n)], graded
