"""Pure-Python face-lattice kernel.

Same contract as the compiled ``_kernel_c`` module; used when the
extension is not built, when ``POLYGAP_PURE`` is set, or when a polytope
has more than 64 vertices (masks are arbitrary-width ints here).
"""
from __future__ import annotations


class LatticeSizeError(RuntimeError):
    pass


def lattice_kernel(facet_masks, nverts: int, limit: int):
    """Close the facet family under intersection and rank the result.

    Returns ``(faces, ranks, graded)``: every face as a vertex mask (the
    empty face and the full vertex set included), its rank as the length
    of the longest chain from the empty face, and whether every cover
    relation raises the rank by exactly one.
    """
    facets = list(facet_masks)
    full = (1 << nverts) - 1
    seen = set(facets)
    seen.add(full)
    queue = list(facets)
    i = 0
    while i < len(queue):
        f = queue[i]
        i += 1
        for g in facets:
            h = f & g
            if h not in seen:
                seen.add(h)
                queue.append(h)
                if len(seen) > limit:
                    raise LatticeSizeError(f"more than {limit} faces")
    seen.add(0)

    faces = sorted(seen, key=lambda x: (bin(x).count("1"), x))
    rank = dict.fromkeys(faces, 0)
    covers = []
    for f in faces:
        containing = [g for g in facets if g & f == f]
        cands = set()
        rest = full & ~f
        while rest:
            low = rest & -rest
            rest ^= low
            c = full
            for g in containing:
                if g & low:
                    c &= g
            cands.add(c)
        r = rank[f] + 1
        for c in cands:
            if any(o != c and o & c == o for o in cands):
                continue
            covers.append((f, c))
            if rank[c] < r:
                rank[c] = r
    graded = all(rank[c] == rank[f] + 1 for f, c in covers)
    return faces, [rank[f] for f in faces], graded
