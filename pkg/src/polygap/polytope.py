"""Combinatorial polytopes given by vertex-facet incidence."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable


class InvalidPolytope(ValueError):
    """Incidence data that cannot be the facet family of a polytope."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class CombinatorialPolytope:
    """A d-polytope described by its facets as vertex-index sets.

    Facets are normalised to sorted tuples in lexicographic order, so two
    instances with the same incidence compare equal and serialise to the
    same bytes.
    """

    dim: int
    nverts: int
    facets: tuple[tuple[int, ...], ...]
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, dim: int, nverts: int, facets: Iterable[Iterable[int]], *, check: bool = True):
        norm = tuple(sorted(tuple(sorted(set(f))) for f in facets))
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "nverts", int(nverts))
        object.__setattr__(self, "facets", norm)
        object.__setattr__(self, "_masks", tuple(mask_of(f) for f in norm))
        if check:
            self.validate()

    def validate(self) -> None:
        d, n = self.dim, self.nverts
        if d < 1:
            raise InvalidPolytope(f"dimension must be >= 1, got {d}")
        if len(set(self.facets)) != len(self.facets):
            raise InvalidPolytope("duplicate facet")
        if len(self.facets) < d + 1:
            raise InvalidPolytope(f"{len(self.facets)} facets, a {d}-polytope needs at least {d + 1}")
        counts = [0] * n
        for f in self.facets:
            if not f:
                raise InvalidPolytope("empty facet")
            if f[0] < 0 or f[-1] >= n:
                raise InvalidPolytope(f"facet {f} references a vertex outside 0..{n - 1}")
            for v in f:
                counts[v] += 1
        low = [v for v, c in enumerate(counts) if c < d]
        if low:
            raise InvalidPolytope(f"vertex {low[0]} lies in {counts[low[0]]} facets, fewer than d={d}")
        masks = self._masks
        for i, a in enumerate(masks):
            for j, b in enumerate(masks):
                if i != j and a & b == a:
                    raise InvalidPolytope(f"facet {self.facets[i]} is contained in facet {self.facets[j]}")

    @property
    def facet_masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def full_mask(self) -> int:
        return (1 << self.nverts) - 1

    def relabel(self, perm) -> "CombinatorialPolytope":
        """Image under the vertex map ``v -> perm[v]``."""
        return CombinatorialPolytope(self.dim, self.nverts,
                                     ([perm[v] for v in f] for f in self.facets), check=False)

    def to_dict(self) -> dict:
        return {"dim": self.dim, "nverts": self.nverts, "facets": [list(f) for f in self.facets]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "CombinatorialPolytope":
        try:
            return cls(data["dim"], data["nverts"], data["facets"])
        except KeyError as exc:
            raise InvalidPolytope(f"missing key {exc.args[0]!r}") from None

    @classmethod
    def from_json(cls, text: str) -> "CombinatorialPolytope":
        return cls.from_dict(json.loads(text))

    def __repr__(self) -> str:
        return f"CombinatorialPolytope(dim={self.dim}, nverts={self.nverts}, nfacets={len(self.facets)})"
