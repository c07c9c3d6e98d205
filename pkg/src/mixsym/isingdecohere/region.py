"""Region graphs on the square lattice: sites, internal edges, boundary legs."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class RegionGraph:
    """A finite region A of the square lattice.

    ``sites`` are (x, y) coordinates; ``internal_edges`` are index pairs
    into ``sites``; ``boundary_legs`` lists one site index per edge leaving
    the region (sites with several missing neighbors repeat).
    """

    sites: tuple
    internal_edges: tuple
    boundary_legs: tuple

    def __post_init__(self):
        n = len(self.sites)
        if len(set(self.sites)) != n:
            raise ValueError("duplicate sites in region")
        for i, j in self.internal_edges:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise ValueError("internal edge out of range")
        for i in self.boundary_legs:
            if not 0 <= i < n:
                raise ValueError("boundary leg out of range")

    @property
    def n_sites(self):
        return len(self.sites)

    def site_index(self, xy):
        try:
            return self.sites.index(tuple(xy))
        except ValueError:
            raise KeyError(f"site {xy} not in region") from None

    def center_index(self):
        """The most central site: minimal squared distance to the centroid."""
        cx = sum(s[0] for s in self.sites) / self.n_sites
        cy = sum(s[1] for s in self.sites) / self.n_sites
        return min(
            range(self.n_sites),
            key=lambda i: ((self.sites[i][0] - cx) ** 2 + (self.sites[i][1] - cy) ** 2, i),
        )


def rectangle_region(width, height):
    """A width x height rectangle embedded in the infinite square lattice.

    Every lattice edge from a rectangle site to an outside neighbor becomes
    a boundary leg, so perimeter sites carry 1 leg and corners carry 2.
    """
    if width < 1 or height < 1:
        raise ValueError("rectangle extents must be positive")
    sites = tuple((x, y) for x in range(width) for y in range(height))
    index = {s: i for i, s in enumerate(sites)}
    edges = []
    legs = []
    for x, y in sites:
        i = index[(x, y)]
        for dx, dy in ((1, 0), (0, 1), (-1, 0), (0, -1)):
            nb = (x + dx, y + dy)
            if nb in index:
                if (dx, dy) in ((1, 0), (0, 1)):
                    edges.append((i, index[nb]))
            else:
                legs.append(i)
    return RegionGraph(sites, tuple(edges), tuple(legs))


def torus_region(width, height):
    """The whole width x height torus as a region: no boundary legs.

    With no legs the total flip parity is conserved, which realizes the
    strongly symmetric limit.
    """
    sites = tuple((x, y) for x in range(width) for y in range(height))
    index = {s: i for i, s in enumerate(sites)}
    edges = set()
    for x, y in sites:
        i = index[(x, y)]
        for dx, dy in ((1, 0), (0, 1)):
            nb = ((x + dx) % width, (y + dy) % height)
            j = index[nb]
            if i != j:
                edges.add((min(i, j), max(i, j)))
    return RegionGraph(sites, tuple(sorted(edges)), ())
