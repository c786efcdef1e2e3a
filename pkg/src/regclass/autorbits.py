"""Fusion of conjugacy classes under a supplied outer action.

Orbits of classes under conjugation by normalizing permutations, computed as
a union-find closure of class(x) ~ class(c^-1 x c) over the supplied
conjugators.  Orbit counts split by p give the quantities n(Aut, Cl_p'),
n(Aut, Cl_p) and their sum.
"""

from dataclasses import dataclass

from .numtheory import p_part
from .permgroup import ClassTable, PermGroup, conjugate, inverse


@dataclass(frozen=True)
class OrbitPartition:
    orbit_of: tuple[int, ...]  # orbit id per class index
    orbits: tuple[tuple[int, ...], ...]  # member class indices per orbit

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)


def fuse_classes(table: ClassTable, group: PermGroup, conjugators) -> OrbitPartition:
    """Equivalence closure of class(x) ~ class(c x c^-1) for each conjugator.

    Each conjugator must normalize the group; violations are rejected with a
    witness.  Orbits are numbered by least member class index."""
    for c in conjugators:
        if not group.normalized_by(c):
            witness = next(g for g in group.generators
                           if not group.contains(conjugate(c, g, inverse(c))))
            raise ValueError(
                f"conjugator does not normalize the group; witness generator "
                f"{witness.tolist()}")

    parent = list(range(len(table.classes)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    # closure: conjugating a representative can land in a class whose own
    # image has not been computed from that side yet, so iterate to fixpoint
    pairs = [(c, inverse(c)) for c in conjugators]
    changed = True
    while changed:
        changed = False
        for i, cls in enumerate(table.classes):
            for c, cinv in pairs:
                j = table.class_of(conjugate(c, cls.rep, cinv))
                if find(i) != find(j):
                    union(i, j)
                    changed = True

    roots = sorted({find(i) for i in range(len(parent))})
    root_to_orbit = {r: k for k, r in enumerate(roots)}
    orbit_of = tuple(root_to_orbit[find(i)] for i in range(len(parent)))
    members: list[list[int]] = [[] for _ in roots]
    for i, o in enumerate(orbit_of):
        members[o].append(i)
    return OrbitPartition(orbit_of=orbit_of,
                         orbits=tuple(tuple(m) for m in members))


@dataclass(frozen=True)
class OrbitCounts:
    p: int
    n_pregular: int
    n_pelement: int

    @property
    def n_union(self) -> int:
        return self.n_pregular + self.n_pelement


def orbit_counts(partition: OrbitPartition, table: ClassTable, p: int) -> OrbitCounts:
    """Orbits of p-regular classes and of nontrivial p-element classes.

    Fusion preserves element orders, so every orbit is homogeneous; orbits of
    mixed-order classes (order divisible by p but not a p-power) count in
    neither bucket, matching the disjoint union Cl_p' u Cl_p."""
    n_pregular = 0
    n_pelement = 0
    for orbit in partition.orbits:
        order = table.classes[orbit[0]].order
        if any(table.classes[i].order != order for i in orbit[1:]):
            raise ValueError("fusion orbit mixes element orders")
        if order % p:
            n_pregular += 1
        elif order > 1 and p_part(order, p) == order:
            n_pelement += 1
    return OrbitCounts(p=p, n_pregular=n_pregular, n_pelement=n_pelement)


__all__ = ["OrbitPartition", "OrbitCounts", "fuse_classes", "orbit_counts"]
