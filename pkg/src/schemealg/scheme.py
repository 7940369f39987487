"""Symmetric association schemes: validation and intersection numbers.

A scheme is held as its intersection tensor p_ij^k (plus the relation
partition when it came from one).  Construction from explicit relation
matrices brute-forces the defining axioms in O(v^3); the orbit construction
builds Z_m with classes the orbits of the subgroup of units generated by
r and -1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    InvalidRadix,
    NotAPartition,
    NotCommutative,
    NotConstantIntersectionNumber,
    NotSymmetric,
)
from .exactmath import QMatrix


@dataclass(frozen=True)
class RelationPartition:
    """A labeling of X x X by classes 0..d, class 0 the diagonal."""

    labels: tuple

    @property
    def size(self):
        return len(self.labels)

    @property
    def nclasses(self):
        return 1 + max(max(row) for row in self.labels)


@dataclass(frozen=True)
class IntersectionTensor:
    """The numbers p_ij^k, indexed p[i][j][k], for classes 0..d."""

    p: tuple

    @property
    def d(self):
        return len(self.p) - 1

    def get(self, i, j, k):
        return self.p[i][j][k]

    @property
    def valencies(self):
        return tuple(self.p[i][i][0] for i in range(len(self.p)))

    @property
    def order(self):
        return sum(self.valencies)

    def validate(self):
        """Check the axioms a commutative symmetric scheme imposes on p_ij^k."""
        n = len(self.p)
        if any(len(pi) != n or any(len(pij) != n for pij in pi) for pi in self.p):
            raise NotConstantIntersectionNumber("tensor is not cubical")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    v = self.p[i][j][k]
                    if not isinstance(v, int) or v < 0:
                        raise NotConstantIntersectionNumber(
                            f"p_{i}{j}^{k} = {v!r} is not a nonnegative integer"
                        )
                    if self.p[i][j][k] != self.p[j][i][k]:
                        raise NotCommutative(
                            f"p_{i}{j}^{k} = {self.p[i][j][k]} but p_{j}{i}^{k} = {self.p[j][i][k]}"
                        )
        for j in range(n):
            for k in range(n):
                if self.p[0][j][k] != (1 if j == k else 0):
                    raise NotConstantIntersectionNumber(
                        f"identity class: p_0{j}^{k} = {self.p[0][j][k]}"
                    )
        ks = self.valencies
        if ks[0] != 1 or any(v < 1 for v in ks):
            raise NotConstantIntersectionNumber(f"invalid valencies {ks}")
        for i in range(n):
            for k in range(n):
                total = sum(self.p[i][j][k] for j in range(n))
                if total != ks[i]:
                    raise NotConstantIntersectionNumber(
                        f"sum_j p_{i}j^{k} = {total} != k_{i} = {ks[i]}"
                    )
        return self


@dataclass(frozen=True)
class Scheme:
    """A (symmetric, hence commutative) association scheme."""

    tensor: IntersectionTensor
    partition: RelationPartition | None = None
    origin: str = field(default="tensor", compare=False)

    @property
    def d(self):
        return self.tensor.d

    @property
    def order(self):
        return self.tensor.order

    @property
    def valencies(self):
        return self.tensor.valencies

    @property
    def symmetric(self):
        return True

    def relabel(self, perm):
        """Apply a class relabeling (perm[old] = new; perm[0] must be 0)."""
        n = self.d + 1
        if sorted(perm) != list(range(n)) or perm[0] != 0:
            raise ValueError("relabeling must permute classes 1..d and fix 0")
        p = [[[0] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    p[perm[i]][perm[j]][perm[k]] = self.tensor.p[i][j][k]
        tensor = IntersectionTensor(tuple(tuple(tuple(r) for r in pi) for pi in p)).validate()
        part = None
        if self.partition is not None:
            part = RelationPartition(
                tuple(tuple(perm[x] for x in row) for row in self.partition.labels)
            )
        return Scheme(tensor=tensor, partition=part, origin=self.origin)


def scheme_from_relations(labels):
    """Build a Scheme from a v x v class-label matrix, checking every axiom.

    Raises NotAPartition / NotSymmetric / NotConstantIntersectionNumber /
    NotCommutative as appropriate.  O(v^3) by direct counting.
    """
    rows = tuple(tuple(row) for row in labels)
    v = len(rows)
    if v == 0 or any(len(r) != v for r in rows):
        raise NotAPartition("label matrix must be square and nonempty")
    seen = set()
    for x in range(v):
        for y in range(v):
            lab = rows[x][y]
            if not isinstance(lab, int) or lab < 0:
                raise NotAPartition(f"label {lab!r} at ({x},{y}) is not a nonnegative integer")
            if (lab == 0) != (x == y):
                raise NotAPartition(
                    f"class 0 must be exactly the diagonal; label {lab} at ({x},{y})"
                )
            seen.add(lab)
    d = max(seen)
    if seen != set(range(d + 1)):
        missing = sorted(set(range(d + 1)) - seen)
        raise NotAPartition(f"classes {missing} are empty")
    for x in range(v):
        for y in range(x + 1, v):
            if rows[x][y] != rows[y][x]:
                raise NotSymmetric(
                    f"label at ({x},{y}) is {rows[x][y]} but ({y},{x}) is {rows[y][x]}"
                )
    n = d + 1
    ref = [None] * n  # ref[k] = counts seen at the first pair of class k
    ref_pair = [None] * n
    for x in range(v):
        rx = rows[x]
        for y in range(v):
            k = rx[y]
            counts = [[0] * n for _ in range(n)]
            for z in range(v):
                counts[rx[z]][rows[z][y]] += 1
            if ref_pair[k] is None:
                ref[k] = counts
                ref_pair[k] = (x, y)
            elif counts != ref[k]:
                rx0, ry0 = ref_pair[k]
                raise NotConstantIntersectionNumber(
                    f"class {k}: counts at ({x},{y}) differ from those at ({rx0},{ry0})"
                )
    p = tuple(
        tuple(tuple(ref[k][i][j] for k in range(n)) for j in range(n)) for i in range(n)
    )
    tensor = IntersectionTensor(p).validate()
    return Scheme(tensor=tensor, partition=RelationPartition(rows), origin="relations")


def orbit_scheme(m, r):
    """The scheme on Z_m whose classes are the orbits of <r, -1> acting by
    multiplication; class i of (x, y) is the orbit of x - y."""
    if not (isinstance(m, int) and isinstance(r, int)):
        raise InvalidRadix("m and r must be integers")
    if r <= 1 or r >= m or math.gcd(r, m) != 1:
        raise InvalidRadix(f"need 1 < r < m with gcd(r, m) = 1; got m={m}, r={r}")
    group = {1}
    frontier = [1]
    gens = (r, m - 1)
    while frontier:
        h = frontier.pop()
        for g in gens:
            nxt = (h * g) % m
            if nxt not in group:
                group.add(nxt)
                frontier.append(nxt)
    orbit_of = {}
    n_orbits = 0
    for x in range(m):  # ascending, so orbit indices sort by minimal representative
        if x in orbit_of:
            continue
        for h in group:
            orbit_of[(h * x) % m] = n_orbits
        n_orbits += 1
    labels = tuple(tuple(orbit_of[(x - y) % m] for y in range(m)) for x in range(m))
    s = scheme_from_relations(labels)
    return Scheme(tensor=s.tensor, partition=s.partition, origin=f"orbit(m={m}, r={r})")


def intersection_matrices(s):
    """The matrices of multiplication by each class on the basis (1, x_1..x_d):
    column m of M^i holds the coefficients of x_i * x_m, i.e. M^i[k][m] = p_im^k."""
    n = s.d + 1
    p = s.tensor.p
    return tuple(
        QMatrix(tuple(tuple(p[i][m][k] for m in range(n)) for k in range(n)))
        for i in range(n)
    )
