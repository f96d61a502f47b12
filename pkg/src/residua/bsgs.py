"""Deterministic permutation-group kernel.

A PermGroup carries a base and strong generating set built by a fully
deterministic Schreier-Sims: base points are the smallest moved points,
orbits are grown breadth-first in point order, and generators are processed
in input order.  Orders are exact integers, membership tests are exact, and
two runs on the same input produce identical chains.
"""

from __future__ import annotations

from .errors import DEFAULT_CAPS, Caps, CapExceeded, InputError
from .perm import Permutation


def _mul(a, b):
    # image tuples: apply a, then b
    return tuple(b[i] for i in a)


def _inv(a):
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def _smallest_moved(a):
    for i, j in enumerate(a):
        if i != j:
            return i
    return None


class _Chain:
    """Stabilizer chain state produced by the Schreier-Sims run."""

    __slots__ = ("degree", "base", "strong", "trans")

    def __init__(self, degree):
        self.degree = degree
        self.base = []      # base points
        self.strong = []    # strong[i]: generators first moving base[i]
        self.trans = []     # trans[i]: point -> transversal image tuple

    def gens_at(self, level):
        out = []
        for lvl in range(level, len(self.base)):
            out.extend(self.strong[lvl])
        return out

    def rebuild_orbit(self, level):
        gens = self.gens_at(level)
        point = self.base[level]
        trans = {point: tuple(range(self.degree))}
        queue = [point]
        while queue:
            x = queue.pop(0)
            ux = trans[x]
            for g in gens:
                y = g[x]
                if y not in trans:
                    trans[y] = _mul(ux, g)
                    queue.append(y)
        self.trans[level] = trans

    def sift(self, g, start=0):
        """Reduce g through the chain; return (residue, first failing level)."""
        for level in range(start, len(self.base)):
            x = g[self.base[level]]
            trans = self.trans[level]
            if x not in trans:
                return g, level
            g = _mul(g, _inv(trans[x]))
        return g, len(self.base)

    def place(self, g):
        """Insert a permutation as a strong generator at its sift level."""
        identity = tuple(range(self.degree))
        residue, level = self.sift(g)
        if residue == identity:
            return None
        if level == len(self.base):
            self.base.append(_smallest_moved(residue))
            self.strong.append([])
            self.trans.append({})
        self.strong[level].append(residue)
        for lvl in range(level + 1):
            self.rebuild_orbit(lvl)
        return level

    def complete(self):
        """Process Schreier generators bottom-up until the chain is verified."""
        identity = tuple(range(self.degree))
        level = len(self.base) - 1
        while level >= 0:
            self.rebuild_orbit(level)
            gens = self.gens_at(level)
            trans = self.trans[level]
            restart = None
            for x in sorted(trans):
                ux = trans[x]
                for g in gens:
                    uy = trans[g[x]]
                    schreier = _mul(_mul(ux, g), _inv(uy))
                    if schreier == identity:
                        continue
                    residue, at = self.sift(schreier, level + 1)
                    if residue == identity:
                        continue
                    if at == len(self.base):
                        self.base.append(_smallest_moved(residue))
                        self.strong.append([])
                        self.trans.append({})
                    self.strong[at].append(residue)
                    for lvl in range(at + 1):
                        self.rebuild_orbit(lvl)
                    restart = at
                    break
                if restart is not None:
                    break
            if restart is not None:
                level = restart
            else:
                level -= 1

    def order(self):
        n = 1
        for trans in self.trans:
            n *= len(trans)
        return n


class PermGroup:
    """A permutation group with an exact order and membership certificate."""

    __slots__ = ("degree", "generators", "_chain", "order", "__weakref__")

    def __init__(self, generators, degree, max_degree=None):
        if degree < 1:
            raise InputError("degree must be a positive integer")
        limit = DEFAULT_CAPS.degree_cap if max_degree is None else max_degree
        if degree > limit:
            raise CapExceeded(f"degree {degree} exceeds the configured cap {limit}")
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != degree:
                raise InputError(f"generator degree {g.degree} != group degree {degree}")
            if not g.is_identity():
                gens.append(g)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "generators", tuple(gens))
        chain = _Chain(degree)
        for g in gens:
            chain.place(g.images)
        chain.complete()
        object.__setattr__(self, "_chain", chain)
        object.__setattr__(self, "order", chain.order())

    def __setattr__(self, name, value):
        raise AttributeError("PermGroup is immutable")

    # -- queries ---------------------------------------------------------

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise InputError(f"degree mismatch: group {self.degree}, element {p.degree}")
        residue, _ = self._chain.sift(p.images)
        return residue == tuple(range(self.degree))

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def base(self):
        return tuple(self._chain.base)

    def basic_orbits(self):
        return tuple(tuple(sorted(t)) for t in self._chain.trans)

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def same_group_as(self, other: PermGroup) -> bool:
        return self.order == other.order and self.is_subgroup_of(other)

    def is_normal_in(self, other: PermGroup) -> bool:
        """Whether self, a subgroup of other, is normal (generator conjugation)."""
        for h in self.generators:
            for g in other.generators:
                if not self.contains(h.conjugate(g)):
                    return False
        return True

    def moved_points(self):
        moved = set()
        for g in self.generators:
            moved.update(g.moved_points())
        return sorted(moved)

    def orbit(self, point: int):
        seen = {point}
        queue = [point]
        while queue:
            x = queue.pop(0)
            for g in self.generators:
                y = g(x)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def orbits(self):
        remaining = set(range(self.degree))
        out = []
        while remaining:
            rep = min(remaining)
            orb = self.orbit(rep)
            out.append(orb)
            remaining.difference_update(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order}, ngens={len(self.generators)})"


# -- constructors ---------------------------------------------------------


def bsgs_build(generators, degree, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """Build a group handle with an exact stabilizer-chain certificate."""
    return PermGroup(generators, degree, max_degree=caps.degree_cap)


def trivial_group(degree: int = 1) -> PermGroup:
    return PermGroup([], degree, max_degree=degree)


def cyclic_group(n: int) -> PermGroup:
    return PermGroup([Permutation.from_cycles(n, [range(n)])], n, max_degree=n)


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return trivial_group(1)
    gens = [Permutation.from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [range(n)]))
    return PermGroup(gens, n, max_degree=n)


def alternating_group(n: int) -> PermGroup:
    if n <= 2:
        return trivial_group(max(n, 1))
    if n == 3:
        return PermGroup([Permutation.from_cycles(3, [(0, 1, 2)])], 3, max_degree=3)
    cycle = range(n) if n % 2 else range(1, n)
    gens = [Permutation.from_cycles(n, [(0, 1, 2)]), Permutation.from_cycles(n, [cycle])]
    return PermGroup(gens, n, max_degree=n)


def dihedral_group(n: int) -> PermGroup:
    """Dihedral group of order 2n acting on n points (n >= 3)."""
    if n < 3:
        raise InputError("dihedral_group needs n >= 3")
    rotation = Permutation.from_cycles(n, [range(n)])
    reflection = Permutation([(-i) % n for i in range(n)])
    return PermGroup([rotation, reflection], n, max_degree=n)


# -- group operations ------------------------------------------------------


def group_order(G: PermGroup) -> int:
    return G.order


def contains(G: PermGroup, p: Permutation) -> bool:
    return G.contains(p)


def normal_closure(G: PermGroup, seeds, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """Smallest normal subgroup of G containing the seed permutations."""
    gens = []
    for s in seeds:
        if not G.contains(s):
            raise InputError(f"seed {s} lies outside the group")
        if not s.is_identity():
            gens.append(s)
    closure = PermGroup(gens, G.degree, max_degree=G.degree)
    queue = list(gens)
    while queue:
        h = queue.pop(0)
        for g in G.generators:
            c = h.conjugate(g)
            if not closure.contains(c):
                gens.append(c)
                queue.append(c)
                closure = PermGroup(gens, G.degree, max_degree=G.degree)
    return closure


def commutator(a: Permutation, b: Permutation) -> Permutation:
    return a.inverse() * b.inverse() * a * b


def derived_subgroup(G: PermGroup) -> PermGroup:
    """Commutator subgroup: generator-pair commutators, closed normally."""
    comms = []
    seen = set()
    for a in G.generators:
        for b in G.generators:
            c = commutator(a, b)
            if not c.is_identity() and c.images not in seen:
                seen.add(c.images)
                comms.append(c)
    return normal_closure(G, comms)


def derived_series(G: PermGroup):
    """Strictly descending derived series; the last term is perfect."""
    series = [G]
    while True:
        nxt = derived_subgroup(series[-1])
        if nxt.order == series[-1].order:
            return series
        series.append(nxt)


def lower_central_series(G: PermGroup):
    """Strictly descending lower central series; terminal equals [terminal, G]."""
    series = [G]
    while True:
        comms = []
        seen = set()
        for a in series[-1].generators:
            for b in G.generators:
                c = commutator(a, b)
                if not c.is_identity() and c.images not in seen:
                    seen.add(c.images)
                    comms.append(c)
        nxt = normal_closure(G, comms)
        if nxt.order == series[-1].order:
            return series
        series.append(nxt)


def soluble_residual(G: PermGroup) -> PermGroup:
    return derived_series(G)[-1]


def nilpotent_residual(G: PermGroup) -> PermGroup:
    return lower_central_series(G)[-1]


def is_soluble(G: PermGroup) -> bool:
    return derived_series(G)[-1].is_trivial()


def is_nilpotent(G: PermGroup) -> bool:
    return lower_central_series(G)[-1].is_trivial()


def is_abelian(G: PermGroup) -> bool:
    gens = G.generators
    return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])


def is_perfect(G: PermGroup) -> bool:
    return derived_subgroup(G).order == G.order


def direct_product(G: PermGroup, H: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """External direct product acting on the disjoint union of the point sets."""
    degree = G.degree + H.degree
    if degree > caps.degree_cap:
        raise CapExceeded(f"direct product degree {degree} exceeds cap {caps.degree_cap}")
    gens = [g.extend(degree) for g in G.generators]
    gens += [h.shift(G.degree, degree) for h in H.generators]
    return PermGroup(gens, degree, max_degree=degree)


def wreath_product(G: PermGroup, T: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """Imprimitive wreath product G wr T on deg(G) * deg(T) points.

    The base group is deg(T) disjoint copies of G, permuted blockwise by T;
    the order is |G|^deg(T) * |T| whether or not T is transitive.
    """
    m, n = G.degree, T.degree
    degree = m * n
    if degree > caps.degree_cap:
        raise CapExceeded(f"wreath product degree {degree} exceeds cap {caps.degree_cap}")
    gens = []
    for block in range(n):
        for g in G.generators:
            gens.append(g.shift(block * m, degree))
    for t in T.generators:
        images = [0] * degree
        for block in range(n):
            for i in range(m):
                images[block * m + i] = t(block) * m + i
        gens.append(Permutation(images))
    return PermGroup(gens, degree, max_degree=degree)


# -- coset actions ---------------------------------------------------------


class CosetAction:
    """Right-coset action of G on the cosets of a normal subgroup N.

    The image group is a faithful permutation realization of G/N; the action
    is built breadth-first from the generators so coset index 0 is N itself.
    """

    __slots__ = ("parent", "kernel", "reps", "group")

    def __init__(self, G: PermGroup, N: PermGroup, caps: Caps = DEFAULT_CAPS):
        if not N.is_subgroup_of(G):
            raise InputError("coset action requires N <= G")
        if not N.is_normal_in(G):
            raise InputError("coset action here requires N normal in G")
        index = G.order // N.order
        if index > caps.element_cap:
            raise CapExceeded(f"coset space of size {index} exceeds element cap {caps.element_cap}")
        reps = [Permutation.identity(G.degree)]
        queue = [0]
        while queue:
            i = queue.pop(0)
            for g in G.generators:
                candidate = reps[i] * g
                if self._coset_index(N, reps, candidate) is None:
                    reps.append(candidate)
                    queue.append(len(reps) - 1)
        if len(reps) != index:
            raise InputError("coset enumeration failed; N is not a subgroup of G")
        object.__setattr__(self, "parent", G)
        object.__setattr__(self, "kernel", N)
        object.__setattr__(self, "reps", tuple(reps))
        images = [self.project(g) for g in G.generators]
        object.__setattr__(self, "group", PermGroup(images, index, max_degree=index))

    def __setattr__(self, name, value):
        raise AttributeError("CosetAction is immutable")

    @staticmethod
    def _coset_index(N, reps, element):
        for j, rep in enumerate(reps):
            if N.contains(element * rep.inverse()):
                return j
        return None

    def coset_of(self, element: Permutation) -> int:
        j = self._coset_index(self.kernel, self.reps, element)
        if j is None:
            raise InputError("element lies outside the parent group")
        return j

    def project(self, element: Permutation) -> Permutation:
        """Image of a parent element as a permutation of the coset space."""
        return Permutation(self.coset_of(rep * element) for rep in self.reps)


def quotient(G: PermGroup, N: PermGroup, caps: Caps = DEFAULT_CAPS) -> CosetAction:
    return CosetAction(G, N, caps=caps)


# -- intersections and block systems ---------------------------------------


def intersection_from_elements(elements_a, elements_b, degree: int) -> PermGroup:
    """Group generated by the common elements of two exhaustive listings."""
    common = set(elements_a) & set(elements_b)
    return PermGroup(sorted(common), degree, max_degree=degree)


def minimal_block_containing(G: PermGroup, points) -> list[int]:
    """Smallest G-block containing the given points (G transitive).

    Standard union-find block algorithm; returns the block as a sorted list.
    """
    parent = list(range(G.degree))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return None
        if rx > ry:
            rx, ry = ry, rx
        parent[ry] = rx
        return rx, ry

    points = list(points)
    queue = []
    for p in points[1:]:
        merged = union(points[0], p)
        if merged:
            queue.append(merged)
    while queue:
        x, y = queue.pop(0)
        for g in G.generators:
            merged = union(g(x), g(y))
            if merged:
                queue.append(merged)
    root = find(points[0])
    return sorted(p for p in range(G.degree) if find(p) == root)


def is_primitive(G: PermGroup) -> bool:
    """Transitive with no nontrivial block system."""
    if not G.is_transitive():
        return False
    if G.degree == 1:
        return True
    for other in range(1, G.degree):
        block = minimal_block_containing(G, [0, other])
        if len(block) != G.degree:
            return False
    return True
