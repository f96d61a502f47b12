"""Brute-force ground truth for groups of small order.

Everything here enumerates honestly and is guarded by explicit caps:
full element sets, conjugacy classes, normal subgroups, the complete
subgroup lattice, Frattini/center/Fitting/socle, and composition factors.
These routines are the oracles that the faster structural paths elsewhere
are tested against.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from weakref import WeakKeyDictionary

import numpy as np

from .bsgs import (
    PermGroup,
    is_nilpotent,
    is_soluble,
    lower_central_series,
    quotient,
)
from .errors import DEFAULT_CAPS, Caps, CapExceeded, DataError
from .exact import factorize, is_prime, is_prime_power
from .perm import Permutation


_element_cache: WeakKeyDictionary = WeakKeyDictionary()
_normal_cache: WeakKeyDictionary = WeakKeyDictionary()
_factor_cache: WeakKeyDictionary = WeakKeyDictionary()


def enumerate_elements(G: PermGroup, caps: Caps = DEFAULT_CAPS) -> list[Permutation]:
    """All elements of G, sorted by image tuple; errors past the element cap."""
    if G.order > caps.element_cap:
        raise CapExceeded(f"|G| = {G.order} exceeds element cap {caps.element_cap}")
    cached = _element_cache.get(G)
    if cached is not None:
        return list(cached)
    identity = Permutation.identity(G.degree)
    seen = {identity.images: identity}
    frontier = [identity]
    while frontier:
        new = []
        for p in frontier:
            for g in G.generators:
                q = p * g
                if q.images not in seen:
                    seen[q.images] = q
                    new.append(q)
        frontier = new
    elements = sorted(seen.values())
    if len(elements) != G.order:
        raise DataError("element enumeration disagrees with the BSGS order")
    _element_cache[G] = tuple(elements)
    return elements


def group_from_elements(perms, degree: int) -> PermGroup:
    """Handle generated by the given elements, with a small generating set."""
    gens: list[Permutation] = []
    current = PermGroup([], degree, max_degree=degree)
    for p in sorted(perms):
        if not current.contains(p):
            gens.append(p)
            current = PermGroup(gens, degree, max_degree=degree)
    return current


def conjugacy_classes(G: PermGroup, caps: Caps = DEFAULT_CAPS) -> list[list[Permutation]]:
    """Conjugacy classes, each led by its lex-least member; classes sorted."""
    elements = enumerate_elements(G, caps)
    remaining = {p.images: p for p in elements}
    classes = []
    while remaining:
        rep = remaining.pop(min(remaining))
        cls = {rep.images: rep}
        queue = [rep]
        while queue:
            x = queue.pop()
            for g in G.generators:
                y = x.conjugate(g)
                if y.images not in cls:
                    cls[y.images] = y
                    remaining.pop(y.images, None)
                    queue.append(y)
        classes.append(sorted(cls.values()))
    return classes


def _join(subgroups, degree: int) -> PermGroup:
    gens = []
    for H in subgroups:
        gens.extend(H.generators)
    return PermGroup(gens, degree, max_degree=degree)


def _min_nonidentity_element(H: PermGroup, caps: Caps) -> tuple:
    if H.order == 1:
        return ()
    elements = enumerate_elements(H, caps)
    return elements[1].images if elements[0].is_identity() else elements[0].images


def normal_subgroups(G: PermGroup, caps: Caps = DEFAULT_CAPS) -> list[PermGroup]:
    """All normal subgroups: join-closure of single-class normal closures.

    Every normal subgroup is generated by the conjugacy classes it contains,
    so the pairwise-join fixpoint of the class closures is the complete list.
    Returned sorted by (order, least non-identity element).
    """
    from .bsgs import normal_closure

    cached = _normal_cache.get(G)
    if cached is not None:
        return list(cached)
    classes = conjugacy_classes(G, caps)
    found: list[PermGroup] = [PermGroup([], G.degree, max_degree=G.degree)]

    def record(H: PermGroup) -> bool:
        for K in found:
            if K.order == H.order and H.is_subgroup_of(K):
                return False
        found.append(H)
        return True

    seeds = []
    for cls in classes:
        if cls[0].is_identity() and len(cls) == 1:
            continue
        closure = normal_closure(G, [cls[0]])
        if record(closure):
            seeds.append(closure)

    worklist = list(found[1:])
    while worklist:
        H = worklist.pop(0)
        for S in seeds:
            if S.is_subgroup_of(H):
                continue
            K = _join([H, S], G.degree)
            if record(K):
                worklist.append(K)
    found.sort(key=lambda H: (H.order, _min_nonidentity_element(H, caps)))
    _normal_cache[G] = tuple(found)
    return found


def is_normal_subset(G: PermGroup, H: PermGroup) -> bool:
    return H.is_subgroup_of(G) and H.is_normal_in(G)


def intersection_of_normals(G: PermGroup, N1: PermGroup, N2: PermGroup,
                            caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """N1 meet N2 by filtering the smaller element set through the other."""
    small, large = (N1, N2) if N1.order <= N2.order else (N2, N1)
    common = [p for p in enumerate_elements(small, caps) if large.contains(p)]
    return group_from_elements(common, G.degree)


# -- subgroup lattice -------------------------------------------------------


@dataclass
class SubgroupLattice:
    """Complete subgroup lattice of a small group.

    Subgroups are stored as frozensets of element ids into `elements`
    (the sorted full element list of the parent).
    """

    parent: PermGroup
    elements: list[Permutation]
    subgroups: list[frozenset[int]]
    generator_ids: list[tuple[int, ...]]
    normal_flags: list[bool]
    maximal_flags: list[bool]

    def __len__(self) -> int:
        return len(self.subgroups)

    def order_of(self, i: int) -> int:
        return len(self.subgroups[i])

    def subgroup_handle(self, i: int) -> PermGroup:
        gens = [self.elements[j] for j in self.generator_ids[i]]
        return PermGroup(gens, self.parent.degree, max_degree=self.parent.degree)

    def subgroup_elements(self, i: int) -> list[Permutation]:
        return [self.elements[j] for j in sorted(self.subgroups[i])]

    def index_of_set(self, ids: frozenset[int]) -> int:
        return self.subgroups.index(ids)


def _closure_ids(table: np.ndarray, gen_ids, identity_id: int) -> frozenset[int]:
    members = {identity_id}
    gen_list = sorted(set(gen_ids))
    frontier = [identity_id]
    while frontier:
        prods = table[np.ix_(frontier, gen_list)].ravel()
        fresh = set(prods.tolist()) - members
        members |= fresh
        frontier = sorted(fresh)
    return frozenset(members)


def all_subgroups(G: PermGroup, caps: Caps = DEFAULT_CAPS) -> SubgroupLattice:
    """Every subgroup of G, via prime-power cyclic seeds and join fixpoint."""
    if G.order > caps.subgroup_cap:
        raise CapExceeded(
            f"|G| = {G.order} exceeds subgroup-enumeration cap {caps.subgroup_cap}"
        )
    elements = enumerate_elements(G, caps)
    n = len(elements)
    index = {p.images: i for i, p in enumerate(elements)}
    identity_id = index[Permutation.identity(G.degree).images]

    table = np.empty((n, n), dtype=np.int32)
    for i, p in enumerate(elements):
        pi = p.images
        row = table[i]
        for j, q in enumerate(elements):
            qi = q.images
            row[j] = index[tuple(qi[k] for k in pi)]

    # cyclic seeds of prime-power order generate every subgroup
    seeds: dict[frozenset[int], int] = {}
    for i in range(n):
        if i == identity_id:
            continue
        if is_prime_power(elements[i].order()) is None:
            continue
        cyc = _closure_ids(table, [i], identity_id)
        if cyc not in seeds:
            seeds[cyc] = i
    seed_items = sorted(seeds.items(), key=lambda kv: (len(kv[0]), kv[1]))

    trivial = frozenset([identity_id])
    gen_map: dict[frozenset[int], tuple[int, ...]] = {trivial: ()}
    worklist = [trivial]
    for cyc, gid in seed_items:
        if cyc not in gen_map:
            gen_map[cyc] = (gid,)
            worklist.append(cyc)
    while worklist:
        H = worklist.pop(0)
        for cyc, gid in seed_items:
            if gid in H:
                continue
            K = _closure_ids(table, gen_map[H] + (gid,), identity_id)
            if K not in gen_map:
                gen_map[K] = gen_map[H] + (gid,)
                worklist.append(K)

    subgroups = sorted(gen_map, key=lambda s: (len(s), sorted(s)))
    generator_ids = [gen_map[s] for s in subgroups]

    # normality: closed under conjugation by parent generators
    conj_maps = []
    for g in G.generators:
        gi = index[g.images]
        ginv = index[g.inverse().images]
        conj = np.array([table[ginv, table[x, gi]] for x in range(n)], dtype=np.int32)
        conj_maps.append(conj)
    normal_flags = []
    for s in subgroups:
        ids = np.fromiter(s, dtype=np.int32)
        normal_flags.append(all(set(cm[ids].tolist()) == s for cm in conj_maps))

    # maximality: no strictly intermediate subgroup
    full = subgroups[-1]
    maximal_flags = [False] * len(subgroups)
    for i, H in enumerate(subgroups):
        if H == full:
            continue
        is_max = True
        for K in subgroups:
            if len(K) <= len(H) or K == full or len(K) % len(H):
                continue
            if K != H and H < K:
                is_max = False
                break
        maximal_flags[i] = is_max
    return SubgroupLattice(
        parent=G,
        elements=elements,
        subgroups=subgroups,
        generator_ids=generator_ids,
        normal_flags=normal_flags,
        maximal_flags=maximal_flags,
    )


# -- classical subgroups ----------------------------------------------------


def center(G: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """Elements commuting with every generator."""
    central = [p for p in enumerate_elements(G, caps)
               if all(p * g == g * p for g in G.generators)]
    return group_from_elements(central, G.degree)


def frattini(G: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """Intersection of the maximal subgroups (the whole group if none)."""
    lattice = all_subgroups(G, caps)
    maximal = [s for s, flag in zip(lattice.subgroups, lattice.maximal_flags) if flag]
    if not maximal:
        return G
    common = frozenset.intersection(*maximal)
    return group_from_elements([lattice.elements[i] for i in common], G.degree)


def fitting(G: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """Join of the normal p-subgroups over all p dividing |G|; nilpotent."""
    normals = normal_subgroups(G, caps)
    parts = []
    for p in sorted(factorize(G.order)):
        p_normals = [N for N in normals if N.order > 1 and is_prime_power(N.order) == p]
        if p_normals:
            parts.append(_join(p_normals, G.degree))
    fit = _join(parts, G.degree) if parts else PermGroup([], G.degree, max_degree=G.degree)
    if not lower_central_series(fit)[-1].is_trivial():
        raise DataError("computed Fitting subgroup is not nilpotent")
    for N in normals:
        if is_prime_power(N.order) is not None and not N.is_subgroup_of(fit):
            raise DataError("Fitting subgroup misses a normal p-subgroup")
    return fit


def soluble_radical(G: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    """Largest normal soluble subgroup, as the join of all of them."""
    normals = normal_subgroups(G, caps)
    soluble = [N for N in normals if is_soluble(N)]
    rad = _join(soluble, G.degree)
    if not is_soluble(rad):
        raise DataError("join of soluble normal subgroups is not soluble")
    return rad


def minimal_normal_subgroups(G: PermGroup, caps: Caps = DEFAULT_CAPS) -> list[PermGroup]:
    """Minimal elements of the poset of nontrivial normal subgroups."""
    normals = [N for N in normal_subgroups(G, caps) if N.order > 1]
    out = []
    for N in normals:
        if not any(M.order < N.order and M.is_subgroup_of(N) for M in normals):
            out.append(N)
    return out


def socle(G: PermGroup, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    minimals = minimal_normal_subgroups(G, caps)
    if not minimals:
        return PermGroup([], G.degree, max_degree=G.degree)
    return _join(minimals, G.degree)


# -- composition factors ----------------------------------------------------


@dataclass(frozen=True)
class FactorDescriptor:
    """A composition factor: a prime cycle or a nonabelian simple group."""

    kind: str  # "cyclic" or "nonabelian-simple"
    order: int
    name: str | None = None

    def __post_init__(self):
        if self.kind == "cyclic":
            if not is_prime(self.order):
                raise DataError(f"cyclic factor of non-prime order {self.order}")
        elif self.kind == "nonabelian-simple":
            if self.order < 60:
                raise DataError(f"nonabelian simple factor of order {self.order} < 60")
        else:
            raise DataError(f"unknown factor kind {self.kind!r}")

    def label(self) -> str:
        if self.name:
            return self.name
        if self.kind == "cyclic":
            return f"C{self.order}"
        return f"simple({self.order})"


def _default_simple_table():
    from .catalog import load_simple_table

    return load_simple_table()


def identify_simple(order: int, witness: PermGroup | None = None, table=None,
                    caps: Caps = DEFAULT_CAPS) -> str:
    """Catalog name of the nonabelian simple group of the given order.

    Ambiguous orders (20160 is the classical case) are resolved by the
    element-order fingerprint of the witness group.
    """
    rows = [r for r in (table if table is not None else _default_simple_table())
            if r.order == order]
    if not rows:
        raise DataError(f"order {order} is not in the bundled simple-group table")
    if len(rows) == 1:
        return rows[0].name
    if witness is None:
        raise DataError(f"order {order} is ambiguous and no witness group was supplied")
    fingerprint = frozenset(p.order() for p in enumerate_elements(witness, caps))
    matches = [r for r in rows if r.fingerprint == fingerprint]
    if len(matches) != 1:
        raise DataError(
            f"element-order fingerprint {sorted(fingerprint)} matches "
            f"{len(matches)} table rows of order {order}"
        )
    return matches[0].name


def composition_factors(G: PermGroup, caps: Caps = DEFAULT_CAPS, table=None) -> Counter:
    """Multiset of composition factors (series-independent by Jordan-Holder).

    Works down a series through largest proper normal subgroups; each factor
    is either a prime cycle or a nonabelian simple group named from the table.
    """
    if G.order > caps.element_cap:
        raise CapExceeded(f"|G| = {G.order} exceeds element cap {caps.element_cap}")
    if table is None:
        table = _default_simple_table()
    cached = _factor_cache.get(G)
    if cached is not None and cached[0] is table:
        return Counter(cached[1])
    factors: Counter[FactorDescriptor] = Counter()
    current = G
    while current.order > 1:
        proper = [N for N in normal_subgroups(current, caps) if N.order < current.order]
        top = max(proper, key=lambda N: N.order)
        q = current.order // top.order
        if is_prime(q):
            factors[FactorDescriptor("cyclic", q, f"C{q}")] += 1
        else:
            rows = [r for r in table if r.order == q]
            witness = None
            if len(rows) > 1:
                witness = quotient(current, top, caps=caps).group
            name = identify_simple(q, witness=witness, table=table, caps=caps)
            factors[FactorDescriptor("nonabelian-simple", q, name)] += 1
        current = top
    _factor_cache[G] = (table, Counter(factors))
    return factors


def factor_product(factors: Counter) -> int:
    out = 1
    for desc, mult in factors.items():
        out *= desc.order ** mult
    return out
