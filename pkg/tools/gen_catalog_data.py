#!/usr/bin/env python3
"""Regenerate the bundled primitive-group catalog and verification corpus.

Every entry is derived from first principles (finite-field Mobius and affine
actions, classical Mathieu generators, actions on 2-subsets, coset actions)
and verified for order, transitivity, and primitivity before being written.
The output files under src/residua/data/ are committed; this script exists
so the data can be audited and rebuilt from scratch.

Usage:  python tools/gen_catalog_data.py
"""

from __future__ import annotations

import sys
from itertools import combinations
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from residua.bsgs import (  # noqa: E402
    PermGroup,
    alternating_group,
    bsgs_build,
    cyclic_group,
    dihedral_group,
    direct_product,
    is_primitive,
    symmetric_group,
    wreath_product,
)
from residua.groupio import format_group  # noqa: E402
from residua.oracle import enumerate_elements  # noqa: E402
from residua.perm import Permutation  # noqa: E402

DATA = ROOT / "src" / "residua" / "data"


# -- finite fields -----------------------------------------------------------


class GF:
    """GF(p^k) with a fixed modulus polynomial; elements are int labels.

    An element a_0 + a_1 t + ... is labelled sum a_i p^i, so labels run
    0 .. p^k - 1 and label 1 is the field's one.
    """

    def __init__(self, p, k, modulus):
        # modulus: coefficients of t^k as a polynomial of degree < k
        self.p, self.k, self.q = p, k, p ** k
        self.modulus = modulus

    def coeffs(self, label):
        out = []
        for _ in range(self.k):
            out.append(label % self.p)
            label //= self.p
        return out

    def label(self, coeffs):
        out = 0
        for c in reversed(coeffs):
            out = out * self.p + c % self.p
        return out

    def add(self, a, b):
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.label([(x + y) % self.p for x, y in zip(ca, cb)])

    def neg(self, a):
        return self.label([(-x) % self.p for x in self.coeffs(a)])

    def mul(self, a, b):
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(ca):
            for j, y in enumerate(cb):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        for i in range(len(prod) - 1, self.k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j, m in enumerate(self.modulus):
                    prod[i - self.k + j] = (prod[i - self.k + j] + c * m) % self.p
        return self.label(prod[: self.k])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise AssertionError

    def pow(self, a, n):
        out = 1
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def frobenius(self, a):
        return self.pow(a, self.p)


GF8 = GF(2, 3, (1, 1, 0))        # t^3 = 1 + t
GF9 = GF(3, 2, (2, 0))           # t^2 = -1, so t plays the role of i


# -- Mobius actions on the projective line ----------------------------------


def moebius_points(field):
    """Points 0..q-1 are the field labels; point q is infinity."""
    return field.q + 1


def translation(field, c):
    n = moebius_points(field)
    images = [field.add(x, c) for x in range(field.q)] + [field.q]
    return Permutation(images)


def inversion(field):
    """x -> -1/x, swapping 0 and infinity."""
    n = field.q
    images = list(range(n + 1))
    images[0], images[n] = n, 0
    for x in range(1, n):
        images[x] = field.neg(field.inv(x))
    return Permutation(images)


def scalar_mul(field, g):
    images = [field.mul(g, x) for x in range(field.q)] + [field.q]
    return Permutation(images)


def frobenius_map(field):
    images = [field.frobenius(x) for x in range(field.q)] + [field.q]
    return Permutation(images)


def psl2_gens(field):
    """Translations by a basis plus x -> -1/x generate PSL(2,q)."""
    basis = [field.label([0] * i + [1]) for i in range(field.k)]
    return [translation(field, b) for b in basis] + [inversion(field)]


def psl2_prime(p):
    f = GF(p, 1, (0,))
    return psl2_gens(f), p + 1, f


# -- affine actions ----------------------------------------------------------


def affine_gens_vector(p, k, matrices):
    """AGL-type generators on p^k points: basis translations + linear maps.

    Points are vectors labelled sum v_i p^i; matrices act as v -> M v.
    """
    q = p ** k

    def coeffs(label):
        out = []
        for _ in range(k):
            out.append(label % p)
            label //= p
        return out

    def label(vec):
        out = 0
        for c in reversed(vec):
            out = out * p + c % p
        return out

    gens = []
    for i in range(k):
        e = [0] * k
        e[i] = 1
        images = []
        for x in range(q):
            v = coeffs(x)
            images.append(label([(a + b) % p for a, b in zip(v, e)]))
        gens.append(Permutation(images))
    for M in matrices:
        images = []
        for x in range(q):
            v = coeffs(x)
            w = [sum(M[r][c] * v[c] for c in range(k)) % p for r in range(k)]
            images.append(label(w))
        gens.append(Permutation(images))
    return gens


def frobenius_vector(field):
    return Permutation([field.frobenius(x) for x in range(field.q)])


def field_affine_gens(field, multipliers, with_frobenius=False):
    """x -> x + b (basis b), x -> g x, optionally x -> x^p, on the field."""
    basis = [field.label([0] * i + [1]) for i in range(field.k)]
    gens = []
    for b in basis:
        gens.append(Permutation([field.add(x, b) for x in range(field.q)]))
    for g in multipliers:
        gens.append(Permutation([field.mul(g, x) for x in range(field.q)]))
    if with_frobenius:
        gens.append(frobenius_vector(field))
    return gens


def frobenius_affine(p, g):
    """AGL(1,p) = <x+1, x*g> on 0..p-1 for a unit g."""
    t = Permutation([(x + 1) % p for x in range(p)])
    m = Permutation([(g * x) % p for x in range(p)])
    return [t, m]


# -- derived actions ---------------------------------------------------------


def action_on_pairs(G):
    """Induced action on unordered 2-subsets of the natural points."""
    pairs = list(combinations(range(G.degree), 2))
    index = {pair: i for i, pair in enumerate(pairs)}
    gens = []
    for g in G.generators:
        images = []
        for a, b in pairs:
            images.append(index[tuple(sorted((g(a), g(b))))])
        gens.append(Permutation(images))
    return bsgs_build(gens, len(pairs))


def point_stabilizer(G, point):
    """Stabilizer of a point via Schreier generators."""
    trans = {point: Permutation.identity(G.degree)}
    queue = [point]
    while queue:
        x = queue.pop(0)
        for g in G.generators:
            y = g(x)
            if y not in trans:
                trans[y] = trans[x] * g
                queue.append(y)
    gens = []
    for x in sorted(trans):
        for g in G.generators:
            s = trans[x] * g * trans[g(x)].inverse()
            if not s.is_identity():
                gens.append(s)
    stab = bsgs_build(gens, G.degree)
    assert stab.order * len(trans) == G.order
    return stab


def restrict_to_moved(G, keep_points):
    """Relabel a group fixing everything outside keep_points."""
    keep = sorted(keep_points)
    index = {p: i for i, p in enumerate(keep)}
    gens = []
    for g in G.generators:
        images = [0] * len(keep)
        for p in keep:
            images[index[p]] = index[g(p)]
        gens.append(Permutation(images))
    return bsgs_build(gens, len(keep))


def coset_action_on_subgroup(G, H):
    """Right-coset action of G on H\\G (H need not be normal)."""
    reps = [Permutation.identity(G.degree)]

    def coset_of(x):
        for j, r in enumerate(reps):
            if H.contains(x * r.inverse()):
                return j
        return None

    queue = [0]
    while queue:
        i = queue.pop(0)
        for g in G.generators:
            c = reps[i] * g
            if coset_of(c) is None:
                reps.append(c)
                queue.append(len(reps) - 1)
    gens = []
    for g in G.generators:
        gens.append(Permutation([coset_of(r * g) for r in reps]))
    return bsgs_build(gens, len(reps))


# -- Mathieu groups ----------------------------------------------------------

# Classical generator pairs on 11 and 12 letters (1-indexed in the literature).
M11_GENS = ["(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"]
M12_EXTRA = "(1 12)(2 11)(3 6)(4 8)(5 9)(7 10)"


def build_m11():
    gens = [Permutation.parse(s, 11) for s in M11_GENS]
    return bsgs_build(gens, 11)


def build_m12():
    gens = [Permutation.parse(s, 12) for s in M11_GENS + [M12_EXTRA]]
    return bsgs_build(gens, 12)


def build_m10():
    m11 = build_m11()
    stab = point_stabilizer(m11, 10)
    return restrict_to_moved(stab, range(10))


def build_m11_degree12():
    """M11 on 12 letters: coset action on a PSL(2,11) subgroup of index 12."""
    m11 = build_m11()
    elements = enumerate_elements(m11)
    eleven = next(p for p in elements if p.order() == 11)
    for p in elements:
        if p.order() != 2:
            continue
        H = bsgs_build([eleven, p], 11)
        if H.order == 660:
            action = coset_action_on_subgroup(m11, H)
            assert action.order == 7920 and action.degree == 12
            return action
    raise AssertionError("no PSL(2,11) subgroup found in M11")


def build_psl2_11_degree11():
    """PSL(2,11) on 11 points: coset action on an A5 subgroup of index 11."""
    gens, deg, _ = psl2_prime(11)
    G = bsgs_build(gens, deg)
    elements = enumerate_elements(G)
    fives = [p for p in elements if p.order() == 5]
    for p in elements:
        if p.order() != 2:
            continue
        H = bsgs_build([fives[0], p], deg)
        if H.order == 60:
            action = coset_action_on_subgroup(G, H)
            assert action.order == 660 and action.degree == 11
            return action
    raise AssertionError("no A5 subgroup found in PSL(2,11)")


# -- small abstract groups for the corpus ------------------------------------


def quaternion_group():
    """Q8 as the regular action on {1,-1,i,-i,j,-j,k,-k}."""
    # encode units as 0..7: 1,-1,i,-i,j,-j,k,-k
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    mult = {}
    sign = {False: "", True: "-"}

    def canon(s):
        neg = s.startswith("-")
        base = s.lstrip("-")
        return neg, base

    table_ij = {("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
                ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j"}

    def mul(a, b):
        na, xa = canon(a)
        nb, xb = canon(b)
        neg = na != nb
        if xa == "1":
            base = xb
        elif xb == "1":
            base = xa
        elif xa == xb:
            base = "1"
            neg = not neg
        else:
            r = table_ij[(xa, xb)]
            if r.startswith("-"):
                neg = not neg
                r = r[1:]
            base = r
        return sign[neg] + base if base != "1" or not neg else "-1"

    index = {n: i for i, n in enumerate(names)}
    gens = []
    for g in ("i", "j"):
        images = [index[mul(n, g)] for n in names]
        gens.append(Permutation(images))
    Q = bsgs_build(gens, 8)
    assert Q.order == 8
    involutions = [p for p in enumerate_elements(Q) if p.order() == 2]
    assert len(involutions) == 1  # Q8 has a unique involution
    return Q


def sl23():
    """SL(2,3) acting on the 8 nonzero vectors of F3^2."""
    vectors = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(vectors)}
    mats = [((0, 2), (1, 0)), ((1, 1), (0, 1))]
    gens = []
    for M in mats:
        images = [index[((M[0][0] * a + M[0][1] * b) % 3,
                         (M[1][0] * a + M[1][1] * b) % 3)] for a, b in vectors]
        gens.append(Permutation(images))
    G = bsgs_build(gens, 8)
    assert G.order == 24
    return G


# -- catalog assembly --------------------------------------------------------


def catalog_entries():
    """(degree, label, expected order, source note, PermGroup) rows."""
    rows = []

    def add(degree, label, order, source, group):
        assert group.degree == degree, (label, group.degree)
        assert group.order == order, (label, group.order, order)
        assert group.is_transitive(), label
        assert is_primitive(group), label
        rows.append((degree, label, order, source, group))

    # degree 5
    add(5, "C5", 5, "cyclic rotation", cyclic_group(5))
    add(5, "D10", 10, "dihedral action on a pentagon", dihedral_group(5))
    add(5, "AGL(1,5)", 20, "x -> x+1 and x -> 2x on GF(5)",
        bsgs_build(frobenius_affine(5, 2), 5))
    add(5, "A5", 60, "alternating group", alternating_group(5))
    add(5, "S5", 120, "symmetric group", symmetric_group(5))

    # degree 6
    f5 = psl2_prime(5)
    add(6, "PSL(2,5)", 60, "Mobius maps <x+1, -1/x> on PG(1,5)",
        bsgs_build(f5[0], 6))
    add(6, "PGL(2,5)", 120, "PSL(2,5) with x -> 2x",
        bsgs_build(f5[0] + [scalar_mul(f5[2], 2)], 6))
    add(6, "A6", 360, "alternating group", alternating_group(6))
    add(6, "S6", 720, "symmetric group", symmetric_group(6))

    # degree 7
    add(7, "C7", 7, "cyclic rotation", cyclic_group(7))
    add(7, "D14", 14, "dihedral action on a heptagon", dihedral_group(7))
    add(7, "F21", 21, "x -> x+1 and x -> 2x on GF(7)",
        bsgs_build(frobenius_affine(7, 2), 7))
    add(7, "AGL(1,7)", 42, "x -> x+1 and x -> 3x on GF(7)",
        bsgs_build(frobenius_affine(7, 3), 7))
    # GL(3,2) on the 7 nonzero vectors of F2^3, via GF(8) labels 1..7
    singer = Permutation([GF8.mul(2, x + 1) - 1 for x in range(7)])
    swap12 = []
    for x in range(7):
        c = GF8.coeffs(x + 1)
        swap12.append(GF8.label([c[1], c[0], c[2]]) - 1)
    add(7, "PSL(3,2)", 168, "GL(3,2) = <Singer, basis swap> on F2^3 - 0",
        bsgs_build([singer, Permutation(swap12)], 7))
    add(7, "A7", 2520, "alternating group", alternating_group(7))
    add(7, "S7", 5040, "symmetric group", symmetric_group(7))

    # degree 8
    add(8, "AGL(1,8)", 56, "x -> x+b and x -> tx on GF(8)",
        bsgs_build(field_affine_gens(GF8, [2]), 8))
    add(8, "AGammaL(1,8)", 168, "AGL(1,8) with the Frobenius x -> x^2",
        bsgs_build(field_affine_gens(GF8, [2], with_frobenius=True), 8))
    f7 = psl2_prime(7)
    add(8, "PSL(2,7)", 168, "Mobius maps <x+1, -1/x> on PG(1,7)",
        bsgs_build(f7[0], 8))
    add(8, "PGL(2,7)", 336, "PSL(2,7) with x -> 3x",
        bsgs_build(f7[0] + [scalar_mul(f7[2], 3)], 8))
    add(8, "AGL(3,2)", 1344, "translations with GL(3,2) on F2^3",
        bsgs_build(field_affine_gens(GF8, [2]) + [Permutation(
            [GF8.label([GF8.coeffs(x)[1], GF8.coeffs(x)[0], GF8.coeffs(x)[2]])
             for x in range(8)])], 8))
    add(8, "A8", 20160, "alternating group", alternating_group(8))
    add(8, "S8", 40320, "symmetric group", symmetric_group(8))

    # degree 9 (affine groups over F3^2 and PSL(2,8))
    i_mat = ((0, 2), (1, 0))           # multiplication by i, order 4
    g_mat = ((1, 2), (1, 1))           # multiplication by 1+i, order 8
    frob_mat = ((1, 0), (0, 2))        # field conjugation a+bi -> a-bi
    j_mat = ((1, 1), (1, 2))           # the second Q8 generator
    s_mat = ((0, 2), (1, 0))           # SL(2,3): S = [[0,-1],[1,0]]
    t_mat = ((1, 1), (0, 1))           # SL(2,3): T = [[1,1],[0,1]]
    det_mat = ((2, 0), (0, 1))         # determinant -1
    add(9, "3^2:4", 36, "translations with the order-4 scalar i on F9",
        bsgs_build(affine_gens_vector(3, 2, [i_mat]), 9))
    add(9, "AGL(1,9)", 72, "translations with the Singer scalar 1+i on F9",
        bsgs_build(affine_gens_vector(3, 2, [g_mat]), 9))
    add(9, "3^2:D8", 72, "translations with <i, conjugation> = D8",
        bsgs_build(affine_gens_vector(3, 2, [i_mat, frob_mat]), 9))
    add(9, "3^2:Q8", 72, "translations with the quaternion subgroup of GL(2,3)",
        bsgs_build(affine_gens_vector(3, 2, [i_mat, j_mat]), 9))
    add(9, "AGammaL(1,9)", 144, "AGL(1,9) with the Frobenius",
        bsgs_build(affine_gens_vector(3, 2, [g_mat, frob_mat]), 9))
    add(9, "ASL(2,3)", 216, "translations with SL(2,3) = <S,T>",
        bsgs_build(affine_gens_vector(3, 2, [s_mat, t_mat]), 9))
    add(9, "AGL(2,3)", 432, "translations with GL(2,3)",
        bsgs_build(affine_gens_vector(3, 2, [s_mat, t_mat, det_mat]), 9))
    add(9, "PSL(2,8)", 504, "Mobius maps on PG(1,8)",
        bsgs_build(psl2_gens(GF8), 9))
    add(9, "PGammaL(2,8)", 1512, "PSL(2,8) with the Frobenius x -> x^2",
        bsgs_build(psl2_gens(GF8) + [frobenius_map(GF8)], 9))
    add(9, "A9", 181440, "alternating group", alternating_group(9))
    add(9, "S9", 362880, "symmetric group", symmetric_group(9))

    # degree 10
    add(10, "A5_pairs", 60, "A5 on the 2-subsets of 5 points",
        action_on_pairs(alternating_group(5)))
    add(10, "S5_pairs", 120, "S5 on the 2-subsets of 5 points",
        action_on_pairs(symmetric_group(5)))
    psl29 = psl2_gens(GF9)
    sigma9 = frobenius_map(GF9)
    delta9 = scalar_mul(GF9, 4)  # multiplication by 1+i (label 4 = 1 + 1*t)
    add(10, "PSL(2,9)", 360, "Mobius maps on PG(1,9); abstractly A6",
        bsgs_build(psl29, 10))
    add(10, "PGL(2,9)", 720, "PSL(2,9) with x -> (1+i)x",
        bsgs_build(psl29 + [delta9], 10))
    add(10, "PSigmaL(2,9)", 720, "PSL(2,9) with the Frobenius; abstractly S6",
        bsgs_build(psl29 + [sigma9], 10))
    add(10, "M10", 720, "PSL(2,9) with (1+i)x composed with Frobenius",
        bsgs_build(psl29 + [sigma9 * delta9], 10))
    add(10, "PGammaL(2,9)", 1440, "all semilinear Mobius maps on PG(1,9)",
        bsgs_build(psl29 + [delta9, sigma9], 10))
    add(10, "A10", 1814400, "alternating group", alternating_group(10))
    add(10, "S10", 3628800, "symmetric group", symmetric_group(10))

    # degree 11
    add(11, "C11", 11, "cyclic rotation", cyclic_group(11))
    add(11, "D22", 22, "dihedral action", dihedral_group(11))
    add(11, "F55", 55, "x -> x+1 and x -> 3x on GF(11)",
        bsgs_build(frobenius_affine(11, 3), 11))
    add(11, "AGL(1,11)", 110, "x -> x+1 and x -> 2x on GF(11)",
        bsgs_build(frobenius_affine(11, 2), 11))
    add(11, "PSL(2,11)", 660, "coset action on an A5 subgroup of index 11",
        build_psl2_11_degree11())
    add(11, "M11", 7920, "classical two-generator presentation",
        build_m11())
    add(11, "A11", 19958400, "alternating group", alternating_group(11))
    add(11, "S11", 39916800, "symmetric group", symmetric_group(11))

    # degree 12
    f11 = psl2_prime(11)
    add(12, "PSL(2,11)", 660, "Mobius maps on PG(1,11)",
        bsgs_build(f11[0], 12))
    add(12, "PGL(2,11)", 1320, "PSL(2,11) with x -> 2x",
        bsgs_build(f11[0] + [scalar_mul(f11[2], 2)], 12))
    add(12, "M11", 7920, "coset action of M11 on PSL(2,11), index 12",
        build_m11_degree12())
    add(12, "M12", 95040, "classical three-generator presentation",
        build_m12())
    add(12, "A12", 239500800, "alternating group", alternating_group(12))
    add(12, "S12", 479001600, "symmetric group", symmetric_group(12))

    return rows


def write_catalog():
    rows = catalog_entries()
    lines = [
        "# Primitive permutation groups of degree 5..12.",
        "# degree|label|order|source|generators (1-indexed cycles, ';'-separated)",
        "# Regenerate with tools/gen_catalog_data.py; loaders re-verify order,",
        "# transitivity, and primitivity for every row.",
    ]
    for degree, label, order, source, group in rows:
        gens = ";".join(g.cycle_string() for g in group.generators)
        lines.append(f"{degree}|{label}|{order}|{source}|{gens}")
    (DATA / "primitive_groups.txt").write_text("\n".join(lines) + "\n")
    counts = {}
    for degree, *_ in rows:
        counts[degree] = counts.get(degree, 0) + 1
    print("primitive catalog:", counts, "->", sum(counts.values()), "entries")


# -- corpus ------------------------------------------------------------------


def corpus_groups():
    out = []

    def add(name, group):
        out.append((name, group))

    for n in (2, 3, 4, 5, 6, 7, 8, 9, 10, 12):
        add(f"C{n}", cyclic_group(n))
    add("V4", direct_product(cyclic_group(2), cyclic_group(2)))
    add("C2xC4", direct_product(cyclic_group(2), cyclic_group(4)))
    add("E8", direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                             cyclic_group(2)))
    add("C3xC3", direct_product(cyclic_group(3), cyclic_group(3)))
    add("S3", symmetric_group(3))
    add("D8", dihedral_group(4))
    add("D10", dihedral_group(5))
    add("D12", dihedral_group(6))
    add("Q8", quaternion_group())
    add("A4", alternating_group(4))
    add("S4", symmetric_group(4))
    add("SL(2,3)", sl23())
    add("F20", bsgs_build(frobenius_affine(5, 2), 5))
    add("F21", bsgs_build(frobenius_affine(7, 2), 7))
    add("A4xC2", direct_product(alternating_group(4), cyclic_group(2)))
    add("S4xC2", direct_product(symmetric_group(4), cyclic_group(2)))
    add("A5", alternating_group(5))
    add("S5", symmetric_group(5))
    add("A6", alternating_group(6))
    add("S6", symmetric_group(6))
    add("A7", alternating_group(7))
    add("S7", symmetric_group(7))
    f7 = psl2_prime(7)
    add("PSL(2,7)", bsgs_build(f7[0], 8))
    add("PGL(2,7)", bsgs_build(f7[0] + [scalar_mul(f7[2], 3)], 8))
    f11 = psl2_prime(11)
    add("PSL(2,11)", bsgs_build(f11[0], 12))
    add("A5xA5", direct_product(alternating_group(5), alternating_group(5)))
    add("A5xC2", direct_product(alternating_group(5), cyclic_group(2)))
    add("A5xC6", direct_product(alternating_group(5), cyclic_group(6)))
    add("S5xA5", direct_product(symmetric_group(5), alternating_group(5)))
    add("S5wrC2", wreath_product(symmetric_group(5), cyclic_group(2)))
    return out


def write_corpus():
    directory = DATA / "corpus"
    directory.mkdir(exist_ok=True)
    for old in directory.glob("*.grp"):
        old.unlink()
    groups = corpus_groups()
    for i, (name, group) in enumerate(groups):
        safe = name.replace("(", "").replace(")", "").replace(",", "_").replace(":", "_")
        path = directory / f"{i:02d}_{safe}.grp"
        path.write_text(format_group(group, name=name))
    print(f"corpus: {len(groups)} groups written")


if __name__ == "__main__":
    write_catalog()
    write_corpus()
