"""Group classes: descriptors, membership, extension-closure, closure laws.

Supported classes: the trivial class, abelian, nilpotent, soluble, all
finite groups, D0(J) and D0(J)xS for a simple catalog group J, and poly(X)
(the extension-closure) over any of the base classes.  Membership never
guesses: it either decides through a structural fast path, decides through
the brute-force oracle, or raises UndecidableAtScale.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .bsgs import (
    PermGroup,
    derived_series,
    is_abelian,
    lower_central_series,
    quotient,
)
from .catalog import SimpleTable, is_minimal_simple, load_simple_table
from .errors import DEFAULT_CAPS, Caps, CapExceeded, InputError, UndecidableAtScale
from .oracle import (
    composition_factors,
    enumerate_elements,
    minimal_normal_subgroups,
    normal_subgroups,
    soluble_radical,
    _join,
)

_BASE_KINDS = ("trivial", "abelian", "nilpotent", "soluble", "all", "d0", "d0xS")

#: closure laws each kind is declared to satisfy
_DECLARED = {
    "trivial": frozenset({"subgroup", "quotient", "extension", "normal_product", "residual_r0", "direct_product"}),
    "abelian": frozenset({"subgroup", "quotient", "residual_r0", "direct_product"}),
    "nilpotent": frozenset({"subgroup", "quotient", "normal_product", "residual_r0", "direct_product"}),
    "soluble": frozenset({"subgroup", "quotient", "extension", "normal_product", "residual_r0", "direct_product"}),
    "all": frozenset({"subgroup", "quotient", "extension", "normal_product", "residual_r0", "direct_product"}),
    "d0": frozenset({"quotient", "normal_product", "residual_r0", "direct_product"}),
    "d0xS": frozenset({"subgroup", "quotient", "normal_product", "residual_r0", "direct_product"}),
    "poly": frozenset({"subgroup", "quotient", "extension", "normal_product", "residual_r0", "direct_product"}),
}


@dataclass(frozen=True)
class GroupClass:
    """Descriptor of a class of finite groups with a membership strategy."""

    kind: str
    simple_name: Optional[str] = None
    inner: Optional["GroupClass"] = None

    def __post_init__(self):
        if self.kind not in _BASE_KINDS + ("poly",):
            raise InputError(f"unknown class kind {self.kind!r}")
        if self.kind in ("d0", "d0xS") and not self.simple_name:
            raise InputError(f"{self.kind} requires a simple-group name")
        if self.kind == "poly" and self.inner is None:
            raise InputError("poly requires an inner class")

    @property
    def declared_closures(self) -> frozenset:
        if self.kind == "poly":
            return _DECLARED["poly"]
        return _DECLARED[self.kind]

    def descriptor(self) -> str:
        if self.kind == "poly":
            return f"poly:{self.inner.descriptor()}"
        if self.kind == "d0":
            return f"d0:{self.simple_name}"
        if self.kind == "d0xS":
            return f"d0xS:{self.simple_name}"
        return self.kind

    def __str__(self) -> str:
        return self.descriptor()

    def is_extension_closed(self) -> bool:
        return self.kind in ("trivial", "soluble", "all", "poly")


def trivial_class() -> GroupClass:
    return GroupClass("trivial")


def abelian() -> GroupClass:
    return GroupClass("abelian")


def nilpotent() -> GroupClass:
    return GroupClass("nilpotent")


def soluble() -> GroupClass:
    return GroupClass("soluble")


def all_groups() -> GroupClass:
    return GroupClass("all")


def d0(simple_name: str, require_minimal: bool = False) -> GroupClass:
    _validate_simple_name(simple_name, require_minimal)
    return GroupClass("d0", simple_name=simple_name)


def d0xs(simple_name: str, require_minimal: bool = True) -> GroupClass:
    """The class of J^n x H with H soluble.

    This is a subgroup-closed Fitting formation exactly when J is minimal
    simple, so that is required by default; pass require_minimal=False for
    experiments with other catalog groups (the class is then not
    subgroup-closed and the constants pipeline will refuse it).
    """
    _validate_simple_name(simple_name, require_minimal)
    return GroupClass("d0xS", simple_name=simple_name)


def poly(inner: GroupClass) -> GroupClass:
    """Extension-closure poly(X); idempotent on already-closed classes."""
    if inner.is_extension_closed():
        return inner
    return GroupClass("poly", inner=inner)


def extension_closure(cls: GroupClass) -> GroupClass:
    return poly(cls)


def _validate_simple_name(name: str, require_minimal: bool):
    table = load_simple_table()
    table.by_name(name)  # raises if unknown
    if require_minimal and not is_minimal_simple(name):
        raise InputError(
            f"{name} is not a minimal simple group (Thompson's list); the class "
            "d0xS requires one to be a subgroup-closed Fitting formation"
        )


def parse_descriptor(text: str) -> GroupClass:
    """Parse CLI class syntax: nilpotent, soluble, d0xS:A5, poly:d0xS:A5, ..."""
    text = text.strip()
    if text.startswith("poly:"):
        return poly(parse_descriptor(text[len("poly:"):]))
    if text.startswith("d0xS:"):
        return d0xs(text[len("d0xS:"):])
    if text.startswith("d0:"):
        return d0(text[len("d0:"):])
    simple = {
        "trivial": trivial_class,
        "abelian": abelian,
        "nilpotent": nilpotent,
        "soluble": soluble,
        "all": all_groups,
    }
    if text in simple:
        return simple[text]()
    raise InputError(f"unrecognized class descriptor {text!r}")


# -- membership --------------------------------------------------------------


def _simple_factor_allowed(cls: GroupClass, name: str | None) -> bool:
    """Whether a nonabelian simple composition factor is allowed in poly(X)."""
    inner = cls.inner
    if inner.kind in ("abelian", "nilpotent"):
        return False
    if inner.kind in ("d0", "d0xS"):
        return name == inner.simple_name
    raise InputError(f"poly membership over {inner.kind} is not factor-based")


def _alternating_recognition(G: PermGroup):
    """Name A_n or S_n when G is the full alternating or symmetric group.

    A subgroup of S_n of order n!/2 has index 2, hence is normal, hence
    contains every square, hence every 3-cycle: it is A_n.  Order n! is S_n.
    """
    n = G.degree
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    if G.order == fact and n >= 2:
        return ("S", n)
    if 2 * G.order == fact and n >= 3:
        return ("A", n)
    return None


def member(cls: GroupClass, G: PermGroup, caps: Caps = DEFAULT_CAPS,
           table: SimpleTable | None = None, witness_series=None) -> bool:
    """Exact membership of G in the class, or UndecidableAtScale."""
    if cls.kind == "all":
        return True
    if cls.kind == "trivial":
        return G.order == 1
    if cls.kind == "abelian":
        return is_abelian(G)
    if cls.kind == "nilpotent":
        return lower_central_series(G)[-1].is_trivial()
    if cls.kind == "soluble":
        return derived_series(G)[-1].is_trivial()
    if table is None:
        table = load_simple_table()
    if cls.kind in ("d0", "d0xS"):
        return _member_d0(cls, G, caps, table)
    return _member_poly(cls, G, caps, table, witness_series)


def _member_d0(cls: GroupClass, G: PermGroup, caps: Caps, table: SimpleTable) -> bool:
    """Structural test: G = K x R with K semisimple over J and R soluble."""
    if G.order == 1:
        return True
    if G.order > caps.element_cap:
        raise UndecidableAtScale(
            f"d0-type membership for |G| = {G.order} exceeds the oracle cap"
        )
    record = table.by_name(cls.simple_name)
    if G.order % record.order and cls.kind == "d0":
        return False
    R = soluble_radical(G, caps)
    nonabelian_minimals = [N for N in minimal_normal_subgroups(G, caps)
                           if not is_abelian(N)]
    K = _join(nonabelian_minimals, G.degree)
    if cls.kind == "d0" and R.order > 1:
        return False
    if K.order * R.order != G.order:
        return False
    if _join([K, R], G.degree).order != G.order:
        return False
    factors = composition_factors(K, caps, table)
    return all(desc.name == cls.simple_name for desc in factors)


def _member_poly(cls: GroupClass, G: PermGroup, caps: Caps, table: SimpleTable,
                 witness_series) -> bool:
    inner = cls.inner
    if inner.kind in ("abelian", "nilpotent"):
        # poly over any class between abelian and soluble is solubility
        return derived_series(G)[-1].is_trivial()
    # soluble groups lie in poly(X) for every X of full characteristic
    if derived_series(G)[-1].is_trivial():
        return True
    if inner.kind not in ("d0", "d0xS"):
        raise InputError(f"unsupported poly base class {inner.kind}")
    recognized = _alternating_recognition(G)
    if recognized is not None and recognized[1] >= 5:
        # composition factors: A_n, plus a C2 for S_n; A_n is simple here
        return _simple_factor_allowed(cls, f"A{recognized[1]}")
    if G.order <= caps.element_cap:
        factors = composition_factors(G, caps, table)
        for desc in factors:
            if desc.kind == "cyclic":
                continue
            if not _simple_factor_allowed(cls, desc.name):
                return False
        return True
    if witness_series is not None:
        return _check_witness_series(cls, G, witness_series, caps, table)
    raise UndecidableAtScale(
        f"membership of a group of order {G.order} in {cls.descriptor()} is "
        f"undecidable at the configured element cap {caps.element_cap}; "
        "supply a witness subnormal series"
    )


def _check_witness_series(cls: GroupClass, G: PermGroup, series, caps: Caps,
                          table: SimpleTable) -> bool:
    """Validate a caller-supplied subnormal series and test its factors.

    The series runs 1 = H_0 <= H_1 <= ... <= H_r = G; each containment and
    normality is verified, and each factor H_{i+1}/H_i must lie in the inner
    class (realized as a coset action, so each index must stay within cap).
    """
    if not series or series[-1].order != G.order or series[0].order != 1:
        raise InputError("witness series must run from the trivial group to G")
    for below, above in zip(series, series[1:]):
        if not below.is_subgroup_of(above) or not below.is_normal_in(above):
            raise InputError("witness series is not subnormal")
        action = quotient(above, below, caps=caps)
        if not member(cls.inner, action.group, caps=caps, table=table):
            return False
    return True


def characteristic(cls: GroupClass, caps: Caps = DEFAULT_CAPS):
    """The set of primes p with C_p in the class: frozenset() or "full".

    Full characteristic is certified on a sample of small primes and holds
    by construction for every built-in class except the trivial one.
    """
    from .bsgs import cyclic_group

    if cls.kind == "trivial":
        return frozenset()
    for p in (2, 3, 5, 7):
        if not member(cls, cyclic_group(p), caps=caps):
            raise InputError(f"class {cls.descriptor()} unexpectedly misses C_{p}")
    return "full"


# -- closure-law reporting ---------------------------------------------------


@dataclass
class LawResult:
    law: str
    status: str  # "pass", "fail", or "skipped"
    checks: int = 0
    counterexample: Optional[str] = None
    note: str = ""


@dataclass
class ClosureReport:
    group_class: GroupClass
    corpus_names: list[str]
    laws: list[LawResult] = field(default_factory=list)

    def passed(self) -> bool:
        return all(r.status != "fail" for r in self.laws)

    def law(self, name: str) -> LawResult:
        for r in self.laws:
            if r.law == name:
                return r
        raise KeyError(name)


def closure_property_report(cls: GroupClass, corpus, caps: Caps = DEFAULT_CAPS,
                            table: SimpleTable | None = None) -> ClosureReport:
    """Empirically check the declared closure laws of a class over a corpus.

    corpus: list of (name, PermGroup).  Lattice-based laws are run
    exhaustively below the subgroup cap, on a deterministic subgroup sample
    below the element cap, and skipped (with a note) beyond it.
    """
    if table is None:
        table = load_simple_table()
    report = ClosureReport(group_class=cls, corpus_names=[n for n, _ in corpus])
    members = []
    for name, G in corpus:
        try:
            if member(cls, G, caps=caps, table=table):
                members.append((name, G))
        except UndecidableAtScale:
            continue

    declared = cls.declared_closures
    if "direct_product" in declared:
        report.laws.append(_law_direct_product(cls, members, caps, table))
    if "subgroup" in declared:
        report.laws.append(_law_subgroup(cls, members, caps, table))
    if "quotient" in declared:
        report.laws.append(_law_quotient(cls, members, caps, table))
    if "extension" in declared:
        report.laws.append(_law_extension(cls, corpus, caps, table))
    if "normal_product" in declared:
        report.laws.append(_law_normal_product(cls, corpus, caps, table))
    if "residual_r0" in declared:
        report.laws.append(_law_residual_closure(cls, corpus, caps, table))
    return report


def _law_direct_product(cls, members, caps, table) -> LawResult:
    from .bsgs import direct_product

    result = LawResult("direct_product", "pass")
    for i, (name_a, A) in enumerate(members):
        for name_b, B in members[i:]:
            if A.degree + B.degree > caps.degree_cap:
                continue
            product = direct_product(A, B, caps=caps)
            try:
                ok = member(cls, product, caps=caps, table=table)
            except UndecidableAtScale:
                continue
            result.checks += 1
            if not ok:
                result.status = "fail"
                result.counterexample = f"{name_a} x {name_b}"
                return result
    return result


def _subgroup_sample(G: PermGroup, caps: Caps):
    """Deterministic subgroup sample for groups past the lattice cap."""
    from .bsgs import derived_series as ds

    sample = []
    seen_orders = set()
    for p in enumerate_elements(G, caps):
        order = p.order()
        if order > 1 and order not in seen_orders:
            seen_orders.add(order)
            sample.append(PermGroup([p], G.degree, max_degree=G.degree))
    sample.extend(ds(G))
    sample.extend(N for N in normal_subgroups(G, caps))
    return sample


def _law_subgroup(cls, members, caps, table) -> LawResult:
    from .oracle import all_subgroups

    result = LawResult("subgroup", "pass")
    notes = []
    for name, G in members:
        if G.order <= caps.subgroup_cap:
            lattice = all_subgroups(G, caps)
            subs = [lattice.subgroup_handle(i) for i in range(len(lattice))]
        elif G.order <= caps.element_cap:
            subs = _subgroup_sample(G, caps)
            notes.append(f"{name}: sampled (order {G.order} beyond subgroup cap)")
        else:
            notes.append(f"{name}: skipped (order {G.order} beyond element cap)")
            continue
        for H in subs:
            try:
                ok = member(cls, H, caps=caps, table=table)
            except UndecidableAtScale:
                continue
            result.checks += 1
            if not ok:
                result.status = "fail"
                result.counterexample = f"subgroup of order {H.order} in {name}"
                return result
    result.note = "; ".join(notes)
    return result


def _law_quotient(cls, members, caps, table) -> LawResult:
    result = LawResult("quotient", "pass")
    for name, G in members:
        if G.order > caps.element_cap:
            continue
        for N in normal_subgroups(G, caps):
            if N.order == 1:
                Q = G
            elif G.order // N.order > caps.subgroup_cap:
                continue  # coset realization would be quadratic in the index
            else:
                Q = quotient(G, N, caps=caps).group
            try:
                ok = member(cls, Q, caps=caps, table=table)
            except UndecidableAtScale:
                continue
            result.checks += 1
            if not ok:
                result.status = "fail"
                result.counterexample = f"{name} / N with |N| = {N.order}"
                return result
    return result


def _law_extension(cls, corpus, caps, table) -> LawResult:
    """If N and G/N are members, G must be (extension-closed classes only)."""
    result = LawResult("extension", "pass")
    for name, G in corpus:
        if G.order > caps.element_cap:
            continue
        for N in normal_subgroups(G, caps):
            if N.order == 1 or N.order == G.order:
                continue
            if G.order // N.order > caps.subgroup_cap:
                continue
            try:
                if not member(cls, N, caps=caps, table=table):
                    continue
                Q = quotient(G, N, caps=caps).group
                if not member(cls, Q, caps=caps, table=table):
                    continue
                ok = member(cls, G, caps=caps, table=table)
            except UndecidableAtScale:
                continue
            result.checks += 1
            if not ok:
                result.status = "fail"
                result.counterexample = f"{name} as extension of |N|={N.order}"
                return result
    return result


def _law_normal_product(cls, corpus, caps, table) -> LawResult:
    result = LawResult("normal_product", "pass")
    for name, G in corpus:
        if G.order > caps.element_cap:
            continue
        normals = normal_subgroups(G, caps)
        for i, N1 in enumerate(normals):
            for N2 in normals[i:]:
                try:
                    if not (member(cls, N1, caps=caps, table=table)
                            and member(cls, N2, caps=caps, table=table)):
                        continue
                    ok = member(cls, _join([N1, N2], G.degree), caps=caps, table=table)
                except UndecidableAtScale:
                    continue
                result.checks += 1
                if not ok:
                    result.status = "fail"
                    result.counterexample = (
                        f"{name}: N1 N2 with |N1|={N1.order}, |N2|={N2.order}")
                    return result
    return result


def _law_residual_closure(cls, corpus, caps, table) -> LawResult:
    from .oracle import intersection_of_normals

    result = LawResult("residual_r0", "pass")
    for name, G in corpus:
        if G.order > caps.element_cap:
            continue
        normals = [N for N in normal_subgroups(G, caps)
                   if 1 < G.order // N.order <= caps.subgroup_cap]
        quotient_member = {}
        for N in normals:
            try:
                quotient_member[id(N)] = member(
                    cls, quotient(G, N, caps=caps).group, caps=caps, table=table)
            except UndecidableAtScale:
                quotient_member[id(N)] = None
        for i, N1 in enumerate(normals):
            for N2 in normals[i:]:
                if not (quotient_member[id(N1)] and quotient_member[id(N2)]):
                    continue
                meet = intersection_of_normals(G, N1, N2, caps)
                if G.order // meet.order > caps.subgroup_cap:
                    continue
                try:
                    Q = G if meet.order == 1 else quotient(G, meet, caps=caps).group
                    ok = member(cls, Q, caps=caps, table=table)
                except UndecidableAtScale:
                    continue
                result.checks += 1
                if not ok:
                    result.status = "fail"
                    result.counterexample = (
                        f"{name}: G/(N1 meet N2), |N1|={N1.order}, |N2|={N2.order}")
                    return result
    return result
