"""X-residuals, X-radicals, their poly-closure variants, and the two
inequality checkers (the main residual-order bound and the Frattini-condition
bounds).

Fast paths: the abelian residual is the derived subgroup, the nilpotent
residual is the lower-central terminal, the soluble residual is the derived
terminal, the nilpotent radical is the Fitting subgroup.  The generic paths
(intersection of normals with member quotient, join of member normals) are
kept alongside as oracles and used for the d0-type classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .bsgs import (
    PermGroup,
    derived_series,
    derived_subgroup,
    lower_central_series,
    quotient,
)
from .catalog import SimpleTable, load_simple_table
from .classes import GroupClass, member
from .errors import DEFAULT_CAPS, Caps, InputError
from .exact import isqrt_exact_eq, isqrt_exact_ge
from .oracle import (
    _join,
    enumerate_elements,
    fitting,
    frattini,
    center,
    group_from_elements,
    intersection_of_normals,
    normal_subgroups,
)
from .perm import Permutation


@dataclass
class ResidualResult:
    """The X-residual with the descending tower that produced it."""

    subgroup: PermGroup
    tower: list[PermGroup]
    group_class: GroupClass

    def check_invariants(self, G: PermGroup):
        orders = [t.order for t in self.tower]
        if orders[0] != G.order or orders[-1] != self.subgroup.order:
            raise InputError("residual tower does not run from G to the residual")
        for above, below in zip(self.tower, self.tower[1:]):
            if below.order >= above.order:
                raise InputError("residual tower is not strictly descending")
            if not below.is_subgroup_of(above):
                raise InputError("residual tower is not a chain")
        for term in self.tower:
            if not term.is_normal_in(G):
                raise InputError("residual tower term is not normal in G")
        index_product = 1
        for above, below in zip(self.tower, self.tower[1:]):
            index_product *= above.order // below.order
        if index_product != G.order // self.subgroup.order:
            raise InputError("tower index product does not match the residual index")


@dataclass
class RadicalResult:
    """The X-radical with the ascending tower that produced it."""

    subgroup: PermGroup
    tower: list[PermGroup]
    group_class: GroupClass

    def check_invariants(self, G: PermGroup):
        for term in self.tower:
            if not term.is_normal_in(G):
                raise InputError("radical tower term is not normal in G")
        for below, above in zip(self.tower, self.tower[1:]):
            if not below.is_subgroup_of(above) or below.order >= above.order:
                raise InputError("radical tower is not strictly ascending")


def _unwrap_poly(cls: GroupClass):
    """(base class, wrapped?) for dispatching residual/radical calls."""
    if cls.kind == "poly":
        return cls.inner, True
    return cls, False


def residual(G: PermGroup, cls: GroupClass, caps: Caps = DEFAULT_CAPS,
             table: SimpleTable | None = None) -> ResidualResult:
    """Smallest normal subgroup with quotient in the class."""
    base, wrapped = _unwrap_poly(cls)
    if wrapped:
        return poly_residual(G, base, caps=caps, table=table)
    if base.kind == "trivial":
        return ResidualResult(G, [G], cls)
    if base.kind == "all":
        bottom = PermGroup([], G.degree, max_degree=G.degree)
        tower = [G] if G.order == 1 else [G, bottom]
        return ResidualResult(tower[-1], tower, cls)
    if base.kind == "abelian":
        D = derived_subgroup(G)
        tower = [G] if D.order == G.order else [G, D]
        return ResidualResult(tower[-1], tower, cls)
    if base.kind == "nilpotent":
        series = lower_central_series(G)
        return ResidualResult(series[-1], series, cls)
    if base.kind == "soluble":
        series = derived_series(G)
        return ResidualResult(series[-1], series, cls)
    return generic_residual(G, cls, caps=caps, table=table)


def generic_residual(G: PermGroup, cls: GroupClass, caps: Caps = DEFAULT_CAPS,
                     table: SimpleTable | None = None) -> ResidualResult:
    """Intersection of all normal subgroups having a member quotient.

    Sound for residually-closed classes (all built-ins); quotients are
    realized on coset spaces, so this is an oracle-scale path.
    """
    if table is None:
        table = load_simple_table()
    candidates = []
    for N in normal_subgroups(G, caps):
        Q = G if N.order == 1 else quotient(G, N, caps=caps).group
        if member(cls, Q, caps=caps, table=table):
            candidates.append(N)
    if not candidates:
        raise InputError(f"no normal subgroup of {G} has a {cls} quotient")
    result = candidates[0]
    for N in candidates[1:]:
        result = intersection_of_normals(G, result, N, caps)
    tower = [G] if result.order == G.order else [G, result]
    return ResidualResult(result, tower, cls)


def poly_residual(G: PermGroup, cls: GroupClass, caps: Caps = DEFAULT_CAPS,
                  table: SimpleTable | None = None) -> ResidualResult:
    """The poly(X)-residual: iterate D <- D^X until stable.

    Sound because X-residuals of formations push through quotients, so the
    terminal D satisfies D^X = D and G/D is poly-X.
    """
    base, _ = _unwrap_poly(cls)
    if base.kind in ("trivial", "all"):
        return residual(G, base, caps=caps, table=table)
    tower = [G]
    current = G
    while True:
        step = residual(current, base, caps=caps, table=table)
        nxt = step.subgroup
        if nxt.order == current.order:
            break
        tower.append(nxt)
        current = nxt
    from .classes import poly as poly_cls

    return ResidualResult(current, tower, poly_cls(base))


def radical(G: PermGroup, cls: GroupClass, caps: Caps = DEFAULT_CAPS,
            table: SimpleTable | None = None) -> RadicalResult:
    """Largest normal subgroup belonging to the class."""
    base, wrapped = _unwrap_poly(cls)
    if wrapped:
        return poly_radical(G, base, caps=caps, table=table)
    if base.kind == "all":
        return RadicalResult(G, [G], cls)
    if base.kind == "trivial":
        bottom = PermGroup([], G.degree, max_degree=G.degree)
        return RadicalResult(bottom, [bottom], cls)
    if base.kind == "nilpotent":
        fit = fitting(G, caps)
        return RadicalResult(fit, [fit], cls)
    if base.kind == "soluble":
        ascent = poly_radical(G, GroupClass("nilpotent"), caps=caps, table=table)
        return RadicalResult(ascent.subgroup, ascent.tower, cls)
    return generic_radical(G, cls, caps=caps, table=table)


def generic_radical(G: PermGroup, cls: GroupClass, caps: Caps = DEFAULT_CAPS,
                    table: SimpleTable | None = None) -> RadicalResult:
    """Join of all normal member subgroups (normal-product-closed classes)."""
    if table is None:
        table = load_simple_table()
    members = [N for N in normal_subgroups(G, caps)
               if member(cls, N, caps=caps, table=table)]
    joined = _join(members, G.degree)
    if not member(cls, joined, caps=caps, table=table):
        raise InputError(
            f"join of normal {cls} subgroups is not a member; "
            "the class is not normal-product-closed"
        )
    return RadicalResult(joined, [joined], cls)


def _coset_membership_map(action, caps: Caps):
    """coset index of every parent element (images tuple -> index)."""
    out = {}
    for g in enumerate_elements(action.parent, caps):
        out[g.images] = action.coset_of(g)
    return out


def _preimage_of_subgroup(action, S: PermGroup, caps: Caps) -> PermGroup:
    """Full preimage of S <= action.group in the parent group.

    The projection is constant on kernel cosets, so membership is decided
    per coset and the preimage is a union of cosets.
    """
    cmap = _coset_membership_map(action, caps)
    images = []
    member_cosets = set()
    for c, rep in enumerate(action.reps):
        pi = Permutation(cmap[(r * rep).images] for r in action.reps)
        if S.contains(pi):
            member_cosets.add(c)
    elements = [g for g in enumerate_elements(action.parent, caps)
                if cmap[g.images] in member_cosets]
    return group_from_elements(elements, action.parent.degree)


def poly_radical(G: PermGroup, cls: GroupClass, caps: Caps = DEFAULT_CAPS,
                 table: SimpleTable | None = None) -> RadicalResult:
    """The poly(X)-radical: ascend R_{i+1}/R_i = (G/R_i)_X until it stalls.

    G lies in poly(X) exactly when the terminal reaches G.
    """
    base, _ = _unwrap_poly(cls)
    bottom = PermGroup([], G.degree, max_degree=G.degree)
    tower = [bottom]
    current = bottom
    while current.order < G.order:
        if current.order == 1:
            step = radical(G, base, caps=caps, table=table).subgroup
        else:
            action = quotient(G, current, caps=caps)
            upstairs = radical(action.group, base, caps=caps, table=table).subgroup
            step = (current if upstairs.order == 1
                    else _preimage_of_subgroup(action, upstairs, caps))
        if step.order == current.order:
            break
        tower.append(step)
        current = step
    from .classes import poly as poly_cls

    return RadicalResult(current, tower, poly_cls(base))


# -- the main inequality -----------------------------------------------------


@dataclass
class InequalityReport:
    """Outcome of the exact residual-order bound for one group."""

    group_name: str
    group_order: int
    base_class: str
    closure_class: str
    certificate: Fraction
    verdict: str  # "pass", "fail", or "hypothesis_not_met"
    radical_order: int
    residual_order: Optional[int] = None
    tower_orders: list[int] = field(default_factory=list)

    def line(self) -> str:
        parts = [
            self.group_name,
            self.base_class,
            str(self.group_order),
            "-" if self.residual_order is None else str(self.residual_order),
            f"{self.certificate.numerator}/{self.certificate.denominator}",
            self.verdict,
        ]
        return "|".join(parts)


def main_inequality_check(G: PermGroup, cls: GroupClass, gamma_upper: Fraction,
                          group_name: str = "", caps: Caps = DEFAULT_CAPS,
                          table: SimpleTable | None = None) -> InequalityReport:
    """Exact verdict on |G^poly(X)| > |G|^gamma for one group.

    gamma_upper must be a certified rational upper bound N/D >= gamma; the
    strict integer comparison |R|^D > |G|^N then proves the inequality.
    Groups with nontrivial X-radical (or G = 1) fall outside the theorem's
    hypothesis and are reported as such, not as failures.
    """
    base, _ = _unwrap_poly(cls)
    if not 0 < gamma_upper < 1:
        raise InputError(f"gamma certificate {gamma_upper} is not in (0, 1)")
    if gamma_upper.denominator > 1_000_000:
        raise InputError(
            f"certificate denominator {gamma_upper.denominator} is too large for "
            "exact powering; use the continued-fraction upper bound"
        )
    report = InequalityReport(
        group_name=group_name or repr(G),
        group_order=G.order,
        base_class=base.descriptor(),
        closure_class=f"poly:{base.descriptor()}",
        certificate=gamma_upper,
        verdict="hypothesis_not_met",
        radical_order=0,
    )
    if G.order == 1:
        return report
    rad = radical(G, base, caps=caps, table=table)
    report.radical_order = rad.subgroup.order
    if rad.subgroup.order > 1:
        return report
    res = poly_residual(G, base, caps=caps, table=table)
    report.residual_order = res.subgroup.order
    report.tower_orders = [t.order for t in res.tower]
    n, d = gamma_upper.numerator, gamma_upper.denominator
    strict = res.subgroup.order ** d > G.order ** n
    report.verdict = "pass" if strict else "fail"
    return report


# -- Frattini-condition bounds ------------------------------------------------


@dataclass
class FrattiniReport:
    """Outcome of the centre-index bounds for one Frattini-trivial group."""

    group_name: str
    group_order: int
    hypothesis_met: bool
    frattini_order: int
    center_index: int = 0
    derived_order: int = 0
    nilpotent_residual_order: int = 0
    abelian_bound_holds: bool = False
    nilpotent_bound_holds: bool = False
    abelian_equality: bool = False
    nilpotent_equality: bool = False
    is_abelian: bool = False

    def consistent(self) -> bool:
        """Bounds hold and equality occurs exactly for abelian groups."""
        if not self.hypothesis_met:
            return True
        return (self.abelian_bound_holds and self.nilpotent_bound_holds
                and self.abelian_equality == self.is_abelian
                and self.nilpotent_equality == self.is_abelian)


def frattini_bound_check(G: PermGroup, group_name: str = "",
                         caps: Caps = DEFAULT_CAPS) -> FrattiniReport:
    """Check |G'| >= sqrt(G:Z) and |G'| |G^nil| >= (G:Z) when Frattini is trivial."""
    from .bsgs import is_abelian

    phi = frattini(G, caps)
    report = FrattiniReport(
        group_name=group_name or repr(G),
        group_order=G.order,
        hypothesis_met=phi.order == 1,
        frattini_order=phi.order,
    )
    if not report.hypothesis_met:
        return report
    Z = center(G, caps)
    index = G.order // Z.order
    d = derived_subgroup(G).order
    nres = lower_central_series(G)[-1].order
    report.center_index = index
    report.derived_order = d
    report.nilpotent_residual_order = nres
    report.abelian_bound_holds = isqrt_exact_ge(d, index)
    report.abelian_equality = isqrt_exact_eq(d, index)
    report.nilpotent_bound_holds = d * nres >= index
    report.nilpotent_equality = d * nres == index
    report.is_abelian = is_abelian(G)
    return report
