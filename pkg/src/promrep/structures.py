"""Preorders, proms, representations, and their morphisms.

Constructors validate eagerly by default; pass check=False to build a
structure without validation (the harness uses this for negative tests and
for structures already known valid).  Every axiom has a check_* function
that reports the first violated axiom together with a concrete witness.
"""

from __future__ import annotations

from dataclasses import dataclass, InitVar

from .rel import (
    CarrierMismatch,
    FinSet,
    FnMap,
    Rel,
    compose,
    compose_maps,
    eq,
    graph_upper,
    identity,
    identity_map,
    leq,
    union,
)


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    axiom: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


OK = CheckResult(True)


class InvalidStructure(ValueError):
    def __init__(self, kind: str, result: CheckResult):
        self.kind = kind
        self.result = result
        super().__init__(f"invalid {kind}: {result.axiom} violated at {result.witness}")


def check_preorder(r: Rel) -> CheckResult:
    if r.src != r.dst:
        raise CarrierMismatch("a preorder must be a square relation")
    for i, row in enumerate(r.rows):
        if not row >> i & 1:
            a = r.src.elements[i]
            return CheckResult(False, "reflexivity", (a, a))
    rr = compose(r, r)
    for i, (sq, row) in enumerate(zip(rr.rows, r.rows)):
        extra = sq & ~row
        if extra:
            j = (extra & -extra).bit_length() - 1
            return CheckResult(False, "transitivity", (r.src.elements[i], r.src.elements[j]))
    return OK


def is_preorder(r: Rel) -> bool:
    return check_preorder(r).ok


@dataclass(frozen=True)
class Preorder:
    rel: Rel
    check: InitVar[bool] = True

    def __post_init__(self, check):
        if check:
            res = check_preorder(self.rel)
            if not res:
                raise InvalidStructure("preorder", res)

    @property
    def carrier(self) -> FinSet:
        return self.rel.src


def preorder_closure(r: Rel) -> Preorder:
    """Least preorder containing r: reflexive closure, then square to fixpoint."""
    if r.src != r.dst:
        raise CarrierMismatch("closure requires a square relation")
    cur = union(r, identity(r.src))
    while True:
        nxt = union(cur, compose(cur, cur))
        if nxt.rows == cur.rows:
            return Preorder(cur, check=False)
        cur = nxt


@dataclass(frozen=True)
class Prom:
    """An order-preserving map f between two preordered carriers."""

    x: Preorder
    y: Preorder
    f: FnMap
    check: InitVar[bool] = True

    def __post_init__(self, check):
        if check:
            res = check_prom(self)
            if not res:
                raise InvalidStructure("prom", res)

    @property
    def A(self) -> FinSet:
        return self.x.carrier

    @property
    def B(self) -> FinSet:
        return self.y.carrier


def check_prom(p: Prom) -> CheckResult:
    if p.f.src != p.x.carrier or p.f.dst != p.y.carrier:
        raise CarrierMismatch("prom map does not connect the two preordered carriers")
    res = check_preorder(p.x.rel)
    if not res:
        return CheckResult(False, "x " + res.axiom, res.witness)
    res = check_preorder(p.y.rel)
    if not res:
        return CheckResult(False, "y " + res.axiom, res.witness)
    # f^*⨾x ≤ y⨾f^*, checked pointwise for a readable witness (a, a').
    x, y, img = p.x.rel, p.y.rel, p.f.image
    for i, row in enumerate(x.rows):
        for j in range(len(p.A)):
            if row >> j & 1 and not y.rows[img[i]] >> img[j] & 1:
                return CheckResult(
                    False, "order preservation", (p.A.elements[i], p.A.elements[j])
                )
    return OK


@dataclass(frozen=True)
class PromMorphism:
    src: Prom
    dst: Prom
    phi: FnMap  # src.A → dst.A
    psi: FnMap  # src.B → dst.B
    check: InitVar[bool] = True

    def __post_init__(self, check):
        if check:
            res = check_prom_morphism(self)
            if not res:
                raise InvalidStructure("prom morphism", res)


def check_prom_morphism(m: PromMorphism) -> CheckResult:
    res = check_prom(Prom(m.src.x, m.dst.x, m.phi, check=False))
    if not res:
        return CheckResult(False, "phi: " + res.axiom, res.witness)
    res = check_prom(Prom(m.src.y, m.dst.y, m.psi, check=False))
    if not res:
        return CheckResult(False, "psi: " + res.axiom, res.witness)
    # ψ∘f = f'∘φ, pointwise.
    f, f2 = m.src.f, m.dst.f
    for i, a in enumerate(m.src.A.elements):
        lhs = m.psi.image[f.image[i]]
        rhs = f2.image[m.phi.image[i]]
        if lhs != rhs:
            return CheckResult(
                False,
                "commuting square",
                (a, m.dst.B.elements[lhs], m.dst.B.elements[rhs]),
            )
    return OK


@dataclass(frozen=True)
class Representation:
    """Models, statements, a satisfaction relation and a sound preorder."""

    sat: Rel  # M ⇸ S
    ord: Preorder  # on S
    check: InitVar[bool] = True

    def __post_init__(self, check):
        if check:
            res = check_representation(self)
            if not res:
                raise InvalidStructure("representation", res)

    @property
    def M(self) -> FinSet:
        return self.sat.src

    @property
    def S(self) -> FinSet:
        return self.sat.dst


def check_representation(r: Representation) -> CheckResult:
    if r.sat.dst != r.ord.carrier:
        raise CarrierMismatch("preorder carrier does not match the statement carrier")
    res = check_preorder(r.ord.rel)
    if not res:
        return res
    closed = compose(r.sat, r.ord.rel)
    for i, (cl, row) in enumerate(zip(closed.rows, r.sat.rows)):
        extra = cl & ~row
        if extra:
            j = (extra & -extra).bit_length() - 1
            return CheckResult(False, "soundness", (r.M.elements[i], r.S.elements[j]))
    return OK


@dataclass(frozen=True)
class RepMorphism:
    """A statement translation phi together with a model relation tau.

    tau runs contravariantly, from the destination's models to the source's.
    """

    src: Representation
    dst: Representation
    phi: FnMap  # src.S → dst.S
    tau: Rel  # dst.M ⇸ src.M
    check: InitVar[bool] = True

    def __post_init__(self, check):
        if check:
            res = check_rep_morphism(self)
            if not res:
                raise InvalidStructure("representation morphism", res)


def check_rep_morphism(m: RepMorphism) -> CheckResult:
    if m.phi.src != m.src.S or m.phi.dst != m.dst.S:
        raise CarrierMismatch("phi does not connect the statement carriers")
    if m.tau.src != m.dst.M or m.tau.dst != m.src.M:
        raise CarrierMismatch("tau does not connect the model carriers")
    res = check_prom(Prom(m.src.ord, m.dst.ord, m.phi, check=False))
    if not res:
        return CheckResult(False, "phi: " + res.axiom, res.witness)
    lhs = compose(m.tau, m.src.sat)
    rhs = compose(m.dst.sat, graph_upper(m.phi))
    for i, (l, r) in enumerate(zip(lhs.rows, rhs.rows)):
        diff = l ^ r
        if diff:
            j = (diff & -diff).bit_length() - 1
            return CheckResult(
                False, "commuting square", (m.dst.M.elements[i], m.src.S.elements[j])
            )
    return OK


def repmor_leq(m1: RepMorphism, m2: RepMorphism) -> bool:
    """2-cell order: equal statement maps and tau inclusion."""
    if m1.src != m2.src or m1.dst != m2.dst:
        raise CarrierMismatch("2-cells only compare morphisms with equal endpoints")
    return m1.phi.image == m2.phi.image and leq(m1.tau, m2.tau)


def identity_prom_morphism(p: Prom) -> PromMorphism:
    return PromMorphism(p, p, identity_map(p.A), identity_map(p.B), check=False)


def identity_rep_morphism(r: Representation) -> RepMorphism:
    return RepMorphism(r, r, identity_map(r.S), identity(r.M), check=False)


def compose_prom_morphisms(m2: PromMorphism, m1: PromMorphism) -> PromMorphism:
    """m2 ∘ m1 (m1 first)."""
    if m1.dst != m2.src:
        raise CarrierMismatch("prom morphisms do not share a middle prom")
    return PromMorphism(
        m1.src,
        m2.dst,
        compose_maps(m2.phi, m1.phi),
        compose_maps(m2.psi, m1.psi),
        check=False,
    )


def compose_rep_morphisms(m2: RepMorphism, m1: RepMorphism) -> RepMorphism:
    """m2 ∘ m1; the model relations compose as tau2⨾tau1."""
    if m1.dst != m2.src:
        raise CarrierMismatch("representation morphisms do not share a middle object")
    return RepMorphism(
        m1.src,
        m2.dst,
        compose_maps(m2.phi, m1.phi),
        compose(m2.tau, m1.tau),
        check=False,
    )
