"""Exact representations and order-reflecting proms."""

from __future__ import annotations

from .rel import compose, eq, graph_lower, graph_upper, left_residual, leq
from .structures import Prom, Representation


def is_exact(r: Representation) -> bool:
    """The preorder captures entailment exactly: ⊨\\⊨ ≤ ≤."""
    return leq(left_residual(r.sat, r.sat), r.ord.rel)


def is_order_reflecting(p: Prom) -> bool:
    """f_*⨾y⨾f^* ≤ x: comparability downstairs forces comparability upstairs."""
    pulled = compose(graph_lower(p.f), compose(p.y.rel, graph_upper(p.f)))
    return leq(pulled, p.x.rel)


def exactness_is_identity(r: Representation) -> bool:
    """For exact representations the defining inequation is an equality."""
    return eq(left_residual(r.sat, r.sat), r.ord.rel)


def reflection_is_identity(p: Prom) -> bool:
    """For order-reflecting proms, x equals the pullback of y along f."""
    pulled = compose(graph_lower(p.f), compose(p.y.rel, graph_upper(p.f)))
    return eq(p.x.rel, pulled)
