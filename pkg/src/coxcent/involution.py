"""Conjugating an involution onto the longest element of a full-negation parabolic.

For an involution w, the right descent set D(w) = {s : w * alpha_s negative}
always contains the set of negated simples N(w) = {s : w * alpha_s = -alpha_s}.
When the two coincide, w is itself the longest element of the standard
parabolic on N(w), and that parabolic is of (-1)-type (its longest element
negates every one of its simple roots).  Otherwise, conjugating by any
s in D(w) \\ N(w) shortens w by exactly 2, so iterating produces a certificate
(I, u) with u w u^-1 = rho_I and (W_I, I) of (-1)-type.  The step generator is
always the least available index, which makes runs reproducible; no canonicity
of the resulting subset I is claimed.

The certificate is what reduces a centralizer Z_W(w) to a conjugated parabolic
normalizer: Z_W(w) = u^-1 N_W(W_I) u (verified on finite groups in .finite).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import catalog
from .group import CoxeterContext, GroupElement, word_to_string


def is_involution(w: GroupElement) -> bool:
    return (w * w).is_identity


def negated_simples(w: GroupElement) -> frozenset[int]:
    """Generators whose simple root is sent to its exact negative by w."""
    ctx = w.context
    neg = ctx._neg_basis
    return frozenset(s for s in range(ctx.rank) if w._cols[s] == neg[s])


def is_finite_parabolic(ctx: CoxeterContext, subset) -> bool:
    """Whether the standard parabolic on the given generators is finite.

    Decided by matching each connected component of the restricted diagram
    against the finite-type catalog, not by positive-definiteness; the catalog
    comparison is exact and label-based.
    """
    return catalog.is_finite_diagram(ctx.matrix, sorted(subset))


def longest_element(ctx: CoxeterContext, subset) -> GroupElement:
    """Longest element of a finite standard parabolic, by greedy ascent.

    Starting from the identity, repeatedly right-multiply by any generator in
    the subset whose simple root is still sent positive; the result is
    independent of the choices.  Rejects infinite parabolics.
    """
    key = frozenset(subset)
    cached = ctx._longest_memo.get(key)
    if cached is not None:
        return cached
    if not is_finite_parabolic(ctx, key):
        raise ValueError(f"infinite parabolic subgroup on {sorted(s + 1 for s in key)}")
    gens = sorted(key)
    cols = ctx._identity_cols
    inv = ctx._identity_cols
    while True:
        s = next((t for t in gens if ctx._column_sign(cols[t]) > 0), None)
        if s is None:
            break
        cols = ctx._apply_right(cols, s)
        inv = ctx._apply_left(inv, s)
    word = ctx._word_from_inverse_cols(inv)
    element = GroupElement(ctx, word, cols, inv)
    ctx._longest_memo[key] = element
    return element


def is_minus_one_type(ctx: CoxeterContext, subset) -> bool:
    """Whether the parabolic is finite with a longest element negating all its simples."""
    subset = frozenset(subset)
    if not is_finite_parabolic(ctx, subset):
        return False
    return negated_simples(longest_element(ctx, subset)) >= subset


@dataclass(frozen=True)
class InvolutionCertificate:
    """A pair (I, u) with u w u^-1 the longest element of the (-1)-type parabolic on I.

    `steps` records the conjugating generators in the order they were applied;
    u is their product in reverse order, so len(u.word) <= len(steps) and each
    step shortened the running conjugate by exactly 2.
    """

    subset: frozenset[int]
    conjugator: GroupElement
    steps: tuple[int, ...]

    def target(self) -> GroupElement:
        return longest_element(self.conjugator.context, self.subset)

    def verify(self, w: GroupElement) -> bool:
        """Recheck both certificate properties from scratch against w."""
        ctx = self.conjugator.context
        if w.context is not ctx:
            return False
        if not is_minus_one_type(ctx, self.subset):
            return False
        u = self.conjugator
        return u * w * u.inverse() == self.target()


def involution_certificate(w: GroupElement) -> InvolutionCertificate:
    """Descend an involution to a parabolic longest element, returning (I, u).

    Iterative: while the descent set strictly contains the negated simples,
    conjugate by the least generator in the difference (each such conjugation
    shortens the element by exactly 2); when they coincide the element *is*
    the longest element of the (-1)-type parabolic on that set.  The number of
    steps is therefore at most length(w)/2.  Rejects non-involutions, and
    accepts the identity (empty subset, trivial conjugator).
    """
    ctx = w.context
    if not is_involution(w):
        square = w * w
        raise ValueError(
            f"not an involution: square has normal form '{word_to_string(square.word)}'"
        )
    steps = []
    cur = w
    while True:
        descents = cur.right_descents()
        negated = negated_simples(cur)
        if descents == negated:
            break
        s = min(descents - negated)
        gen = ctx.generator(s)
        conjugated = gen * cur * gen
        if conjugated.length != cur.length - 2:
            raise AssertionError("descent step failed to shorten by 2")
        steps.append(s)
        cur = conjugated
    subset = frozenset(negated)
    conj = ctx.identity()
    for s in steps:
        conj = ctx.generator(s) * conj
    if cur != longest_element(ctx, subset):
        raise AssertionError("descended involution is not the parabolic longest element")
    return InvolutionCertificate(subset=subset, conjugator=conj, steps=tuple(steps))
