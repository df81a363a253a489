"""Brute-force oracles on finite Coxeter groups.

Full enumeration is a breadth-first search over right multiplication by
generators, deduplicating by the ShortLex normal-form word; matrices are used
only to construct new elements.  The search also fills a step table
(index, generator) -> index, after which centralizers, normalizers, conjugacy
orbits and set-wise identity checks are pure index walks: multiplying by a
known element costs one table lookup per letter of its word.

These oracles exist to verify, by exhaustion, that a conjugation certificate
(I, u) really does describe the centralizer of an involution:
Z_W(w) = u^-1 N_W(W_I) u, and that Z_W(rho_I) = N_W(W_I) for every
(-1)-type subset I.
"""

from __future__ import annotations

from collections import deque

from .group import CoxeterContext, GroupElement, shortlex_key
from .involution import (
    InvolutionCertificate,
    involution_certificate,
    is_finite_parabolic,
    longest_element,
)

DEFAULT_ENUMERATION_CAP = 2_000_000


class EnumerationCapExceeded(RuntimeError):
    """The group has more elements than the cap (possibly infinitely many)."""

    def __init__(self, cap: int):
        super().__init__(f"group enumeration exceeded cap of {cap} elements")
        self.cap = cap


class ElementSet:
    """A duplicate-free collection of group elements keyed by normal-form word.

    Instances returned by enumerate_group represent the full group and carry
    the step table needed by the oracles; subsets (centralizers, normalizers,
    conjugacy classes) are plain collections, stored in ShortLex order.
    """

    def __init__(self, context: CoxeterContext, elements, closed_under_inverse=None, _steps=None):
        self.context = context
        self.elements = tuple(elements)
        self.closed_under_inverse = closed_under_inverse
        self._index = {el.word: i for i, el in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate elements")
        self._steps = _steps
        self._inverse_idx = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, element):
        if not isinstance(element, GroupElement) or element.context is not self.context:
            return False
        return element.word in self._index

    @property
    def order(self) -> int:
        return len(self.elements)

    def words(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self._index)

    # --- index machinery, available on full groups only ---

    @property
    def is_full_group(self) -> bool:
        return self._steps is not None

    def _require_full(self):
        if self._steps is None:
            raise ValueError("operation requires the fully enumerated group")

    def index_of(self, element: GroupElement) -> int:
        if element.context is not self.context:
            raise ValueError("element from a different context")
        try:
            return self._index[element.word]
        except KeyError:
            raise ValueError(f"element {element!r} not in this set") from None

    def walk(self, start: int, word) -> int:
        """Index of elements[start] * (product of the word), by table lookups."""
        self._require_full()
        steps = self._steps
        for s in word:
            start = steps[start][s]
        return start

    def inverse_index(self, i: int) -> int:
        self._require_full()
        if self._inverse_idx is None:
            inv = [0] * len(self.elements)
            for j, el in enumerate(self.elements):
                inv[j] = self.walk(0, el.word[::-1])
            self._inverse_idx = inv
        return self._inverse_idx[i]


def enumerate_group(ctx: CoxeterContext, cap: int = DEFAULT_ENUMERATION_CAP) -> ElementSet:
    """All elements of a finite group by BFS from the identity.

    Raises EnumerationCapExceeded as soon as more than `cap` elements appear,
    which is the signal for infinite (or merely too large) groups.
    """
    n = ctx.rank
    identity = ctx.identity()
    elements = [identity]
    index = {(): 0}
    steps: list[list] = [[None] * n]
    queue = deque([0])
    while queue:
        i = queue.popleft()
        g = elements[i]
        row = steps[i]
        for s in range(n):
            if row[s] is not None:
                continue
            h = g * ctx.generator(s)
            j = index.get(h.word)
            if j is None:
                if len(elements) >= cap:
                    raise EnumerationCapExceeded(cap)
                j = len(elements)
                index[h.word] = j
                elements.append(h)
                steps.append([None] * n)
                queue.append(j)
            row[s] = j
            steps[j][s] = i  # (g s) s = g
    return ElementSet(ctx, elements, closed_under_inverse=True, _steps=steps)


def centralizer(w: GroupElement, group: ElementSet) -> ElementSet:
    """All g in the (full) group with g w = w g."""
    group._require_full()
    k = group.index_of(w)
    word_w = w.word
    members = [
        el
        for i, el in enumerate(group.elements)
        if group.walk(i, word_w) == group.walk(k, el.word)
    ]
    members.sort(key=shortlex_key)
    return ElementSet(group.context, members, closed_under_inverse=True)


def normalizer(subset, group: ElementSet) -> ElementSet:
    """All g with g s g^-1 in the standard parabolic on `subset`, for every s there.

    Membership in the parabolic is tested on the normal form: an element lies
    in W_I iff its ShortLex word uses only letters of I.
    """
    group._require_full()
    ctx = group.context
    subset = frozenset(subset)
    if not is_finite_parabolic(ctx, subset):
        raise ValueError("normalizer oracle requires a finite parabolic")
    members = []
    for i, el in enumerate(group.elements):
        inv_i = group.inverse_index(i)
        inv_word = group.elements[inv_i].word
        ok = True
        for s in subset:
            j = group.walk(group._steps[i][s], inv_word)
            if not set(group.elements[j].word) <= subset:
                ok = False
                break
        if ok:
            members.append(el)
    members.sort(key=shortlex_key)
    return ElementSet(ctx, members, closed_under_inverse=True)


def verify_centralizer_is_normalizer(subset, group: ElementSet) -> bool:
    """Set equality Z_W(rho_I) = N_W(W_I) for a (-1)-type subset I."""
    rho = longest_element(group.context, subset)
    return centralizer(rho, group).words() == normalizer(subset, group).words()


def verify_centralizer_certificate(w: GroupElement, group: ElementSet) -> bool:
    """Set equality Z_W(w) = u^-1 N_W(W_I) u for the certificate (I, u) of w."""
    group._require_full()
    cert = involution_certificate(w)
    norm = normalizer(cert.subset, group)
    u_idx = group.index_of(cert.conjugator)
    u_word = cert.conjugator.word
    uinv_idx = group.inverse_index(u_idx)
    conjugated = frozenset(
        group.elements[group.walk(group.walk(uinv_idx, g.word), u_word)].word
        for g in norm
    )
    return conjugated == centralizer(w, group).words()


def involution_classes(group: ElementSet) -> list[tuple[ElementSet, InvolutionCertificate]]:
    """Conjugacy classes of involutions (identity included), with certificates.

    Classes are orbits under conjugation by generators; each is listed with the
    certificate of its minimal-length (then ShortLex-least) representative, and
    is checked to contain the longest element named by that certificate.
    Classes come back sorted by their representative.
    """
    group._require_full()
    ctx = group.context
    sort_key = {i: (len(el.word), el.word) for i, el in enumerate(group.elements)}
    unassigned = {
        i for i, el in enumerate(group.elements) if group.walk(i, el.word) == 0
    }
    gen_idx = [group._steps[0][s] for s in range(ctx.rank)]
    out = []
    while unassigned:
        rep = min(unassigned, key=sort_key.__getitem__)
        orbit = {rep}
        frontier = [rep]
        while frontier:
            i = frontier.pop()
            word_i = group.elements[i].word
            for s, si in enumerate(gen_idx):
                j = group._steps[group.walk(si, word_i)][s]  # s g s
                if j not in orbit:
                    orbit.add(j)
                    frontier.append(j)
        unassigned -= orbit
        cert = involution_certificate(group.elements[rep])
        rho_idx = group.index_of(longest_element(ctx, cert.subset))
        if rho_idx not in orbit:
            raise AssertionError("class does not contain its certificate's longest element")
        members = sorted((group.elements[i] for i in orbit), key=shortlex_key)
        out.append((ElementSet(ctx, members, closed_under_inverse=True), cert))
    return out
