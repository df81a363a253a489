"""Coxeter system computations: root action, ShortLex words, descents, inversions.

Conventions.  Generators are 0-based ints internally (1-based only in I/O).
A root is its coordinate vector over the simple-root basis; every root hit by
group elements from the basis is entirely nonnegative or entirely nonpositive.
A group element caches its ShortLex reduced word together with the matrices of
w and w^-1, stored column-wise: cols[t] is the coordinate vector of w * alpha_t.
The matrices give O(n^2) descent and equality tests, the word gives length and
inversion sets.

The ShortLex normal form is computed by peeling least left descents: s is a
left descent of w iff column s of the matrix of w^-1 is a negative root, so
the word comes off the inverse matrix one letter at a time.  No reflection
automaton is used; the only primitive is the exact sign of a coordinate.

Everything here is an immutable value; operations are pure functions of their
inputs, safe to share between threads.
"""

from __future__ import annotations

from .scalar import AlgebraicScalar, FieldContext

INFINITE_BOND = 0  # external encoding of m_st = infinity


class MixedSignRootError(ArithmeticError):
    """A vector that should be a root had both positive and negative coordinates."""


def validate_coxeter_matrix(matrix) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(x) for x in row) for row in matrix)
    n = len(rows)
    if n == 0:
        raise ValueError("empty Coxeter matrix")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        if row[i] != 1:
            raise ValueError(f"diagonal entry ({i},{i}) must be 1")
        for j in range(n):
            if i == j:
                continue
            m = row[j]
            if m != rows[j][i]:
                raise ValueError(f"matrix not symmetric at ({i},{j})")
            if m != INFINITE_BOND and m < 2:
                raise ValueError(f"invalid label {m} at ({i},{j}); use 0 for infinity")
    return rows


def word_from_string(text: str) -> tuple[int, ...]:
    """Parse whitespace-separated 1-based generator indices to a 0-based word."""
    out = []
    for token in text.split():
        if not token.isdigit() or int(token) < 1:
            raise ValueError(f"bad generator index {token!r}")
        out.append(int(token) - 1)
    return tuple(out)


def word_to_string(word) -> str:
    return " ".join(str(s + 1) for s in word)


def shortlex_key(element: "GroupElement"):
    return (len(element.word), element.word)


class Root:
    """A coordinate vector over the simple-root basis."""

    __slots__ = ("context", "coords")

    def __init__(self, context: "CoxeterContext", coords: tuple[AlgebraicScalar, ...]):
        self.context = context
        self.coords = coords

    def is_positive(self) -> bool:
        """True for a positive root, False for a negative one.

        Raises MixedSignRootError if the coordinates mix signs (or all vanish),
        which signals an arithmetic bug rather than a property of the input.
        """
        pos = neg = False
        for c in self.coords:
            s = c.sign()
            if s > 0:
                pos = True
            elif s < 0:
                neg = True
        if pos == neg:  # both present, or no nonzero coordinate at all
            raise MixedSignRootError(f"not a root: {self.coords}")
        return pos

    def __neg__(self):
        return Root(self.context, tuple(-c for c in self.coords))

    def __eq__(self, other):
        if not isinstance(other, Root):
            return NotImplemented
        return self.context is other.context and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"Root({', '.join(map(repr, self.coords))})"


class CoxeterContext:
    """A Coxeter system: matrix, shared scalar field, and reflection coefficients.

    action_coeff[s][t] = 2cos(pi/m_st) exactly; the reflection acts by
    (s*g)_t = g_t for t != s and (s*g)_s = -g_s + sum_t action_coeff[s][t]*g_t.
    Immutable and shareable; the longest-element memo only ever gains entries.
    """

    def __init__(self, matrix, field: FieldContext | None = None):
        self.matrix = validate_coxeter_matrix(matrix)
        self.rank = len(self.matrix)
        self.field = field if field is not None else FieldContext.from_coxeter_matrix(self.matrix)
        n = self.rank
        coeff = []
        neighbors = []
        for s in range(n):
            row = []
            nbr = []
            for t in range(n):
                if t == s:
                    row.append(self.field.rational(2))  # unused on the diagonal
                else:
                    row.append(self.field.two_cos(self.matrix[s][t]))
                    if self.matrix[s][t] != 2:
                        nbr.append(t)
            coeff.append(tuple(row))
            neighbors.append(tuple(nbr))
        self.action_coeff = tuple(coeff)
        self.neighbors = tuple(neighbors)

        zero, one = self.field.zero, self.field.one
        basis = []
        for t in range(n):
            col = [zero] * n
            col[t] = one
            basis.append(tuple(col))
        self._identity_cols = tuple(basis)
        self._neg_basis = tuple(tuple(-c for c in col) for col in basis)
        self._identity = GroupElement(self, (), self._identity_cols, self._identity_cols)
        self._generators = tuple(
            GroupElement(self, (s,), self._gen_cols(s), self._gen_cols(s)) for s in range(n)
        )
        self._longest_memo: dict[frozenset, GroupElement] = {}

    @classmethod
    def from_name(cls, name: str) -> "CoxeterContext":
        from .catalog import matrix_for_name

        return cls(matrix_for_name(name))

    def _gen_cols(self, s):
        cols = list(self._identity_cols)
        cols[s] = self._neg_basis[s]
        coeffs = self.action_coeff[s]
        for t in self.neighbors[s]:
            col = list(self._identity_cols[t])
            col[s] = coeffs[t]
            cols[t] = tuple(col)
        return tuple(cols)

    # --- matrix plumbing (column-major: cols[t] = image of alpha_t) ---

    def _apply_right(self, cols, s):
        """Columns of A * M_s: col_t += c_st * col_s for neighbors, col_s negated."""
        col_s = cols[s]
        new = list(cols)
        coeffs = self.action_coeff[s]
        for t in self.neighbors[s]:
            c = coeffs[t]
            new[t] = tuple(
                (x + c * y) if y else x for x, y in zip(cols[t], col_s)
            )
        new[s] = tuple(-x for x in col_s)
        return tuple(new)

    def _apply_left(self, cols, s):
        """Columns of M_s * A: coordinate s of every column is reflected."""
        coeffs = self.action_coeff[s]
        nbr = self.neighbors[s]
        new = []
        for col in cols:
            acc = -col[s]
            for t in nbr:
                if col[t]:
                    acc = acc + coeffs[t] * col[t]
            new.append(col[:s] + (acc,) + col[s + 1 :])
        return tuple(new)

    def _matmul(self, a_cols, b_cols):
        n = self.rank
        zero = self.field.zero
        out = []
        for bcol in b_cols:
            acc = None
            for i, b in enumerate(bcol):
                if b:
                    term = tuple(b * x if x else zero for x in a_cols[i])
                    acc = term if acc is None else tuple(u + v for u, v in zip(acc, term))
            out.append(acc if acc is not None else (zero,) * n)
        return tuple(out)

    def _column_sign(self, col) -> int:
        for x in col:
            s = x.sign()
            if s:
                return s
        return 0

    def _word_from_inverse_cols(self, inv_cols) -> tuple[int, ...]:
        """ShortLex word of w given the matrix of w^-1, by least-descent peeling."""
        n = self.rank
        neighbors = self.neighbors
        action_coeff = self.action_coeff
        column_sign = self._column_sign
        cols = [list(c) for c in inv_cols]  # in-place work buffers
        signs = [column_sign(c) for c in cols]
        word = []
        while True:
            s = -1
            for i in range(n):
                if signs[i] < 0:
                    s = i
                    break
            if s < 0:
                return tuple(word)
            word.append(s)
            col_s = cols[s]
            coeffs = action_coeff[s]
            for t in neighbors[s]:
                c = coeffs[t]
                col_t = cols[t]
                for k in range(n):
                    y = col_s[k]
                    if y:
                        col_t[k] = col_t[k] + c * y
                signs[t] = column_sign(col_t)
            for k in range(n):
                col_s[k] = -col_s[k]
            signs[s] = 1  # was negative; negating the column flips its sign

    # --- public construction ---

    def identity(self) -> "GroupElement":
        return self._identity

    def generator(self, s: int) -> "GroupElement":
        return self._generators[s]

    def simple_root(self, s: int) -> Root:
        return Root(self, self._identity_cols[s])

    def element(self, word) -> "GroupElement":
        """ShortLex normal form of an arbitrary generator sequence."""
        word = tuple(word)
        n = self.rank
        for s in word:
            if not 0 <= s < n:
                raise ValueError(f"generator index {s} out of range 0..{n - 1}")
        inv = self._identity_cols
        for s in reversed(word):
            inv = self._apply_right(inv, s)
        nf = self._word_from_inverse_cols(inv)
        cols = self._identity_cols
        for s in nf:
            cols = self._apply_right(cols, s)
        return GroupElement(self, nf, cols, inv)

    def reflect(self, s: int, root: Root) -> Root:
        """Apply the simple reflection s to a root (involutive)."""
        if root.context is not self:
            raise ValueError("root from a different context")
        coords = root.coords
        coeffs = self.action_coeff[s]
        acc = -coords[s]
        for t in self.neighbors[s]:
            if coords[t]:
                acc = acc + coeffs[t] * coords[t]
        return Root(self, coords[:s] + (acc,) + coords[s + 1 :])

    def __repr__(self):
        return f"CoxeterContext(rank {self.rank}, field {self.field!r})"


# update paths beat a full matrix product when one factor's word is this short
_SHORT_FACTOR = 4


class GroupElement:
    """A group element: ShortLex reduced word plus cached action matrices.

    Equal iff the words are equal (iff the matrices are equal).  The matrix of
    w^-1 is carried alongside so that left descents and inversion are as cheap
    as right ones.
    """

    __slots__ = ("context", "word", "_cols", "_inv_cols")

    def __init__(self, context, word, cols, inv_cols):
        self.context = context
        self.word = word
        self._cols = cols
        self._inv_cols = inv_cols

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word

    @property
    def matrix(self):
        """Row-major matrix of the action; column t is w * alpha_t."""
        n = self.context.rank
        return tuple(tuple(self._cols[t][i] for t in range(n)) for i in range(n))

    def column(self, t: int) -> Root:
        return Root(self.context, self._cols[t])

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        ctx = self.context
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.context is not ctx:
            raise ValueError("elements from different contexts")
        la, lb = len(self.word), len(other.word)
        if min(la, lb) <= max(_SHORT_FACTOR, ctx.rank):
            if lb <= la:
                cols = self._cols
                for s in other.word:
                    cols = ctx._apply_right(cols, s)
                inv = self._inv_cols
                for s in other.word:
                    inv = ctx._apply_left(inv, s)
            else:
                cols = other._cols
                for s in reversed(self.word):
                    cols = ctx._apply_left(cols, s)
                inv = other._inv_cols
                for s in reversed(self.word):
                    inv = ctx._apply_right(inv, s)
        else:
            cols = ctx._matmul(self._cols, other._cols)
            inv = ctx._matmul(other._inv_cols, self._inv_cols)
        word = ctx._word_from_inverse_cols(inv)
        return GroupElement(ctx, word, cols, inv)

    def inverse(self) -> "GroupElement":
        ctx = self.context
        word = ctx._word_from_inverse_cols(self._cols)
        return GroupElement(ctx, word, self._inv_cols, self._cols)

    def act(self, root: Root) -> Root:
        """Image of a root under this element's action on the representation space."""
        ctx = self.context
        if not isinstance(root, Root) or root.context is not ctx:
            raise ValueError("root from a different context")
        zero = ctx.field.zero
        acc = None
        for t, c in enumerate(root.coords):
            if c:
                term = tuple(c * x if x else zero for x in self._cols[t])
                acc = term if acc is None else tuple(u + v for u, v in zip(acc, term))
        if acc is None:
            acc = (zero,) * ctx.rank
        return Root(ctx, acc)

    def right_descents(self) -> frozenset[int]:
        """Generators s with length(w s) < length(w), i.e. w * alpha_s negative."""
        ctx = self.context
        return frozenset(
            s for s in range(ctx.rank) if ctx._column_sign(self._cols[s]) < 0
        )

    def left_descents(self) -> frozenset[int]:
        ctx = self.context
        return frozenset(
            s for s in range(ctx.rank) if ctx._column_sign(self._inv_cols[s]) < 0
        )

    def inversion_set(self) -> frozenset[Root]:
        """The positive roots this element sends negative; size equals the length.

        Read off the reduced word s_1 ... s_k: the inversions are
        s_k ... s_{j+1} * alpha_{s_j} for j = k .. 1.
        """
        ctx = self.context
        word = self.word
        out = []
        cols = ctx._identity_cols
        for s in reversed(word):
            out.append(Root(ctx, cols[s]))
            cols = ctx._apply_right(cols, s)
        roots = frozenset(out)
        assert len(roots) == len(word), "inversion multiset collapsed"
        return roots

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.context is other.context and self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def __repr__(self):
        return f"GroupElement('{word_to_string(self.word)}')"
