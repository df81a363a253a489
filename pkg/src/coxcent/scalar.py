"""Exact arithmetic in the real cyclotomic subfield Q(theta), theta = 2cos(pi/N).

Every root coordinate of a Coxeter system whose finite bond labels >= 3 have
lcm N lies in Q(2cos(pi/N)).  A scalar is stored canonically as a polynomial
in theta of degree < d = deg(min_poly), reduced modulo the minimal polynomial
of theta, with exact rational coefficients.  Equality and the zero test are
therefore exact; sign determination refines a certified rational enclosure of
theta until the interval evaluation excludes zero.

The minimal polynomial is obtained from the cyclotomic polynomial of order 2N:
with z on the unit circle and y = z + 1/z, a palindromic Phi_{2N}(z) of degree
2d folds to a degree-d polynomial in y via z^i + z^-i = D_i(y), where D_i are
the Dickson polynomials D_0 = 2, D_1 = y, D_{i+1} = y*D_i - D_{i-1} (they
satisfy D_i(2cos x) = 2cos(ix)).
"""

from __future__ import annotations

from fractions import Fraction
from math import cos, pi

_ZERO = Fraction(0)


def _norm(value) -> "int | Fraction":
    # coefficients are stored as plain ints whenever integral (the common case:
    # all reflection coefficients are algebraic integers); int and Fraction
    # compare and hash identically, so vectors stay canonical
    q = Fraction(value)
    return q.numerator if q.denominator == 1 else q


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # exact long division over Z; den is monic (cyclotomic factors always are)
    num = list(num)
    d = len(den) - 1
    quot = [0] * (len(num) - d)
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + d]
        quot[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    if any(num[:d]):
        raise ArithmeticError("inexact polynomial division")
    return quot


_cyclotomic_cache: dict[int, list[int]] = {}


def cyclotomic_polynomial(n: int) -> list[int]:
    """Coefficients of the n-th cyclotomic polynomial, low degree first."""
    poly = _cyclotomic_cache.get(n)
    if poly is None:
        poly = [-1] + [0] * (n - 1) + [1]  # z^n - 1
        for d in range(1, n):
            if n % d == 0:
                poly = _poly_divexact(poly, cyclotomic_polynomial(d))
        _cyclotomic_cache[n] = poly
    return poly


def dickson_polynomials(count: int) -> list[list[int]]:
    """D_0 .. D_count as integer coefficient lists, low degree first."""
    polys = [[2], [0, 1]]
    while len(polys) <= count:
        prev, cur = polys[-2], polys[-1]
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        polys.append(nxt)
    return polys[: count + 1]


def two_cos_minimal_poly(n: int) -> tuple[int, ...]:
    """Minimal polynomial of 2cos(pi/n) over Q, monic, low degree first."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n == 1:
        return (2, 1)  # theta = 2cos(pi) = -2
    cyc = cyclotomic_polynomial(2 * n)
    d = (len(cyc) - 1) // 2
    dick = dickson_polynomials(d)
    out = [0] * (d + 1)
    out[0] = cyc[d]
    for i in range(1, d + 1):
        c = cyc[d + i]
        if c:
            for j, dj in enumerate(dick[i]):
                out[j] += c * dj
    if out[d] != 1 or d != euler_phi(2 * n) // 2:
        raise ArithmeticError(f"bad minimal polynomial for 2cos(pi/{n})")
    if d >= 2:
        _check_no_rational_root(out)
    return tuple(out)


def _check_no_rational_root(poly: list[int]) -> None:
    # monic, so rational roots would be integer divisors of the constant term
    a0 = abs(poly[0])
    candidates = set()
    k = 1
    while k * k <= a0:
        if a0 % k == 0:
            candidates.update((k, -k, a0 // k, -(a0 // k)))
        k += 1
    for r in candidates:
        acc = 0
        for c in reversed(poly):
            acc = acc * r + c
        if acc == 0:
            raise ArithmeticError(f"reducible minimal polynomial, root {r}")


def _poly_sign_at(poly, x: Fraction) -> int:
    acc = _ZERO
    for c in reversed(poly):
        acc = acc * x + c
    return (acc > 0) - (acc < 0)


class FieldContext:
    """The field Q(theta_N) shared by all scalars of one Coxeter system.

    Immutable after construction, except that the cached rational enclosure of
    theta may be narrowed; narrowing keeps every previously visible enclosure
    valid, so concurrent readers are never wrong (the interval is swapped in
    as one tuple).
    """

    __slots__ = (
        "order", "min_poly", "degree", "zero", "one", "theta",
        "_reduction", "_interval", "_sign_at_lo", "_theta_float",
    )

    def __init__(self, order: int):
        self.order = order
        self.min_poly = two_cos_minimal_poly(order)
        d = len(self.min_poly) - 1
        self.degree = d

        # theta^(d+k) in the power basis, for reducing products
        reduction = []
        top = [-c for c in self.min_poly[:d]]
        reduction.append(tuple(top))
        for _ in range(d - 2):
            prev = reduction[-1]
            shifted = [0] + list(prev[: d - 1])
            lead = prev[d - 1]
            if lead:
                for t in range(d):
                    shifted[t] += lead * top[t]
            reduction.append(tuple(shifted))
        self._reduction = tuple(reduction)

        self.zero = AlgebraicScalar(self, (0,) * d)
        one = [0] * d
        one[0] = 1
        self.one = AlgebraicScalar(self, tuple(one))
        if d == 1:
            theta_exact = Fraction(-self.min_poly[0])
            self._interval = (theta_exact, theta_exact)
            self._sign_at_lo = 0
            self.theta = self.rational(theta_exact)
        else:
            self._interval = self._initial_interval()
            self._sign_at_lo = _poly_sign_at(self.min_poly, self._interval[0])
            coeffs = [0] * d
            coeffs[1] = 1
            self.theta = AlgebraicScalar(self, tuple(coeffs))
        self._theta_float = 2.0 * cos(pi / order)

    @classmethod
    def from_coxeter_matrix(cls, matrix) -> "FieldContext":
        """Field for a Coxeter matrix: N = lcm of the finite labels >= 3 (else 1)."""
        order = 1
        for i, row in enumerate(matrix):
            for j in range(i + 1, len(matrix)):
                m = row[j]
                if m >= 3:  # 0 encodes infinity, 2 contributes nothing
                    g, a = order, m
                    while a:
                        g, a = a, g % a
                    order = order * m // g
        return cls(order)

    def _initial_interval(self) -> tuple[Fraction, Fraction]:
        # Certified seed around the float value: widen until the minimal
        # polynomial changes sign across the interval.  Roots of the minimal
        # polynomial are separated by far more than the float error, so the
        # bracketed root is 2cos(pi/N) itself.
        approx = Fraction(2.0 * cos(pi / self.order))
        eps = Fraction(1, 1 << 28)
        while eps < Fraction(1, 1 << 8):
            lo, hi = approx - eps, approx + eps
            if _poly_sign_at(self.min_poly, lo) * _poly_sign_at(self.min_poly, hi) < 0:
                return (lo, hi)
            eps *= 2
        raise ArithmeticError(f"could not bracket 2cos(pi/{self.order})")

    def theta_enclosure(self, max_width: Fraction | None = None) -> tuple[Fraction, Fraction]:
        """Current certified enclosure of theta, narrowed to max_width on request."""
        lo, hi = self._interval
        while max_width is not None and hi - lo > max_width:
            self.refine_theta(1)
            lo, hi = self._interval
        return lo, hi

    def refine_theta(self, halvings: int) -> None:
        if self.degree == 1:
            return
        lo, hi = self._interval
        s_lo = self._sign_at_lo
        for _ in range(halvings):
            mid = (lo + hi) / 2
            if _poly_sign_at(self.min_poly, mid) == s_lo:
                lo = mid
            else:
                hi = mid
        self._interval = (lo, hi)

    def rational(self, value) -> "AlgebraicScalar":
        coeffs = [0] * self.degree
        coeffs[0] = _norm(value)
        return AlgebraicScalar(self, tuple(coeffs))

    def from_coeffs(self, coeffs) -> "AlgebraicScalar":
        """Scalar from power-basis coefficients; degrees >= d are reduced."""
        work = [_norm(c) for c in coeffs]
        d = self.degree
        if len(work) > 2 * d - 1:
            # repeated single-step reduction of the top coefficient
            while len(work) > max(d, 1):
                top = work.pop()
                if top:
                    k = len(work)  # degree being eliminated
                    for t, mc in enumerate(self.min_poly[:d]):
                        work[k - d + t] -= top * mc
                    # may reintroduce the same degree only below k
            work += [0] * (d - len(work))
            return AlgebraicScalar(self, tuple(work[:d]))
        out = work[:d] + [0] * (d - min(len(work), d))
        for k in range(d, len(work)):
            c = work[k]
            if c:
                red = self._reduction[k - d]
                for t in range(d):
                    out[t] += c * red[t]
        return AlgebraicScalar(self, tuple(out))

    def two_cos(self, label: int) -> "AlgebraicScalar":
        """The exact value 2cos(pi/m) for bond label m; label 0 encodes m = infinity."""
        if label == 0:
            return self.rational(2)
        if label == 2:
            return self.zero
        if label < 2:
            raise ValueError(f"invalid bond label {label}")
        if self.order % label:
            raise ValueError(f"label {label} does not divide field order {self.order}")
        k = self.order // label
        dick = dickson_polynomials(k)[k]
        return self.from_coeffs(dick)

    def __repr__(self):
        return f"FieldContext(2cos(pi/{self.order}), degree {self.degree})"


class AlgebraicScalar:
    """Immutable element of Q(theta_N): canonical coefficient vector of length d.

    Two scalars are equal iff their vectors are equal; the all-zero vector is
    the unique zero.  Supports +, -, * (no division is ever needed) and exact
    sign determination.
    """

    __slots__ = ("field", "coeffs", "_sign")

    def __init__(self, field: FieldContext, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs
        self._sign = None

    def _coerce(self, other):
        if isinstance(other, AlgebraicScalar):
            if other.field is not self.field:
                raise ValueError("scalars from different field contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return AlgebraicScalar(
            self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return AlgebraicScalar(
            self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return AlgebraicScalar(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        field = self.field
        d = field.degree
        a, b = self.coeffs, other.coeffs
        # rational factors need no reduction and scale coordinate-wise
        if not any(a[1:]):
            c = a[0]
            if not c:
                return field.zero
            if c == 1:
                return other
            return AlgebraicScalar(field, tuple(c * x for x in b))
        if not any(b[1:]):
            c = b[0]
            if not c:
                return field.zero
            if c == 1:
                return self
            return AlgebraicScalar(field, tuple(c * x for x in a))
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                red = field._reduction[k - d]
                for t in range(d):
                    out[t] += c * red[t]
        return AlgebraicScalar(field, tuple(out))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, AlgebraicScalar):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def sign(self) -> int:
        """-1, 0 or +1; exact zero test first, then certified interval refinement."""
        s = self._sign
        if s is None:
            s = self._compute_sign()
            self._sign = s
        return s

    def _compute_sign(self) -> int:
        coeffs = self.coeffs
        if not any(coeffs):
            return 0
        if not any(coeffs[1:]):
            c = coeffs[0]
            return 1 if c > 0 else -1
        field = self.field
        top = len(coeffs)
        while not coeffs[top - 1]:
            top -= 1
        halvings = 8
        for _ in range(24):
            lo, hi = field._interval
            rlo = rhi = coeffs[top - 1]
            for k in range(top - 2, -1, -1):
                p1, p2, p3, p4 = rlo * lo, rlo * hi, rhi * lo, rhi * hi
                c = coeffs[k]
                rlo = min(p1, p2, p3, p4) + c
                rhi = max(p1, p2, p3, p4) + c
            if rlo > 0:
                return 1
            if rhi < 0:
                return -1
            field.refine_theta(halvings)
            halvings *= 2
        raise ArithmeticError("sign undecided after deep refinement")

    def to_float(self) -> float:
        x = self.field._theta_float
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                power = "t" if k == 1 else f"t^{k}"
                if c == 1:
                    terms.append(power)
                elif c == -1:
                    terms.append(f"-{power}")
                else:
                    terms.append(f"{c}*{power}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"
