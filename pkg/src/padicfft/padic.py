"""Truncated p-adic arithmetic: Z/p^K and its unramified extensions.

A context fixes the prime p >= 3 and the digit count K, so base elements are
plain ints kept canonical in [0, p^K). RingExtension is (Z/p^K)[X]/(F) for a
monic F whose reduction mod p is irreducible; its elements carry coefficient
tuples of length deg F, constant first.

Every ring multiplication adds the schoolbook cost d^2 + d*(d-1) to the
extension's counter. The count deliberately depends only on the degree, not
on the operand values, so instrumented totals are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadInput,
    DegreeTooSmall,
    EvenPrime,
    NonUnit,
    ParentMismatch,
    ZeroInput,
)
from .ffield import ExtensionField, MulCounter, PrimeField, is_irreducible
from .orders import is_prime, padic_valuation


class PadicContext:
    """The base ring Z/p^K."""

    __slots__ = ("p", "K", "pK")

    def __init__(self, p: int, K: int):
        if not is_prime(p):
            raise BadInput(f"{p} is not prime")
        if p == 2:
            raise EvenPrime("p must be odd")
        if K < 1:
            raise BadInput("precision K must be >= 1")
        self.p = p
        self.K = K
        self.pK = p**K

    def same(self, other: "PadicContext") -> bool:
        return self.p == other.p and self.K == other.K

    def __repr__(self):
        return f"PadicContext(p={self.p}, K={self.K})"


def residue_inverse(u: int, ctx: PadicContext) -> int:
    """Inverse of a unit in Z/p^K: invert mod p, then double precision
    with the Newton step w <- w*(2 - u*w)."""
    p, pK = ctx.p, ctx.pK
    u %= pK
    if u % p == 0:
        raise NonUnit(f"{u} is divisible by {p}")
    w = pow(u, -1, p)
    prec = 1
    while prec < ctx.K:
        w = w * (2 - u * w) % pK
        prec *= 2
    return w


class RingExtension:
    """(Z/p^K)[X]/(F) with F monic and irreducible mod p."""

    __slots__ = ("ctx", "modulus", "degree", "counter", "_residue_field")

    def __init__(self, ctx: PadicContext, modulus, check: bool = True):
        modulus = [c % ctx.pK for c in modulus]
        if len(modulus) < 2:
            raise DegreeTooSmall("modulus must have degree >= 1")
        if modulus[-1] != 1:
            raise BadInput("modulus must be monic")
        self.ctx = ctx
        self.modulus = tuple(modulus)
        self.degree = len(modulus) - 1
        self.counter = MulCounter()
        self._residue_field = None
        if check and not is_irreducible(PrimeField(ctx.p), [c % ctx.p for c in modulus]):
            raise BadInput("modulus is not irreducible mod p")

    @property
    def residue_field(self) -> ExtensionField:
        if self._residue_field is None:
            p = self.ctx.p
            fbar = [c % p for c in self.modulus]
            self._residue_field = ExtensionField(PrimeField(p), fbar, check=False)
        return self._residue_field

    def same(self, other: "RingExtension") -> bool:
        return self.ctx.same(other.ctx) and self.modulus == other.modulus

    def element(self, coeffs) -> "RingElement":
        pK = self.ctx.pK
        cs = [c % pK for c in coeffs]
        if len(cs) > self.degree:
            raise BadInput("too many coefficients")
        cs += [0] * (self.degree - len(cs))
        return RingElement(self, tuple(cs))

    def zero(self) -> "RingElement":
        return RingElement(self, (0,) * self.degree)

    def one(self) -> "RingElement":
        return self.element([1])

    def from_int(self, n: int) -> "RingElement":
        return self.element([n])

    def gen(self) -> "RingElement":
        """Image of X."""
        if self.degree == 1:
            return self.element([-self.modulus[0]])
        return self.element([0, 1])

    def truncate(self, K: int) -> "RingExtension":
        """The same presentation at a lower precision."""
        if K > self.ctx.K:
            raise BadInput("can only truncate to lower precision")
        out = RingExtension(PadicContext(self.ctx.p, K), self.modulus, check=False)
        return out

    def mul_cost(self) -> int:
        d = self.degree
        return d * d + d * (d - 1)

    def __repr__(self):
        return f"RingExtension(p={self.ctx.p}, K={self.ctx.K}, deg={self.degree})"


class RingElement:
    """Element of a RingExtension, canonical coefficients, constant first."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent: RingExtension, coeffs: tuple):
        self.parent = parent
        self.coeffs = coeffs

    def _join(self, other) -> "RingElement":
        if isinstance(other, int):
            return self.parent.from_int(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.parent is not self.parent and not self.parent.same(other.parent):
            raise ParentMismatch("elements live in different rings")
        return other

    def __add__(self, other):
        other = self._join(other)
        if other is NotImplemented:
            return other
        pK = self.parent.ctx.pK
        return RingElement(self.parent, tuple((x + y) % pK for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._join(other)
        if other is NotImplemented:
            return other
        pK = self.parent.ctx.pK
        return RingElement(self.parent, tuple((x - y) % pK for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        pK = self.parent.ctx.pK
        return RingElement(self.parent, tuple(-x % pK for x in self.coeffs))

    def __mul__(self, other):
        other = self._join(other)
        if other is NotImplemented:
            return other
        return ring_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return ring_pow(self, e)

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.parent.same(other.parent) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.parent.ctx.p, self.parent.ctx.K, self.parent.modulus, self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def inverse(self) -> "RingElement":
        return ring_inverse_unit(self)

    def reduce_mod(self, K: int) -> tuple:
        """Coefficients reduced to a lower precision p^K."""
        q = self.parent.ctx.p**K
        return tuple(c % q for c in self.coeffs)

    def __str__(self):
        A = self.parent
        body = poly_text(self.coeffs, monic_top=False)
        mod = poly_text(A.modulus[:-1], monic_top=True, top_degree=A.degree)
        return f"{body} (mod {A.ctx.p}^{A.ctx.K}, {mod})"

    def __repr__(self):
        return f"RingElement({list(self.coeffs)})"


def poly_text(coeffs, monic_top: bool, top_degree: int | None = None) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{c}*X")
        else:
            terms.append(f"{c}*X^{i}")
    if monic_top:
        terms.append("X" if top_degree == 1 else f"X^{top_degree}")
    return " + ".join(terms)


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    """Schoolbook product then synthetic reduction by the monic modulus.

    The counter charge is the full d^2 + d*(d-1) regardless of sparsity, so
    instrumented totals depend only on the degree and the call pattern.
    """
    A = a.parent
    d = A.degree
    A.counter.add(d * d + d * (d - 1))
    pK = A.ctx.pK
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            prod[i + j] += x * y
    F = A.modulus
    for i in range(2 * d - 2, d - 1, -1):
        c = prod[i] % pK
        if c == 0:
            continue
        for j in range(d):
            if F[j]:
                prod[i - d + j] -= c * F[j]
    return RingElement(A, tuple(c % pK for c in prod[:d]))


def ring_pow(a: RingElement, e: int) -> RingElement:
    if e < 0:
        return ring_pow(ring_inverse_unit(a), -e)
    out = a.parent.one()
    acc = a
    while e:
        if e & 1:
            out = ring_mul(out, acc)
        acc = ring_mul(acc, acc)
        e >>= 1
    return out


def scalar_mul(c: int, a: RingElement) -> RingElement:
    """Multiply by a base-ring constant; costs d base multiplications."""
    A = a.parent
    A.counter.add(A.degree)
    pK = A.ctx.pK
    c %= pK
    return RingElement(A, tuple(c * x % pK for x in a.coeffs))


def ring_inverse_unit(a: RingElement) -> RingElement:
    """Invert a unit: invert in the residue field, then Newton-double.

    A unit is an element whose reduction mod p is nonzero; each step
    w <- w*(2 - a*w) doubles the number of correct p-adic digits.
    """
    A = a.parent
    Fbar = A.residue_field
    abar = tuple(c % A.ctx.p for c in a.coeffs)
    if Fbar.is_zero(abar):
        raise NonUnit("element is divisible by p")
    w = A.element(Fbar.inv(abar))
    two = A.from_int(2)
    prec = 1
    while prec < A.ctx.K:
        w = ring_mul(w, two - ring_mul(a, w))
        prec *= 2
    return w


@dataclass
class ScaledElement:
    """p-power exponent plus mantissa coefficients: value = p^exponent * mantissa."""

    exponent: int
    mantissa: list[int]


def scale_normalize(pairs, ctx: PadicContext) -> ScaledElement:
    """Pull the largest common p-power out of (exponent, coefficient) pairs.

    The returned exponent is the minimum valuation over the nonzero entries;
    each mantissa is the exact integer p^(e_i - e) * m_i reduced mod p^K.
    """
    pairs = [(e, m % ctx.pK) for e, m in pairs]
    if not pairs:
        raise ZeroInput("need at least one coefficient")
    p = ctx.p
    vals = [e + padic_valuation(m, p) for e, m in pairs if m != 0]
    if not vals:
        return ScaledElement(0, [0] * len(pairs))
    e = min(vals)
    out = []
    for ei, m in pairs:
        shift = ei - e
        if shift >= 0:
            out.append(m * p**shift % ctx.pK)
        else:
            q, r = divmod(m, p**-shift)
            if r:
                raise BadInput("entry is not divisible by its claimed p-power")
            out.append(q % ctx.pK)
    return ScaledElement(e, out)
