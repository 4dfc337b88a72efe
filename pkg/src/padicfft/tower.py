"""Finding a primitive s-th root of unity over F_p by a tower of extensions.

One prime power of s at a time: adjoin a primitive p0-th root by splitting the
p0-th cyclotomic polynomial, climb p0-power levels with binomials X^p0 - root,
then flatten the working tower back to a single extension F_p[Y]/f(Y) whose
generator is the combined root so far. Splitting is randomized equal-degree
(gcd of a random g, else gcd of g^((q^e-1)/2) - 1) and every target degree is
derived from exact multiplicative orders, never from closed-form level
thresholds, which misjudge some power-of-two boundary cases.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    BadInput,
    DegreeTooSmall,
    EvenCharacteristic,
    NotCoprime,
    OrbitNotClosed,
    RandomnessFailure,
)
from .ffield import (
    ExtensionField,
    PrimeField,
    ff_poly_gcd,
    ff_poly_modpow,
    ff_random_monic,
    minimal_poly_from_orbit,
    poly_deg,
    poly_divmod,
    poly_monic,
    poly_sub,
    poly_trim,
)
from .orders import FactoredOrder, cyclotomic_polynomial, multiplicative_order, tower_step_degree


def cz_split(field, f, e: int, rng: random.Random):
    """One monic irreducible factor of degree e from an equal-degree product.

    f must be monic, squarefree, and a product of irreducibles all of degree
    e over `field`, whose order must be odd. Each round draws a random monic
    g of degree below deg f and keeps the smaller piece of whichever gcd
    split succeeds: gcd(g, f) first, else gcd(g^((q^e-1)/2) - 1, f).
    """
    q = field.order
    if q % 2 == 0:
        raise EvenCharacteristic("splitting needs an odd field order")
    f = poly_trim(field, list(f))
    deg = poly_deg(f)
    if deg < 1:
        raise DegreeTooSmall("cannot split a constant")
    if e < 1 or deg % e:
        raise BadInput(f"target degree {e} does not divide {deg}")
    f = poly_monic(field, f)
    half = (q**e - 1) // 2
    cap = 64 * max(1, (deg - 1).bit_length())
    rounds = 0
    while poly_deg(f) > e:
        if rounds >= cap:
            raise RandomnessFailure(f"no split of degree {poly_deg(f)} after {rounds} tries")
        rounds += 1
        g = ff_random_monic(field, poly_deg(f), rng)
        piece = _smaller_factor(field, f, ff_poly_gcd(field, g, f))
        if piece is None:
            w = poly_sub(field, ff_poly_modpow(field, g, half, f), [field.one()])
            if w:
                piece = _smaller_factor(field, f, ff_poly_gcd(field, w, f))
        if piece is not None:
            f = piece
    return f


def _smaller_factor(field, f, h):
    dh = poly_deg(h)
    if 0 < dh < poly_deg(f):
        other = poly_divmod(field, f, h)[0]
        return h if dh <= poly_deg(other) else other
    return None


@dataclass
class TowerState:
    """Progress while absorbing prime powers of s one at a time."""

    field: object  # flattened F_p[Y]/f for everything absorbed so far
    a: int  # product of the prime powers already absorbed
    zeta: object  # primitive a-th root of unity, the generator of `field`


@dataclass
class UnityRoot:
    """A primitive s-th root of unity presented as the generator of F_p[Y]/f."""

    p: int
    s: int
    modulus: tuple  # f as ints over F_p, constant first, monic
    field: ExtensionField
    zeta: tuple

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def base_counter(self):
        return self.field.base.counter


def build_root_of_unity(p: int, s_factored, rng: random.Random) -> UnityRoot:
    """Construct F_p[Y]/f containing a primitive s-th root of unity as Y."""
    s = s_factored if isinstance(s_factored, FactoredOrder) else FactoredOrder.of(s_factored)
    if s.value < 2:
        raise BadInput("need s >= 2")
    if s.value % p == 0:
        raise NotCoprime("s must be coprime to p")
    if p == 2:
        raise EvenCharacteristic("p must be odd")
    prime = PrimeField(p)
    state = TowerState(field=prime, a=1, zeta=prime.one())

    for p0, v in s.factors:
        work = state.field
        zeta_a = state.zeta
        root = _adjoin_prime_root(work, state.a, p, p0, rng)
        if isinstance(root, _Extended):
            work, zeta_a, cur = root.field, root.embed(zeta_a), root.root
        else:
            cur = root
        j = 1
        while j < v:
            e_next = tower_step_degree(p, state.a, p0, j + 1)
            rem = v - j
            total = multiplicative_order(p, state.a * p0**v) // multiplicative_order(p, state.a * p0**j)
            if e_next > 1 and total == p0**rem:
                # all remaining levels multiply: one irreducible binomial
                ext = _binomial_extension(work, cur, p0**rem)
                work, zeta_a, cur = ext.field, ext.embed(zeta_a), ext.root
                j = v
                continue
            binom = [work.neg(cur)] + [work.zero()] * (p0 - 1) + [work.one()]
            fac = cz_split(work, binom, e_next, rng)
            if e_next == 1:
                cur = work.neg(fac[0])
            else:
                ext = _Extended(ExtensionField(work, fac, check=False))
                work, zeta_a, cur = ext.field, ext.embed(zeta_a), ext.root
            j += 1
        state.a *= p0**v
        beta = work.mul(zeta_a, cur)
        mp = minimal_poly_from_orbit(work, beta)
        if len(mp) - 1 != multiplicative_order(p, state.a):
            raise OrbitNotClosed("flattened degree does not match the exact order")
        flat = ExtensionField(prime, list(mp), check=True)
        state.field = flat
        state.zeta = flat.gen()

    field = state.field
    if isinstance(field, PrimeField):  # cannot happen for s >= 2, kept defensive
        raise OrbitNotClosed("tower finished without an extension")
    _verify_primitive(field, state.zeta, s)
    return UnityRoot(p=p, s=s.value, modulus=tuple(field.modulus), field=field, zeta=state.zeta)


class _Extended:
    """A fresh top level of the working tower plus its embedding map."""

    def __init__(self, field: ExtensionField):
        self.field = field
        self.root = field.gen()

    def embed(self, x):
        return self.field.embed(x)


def _binomial_extension(work, cur, n: int) -> _Extended:
    binom = [work.neg(cur)] + [work.zero()] * (n - 1) + [work.one()]
    return _Extended(ExtensionField(work, binom, check=False))


def _adjoin_prime_root(work, a: int, p: int, p0: int, rng):
    """A primitive p0-th root of unity: -1 for p0 = 2, else split Phi_p0."""
    if p0 == 2:
        return work.neg(work.one())
    e1 = tower_step_degree(p, a, p0, 1)
    phi = [work.from_int(c) for c in cyclotomic_polynomial(p0)]
    fac = cz_split(work, phi, e1, rng)
    if e1 == 1:
        return work.neg(fac[0])
    return _Extended(ExtensionField(work, fac, check=False))


def _verify_primitive(field, zeta, s: FactoredOrder):
    if field.pow(zeta, s.value) != field.one():
        raise OrbitNotClosed("constructed element is not an s-th root of unity")
    for q, _ in s.factors:
        if field.pow(zeta, s.value // q) == field.one():
            raise OrbitNotClosed(f"constructed root has order dividing s/{q}")
