"""Mixed-radix decimation-in-time transform over (Z/p^K)[X]/F.

The input is permuted by mixed-radix digit reversal, then one stage per
radix (last radix first) combines blocks: a twiddle pass multiplies entry
(j, k1) by alpha^((s/L) j k1), and a radix-r pass evaluates the short DFT
sum with the fixed powers alpha^((s/r) j k2). Multiplications are skipped
exactly when the exponent is zero, never based on operand values, so the
instrumented count depends only on d and the radix schedule. The inverse
transform runs the same schedule with negated exponents into the same power
table and one final multiplication by s^(-1).

Two interchangeable engines: a pure-Python one over RingElements, and a
vectorized one on int64 arrays for p^K up to 2^51. They follow the same
call structure, so their operation counts are identical.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (
    BadInput,
    CoefficientNotRational,
    DegreeOverflow,
    FactoringFailure,
    LengthMismatch,
    NotCoprime,
    OutOfRange,
    ParentMismatch,
    PrecisionTooLow,
    RootNotPrimitive,
)
from .orders import FactoredOrder
from .padic import RingExtension, residue_inverse, ring_mul, ring_pow, scalar_mul
from .planner import choose_parameters


@dataclass
class FFTPlan:
    """Precomputed schedule for length-s transforms at precision K.

    Immutable once built; dft/idft never write to it, so one plan can serve
    concurrent calls on distinct buffers.
    """

    s: int
    s_factored: FactoredOrder
    radices: tuple
    ring: RingExtension
    root: object
    root_powers: list
    inv_s: int
    permutation: tuple
    engine: str
    table: object  # (s, d) int64 array for the numpy engine, else None

    @property
    def p(self) -> int:
        return self.ring.ctx.p

    @property
    def K(self) -> int:
        return self.ring.ctx.K


def digit_reversal_permutation(radices) -> tuple:
    """Gather indices: position j*t + i reads input j + r*sub[i]."""
    radices = list(radices)
    if not radices:
        return (0,)
    if len(radices) == 1:
        return tuple(range(radices[0]))
    r = radices[0]
    sub = digit_reversal_permutation(radices[1:])
    t = len(sub)
    out = [0] * (r * t)
    for j in range(r):
        for i in range(t):
            out[j * t + i] = j + r * sub[i]
    return tuple(out)


def make_plan(s, lift, K: int, engine: str = "auto") -> FFTPlan:
    """Build the transform schedule from a lifted root.

    The lift's ring and root are truncated from their own precision down to
    K; the root must still be a primitive s-th root of unity there.
    """
    if not isinstance(s, FactoredOrder):
        s = FactoredOrder.of(s)
    if K < 1:
        raise BadInput("need K >= 1")
    if lift.precision < K:
        raise PrecisionTooLow(f"lift precision {lift.precision} is below K = {K}")
    ring = lift.ring.truncate(K)
    p = ring.ctx.p
    if s.value % p == 0:
        raise NotCoprime("s must be coprime to p")
    if engine == "auto":
        engine = "numpy" if kernels.supports_modulus(ring.ctx.pK) else "python"
    if engine not in ("python", "numpy"):
        raise BadInput(f"unknown engine {engine!r}")
    if engine == "numpy" and not kernels.supports_modulus(ring.ctx.pK):
        raise BadInput(f"numpy engine needs p^K <= 2^51, got {ring.ctx.pK}")
    root = ring.element(lift.root.coeffs)
    if ring_pow(root, s.value) != ring.one():
        raise RootNotPrimitive(f"root^{s.value} is not 1 at precision {K}")
    for q, _ in s.factors:
        if ring_pow(root, s.value // q) == ring.one():
            raise RootNotPrimitive(f"root order divides {s.value}/{q}")

    m = ring.ctx.pK
    d = ring.degree
    cost = ring.mul_cost()
    if engine == "numpy":
        fhead = np.asarray(ring.modulus[:-1], dtype=np.int64)
        table = kernels.power_table(np.asarray(root.coeffs, dtype=np.int64), s.value, fhead, m)
        ring.counter.add(max(0, s.value - 2) * cost)
        powers = [ring.element(row.tolist()) for row in table]
    else:
        table = None
        powers = [ring.one()]
        if s.value > 1:
            powers.append(root)
        for _ in range(s.value - 2):
            powers.append(ring_mul(powers[-1], root))
    return FFTPlan(
        s=s.value,
        s_factored=s,
        radices=tuple(s.radix_schedule()),
        ring=ring,
        root=root,
        root_powers=powers,
        inv_s=residue_inverse(s.value % m, ring.ctx),
        permutation=digit_reversal_permutation(s.radix_schedule()),
        engine=engine,
        table=table,
    )


def _check_input(values, plan: FFTPlan):
    if len(values) != plan.s:
        raise LengthMismatch(f"expected {plan.s} elements, got {len(values)}")
    for v in values:
        if not v.parent.same(plan.ring):
            raise ParentMismatch("element does not belong to the plan's ring")


def dft(coeffs, plan: FFTPlan):
    """Evaluations [f(alpha^0), ..., f(alpha^(s-1))] of sum coeffs[i] Y^i."""
    _check_input(coeffs, plan)
    if plan.engine == "numpy":
        return _transform_numpy(coeffs, plan, invert=False)
    return _transform_python(coeffs, plan, invert=False)


def idft(evals, plan: FFTPlan):
    """Exact inverse of dft: coefficients from evaluations."""
    _check_input(evals, plan)
    if plan.engine == "numpy":
        out = _transform_numpy(evals, plan, invert=True)
    else:
        out = _transform_python(evals, plan, invert=True)
    return [scalar_mul(plan.inv_s, v) for v in out]


def _transform_python(values, plan: FFTPlan, invert: bool):
    s = plan.s
    table = plan.root_powers
    data = [values[i] for i in plan.permutation]
    t = 1
    for r in reversed(plan.radices):
        big = r * t
        out = list(data)
        stage_stride = s // big
        radix_stride = s // r
        for base in range(0, s, big):
            for k1 in range(t):
                u = []
                for j in range(r):
                    v = data[base + j * t + k1]
                    e = stage_stride * j * k1
                    if e:
                        v = ring_mul(v, table[s - e if invert else e])
                    u.append(v)
                for k2 in range(r):
                    acc = u[0]
                    for j in range(1, r):
                        e = radix_stride * (j * k2 % r)
                        acc = acc + (ring_mul(u[j], table[s - e if invert else e]) if e else u[j])
                    out[base + k2 * t + k1] = acc
        data = out
        t = big
    return data


def _transform_numpy(values, plan: FFTPlan, invert: bool):
    s = plan.s
    ring = plan.ring
    m = ring.ctx.pK
    d = ring.degree
    cost = ring.mul_cost()
    fhead = np.asarray(ring.modulus[:-1], dtype=np.int64)
    table = plan.table
    arr = np.array([v.coeffs for v in values], dtype=np.int64)[list(plan.permutation)]
    t = 1
    for r in reversed(plan.radices):
        big = r * t
        blocks = s // big
        view = arr.reshape(blocks, r, t, d)
        stage_stride = s // big
        radix_stride = s // r
        if t > 1:
            k1 = np.arange(1, t)
            for j in range(1, r):
                e = stage_stride * j * k1
                idx = (s - e) if invert else e
                view[:, j, 1:, :] = kernels.ring_mul_batch(view[:, j, 1:, :], table[idx], fhead, m)
                ring.counter.add(blocks * (t - 1) * cost)
        out = np.empty_like(view)
        out[:, 0, :, :] = np.mod(view.sum(axis=1), m)
        for k2 in range(1, r):
            acc = view[:, 0, :, :].astype(np.int64)
            for j in range(1, r):
                e = radix_stride * (j * k2 % r)
                idx = (s - e) if invert else e
                acc = acc + kernels.ring_mul_batch(view[:, j, :, :], table[idx], fhead, m)
                ring.counter.add(blocks * t * cost)
            out[:, k2, :, :] = np.mod(acc, m)
        arr = out.reshape(s, d)
        t = big
    return [ring.element(row.tolist()) for row in arr]


def naive_dft(coeffs, root, s: int):
    """[f(root^j)]_{j < s} by Horner evaluation; the O(s^2) oracle."""
    ring = root.parent
    out = []
    point = ring.one()
    for j in range(s):
        if j:
            point = ring_mul(point, root)
        acc = ring.zero()
        for c in reversed(list(coeffs)):
            acc = ring_mul(acc, point) + c
        out.append(acc)
    return out


def cyclic_convolution(x, y, plan: FFTPlan):
    """Length-s cyclic convolution via dft, pointwise product, idft."""
    fx = dft(x, plan)
    fy = dft(y, plan)
    return idft(_pointwise(fx, fy, plan), plan)


def _pointwise(a, b, plan: FFTPlan):
    ring = plan.ring
    if plan.engine == "numpy":
        m = ring.ctx.pK
        fhead = np.asarray(ring.modulus[:-1], dtype=np.int64)
        xa = np.array([v.coeffs for v in a], dtype=np.int64)
        xb = np.array([v.coeffs for v in b], dtype=np.int64)
        ring.counter.add(plan.s * ring.mul_cost())
        return [ring.element(row.tolist()) for row in kernels.ring_mul_batch(xa, xb, fhead, m)]
    return [ring_mul(u, v) for u, v in zip(a, b)]


def poly_multiply(f, g, p: int, K: int, planner=choose_parameters, plan: FFTPlan | None = None,
                  rng: random.Random | None = None, engine: str = "auto"):
    """Exact product of two Z/p^K coefficient sequences via the transform.

    Inputs are embedded as constant ring elements; the planner hook picks s
    above deg f + deg g unless a prebuilt plan is supplied. Output results
    must come back constant, coefficient by coefficient.
    """
    fc = [c % p**K for c in f]
    gc = [c % p**K for c in g]
    while fc and fc[-1] == 0:
        fc.pop()
    while gc and gc[-1] == 0:
        gc.pop()
    if not fc or not gc:
        return []
    bound = (len(fc) - 1) + (len(gc) - 1)
    if plan is None:
        try:
            chosen = planner(p, max(bound, 1))
        except (OutOfRange, FactoringFailure) as exc:
            raise DegreeOverflow(f"no transform length above {bound} is available") from exc
        from .pipeline import build_pipeline

        plan = build_pipeline(p, K, s=chosen.s_factored, rng=rng, engine=engine).plan
    if bound >= plan.s:
        raise DegreeOverflow(f"product degree {bound} needs s > {bound}, plan has s = {plan.s}")
    ring = plan.ring
    xs = [ring.from_int(c) for c in fc] + [ring.zero()] * (plan.s - len(fc))
    ys = [ring.from_int(c) for c in gc] + [ring.zero()] * (plan.s - len(gc))
    prod = cyclic_convolution(xs, ys, plan)
    out = []
    for i, v in enumerate(prod):
        if any(v.coeffs[1:]):
            raise CoefficientNotRational(f"product coefficient {i} is not in Z/p^K")
        out.append(v.coeffs[0])
    while out and out[-1] == 0:
        out.pop()
    return out
