import random

import pytest

from padicfft.errors import (
    BadInput,
    CoefficientNotRational,
    DegreeOverflow,
    LengthMismatch,
    ParentMismatch,
    PrecisionTooLow,
    RootNotPrimitive,
)
from padicfft.fft import (
    cyclic_convolution,
    dft,
    digit_reversal_permutation,
    idft,
    make_plan,
    naive_dft,
    poly_multiply,
)
from padicfft.lifting import newton_lift_root
from padicfft.pipeline import build_pipeline
from padicfft.planner import choose_parameters


def random_vector(ring, s, rng):
    return [ring.element([rng.randrange(ring.ctx.pK) for _ in range(ring.degree)])
            for _ in range(s)]


def test_digit_reversal_permutation():
    assert digit_reversal_permutation([]) == (0,)
    assert digit_reversal_permutation([3]) == (0, 1, 2)
    assert digit_reversal_permutation([2, 2]) == (0, 2, 1, 3)
    assert digit_reversal_permutation([2, 2, 2]) == (0, 4, 2, 6, 1, 5, 3, 7)
    # a permutation of range(s) in every case
    assert sorted(digit_reversal_permutation([2, 2, 13])) == list(range(52))


def test_frozen_length_four():
    # p=3, K=4: the tower gives f = Y^2 + 1 and the lifted root is Y itself,
    # so f(Y) = 1 + Y evaluates to 2, 1+Y, 0, 1-Y at the four powers.
    pipe = build_pipeline(3, 4, s=4, rng=random.Random(7))
    plan = pipe.plan
    assert plan.ring.modulus == (1, 0, 1)
    assert plan.root.coeffs == (0, 1)
    ring = plan.ring
    x = [ring.from_int(1), ring.from_int(1), ring.zero(), ring.zero()]
    out = dft(x, plan)
    assert [v.coeffs for v in out] == [(2, 0), (1, 1), (0, 0), (1, 80)]
    assert idft(out, plan) == x


@pytest.mark.parametrize("p,s", [(3, 2), (3, 4), (3, 8), (3, 104),
                                 (5, 6), (5, 12), (5, 24), (19, 5), (19, 8)])
def test_matches_naive(p, s):
    pipe = build_pipeline(p, 3, s=s, rng=random.Random(1))
    plan = pipe.plan
    rng = random.Random(s * 1000 + p)
    x = random_vector(plan.ring, s, rng)
    assert dft(x, plan) == naive_dft(x, plan.root, s)


@pytest.mark.parametrize("K", [1, 8, 32])
@pytest.mark.parametrize("s", [2, 4, 8, 104])
def test_round_trip(s, K):
    pipe = build_pipeline(3, K, s=s, rng=random.Random(5))
    plan = pipe.plan
    rng = random.Random(s + K)
    x = random_vector(plan.ring, s, rng)
    assert idft(dft(x, plan), plan) == x
    assert dft(idft(x, plan), plan) == x


def test_round_trip_python_engine():
    # 19^32 is far beyond the vector kernel's modulus bound
    pipe = build_pipeline(19, 32, s=40, rng=random.Random(4))
    plan = pipe.plan
    assert plan.engine == "python"
    rng = random.Random(9)
    x = random_vector(plan.ring, 40, rng)
    assert idft(dft(x, plan), plan) == x


def test_length_one_plan():
    lift = newton_lift_root([2, 1], 1, 3, 3)
    plan = make_plan(1, lift, 8)
    v = plan.ring.from_int(5)
    assert dft([v], plan) == [v]
    assert idft([v], plan) == [v]


def test_linearity():
    pipe = build_pipeline(3, 8, s=8, rng=random.Random(2))
    plan = pipe.plan
    rng = random.Random(11)
    x = random_vector(plan.ring, 8, rng)
    y = random_vector(plan.ring, 8, rng)
    fx, fy = dft(x, plan), dft(y, plan)
    mixed = dft([a + b + b for a, b in zip(x, y)], plan)
    assert mixed == [a + b + b for a, b in zip(fx, fy)]


def test_convolution_matches_schoolbook():
    pipe = build_pipeline(3, 8, s=8, rng=random.Random(2))
    plan = pipe.plan
    ring = plan.ring
    m = ring.ctx.pK
    rng = random.Random(13)
    av = [rng.randrange(m) for _ in range(8)]
    bv = [rng.randrange(m) for _ in range(8)]
    got = cyclic_convolution([ring.from_int(c) for c in av],
                             [ring.from_int(c) for c in bv], plan)
    want = [sum(av[i] * bv[(k - i) % 8] for i in range(8)) % m for k in range(8)]
    assert [v.coeffs[0] for v in got] == want
    assert all(not any(v.coeffs[1:]) for v in got)


def test_engine_parity():
    # same lift, two engines: identical outputs and identical counted work
    pipe = build_pipeline(3, 8, s=8, rng=random.Random(2))
    fast = make_plan(8, pipe.lift, 8, engine="numpy")
    slow = make_plan(8, pipe.lift, 8, engine="python")
    assert fast.ring.counter.count == slow.ring.counter.count  # table build
    rng = random.Random(17)
    x_fast = random_vector(fast.ring, 8, rng)
    x_slow = [slow.ring.element(v.coeffs) for v in x_fast]
    fast.ring.counter.reset()
    slow.ring.counter.reset()
    a, b = dft(x_fast, fast), dft(x_slow, slow)
    assert [v.coeffs for v in a] == [v.coeffs for v in b]
    assert fast.ring.counter.count == slow.ring.counter.count
    fast.ring.counter.reset()
    slow.ring.counter.reset()
    a, b = idft(x_fast, fast), idft(x_slow, slow)
    assert [v.coeffs for v in a] == [v.coeffs for v in b]
    assert fast.ring.counter.count == slow.ring.counter.count


def test_count_is_input_independent():
    pipe = build_pipeline(3, 8, s=104, rng=random.Random(3))
    plan = pipe.plan
    rng = random.Random(19)
    plan.ring.counter.reset()
    dft([plan.ring.zero()] * 104, plan)
    zeros = plan.ring.counter.count
    plan.ring.counter.reset()
    dft(random_vector(plan.ring, 104, rng), plan)
    assert plan.ring.counter.count == zeros


def test_transform_budget():
    # one transform stays under 8 d^2 s (sum of v*q over the radices of s)
    pipe = build_pipeline(3, 8, N=100)
    plan = pipe.plan
    d, s = plan.ring.degree, plan.s
    weight = sum(plan.radices)
    plan.ring.counter.reset()
    dft([plan.ring.zero()] * s, plan)
    assert 0 < plan.ring.counter.count <= 8 * d * d * s * weight


def test_poly_multiply_planner_path():
    assert poly_multiply([1, 1], [1, 1], 3, 8) == [1, 2, 1]
    assert poly_multiply([4, 5, 6], [1], 3, 4) == [4, 5, 6]
    assert poly_multiply([], [1, 2], 3, 4) == []
    assert poly_multiply([3**4, 0], [1, 1], 3, 4) == []


def test_poly_multiply_prebuilt_plan():
    pipe = build_pipeline(3, 8, s=104, rng=random.Random(3))
    m = 3**8
    rng = random.Random(23)
    for _ in range(20):
        fc = [rng.randrange(m) for _ in range(rng.randrange(1, 42))]
        gc = [rng.randrange(m) for _ in range(rng.randrange(1, 42))]
        school = [0] * (len(fc) + len(gc) - 1)
        for i, a in enumerate(fc):
            for j, b in enumerate(gc):
                school[i + j] = (school[i + j] + a * b) % m
        while school and school[-1] == 0:
            school.pop()
        assert poly_multiply(fc, gc, 3, 8, plan=pipe.plan) == school


def test_poly_multiply_degree_overflow():
    pipe = build_pipeline(3, 4, s=8, rng=random.Random(2))
    f = [1] * 5
    with pytest.raises(DegreeOverflow):
        poly_multiply(f, f, 3, 4, plan=pipe.plan)
    # planner hook that cannot reach the degree
    def tiny_planner(p, N):
        return choose_parameters(p, 1)
    with pytest.raises(DegreeOverflow):
        poly_multiply(f, f, 3, 4, planner=tiny_planner)


def test_validation():
    pipe = build_pipeline(3, 4, s=8, rng=random.Random(2))
    plan = pipe.plan
    x = [plan.ring.zero()] * 8
    with pytest.raises(LengthMismatch):
        dft(x[:-1], plan)
    other = build_pipeline(3, 4, s=4, rng=random.Random(2)).plan
    with pytest.raises(ParentMismatch):
        dft([other.ring.zero()] * 8, plan)
    with pytest.raises(PrecisionTooLow):
        make_plan(8, pipe.lift, 5)
    with pytest.raises(BadInput):
        make_plan(8, pipe.lift, 0)
    with pytest.raises(BadInput):
        make_plan(8, pipe.lift, 4, engine="fortran")
    with pytest.raises(RootNotPrimitive):
        make_plan(4, pipe.lift, 4)  # root has order 8, not 4
    from padicfft.errors import NotCoprime
    with pytest.raises(NotCoprime):
        make_plan(9, pipe.lift, 4)


def test_projection_failure_detected(monkeypatch):
    # products of constants are constant, so force a bad convolution result
    # to show the projection check actually fires
    import padicfft.fft as fft_mod

    pipe = build_pipeline(3, 4, s=4, rng=random.Random(7))
    plan = pipe.plan
    gen = plan.ring.element([0, 1])
    monkeypatch.setattr(fft_mod, "cyclic_convolution", lambda x, y, p: [gen] * 4)
    with pytest.raises(CoefficientNotRational):
        poly_multiply([1, 1], [1, 1], 3, 4, plan=plan)
