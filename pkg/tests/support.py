"""Shared randomized-containment machinery for the interval layer.

Each registered case performs one randomized operation and asserts that
a sampled exact result (or a much tighter high-precision enclosure of
it) lands inside the interval result.  The acceptance gate runs every
case many times; the unit tests reuse the same cases at smaller counts.
"""

from __future__ import annotations

import random

from ordercert import elementary as el
from ordercert.dyadic import rational as R
from ordercert.errors import DivisorContainsZero, DomainViolation
from ordercert.intervals import ComplexBox, IntervalMatrix2, RealInterval

FUZZ_CASES = {}


def fuzz_case(name):
    def register(fn):
        FUZZ_CASES[name] = fn
        return fn
    return register


def run_case(name, count, seed=0):
    rng = random.Random((name, seed).__hash__() ^ 0x5EED)
    case = FUZZ_CASES[name]
    for i in range(count):
        bits = rng.choice((30, 30, 30, 53, 53, 100))
        case(rng, bits)


# ---- random data ----


def rand_rational(rng, mag=4):
    q = R(rng.randint(-10 ** mag, 10 ** mag), rng.randint(1, 10 ** mag))
    e = rng.choice((0, 0, 0, 0, 0, 3, -3, 9, -9))
    if e >= 0:
        return q * (10 ** e)
    return q / (10 ** (-e))


def rand_interval(rng, bits, mag=4):
    c = rand_rational(rng, mag)
    w = abs(rand_rational(rng, 3)) / (10 ** rng.randint(0, 9))
    if rng.random() < 0.1:
        w = R(0)
    return RealInterval(c - w, c + w, bits)


def small_interval(rng, bits):
    # arguments kept in a range where sin/cos reduction stays meaningful
    c = R(rng.randint(-20_000_000, 20_000_000), 1_000_000)
    w = R(rng.randint(0, 1_000_000), 10 ** rng.randint(6, 14))
    return RealInterval(c - w, c + w, bits)


def sample_point(rng, iv):
    roll = rng.random()
    if roll < 0.05:
        return iv.lo
    if roll < 0.10:
        return iv.hi
    t = R(rng.randint(0, 10 ** 9), 10 ** 9)
    return iv.lo + iv.diameter() * t


def rand_box(rng, bits, mag=4):
    return ComplexBox(rand_interval(rng, bits, mag), rand_interval(rng, bits, mag))


def sample_box_point(rng, box):
    return sample_point(rng, box.re), sample_point(rng, box.im)


def _oracle_bits(bits):
    return bits + 50


# ---- arithmetic cases; the exact rational result must be contained ----


@fuzz_case("add")
def _case_add(rng, bits):
    if rng.random() < 0.5:
        x, y = rand_interval(rng, bits), rand_interval(rng, bits)
        p, q = sample_point(rng, x), sample_point(rng, y)
        assert (x + y).contains(p + q)
    else:
        x, y = rand_box(rng, bits), rand_box(rng, bits)
        (a, b), (c, d) = sample_box_point(rng, x), sample_box_point(rng, y)
        assert (x + y).contains(a + c, b + d)


@fuzz_case("sub")
def _case_sub(rng, bits):
    if rng.random() < 0.5:
        x, y = rand_interval(rng, bits), rand_interval(rng, bits)
        p, q = sample_point(rng, x), sample_point(rng, y)
        assert (x - y).contains(p - q)
    else:
        x, y = rand_box(rng, bits), rand_box(rng, bits)
        (a, b), (c, d) = sample_box_point(rng, x), sample_box_point(rng, y)
        assert (x - y).contains(a - c, b - d)


@fuzz_case("mul")
def _case_mul(rng, bits):
    if rng.random() < 0.5:
        x, y = rand_interval(rng, bits), rand_interval(rng, bits)
        p, q = sample_point(rng, x), sample_point(rng, y)
        assert (x * y).contains(p * q)
    else:
        x, y = rand_box(rng, bits), rand_box(rng, bits)
        (a, b), (c, d) = sample_box_point(rng, x), sample_box_point(rng, y)
        assert (x * y).contains(a * c - b * d, a * d + b * c)


@fuzz_case("div")
def _case_div(rng, bits):
    if rng.random() < 0.5:
        x, y = rand_interval(rng, bits), rand_interval(rng, bits)
        if y.contains(0):
            try:
                x / y
            except DivisorContainsZero:
                return
            raise AssertionError("division by zero-containing interval succeeded")
        p, q = sample_point(rng, x), sample_point(rng, y)
        assert (x / y).contains(p / q)
    else:
        x, y = rand_box(rng, bits), rand_box(rng, bits)
        if not y.excludes_zero():
            try:
                x / y
            except DivisorContainsZero:
                return
            raise AssertionError("division by zero-containing box succeeded")
        (a, b), (c, d) = sample_box_point(rng, x), sample_box_point(rng, y)
        n = c * c + d * d
        assert (x / y).contains((a * c + b * d) / n, (b * c - a * d) / n)


# ---- elementary cases; a tighter enclosure of the true value must fit ----


@fuzz_case("sqrt_pos")
def _case_sqrt(rng, bits):
    x = rand_interval(rng, bits)
    if x.lo < 0:
        if rng.random() < 0.5:
            try:
                el.sqrt_pos(x, bits)
            except DomainViolation:
                return
            raise AssertionError("sqrt accepted a negative-reaching interval")
        x = x.abs()
    r = sample_point(rng, x)
    res = el.sqrt_pos(x, bits)
    tight = el.sqrt_pos(RealInterval.exact(r), _oracle_bits(bits))
    assert res.contains_interval(tight)


@fuzz_case("sin")
def _case_sin(rng, bits):
    x = small_interval(rng, bits)
    r = sample_point(rng, x)
    res = el.sin_interval(x, bits)
    tight = el.sin_interval(RealInterval.exact(r), _oracle_bits(bits))
    assert res.contains_interval(tight)


@fuzz_case("cos")
def _case_cos(rng, bits):
    x = small_interval(rng, bits)
    r = sample_point(rng, x)
    res = el.cos_interval(x, bits)
    tight = el.cos_interval(RealInterval.exact(r), _oracle_bits(bits))
    assert res.contains_interval(tight)


@fuzz_case("modulus")
def _case_modulus(rng, bits):
    z = rand_box(rng, bits)
    a, b = sample_box_point(rng, z)
    res = el.modulus(z, bits)
    tight = el.modulus(ComplexBox.exact(a, b), _oracle_bits(bits))
    assert res.contains_interval(tight)


@fuzz_case("arg_principal")
def _case_arg(rng, bits):
    z = rand_box(rng, bits)
    if el.box_meets_branch_ray(z):
        try:
            el.arg_principal(z, bits)
        except DomainViolation:
            return
        raise AssertionError("arg accepted a box meeting the branch ray")
    a, b = sample_box_point(rng, z)
    res = el.arg_principal(z, bits)
    tight = el.arg_principal(ComplexBox.exact(a, b), _oracle_bits(bits))
    assert res.contains_interval(tight)


@fuzz_case("exp_i")
def _case_exp_i(rng, bits):
    t = small_interval(rng, bits)
    r = sample_point(rng, t)
    res = el.exp_i(t, bits)
    tight = el.exp_i(RealInterval.exact(r), _oracle_bits(bits))
    assert res.contains_box(tight)


# spec'd inventory for the acceptance fuzz criterion
CRITERION_CASES = ("add", "sub", "mul", "div",
                   "sqrt_pos", "sin", "cos", "modulus", "arg_principal", "exp_i")


# ---- extra cases used by the unit tests only ----


@fuzz_case("log_pos")
def _case_log(rng, bits):
    x = rand_interval(rng, bits)
    if x.lo <= 0:
        try:
            el.log_pos(x, bits)
        except DomainViolation:
            return
        raise AssertionError("log accepted a nonpositive-reaching interval")
    r = sample_point(rng, x)
    res = el.log_pos(x, bits)
    tight = el.log_pos(RealInterval.exact(r), _oracle_bits(bits))
    assert res.contains_interval(tight)


@fuzz_case("complex_log")
def _case_clog(rng, bits):
    z = rand_box(rng, bits)
    if el.box_meets_branch_ray(z) or not z.excludes_zero():
        try:
            el.complex_log(z, bits)
        except DomainViolation:
            return
        raise AssertionError("complex log accepted a branch-ray box")
    a, b = sample_box_point(rng, z)
    res = el.complex_log(z, bits)
    tight = el.complex_log(ComplexBox.exact(a, b), _oracle_bits(bits))
    assert res.contains_box(tight)


@fuzz_case("sqrt_box")
def _case_sqrt_box(rng, bits):
    z = rand_box(rng, bits)
    if el.box_meets_branch_ray(z) or not z.excludes_zero():
        try:
            el.sqrt_box(z, bits)
        except DomainViolation:
            return
        raise AssertionError("box sqrt accepted a branch-ray box")
    a, b = sample_box_point(rng, z)
    res = el.sqrt_box(z, bits)
    tight = el.sqrt_box(ComplexBox.exact(a, b), _oracle_bits(bits))
    assert res.contains_box(tight)


@fuzz_case("matrix_mul")
def _case_matrix_mul(rng, bits):
    def rand_mat():
        entries = [rand_box(rng, bits, mag=2) for _ in range(4)]
        pts = [sample_box_point(rng, e) for e in entries]
        return IntervalMatrix2(*entries), pts

    M, mp = rand_mat()
    N, np_ = rand_mat()
    prod = M @ N
    (a, b, c, d) = mp
    (e, f, g, h) = np_

    def cmul(u, v):
        return (u[0] * v[0] - u[1] * v[1], u[0] * v[1] + u[1] * v[0])

    def cadd(u, v):
        return (u[0] + v[0], u[1] + v[1])

    exact = (cadd(cmul(a, e), cmul(b, g)), cadd(cmul(a, f), cmul(b, h)),
             cadd(cmul(c, e), cmul(d, g)), cadd(cmul(c, f), cmul(d, h)))
    assert prod.contains_matrix(exact)
