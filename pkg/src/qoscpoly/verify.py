"""Verification suites: every identity in scope as a machine-checkable record.

Each suite function takes the context plus size limits and returns a list of
CheckRecords.  Exact identities compare Fractions for equality; the few
truncation-bounded checks (infinite products) carry explicit tolerances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import hahn as hahnmod
from . import matel as matelmod
from . import operators as opsmod
from . import series as seriesmod
from .context import HALF_HALF, HALF_ZERO, HalfInt, QContext, frac
from .families import (Basis, FamilyVector, connect_hahn_gaussian,
                       expand_in_basis, family_basis_poly, hahn_factorial,
                       position_coefficients, qfactorial_pochhammer_value,
                       qfactorial_u, qgaussian, qgaussian_via_qexp_operator,
                       vector_to_poly)
from .poly import Poly
from .qarith import (q_binomial, q_double_factorial_even, q_factorial, q_int,
                     q_pochhammer, q_pochhammer_inf)
from .report import CheckRecord, VerificationReport, record

SUITE_NAMES = ("qkernel", "qseries", "polyfamilies", "operators",
               "matrixelements", "hahncalc")


def _rand_frac(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def _rand_poly(rng: random.Random, degree: int) -> Poly:
    coeffs = [_rand_frac(rng) for _ in range(degree)] + [
        Fraction(rng.randint(1, 9), rng.randint(1, 9))]
    return Poly(coeffs)


def suite_qkernel(ctx: QContext, nmax: int, order: int,
                  rng: random.Random) -> list[CheckRecord]:
    out = []
    q = ctx.q
    nmax = min(nmax, 20)
    for n in range(nmax + 1):
        for k in range(n + 1):
            lhs = q_binomial(ctx, n + 1, k)
            rhs_a = q_binomial(ctx, n, k) + q ** (n + 1 - k) * q_binomial(ctx, n, k - 1)
            rhs_b = q_binomial(ctx, n, k - 1) + q ** k * q_binomial(ctx, n, k)
            out.append(record(f"qkernel/pascal-a/n={n:02d},k={k:02d}",
                              {"n": n, "k": k}, lhs == rhs_a, lhs, rhs_a,
                              "q-Pascal rule with weight q^(n+1-k)"))
            out.append(record(f"qkernel/pascal-b/n={n:02d},k={k:02d}",
                              {"n": n, "k": k}, lhs == rhs_b, lhs, rhs_b,
                              "q-Pascal rule with weight q^k"))
    for n in range(nmax + 1):
        lhs = q_factorial(ctx, n)
        rhs = q_pochhammer(ctx, q, n) / (1 - q) ** n
        out.append(record(f"qkernel/factorial-pochhammer/n={n:02d}", {"n": n},
                          lhs == rhs, lhs, rhs, "[n]_q! = (q;q)_n/(1-q)^n"))
    for m in range(11):
        for n in range(11 - m):
            z = _rand_frac(rng)
            lhs = q_pochhammer(ctx, z, m + n)
            rhs = q_pochhammer(ctx, z, m) * q_pochhammer(ctx, z * q ** m, n)
            out.append(record(f"qkernel/pochhammer-split/m={m:02d},n={n:02d}",
                              {"m": m, "n": n, "z": z}, lhs == rhs, lhs, rhs))
    if ctx.has_root:
        for a in range(-4, 5):
            for b in range(-4, 5):
                lhs = ctx.pow_half(HALF_HALF, a) * ctx.pow_half(HALF_HALF, b)
                rhs = ctx.pow_half(HALF_HALF, a + b)
                out.append(record(
                    f"qkernel/half-power-additive/a={a:+d},b={b:+d}",
                    {"a": a, "b": b}, lhs == rhs, lhs, rhs))
    return out


def suite_qseries(ctx: QContext, nmax: int, order: int,
                  rng: random.Random) -> list[CheckRecord]:
    out = []
    q = ctx.q
    tol = Fraction(1, 10 ** 12)
    # Euler expansions against the tail-bounded infinite product
    for z in (Fraction(1, 2), Fraction(-1, 3), Fraction(1, 5)):
        prod_val, _ = q_pochhammer_inf(ctx, z, tol)
        # partial sums of the two expansions, with their own geometric tails
        terms = 80
        e_sum = Fraction(0)
        r_sum = Fraction(0)
        zpow = Fraction(1)
        for n in range(terms):
            sign = -1 if n % 2 else 1
            e_sum += sign * ctx.q_pow(n * (n - 1) // 2) * zpow / q_pochhammer(ctx, q, n)
            r_sum += zpow / q_pochhammer(ctx, q, n)
            zpow *= z
        bound = Fraction(1, 10 ** 9)
        ok = abs(e_sum - prod_val) < bound
        out.append(record(f"qseries/euler-product/z={z}", {"z": z, "tol": bound},
                          ok, e_sum, prod_val,
                          "sum (-1)^n q^C(n,2) z^n/(q;q)_n vs (z;q)_inf"))
        recip_ok = abs(r_sum - 1 / prod_val) < bound
        out.append(record(f"qseries/euler-recip/z={z}", {"z": z, "tol": bound},
                          recip_ok, r_sum, 1 / prod_val,
                          "sum z^n/(q;q)_n vs 1/(z;q)_inf"))
    # generating functions, coefficient by coefficient
    for x in (Fraction(-1), Fraction(0), Fraction(1, 3), Fraction(2)):
        g = seriesmod.gaussian_genfun_lhs(ctx, x, order)
        h = seriesmod.hahn_genfun_lhs(ctx, x, order)
        for n in range(order + 1):
            fact = q_factorial(ctx, n)
            lhs = g.coeff(n)
            rhs = qgaussian(ctx, n)(x) / fact
            out.append(record(
                f"qseries/gaussian-genfun/x={x},n={n:02d}", {"x": x, "n": n},
                lhs == rhs, lhs, rhs, "t^n coefficient vs phi_n(x)/[n]_q!"))
            lhs = h.coeff(n)
            rhs = hahn_factorial(ctx, n)(x) / fact
            out.append(record(
                f"qseries/hahn-genfun/x={x},n={n:02d}", {"x": x, "n": n},
                lhs == rhs, lhs, rhs, "t^n coefficient vs phidot_n(x)/[n]_q!"))
    # omega = 0, mu = 0: pointwise exponential agreement
    ctx0 = ctx.with_omega(0)
    for x in (Fraction(1, 3), Fraction(-1, 2)):
        lhs = seriesmod.eqw_eval(ctx0, HALF_ZERO, x, order)
        series = seriesmod.emu_series(ctx, HALF_ZERO, x, order)
        rhs = sum(series.coeffs, Fraction(0))
        out.append(record(f"qseries/eqw-reduces/x={x}", {"x": x},
                          lhs == rhs, lhs, rhs,
                          "shift-free exponential matches the (q,mu) series"))
    if ctx.has_root:
        s = ctx.s
        res = seriesmod.exp_pair_identity_residual(ctx, order)
        out.append(record("qseries/exp-pair-identity", {"order": order},
                          res.is_zero(), list(res.coeffs), 0,
                          "E^(0)(t) E^(1/2)(-q^(-1/2) t) = 1, exact to order"))
        alt = seriesmod.exp_pair_alternate_residual(ctx, order)
        first = next((c for c in alt.coeffs if c != 0), Fraction(0))
        out.append(record("qseries/exp-pair-alternate", {"order": order},
                          alt.is_zero(), first, 0,
                          "alternate pairing E^(0)(t) E^(1/2)(-q^(1/2) t) does "
                          "not vanish; the -q^(-1/2) pairing is the identity",
                          discrepancy=True))
        # factorization of the raising-series applied to 1:
        # sum s^n phi_n(x) t^n/[n]! = 1/(s x (1-q) t; q)_inf * (s (1-q) t; q)_inf
        for x in (Fraction(1, 3), Fraction(2)):
            lhs = seriesmod.TruncSeries(
                [s ** n * qgaussian(ctx, n)(x) / q_factorial(ctx, n)
                 for n in range(order + 1)])
            rhs = (seriesmod.recip_poch_series(ctx, s * x * (1 - q), order)
                   * seriesmod.e_type_series(ctx, s * (1 - q), order))
            out.append(record(
                f"qseries/raising-series-factorizes/x={x}", {"x": x},
                lhs == rhs, list(lhs.coeffs), list(rhs.coeffs),
                "q^(n/2) phi_n(x)/[n]! series splits into two Euler factors"))
    return out


def suite_polyfamilies(ctx: QContext, nmax: int, order: int,
                       rng: random.Random) -> list[CheckRecord]:
    out = []
    nmax = min(nmax, 15)
    for n in range(nmax + 1):
        prod = qgaussian(ctx, n, "product")
        ok = (prod == qgaussian(ctx, n, "recursion")
              == qgaussian(ctx, n, "explicit_sum"))
        out.append(record(f"polyfamilies/gaussian-three-way/n={n:02d}", {"n": n},
                          ok, list(prod.coeffs), "all three constructions"))
        prod = hahn_factorial(ctx, n, "product")
        ok = (prod == hahn_factorial(ctx, n, "recursion")
              == hahn_factorial(ctx, n, "explicit_sum"))
        out.append(record(f"polyfamilies/hahn-three-way/n={n:02d}", {"n": n},
                          ok, list(prod.coeffs), "all three constructions"))
        op = qgaussian_via_qexp_operator(ctx, n)
        out.append(record(f"polyfamilies/gaussian-operator-form/n={n:02d}",
                          {"n": n}, op == qgaussian(ctx, n), list(op.coeffs),
                          list(qgaussian(ctx, n).coeffs),
                          "terminating exponential-of-derivative series"))
    for n in range(min(nmax, 10) + 1):
        pu = qfactorial_u(ctx, n)
        for x in range(11):
            lhs = pu(ctx.q_pow(x))
            rhs = qfactorial_pochhammer_value(ctx, n, x)
            out.append(record(
                f"polyfamilies/qfactorial-identity/n={n:02d},x={x:02d}",
                {"n": n, "x": x}, lhs == rhs, lhs, rhs,
                "u-product vs shifted-Pochhammer closed form"))
    # basis round trips on random polynomials
    for basis in (Basis.QGAUSSIAN, Basis.HAHN_FACTORIAL, Basis.SHIFTED_MONOMIAL):
        for trial in range(5):
            p = _rand_poly(rng, nmax)
            back = vector_to_poly(ctx, expand_in_basis(ctx, p, basis))
            out.append(record(
                f"polyfamilies/roundtrip/{basis.value}/trial={trial}",
                {"basis": basis.value, "degree": p.degree}, back == p,
                list(back.coeffs), list(p.coeffs)))
    # monomial inversion, pointwise
    for n in range(min(nmax, 12) + 1):
        for x in (Fraction(-1), Fraction(1, 3), Fraction(2), Fraction(5, 7),
                  Fraction(0)):
            lhs = sum((q_binomial(ctx, n, k) * qgaussian(ctx, k)(x)
                       for k in range(n + 1)), Fraction(0))
            out.append(record(
                f"polyfamilies/inversion/n={n:02d},x={x}", {"n": n, "x": x},
                lhs == x ** n, lhs, x ** n,
                "x^n = sum_k [n,k]_q phi_k(x)"))
    if ctx.omega0 != 0:
        for n in range(nmax + 1):
            lhs = connect_hahn_gaussian(ctx, n)
            rhs = hahn_factorial(ctx, n)
            out.append(record(f"polyfamilies/connection/n={n:02d}", {"n": n},
                              lhs == rhs, list(lhs.coeffs), list(rhs.coeffs),
                              "phidot_n = (-w0)^n phi_n(1 - x/w0)"))
    out.extend(_position_checks(ctx))
    return out


def _position_checks(ctx: QContext) -> list[CheckRecord]:
    out = []
    q = ctx.q
    cs = position_coefficients(ctx, 13)
    x = Poly([0, 1])
    i2, i3, i4 = q_int(ctx, 2), q_int(ctx, 3), q_int(ctx, 4)
    printed = {
        1: x,
        2: (x * x - 1) / i2,
        3: (x ** 3 - x * (1 + i2 / q)) / q_factorial(ctx, 3),
        4: (x ** 4 - x * x * (1 + i2 / q + i3 / q ** 2) + i3 / q ** 2)
           / q_factorial(ctx, 4),
        5: (x ** 5 - x ** 3 * (1 + i2 / q + i3 / q ** 2 + i4 / q ** 3)
            + x * (i3 / q ** 2 + i4 / q ** 3 + i2 * i4 / q ** 4))
           / q_factorial(ctx, 5),
    }
    for n, expect in printed.items():
        out.append(record(f"polyfamilies/position-c{n}", {"n": n},
                          cs[n] == expect, list(cs[n].coeffs),
                          list(expect.coeffs), "printed coefficient polynomial"))
    for n in range(7):
        lhs = cs[2 * n](0)
        sign = -1 if n % 2 else 1
        rhs = sign * ctx.q_pow(n * (1 - n)) / q_double_factorial_even(ctx, n)
        out.append(record(f"polyfamilies/position-even-origin/n={n}", {"n": n},
                          lhs == rhs, lhs, rhs,
                          "c_2n(0) = (-1)^n q^(n(1-n))/[2n]_q!!"))
        if 2 * n + 1 < len(cs):
            lhs = cs[2 * n + 1](0)
            out.append(record(f"polyfamilies/position-odd-origin/n={n}",
                              {"n": n}, lhs == 0, lhs, 0, "c_2n+1(0) = 0"))
    return out


def suite_operators(ctx: QContext, nmax: int, order: int,
                    rng: random.Random) -> list[CheckRecord]:
    out = []
    nmax = min(nmax, 12)
    for family in opsmod.LadderFamily:
        basis = opsmod.FAMILY_BASIS[family]
        for n in range(nmax + 1):
            pn = family_basis_poly(ctx, basis, n)
            for direction in ("lower", "raise"):
                vec = opsmod.ladder_apply(
                    ctx, family, direction, FamilyVector(basis, [0] * n + [1]))
                analytic = opsmod.ladder_apply_analytic(ctx, family, direction, pn)
                predicted = vector_to_poly(ctx, vec)
                out.append(record(
                    f"operators/analytic-vs-basis/{family.value}/"
                    f"{direction}/n={n:02d}",
                    {"family": family.value, "direction": direction, "n": n},
                    analytic == predicted, list(analytic.coeffs),
                    list(predicted.coeffs)))
        for check in opsmod.algebra_relations_check(ctx, family, nmax):
            out.append(record(
                f"operators/algebra/{family.value}/{check.relation}"
                f"/n={check.n:02d}",
                {"family": family.value, "n": check.n},
                check.passed, check.lhs, check.rhs, check.relation))
    # repeated raising from the ground element
    for family in (opsmod.LadderFamily.QGAUSSIAN, opsmod.LadderFamily.HAHN):
        basis = opsmod.FAMILY_BASIS[family]
        p = Poly.one()
        for n in range(1, 11):
            p = opsmod.ladder_apply_analytic(ctx, family, "raise", p)
            lhs = ctx.q_pow(n * (n - 1) // 2) * p
            rhs = family_basis_poly(ctx, basis, n)
            out.append(record(
                f"operators/raising-power/{family.value}/n={n:02d}",
                {"family": family.value, "n": n}, lhs == rhs,
                list(lhs.coeffs), list(rhs.coeffs),
                "q^(n(n-1)/2) (adag)^n . 1 reproduces the family polynomial"))
    for n in range(nmax + 1):
        res = opsmod.difference_equation_residual(ctx, n)
        out.append(record(f"operators/difference-equation/n={n:02d}", {"n": n},
                          res.is_zero(), list(res.coeffs), 0,
                          "((x-1) q^(-x d/dx) D_q - [n]_(1/q)) phi_n = 0"))
    # Jackson derivative is the q-Gaussian lowering action on monomials
    p = _rand_poly(rng, nmax)
    lhs = opsmod.jackson_derivative(ctx, p)
    rhs = opsmod.ladder_apply_analytic(ctx, opsmod.LadderFamily.QGAUSSIAN,
                                       "lower", p)
    out.append(record("operators/jackson-is-lowering", {"degree": p.degree},
                      lhs == rhs, list(lhs.coeffs), list(rhs.coeffs)))
    return out


MATEL_AB_GRID = (Fraction(0), Fraction(1), Fraction(-1, 2), Fraction(1, 3))


def suite_matrixelements(ctx: QContext, nmax: int, order: int,
                         rng: random.Random) -> list[CheckRecord]:
    out = []
    nmax = min(nmax, 6)
    halves = (HALF_ZERO, HALF_HALF) if ctx.has_root else (HALF_ZERO, HalfInt(2))
    ctx_zero = ctx.with_omega(0)
    for family in opsmod.LadderFamily:
        for mu in halves:
            for nu in halves:
                for alpha in MATEL_AB_GRID:
                    for beta in MATEL_AB_GRID:
                        for n in range(nmax + 1):
                            for r in range(nmax + 1):
                                p = matelmod.MatElParams(mu, nu, alpha, beta, n, r)
                                closed = matelmod.matel_closed(ctx, family, p)
                                oracle = matelmod.matel_oracle(ctx, family, p)
                                ratio = (closed / oracle if oracle != 0 else None)
                                out.append(record(
                                    f"matrixelements/closed-vs-oracle/"
                                    f"{family.value}/mu={mu.value},nu={nu.value},"
                                    f"a={alpha},b={beta},n={n},r={r}",
                                    {"family": family.value, "mu": mu.value,
                                     "nu": nu.value, "alpha": alpha,
                                     "beta": beta, "n": n, "r": r,
                                     "ratio": ratio},
                                    closed == oracle, closed, oracle,
                                    "closed form vs exact ladder-series oracle",
                                    discrepancy=True))
                                if family is opsmod.LadderFamily.HAHN:
                                    at_zero = matelmod.matel_closed(
                                        ctx_zero, family, p)
                                    gauss = matelmod.matel_closed(
                                        ctx_zero, opsmod.LadderFamily.QGAUSSIAN, p)
                                    out.append(record(
                                        f"matrixelements/hahn-reduces/"
                                        f"mu={mu.value},nu={nu.value},a={alpha},"
                                        f"b={beta},n={n},r={r}",
                                        {"mu": mu.value, "nu": nu.value,
                                         "alpha": alpha, "beta": beta,
                                         "n": n, "r": r},
                                        at_zero == gauss, at_zero, gauss,
                                        "omega = 0 collapses to the q-Gaussian "
                                        "matrix element"))
    # terminating 2phi0 identities
    for n in range(9):
        for x in (Fraction(1, 3), Fraction(2), Fraction(-1)):
            lhs = matelmod.basic_hyp_terminating(
                ctx, [ctx.q_pow(-n), 1 / x], [], x * ctx.q_pow(n))
            out.append(record(
                f"matrixelements/2phi0-first/n={n},x={x}", {"n": n, "x": x},
                lhs == x ** n, lhs, x ** n,
                "2phi0(q^-n, 1/x; q; x q^n) = x^n"))
            acc = Fraction(0)
            for j in range(n + 1):
                sign = -1 if j % 2 else 1
                acc += (q_binomial(ctx, n, j) * ctx.q_pow(j * (j - 1) // 2)
                        * sign * matelmod.basic_hyp_terminating(
                            ctx, [ctx.q_pow(-(n - j)), 0], [],
                            x * ctx.q_pow(n - j)))
            out.append(record(
                f"matrixelements/2phi0-second/n={n},x={x}", {"n": n, "x": x},
                acc == x ** n, acc, x ** n,
                "alternating sum of 2phi0(q^(j-n), 0; q; x q^(n-j)) = x^n"))
    if ctx.has_root:
        for check in matelmod.special_form_checks(ctx, min(nmax, 5)):
            out.append(record(
                f"matrixelements/special-form/{check.name}/n={check.n},"
                f"x={check.x},q1t={check.q1theta}",
                {"n": check.n, "x": check.x, "q1theta": check.q1theta},
                check.passed, check.lhs, check.rhs, check.name))
    return out


def suite_hahncalc(ctx: QContext, nmax: int, order: int,
                   rng: random.Random) -> list[CheckRecord]:
    out = []
    for trial in range(8):
        p = _rand_poly(rng, min(nmax, 10))
        anti = hahnmod.hahn_antiderivative(ctx, p)
        out.append(record(
            f"hahncalc/fundamental-derivative-of-integral/trial={trial}",
            {"degree": p.degree},
            hahnmod.hahn_derivative_poly(ctx, anti) == p,
            list(hahnmod.hahn_derivative_poly(ctx, anti).coeffs),
            list(p.coeffs)))
        big = _rand_poly(rng, min(nmax, 10))
        for x in (Fraction(1), Fraction(-2, 3)):
            lhs = hahnmod.hahn_integral_closed(
                ctx, hahnmod.hahn_derivative_poly(ctx, big), x)
            rhs = big(x) - big(ctx.omega0)
            out.append(record(
                f"hahncalc/fundamental-integral-of-derivative/"
                f"trial={trial},x={x}", {"degree": big.degree, "x": x},
                lhs == rhs, lhs, rhs))
            lhs2 = hahnmod.hahn_integral_closed(ctx, p, x)
            rhs2 = anti(x)
            out.append(record(
                f"hahncalc/two-method-integral/trial={trial},x={x}",
                {"degree": p.degree, "x": x}, lhs2 == rhs2, lhs2, rhs2,
                "closed-form series sum vs antiderivative evaluation"))
    for trial in range(20):
        f = _rand_poly(rng, rng.randint(0, 6))
        g = _rand_poly(rng, rng.randint(0, 6))
        pres, qres = hahnmod.leibniz_residuals(ctx, f, g)
        out.append(record(f"hahncalc/leibniz-product/trial={trial:02d}",
                          {"degf": f.degree, "degg": g.degree},
                          pres.is_zero(), list(pres.coeffs), 0))
        out.append(record(f"hahncalc/leibniz-quotient/trial={trial:02d}",
                          {"degf": f.degree, "degg": g.degree},
                          qres.is_zero(), list(qres.coeffs), 0))
    ctx0 = ctx.with_omega(0)
    p = _rand_poly(rng, 8)
    lhs = hahnmod.hahn_derivative_poly(ctx0, p)
    rhs = opsmod.jackson_derivative(ctx0, p)
    out.append(record("hahncalc/jackson-reduction", {"degree": p.degree},
                      lhs == rhs, list(lhs.coeffs), list(rhs.coeffs),
                      "omega = 0 Hahn derivative is the Jackson derivative"))
    bound = Fraction(1, 10 ** 9)
    for x in (Fraction(1, 4), Fraction(-1, 3), Fraction(2, 5)):
        terms = 40
        e_x = hahnmod.hahn_exp_normalized(ctx, x, terms)
        e_step = hahnmod.hahn_exp_normalized(ctx, ctx.q * x + ctx.omega, terms)
        denom = (ctx.q - 1) * x + ctx.omega
        if denom == 0:
            continue
        residual = abs((e_step - e_x) / denom - e_x)
        out.append(record(f"hahncalc/exp-functional-equation/x={x}",
                          {"x": x, "terms": terms, "tol": bound},
                          residual < bound, residual, 0,
                          "|D_{q,w} e - e| under the truncated product"))
    # numeric integral against the closed form
    p = _rand_poly(rng, 5)
    fn = hahnmod.SampledFn(p, "random polynomial")
    for x in (Fraction(1), Fraction(1, 2)):
        value, _ = hahnmod.hahn_integral_numeric(ctx, fn, x, Fraction(1, 10 ** 9))
        exact = hahnmod.hahn_integral_closed(ctx, p, x)
        out.append(record(f"hahncalc/numeric-integral/x={x}",
                          {"x": x, "tol": Fraction(1, 10 ** 9)},
                          abs(value - exact) < Fraction(1, 10 ** 9),
                          value, exact))
    return out


SUITES = {
    "qkernel": suite_qkernel,
    "qseries": suite_qseries,
    "polyfamilies": suite_polyfamilies,
    "operators": suite_operators,
    "matrixelements": suite_matrixelements,
    "hahncalc": suite_hahncalc,
}


@dataclass
class RunConfig:
    s: str = "1/2"
    omega: str = "1/8"
    order: int = 12
    nmax: int = 12
    suites: tuple = SUITE_NAMES
    fmt: str = "text"
    out: str | None = None
    seed: int = 0


def build_context(config: RunConfig) -> QContext:
    return QContext(frac(config.s), frac(config.omega))


def run_suites(config: RunConfig) -> VerificationReport:
    ctx = build_context(config)
    report = VerificationReport(
        context={"s": str(ctx.s), "q": str(ctx.q), "omega": str(ctx.omega),
                 "omega0": str(ctx.omega0)},
        seed=config.seed)
    for name in config.suites:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
        rng = random.Random(config.seed)
        report.extend(SUITES[name](ctx, config.nmax, config.order, rng))
    return report
