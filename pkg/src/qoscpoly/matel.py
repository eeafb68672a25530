"""Matrix elements of the deformed exponential-operator products.

The operator E^(mu)(alpha * adag) E^(nu)(beta * a) acting on the n-th family
polynomial expands again in the family basis; the expansion coefficients are
computed two independent ways:

  * ``matel_closed``  evaluates the closed-form expressions through the
    U-polynomials (a terminating q-hypergeometric sum);
  * ``matel_oracle``  applies the two truncating operator series directly via
    the exact ladder coefficients, with no reference to the closed forms.

The oracle is the ground truth; any exact mismatch with a closed form is
reported as a documented discrepancy, never patched.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .context import HalfInt, QContext, frac
from .operators import LadderFamily, lowering_coeff, raising_coeff
from .qarith import q_binomial, q_factorial


@dataclass(frozen=True)
class MatElParams:
    """Parameters (mu, nu, alpha, beta) and the matrix indices (n, r)."""

    mu: HalfInt
    nu: HalfInt
    alpha: Fraction
    beta: Fraction
    n: int
    r: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", frac(self.alpha))
        object.__setattr__(self, "beta", frac(self.beta))
        if self.n < 0 or self.r < 0:
            raise ValueError("matrix indices must be >= 0")


def u_polynomial(ctx: QContext, mu: HalfInt, nu: HalfInt, n: int,
                 q1theta, x) -> Fraction:
    """The terminating sum U_n^(mu,nu)(x; q^(1+theta) | q).

    Sum over k = 0..n of q^(k^2 (mu+nu)) (q^-n; q)_k x^k
    / ((q^(1+theta); q)_k (q; q)_k); the second argument is passed as the
    rational value q^(1+theta) itself.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    q = ctx.q
    q1theta = frac(q1theta)
    x = frac(x)
    musum = HalfInt(mu.twice + nu.twice)
    total = Fraction(0)
    num = Fraction(1)      # (q^-n; q)_k
    den_theta = Fraction(1)  # (q^(1+theta); q)_k
    den_q = Fraction(1)    # (q; q)_k
    xpow = Fraction(1)
    for k in range(n + 1):
        if den_theta == 0:
            raise ValueError(
                f"denominator factor (q^(1+theta); q)_k vanishes at k = {k}")
        total += ctx.pow_half(musum, k * k) * num * xpow / (den_theta * den_q)
        num *= 1 - q ** (-n) * q ** k
        den_theta *= 1 - q1theta * q ** k
        den_q *= 1 - q ** (k + 1)
        xpow *= x
    return total


def _termination_index(ctx: QContext, a: Fraction) -> int | None:
    """m >= 0 with a = q^-m, or None."""
    if a < 1:
        return None
    q = ctx.q
    v = a
    m = 0
    while v > 1:
        v *= q
        m += 1
    return m if v == 1 else None


def basic_hyp_terminating(ctx: QContext, upper: list, lower: list, z) -> Fraction:
    """Terminating basic hypergeometric series r_phi_s(upper; lower; q; z).

    Requires some upper parameter of the form q^-n; the sum then stops at
    k = n.  Each term carries the standard compensation factor
    ((-1)^k q^(k(k-1)/2))^(1+s-r).
    """
    upper = [frac(a) for a in upper]
    lower = [frac(b) for b in lower]
    z = frac(z)
    q = ctx.q
    indices = [m for m in (_termination_index(ctx, a) for a in upper)
               if m is not None]
    if not indices:
        raise ValueError("series does not terminate: no upper parameter q^-n")
    n = min(indices)
    power = 1 + len(lower) - len(upper)
    total = Fraction(0)
    num = [Fraction(1)] * len(upper)
    den = [Fraction(1)] * len(lower)
    den_q = Fraction(1)
    zpow = Fraction(1)
    for k in range(n + 1):
        if any(d == 0 for d in den):
            raise ValueError(f"lower-parameter Pochhammer vanishes at k = {k}")
        term = zpow / den_q
        for v in num:
            term *= v
        for v in den:
            term /= v
        sign = -1 if (k * power) % 2 else 1
        comp = ctx.q_pow(k * (k - 1) // 2 * power)
        total += sign * comp * term
        qk = q ** k
        num = [v * (1 - a * qk) for v, a in zip(num, upper)]
        den = [v * (1 - b * qk) for v, b in zip(den, lower)]
        den_q *= 1 - q ** (k + 1)
        zpow *= z
    return total


def _hahn_scale(ctx: QContext) -> Fraction:
    # (1 - q - w)/(1 - q) = 1 - omega0: the scalar the Hahn exponential
    # series attaches to each ladder power
    return 1 - ctx.omega0


def _series_weight(ctx: QContext, family: LadderFamily, half: HalfInt,
                   c: Fraction, k: int) -> Fraction:
    """k-th coefficient of the exponential operator series in the ladder op."""
    if family is LadderFamily.HAHN:
        c = c * _hahn_scale(ctx)
    return ctx.pow_half(half, k * k) * c ** k / q_factorial(ctx, k)


def matel_oracle(ctx: QContext, family: LadderFamily, p: MatElParams) -> Fraction:
    """Brute-force matrix element from the exact ladder coefficients.

    Applies the lowering series (index i, truncating at i = n) followed by
    the raising series (index j pinned to r - n + i); no closed form and no
    analytic operator realization is involved.
    """
    total = Fraction(0)
    for i in range(p.n + 1):
        j = p.r - p.n + i
        if j < 0:
            continue
        lower_path = Fraction(1)
        for t in range(i):
            lower_path *= lowering_coeff(ctx, family, p.n - t)
        raise_path = Fraction(1)
        for t in range(j):
            raise_path *= raising_coeff(ctx, family, p.n - i + t)
        total += (_series_weight(ctx, family, p.nu, p.beta, i) * lower_path
                  * _series_weight(ctx, family, p.mu, p.alpha, j) * raise_path)
    return total


def matel_closed(ctx: QContext, family: LadderFamily, p: MatElParams) -> Fraction:
    """Closed-form matrix element, exactly as the published branch formulas.

    Evaluates the r <= n branch or the n <= r branch; at n = r both branches
    are computed and must agree (the U-polynomial depends on mu+nu only).
    """
    if p.n == p.r:
        lo = _closed_lower(ctx, family, p)
        hi = _closed_upper(ctx, family, p)
        if lo != hi:
            raise AssertionError(
                f"diagonal branch mismatch at n = r = {p.n}: {lo} vs {hi}")
        return lo
    if p.r < p.n:
        return _closed_lower(ctx, family, p)
    return _closed_upper(ctx, family, p)


def _closed_lower(ctx: QContext, family: LadderFamily, p: MatElParams) -> Fraction:
    """Branch for r <= n."""
    q = ctx.q
    d = p.n - p.r
    arg_scale = p.alpha * p.beta * (q - 1)
    if family is LadderFamily.QGAUSSIAN:
        pref = p.beta ** d * ctx.pow_half(p.nu, d * d) * q_binomial(ctx, p.n, p.r)
        uarg = arg_scale * ctx.q_pow(1 + p.nu.twice * d)
    elif family is LadderFamily.QFACTORIAL:
        pref = (p.beta ** d * ctx.pow_half(p.nu, d * d)
                * ctx.q_pow((-d) * (p.n + p.r + 1) // 2)
                * q_binomial(ctx, p.n, p.r))
        uarg = arg_scale * ctx.q_pow(p.nu.twice * d)
    else:  # Hahn
        scale = _hahn_scale(ctx)
        pref = ((p.beta * scale) ** d * ctx.pow_half(p.nu, d * d)
                * q_binomial(ctx, p.n, p.r))
        uarg = arg_scale * (1 + ctx.omega0) ** 2 * ctx.q_pow(1 + p.nu.twice * d)
    return pref * u_polynomial(ctx, p.mu, p.nu, p.r, ctx.q_pow(1 + d), uarg)


def _closed_upper(ctx: QContext, family: LadderFamily, p: MatElParams) -> Fraction:
    """Branch for n <= r."""
    q = ctx.q
    d = p.r - p.n
    arg_scale = p.alpha * p.beta * (q - 1)
    if family is LadderFamily.QGAUSSIAN:
        pref = (p.alpha ** d * ctx.pow_half(p.mu, d * d)
                * ctx.q_pow((-d) * (p.n + p.r - 1) // 2) / q_factorial(ctx, d))
        uarg = arg_scale * ctx.q_pow(1 + p.mu.twice * d)
    elif family is LadderFamily.QFACTORIAL:
        pref = p.alpha ** d * ctx.pow_half(p.mu, d * d) / q_factorial(ctx, d)
        uarg = arg_scale * ctx.q_pow(p.mu.twice * d)
    else:  # Hahn
        scale = _hahn_scale(ctx)
        pref = ((p.alpha * scale) ** d * ctx.pow_half(p.mu, d * d)
                * ctx.q_pow((-d) * (p.n + p.r - 1) // 2) / q_factorial(ctx, d))
        uarg = arg_scale * (1 + ctx.omega0) ** 2 * ctx.q_pow(1 + p.mu.twice * d)
    return pref * u_polynomial(ctx, p.nu, p.mu, p.n, ctx.q_pow(1 + d), uarg)


@dataclass(frozen=True)
class FormCheck:
    """Result of comparing a printed series form with the U-polynomial."""

    name: str
    n: int
    x: Fraction
    q1theta: Fraction
    passed: bool
    lhs: Fraction
    rhs: Fraction


def special_form_checks(ctx: QContext, nmax: int) -> list[FormCheck]:
    """Verify the named q-hypergeometric forms of U for special (mu, nu).

    U^(0,0)   = 2phi1(q^-n, 0; q^(1+theta); q; x)
    U^(0,1/2) = 1phi1(q^-n; q^(1+theta); q; -x q^(1/2))
    U^(1/2,1/2) = 1phi2(q^-n; q^(1+theta), 0; q; q x)
    """
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    q = ctx.q
    h0, h1 = HalfInt(0), HalfInt(1)
    checks = []
    xs = [Fraction(1), Fraction(1, 3), Fraction(-1, 5)]
    q1thetas = [q, q * q, q ** 3]
    for n in range(nmax + 1):
        qmn = q ** (-n)
        for x in xs:
            for q1t in q1thetas:
                u = u_polynomial(ctx, h0, h0, n, q1t, x)
                h = basic_hyp_terminating(ctx, [qmn, 0], [q1t], x)
                checks.append(FormCheck("u00_vs_2phi1", n, x, q1t, u == h, u, h))
                u = u_polynomial(ctx, h0, h1, n, q1t, x)
                h = basic_hyp_terminating(ctx, [qmn], [q1t], -x * ctx.s)
                checks.append(FormCheck("u0h_vs_1phi1", n, x, q1t, u == h, u, h))
                u = u_polynomial(ctx, h1, h1, n, q1t, x)
                h = basic_hyp_terminating(ctx, [qmn], [q1t, 0], q * x)
                checks.append(FormCheck("uhh_vs_1phi2", n, x, q1t, u == h, u, h))
    return checks
