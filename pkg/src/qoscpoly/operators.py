"""Difference/scaling/shift operators and the ladder triples of each family.

Every ladder pair is realized twice: as a banded action on family-basis
coefficient vectors (the printed lowering/raising coefficients) and as an
analytic operator acting exactly on polynomial coefficients.  The two
realizations agreeing on basis elements is one of the core checks.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .context import QContext
from .families import Basis, FamilyVector, qgaussian
from .poly import VAR_U, VAR_X, Poly
from .qarith import q_int, q_int_recip


class LadderFamily(enum.Enum):
    QGAUSSIAN = "qgaussian"
    QFACTORIAL = "qfactorial"
    HAHN = "hahn"


FAMILY_BASIS = {
    LadderFamily.QGAUSSIAN: Basis.QGAUSSIAN,
    LadderFamily.QFACTORIAL: Basis.QFACTORIAL,
    LadderFamily.HAHN: Basis.HAHN_FACTORIAL,
}


def jackson_derivative(ctx: QContext, p: Poly) -> Poly:
    """D_q p: monomial action x^n -> [n]_q x^(n-1)."""
    if p.var != VAR_X:
        raise ValueError("Jackson derivative acts on polynomials in x")
    return Poly((q_int(ctx, n) * p.coeff(n) for n in range(1, len(p.coeffs))))


def scale_x(ctx: QContext, p: Poly, e: int) -> Poly:
    """p(q^e x): coefficient c_n -> q^(e n) c_n."""
    if p.var != VAR_X:
        raise ValueError("scaling acts on polynomials in x")
    return Poly((ctx.q_pow(e * n) * c for n, c in enumerate(p.coeffs)))


def shift_x(ctx: QContext, p: Poly, h) -> Poly:
    """p(x + h), expanded exactly."""
    if p.var != VAR_X:
        raise ValueError("shifting acts on polynomials in x")
    return p.shift(h)


def lowering_coeff(ctx: QContext, family: LadderFamily, n: int) -> Fraction:
    """c with  a . basis_n = c * basis_{n-1} (0 on the ground element)."""
    if n == 0:
        return Fraction(0)
    if family is LadderFamily.QFACTORIAL:
        return ctx.q_pow(-n) * q_int(ctx, n)
    return q_int(ctx, n)


def raising_coeff(ctx: QContext, family: LadderFamily, n: int) -> Fraction:
    """c with  a^dag . basis_n = c * basis_{n+1}."""
    if family is LadderFamily.QFACTORIAL:
        return Fraction(1)
    return ctx.q_pow(-n)


def ladder_apply(ctx: QContext, family: LadderFamily, direction: str,
                 v: FamilyVector) -> FamilyVector:
    """Banded ladder action on a coefficient vector in the family basis."""
    if v.basis is not FAMILY_BASIS[family]:
        raise ValueError(f"vector basis {v.basis} does not match family {family}")
    n = len(v.coeffs)
    if direction == "lower":
        out = [lowering_coeff(ctx, family, k + 1) * v.coeff(k + 1)
               for k in range(max(n - 1, 1))]
    elif direction == "raise":
        out = [Fraction(0)] + [raising_coeff(ctx, family, k) * v.coeff(k)
                               for k in range(n)]
    else:
        raise ValueError(f"direction must be 'lower' or 'raise', got {direction!r}")
    return FamilyVector(v.basis, out or [0])


def ladder_apply_analytic(ctx: QContext, family: LadderFamily, direction: str,
                          p: Poly) -> Poly:
    """Analytic operator realization applied exactly on coefficients.

    q-Gaussian: a = D_q, a^dag : p -> (x-1) p(x/q).
    q-factorial (in u = q^x): a : g -> (g(qu) - g(u))/(q u),
                              a^dag : g -> (1-u)/(1-q) * g(u/q).
    Hahn: a = D_{q,w}, a^dag : p -> x * p((x-w)/q).
    """
    from .hahn import hahn_derivative_poly  # local import avoids a cycle

    q = ctx.q
    if family is LadderFamily.QFACTORIAL:
        if p.var != VAR_U:
            raise ValueError("q-factorial operators act on polynomials in u")
        if direction == "lower":
            diff = p.scale_arg(q) - p
            # g(qu) - g(u) always has zero constant term
            if diff.coeff(0) != 0:
                raise AssertionError("lowering numerator not divisible by u")
            return Poly(diff.coeffs[1:], VAR_U) / q
        if direction == "raise":
            return (Poly([1, -1], VAR_U) / (1 - q)) * p.scale_arg(1 / q)
        raise ValueError(f"bad direction {direction!r}")
    if p.var != VAR_X:
        raise ValueError("operators of this family act on polynomials in x")
    if family is LadderFamily.QGAUSSIAN:
        if direction == "lower":
            return jackson_derivative(ctx, p)
        if direction == "raise":
            return Poly([-1, 1]) * scale_x(ctx, p, -1)
    if family is LadderFamily.HAHN:
        if direction == "lower":
            return hahn_derivative_poly(ctx, p)
        if direction == "raise":
            return Poly([0, 1]) * p.compose_affine(1 / q, -ctx.omega / q)
    raise ValueError(f"bad family/direction {family!r}/{direction!r}")


@dataclass(frozen=True)
class RelationCheck:
    """One verified eigen-relation at one basis index."""

    relation: str
    n: int
    passed: bool
    lhs: Fraction
    rhs: Fraction


def _basis_vector(family: LadderFamily, n: int) -> FamilyVector:
    coeffs = [0] * n + [1]
    return FamilyVector(FAMILY_BASIS[family], coeffs)


def algebra_relations_check(ctx: QContext, family: LadderFamily,
                            nmax: int) -> list[RelationCheck]:
    """Verify the oscillator-algebra eigen-relations on basis indices <= nmax.

    For the q-Gaussian and Hahn families:
        a a+ = q^-n [n+1],  a+ a = q^(1-n) [n],
        [a, a+] = q^-n,     a a+ - q^-1 a+ a = 1.
    For the q-factorial family:
        a a+ = q^(-n-1) [n+1],  a+ a = q^-n [n],
        [a, a+] = q^(-n-1),     a a+ - q^-1 a+ a = q^-1.
    Plus the number-operator relations [N, a] = -a and [N, a+] = a+ for all.
    """
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    q = ctx.q
    out = []
    for n in range(nmax + 1):
        low = lowering_coeff(ctx, family, n)
        hi = raising_coeff(ctx, family, n)
        # products of ladder coefficients on basis index n
        aad = raising_coeff(ctx, family, n) * lowering_coeff(ctx, family, n + 1)
        ada = (lowering_coeff(ctx, family, n)
               * (raising_coeff(ctx, family, n - 1) if n > 0 else Fraction(0)))
        if family is LadderFamily.QFACTORIAL:
            expected = [
                ("a.adag eigenvalue", aad, ctx.q_pow(-n - 1) * q_int(ctx, n + 1)),
                ("adag.a eigenvalue", ada, ctx.q_pow(-n) * q_int(ctx, n)),
                ("commutator", aad - ada, ctx.q_pow(-n - 1)),
                ("q-commutator", aad - ada / q, 1 / q),
            ]
        else:
            expected = [
                ("a.adag eigenvalue", aad, ctx.q_pow(-n) * q_int(ctx, n + 1)),
                ("adag.a eigenvalue", ada, ctx.q_pow(1 - n) * q_int(ctx, n)),
                ("commutator", aad - ada, ctx.q_pow(-n)),
                ("q-commutator", aad - ada / q, Fraction(1)),
            ]
        # [N, a] basis_n = -(a basis_n) and [N, a+] basis_n = a+ basis_n:
        # a maps n -> n-1 so N picks up (n-1) - n = -1 times the coefficient.
        expected.append(("number-lowering", (n - 1) * low - n * low, -low))
        expected.append(("number-raising", (n + 1) * hi - n * hi, hi))
        for name, lhs, rhs in expected:
            out.append(RelationCheck(name, n, lhs == rhs, lhs, rhs))
    return out


def difference_equation_residual(ctx: QContext, n: int) -> Poly:
    """Residual of ((x-1) q^{-x d/dx} D_q - [n]_{1/q}) applied to phi_n.

    The zero polynomial for every n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    phi = qgaussian(ctx, n)
    lhs = Poly([-1, 1]) * scale_x(ctx, jackson_derivative(ctx, phi), -1)
    eig = q_int_recip(ctx, n) if n > 0 else Fraction(0)
    return lhs - eig * phi
