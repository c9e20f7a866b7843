r"""Generating Riemann surfaces and one-forms of T(n, m), with exact
integer-polynomial right-hand sides.

T(n, m) is generated by the curve y^e = rhs(u) together with the one-form
y du / D(u), in three cases (C_k is the monic Chebyshev-type polynomial
with C_k(p + 1/p) = p^k + p^-k):

    m odd:              y^(2n) = C_m(u) - 2
                               = (u - 2) prod_{j=1}^{(m-1)/2} (u - 2cos(2 pi j / m))^2
    m even, n odd:      y^(2n) = (u - 2)^n (C_m(u) + 2)
                               = (u - 2)^n prod_{j=1}^{m/2} (u - 2cos(pi (2j-1) / m))^2
    m and n both even:  y^n    = (u - 2)^(n/2) prod_{j=1}^{m/2} (u - 2cos(pi (2j-1) / m))

with D(u) = (u - 2) prod (u - 2cos(.)) in all cases.  The cosine products
collapse exactly: prod_{j=1}^{(m-1)/2} (u - 2cos(2 pi j/m)) is the integer
square root of (C_m - 2)/(u - 2) for odd m, and
prod_{j=1}^{m/2} (u - 2cos(pi (2j-1)/m)) = C_{m/2}(u) for even m, since
C_m + 2 = C_{m/2}^2.  The Chebyshev form is the stored representation; the
floating-point cosine product is kept only as a cross-check oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import IntPolynomial, chebyshev_c, poly_str
from .rowspan import CurveParams

U_MINUS_2 = IntPolynomial((-2, 1))

CASE_M_ODD = "m_odd"
CASE_M_EVEN_N_ODD = "m_even_n_odd"
CASE_BOTH_EVEN = "both_even"


@dataclass(frozen=True)
class GeneratorEquation:
    """y^y_exponent = rhs(u), with one-form y du / differential_denominator.

    ``rhs_factored`` is (a, Q, mult) with rhs = (u - 2)^a * Q^mult for the
    square-free monic factor Q.
    """

    case: str
    y_exponent: int
    rhs: IntPolynomial
    rhs_factored: tuple[int, IntPolynomial, int]
    differential_denominator: IntPolynomial

    def equation_text(self) -> str:
        return f"y^{self.y_exponent} = {poly_str(self.rhs)}"

    def differential_text(self) -> str:
        return f"y du / ({poly_str(self.differential_denominator)})"

    def factored_text(self) -> str:
        a, q, mult = self.rhs_factored
        lin = "" if a == 0 else f"(u - 2)^{a}" if a > 1 else "(u - 2)"
        body = f"({poly_str(q)})" + ("" if mult == 1 else f"^{mult}")
        return f"y^{self.y_exponent} = {lin}{body}" if lin else f"y^{self.y_exponent} = {body}"


def generator_equation(params: CurveParams) -> GeneratorEquation:
    """The exact generator equation for T(n, m); rhs is monic of degree m,
    n + m, or (n + m)/2 in the three cases."""
    n, m = params.n, params.m
    if m % 2:
        rhs = chebyshev_c(m) - IntPolynomial((2,))
        qpart = rhs.exact_div(U_MINUS_2).sqrt_exact()
        eq = GeneratorEquation(
            CASE_M_ODD, 2 * n, rhs, (1, qpart, 2), U_MINUS_2 * qpart)
    elif n % 2:
        half = chebyshev_c(m // 2)
        rhs = (U_MINUS_2 ** n) * half * half
        eq = GeneratorEquation(
            CASE_M_EVEN_N_ODD, 2 * n, rhs, (n, half, 2), U_MINUS_2 * half)
    else:
        half = chebyshev_c(m // 2)
        rhs = (U_MINUS_2 ** (n // 2)) * half
        eq = GeneratorEquation(
            CASE_BOTH_EVEN, n, rhs, (n // 2, half, 1), U_MINUS_2 * half)
    assert eq.rhs.is_monic()
    return eq


def _cosine_factors(case: str, m: int) -> list[float]:
    """Roots 2cos(.) of the square-free cosine product, as floats."""
    if case == CASE_M_ODD:
        return [2.0 * math.cos(2.0 * math.pi * j / m)
                for j in range(1, (m - 1) // 2 + 1)]
    return [2.0 * math.cos(math.pi * (2 * j - 1) / m)
            for j in range(1, m // 2 + 1)]


def _product_form_value(eq: GeneratorEquation, params: CurveParams, u: float) -> float:
    """Evaluate the literal product of cosine factors at u (empty product = 1)."""
    n, m = params.n, params.m
    prod = 1.0
    for root in _cosine_factors(eq.case, m):
        prod *= u - root
    if eq.case == CASE_M_ODD:
        return (u - 2.0) * prod * prod
    if eq.case == CASE_M_EVEN_N_ODD:
        return (u - 2.0) ** n * prod * prod
    return (u - 2.0) ** (n // 2) * prod


@dataclass(frozen=True)
class NumericCheck:
    ok: bool
    max_relative_deviation: float
    sample_points: int
    tolerance: float


def verify_equation_numeric(eq: GeneratorEquation, params: CurveParams,
                            tolerance=1e-9) -> NumericCheck:
    """Compare the exact rhs against the floating-point cosine product at
    2 deg + 1 sample points; true iff the max relative deviation is below
    the tolerance.

    The rhs is evaluated exactly (rational Horner at the binary sample
    point, rounded once at the end), so the deviation measures only the
    error of the floating-point product form.
    """
    tol = float(tolerance)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    deg = eq.rhs.degree()
    count = 2 * deg + 1
    worst = 0.0
    for i in range(count):
        u = -3.0 + 6.0 * i / (count - 1)
        exact = float(eq.rhs(Fraction(u)))
        approx = _product_form_value(eq, params, u)
        dev = abs(exact - approx) / max(1.0, abs(exact), abs(approx))
        worst = max(worst, dev)
    return NumericCheck(worst < tol, worst, count, tol)


def differential_description(eq: GeneratorEquation) -> dict:
    """Structured rendering of the one-form y du / D(u).

    Also asserts the exact divisibility D^2 | (u-2)^a rhs^b appropriate to
    the case: D^2 = (u-2) rhs for odd m, D^2 | (u-2) rhs for even m with n
    odd, and D^2 | (u-2)^2 rhs^2 when both are even.
    """
    d2 = eq.differential_denominator * eq.differential_denominator
    if eq.case == CASE_M_ODD:
        assert d2 == U_MINUS_2 * eq.rhs
    elif eq.case == CASE_M_EVEN_N_ODD:
        (U_MINUS_2 * eq.rhs).exact_div(d2)
    else:
        ((U_MINUS_2 ** 2) * eq.rhs * eq.rhs).exact_div(d2)
    return {
        "one_form": "y du / D(u)",
        "denominator_coeffs": list(eq.differential_denominator.coeffs),
        "text": eq.differential_text(),
    }
