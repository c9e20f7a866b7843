r"""Curve-level invariants of T(n, m).

Everything here is exact: genus and uniformizer from closed forms, the
Lyapunov spectrum from the summand data, covering relations both from the
divisibility criterion and from a row-span containment certificate, and
trace-field degrees both from closed forms and from a Galois-stabilizer
computation in Q(zeta_2l).

Trace fields.  With zeta_k = exp(2 pi i / k), l = lcm(n, m):

    F = Q[zeta_2n + 1/zeta_2n, zeta_2m + 1/zeta_2m]            (trace field)
    E = Q[zeta_n + 1/zeta_n, zeta_m + 1/zeta_m,
          (zeta_2n + 1/zeta_2n)(zeta_2m + 1/zeta_2m)]  (invariant trace field)

Both are subfields of Q(zeta_2l), so their degrees are phi(2l) divided by
the size of the pointwise Galois stabilizer of the generators.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import CyclotomicElement, euler_phi, subfield_degree
from .generators import GeneratorEquation, generator_equation
from .rowspan import CurveParams, Summand, _matrix_rows, _span_entries, summands

ARITHMETIC_PAIRS = frozenset(
    {(2, 3), (2, 4), (2, 6), (3, 3), (4, 4), (6, 6)})


# ---------------------------------------------------------------------------
# genus, arithmeticity, uniformizing group
# ---------------------------------------------------------------------------

def genus(params: CurveParams) -> int:
    """Genus of T(n, m), by the three-case closed form in (n-1)(m-1) and
    gamma = gcd(n, m); always equals the number of summands."""
    n, m, g = params.n, params.m, params.gamma
    a = (n - 1) * (m - 1)
    if n % 2 or m % 2:
        num, den = a + 1 - g, 2
    elif (n // g) % 2 and (m // g) % 2:
        num, den = a + 3 - 2 * g, 4
    else:
        num, den = a + 3 - g, 4
    assert num % den == 0, (n, m)
    return num // den


def is_arithmetic(params: CurveParams) -> bool:
    return tuple(sorted((params.n, params.m))) in ARITHMETIC_PAIRS


@dataclass(frozen=True)
class Uniformizer:
    """Label for the uniformizing Fuchsian group of T(n, m).

    ``signature`` entries are integers or None for a cusp; ``index_two`` is
    set when the group is the index-two subgroup of the named triangle
    group rather than the triangle group itself.
    """

    signature: tuple[int | None, int | None, int | None]
    index_two: bool = False

    def label(self) -> str:
        inner = ",".join("oo" if v is None else str(v) for v in self.signature)
        base = f"Delta({inner})"
        return f"IndexTwoSubgroup({base})" if self.index_two else base

    def normalized(self) -> tuple:
        """Signature up to reordering, for comparisons under (n, m) swap."""
        key = tuple(sorted((v if v is not None else 0) for v in self.signature))
        return (self.index_two, key)


@dataclass(frozen=True)
class Classification:
    arithmetic: bool
    uniformizer: Uniformizer
    zero_count: int
    zeros_equal_order: bool


def classify(params: CurveParams) -> Classification:
    """Arithmeticity, uniformizing group, and zero data of the generator.

    The generating one-form has gamma zeros of equal order, except when
    n = m is even, where it has gamma / 2.
    """
    n, m, g = params.n, params.m, params.gamma
    if n != m and (n % 2 or m % 2):
        uni = Uniformizer((n, m, None))
    elif n != m:
        uni = Uniformizer((n, m, None), index_two=True)
    elif n % 2:
        uni = Uniformizer((2, n, None))
    else:
        uni = Uniformizer((n // 2, None, None))
    zeros = g // 2 if (n == m and n % 2 == 0) else g
    return Classification(is_arithmetic(params), uni, zeros, True)


# ---------------------------------------------------------------------------
# spectrum and tiling flags
# ---------------------------------------------------------------------------

def lyapunov_spectrum(params: CurveParams) -> tuple[Fraction, ...]:
    """The nonnegative Lyapunov spectrum, one exponent per summand, in the
    canonical (descending) summand order.  All entries lie in (0, 1] and are
    multiples of gamma / (nm - n - m)."""
    return tuple(s.lyapunov for s in summands(params))


def tiling_flags(params: CurveParams) -> tuple[bool, ...]:
    """Per-summand flag: are mu and nu both unit fractions (1/m', 1/n')?

    Flagged triangles tile the hyperbolic plane, and their (n', m') are
    exactly the curves covered by T(n, m), together with (n, m) itself.
    """
    return tuple(s.tiling for s in summands(params))


# ---------------------------------------------------------------------------
# covering relations
# ---------------------------------------------------------------------------

def _divisors(k: int) -> list[int]:
    return [d for d in range(1, k + 1) if k % d == 0]


def covers_criterion(big: CurveParams, small: CurveParams) -> bool:
    """Divisibility test: n' | n, m' | m, and when n and m are both even
    also n/n' + m/m' even.  Excludes the trivial pair (n, m) itself."""
    n, m = big.n, big.m
    np_, mp = small.n, small.m
    if (np_, mp) == (n, m):
        return False
    if n % np_ or m % mp:
        return False
    if n % 2 == 0 and m % 2 == 0 and (n // np_ + m // mp) % 2:
        return False
    return True


def covers(params: CurveParams) -> tuple[CurveParams, ...]:
    """All T(n', m') covered by every point of T(n, m), sorted by (n', m').

    Each returned pair also passes the row-span containment certificate of
    :func:`verify_cover`.
    """
    out = []
    for np_ in _divisors(params.n):
        for mp in _divisors(params.m):
            if np_ <= 1 or mp <= 1 or np_ * mp < 6:
                continue
            small = CurveParams(np_, mp)
            if covers_criterion(params, small):
                out.append(small)
    return tuple(sorted(out, key=lambda p: (p.n, p.m)))


@dataclass(frozen=True)
class CoverCertificate:
    """Containment certificate: k times the row span of S(n', m') lands in
    the row span of S(n, m), where k = nm / (n'm')."""

    big: CurveParams
    small: CurveParams
    scale: int
    generator_images: tuple[tuple[int, int, int, int], ...]
    holds: bool


def verify_cover(big: CurveParams, small: CurveParams) -> CoverCertificate:
    """Check the row-span containment that realizes the covering S(n, m) ->
    S(n', m'); rejects pairs whose areas do not divide."""
    nm_big = big.n * big.m
    nm_small = small.n * small.m
    if nm_big % nm_small:
        raise ValueError(f"{nm_small} does not divide {nm_big}")
    k = nm_big // nm_small
    span_big = set(_span_entries(big.n, big.m))
    N = big.N
    images = tuple(
        tuple((k * v) % N for v in row)
        for row in _matrix_rows(small.n, small.m))
    holds = all(img in span_big for img in images)
    return CoverCertificate(big, small, k, images, holds)


# ---------------------------------------------------------------------------
# trace fields
# ---------------------------------------------------------------------------

def trace_degrees(params: CurveParams) -> tuple[int, int]:
    """(deg F, deg E) over Q, by the closed forms.

    deg F = phi(2l)/4 if gamma = 1, else phi(2l)/2.  E = F when n or m is
    odd; for n, m both even deg E = phi(2l)/4 unless gamma > 2 with one of
    n/gamma, m/gamma even, in which case phi(2l)/2.
    """
    n, m, g = params.n, params.m, params.gamma
    phi = euler_phi(2 * params.l)
    deg_f = phi // 4 if g == 1 else phi // 2
    assert (phi % 4 == 0) if g == 1 else (phi % 2 == 0)
    if n % 2 or m % 2:
        deg_e = deg_f
    elif g > 2 and ((n // g) % 2 == 0 or (m // g) % 2 == 0):
        deg_e = phi // 2
    else:
        assert phi % 4 == 0
        deg_e = phi // 4
    return deg_f, deg_e


def trace_degrees_oracle(params: CurveParams) -> tuple[int, int]:
    """(deg F, deg E) by exact Galois stabilizers inside Q(zeta_2l).

    zeta_2n = zeta_2l^(l/n), so the generators become explicit root sums;
    the degree is phi(2l) over the number of units fixing all of them.
    """
    n, m, l = params.n, params.m, params.l
    K = 2 * l
    a, b = l // n, l // m
    gens_f = [(a, -a), (b, -b)]
    gens_e = [
        (2 * a, -2 * a),
        (2 * b, -2 * b),
        (a + b, a - b, -a + b, -a - b),
    ]
    return subfield_degree(K, gens_f), subfield_degree(K, gens_e)


def admissible_triangle_group(params: CurveParams) -> bool:
    """False exactly when deg F = 2 deg E, i.e. when n, m are even with
    gamma = 2 or n/gamma, m/gamma both odd; no Teichmuller curve is then
    uniformized by the full (n, m, oo) triangle group."""
    deg_f, deg_e = trace_degrees(params)
    return deg_f != 2 * deg_e


@dataclass(frozen=True)
class HeckeScalars:
    """The three deck-transformation scalars acting on the generating form,
    as exact elements of Q(zeta_N), N = 2nm, and the degree of the field
    they generate (always deg E)."""

    scalars: tuple[CyclotomicElement, CyclotomicElement, CyclotomicElement]
    field_degree: int


def hecke_scalars(params: CurveParams) -> HeckeScalars:
    """Scalars zeta^(p r1 + q r2) + zeta^-(p r1 + q r2) + zeta^(p r2 + q r1)
    + zeta^-(p r2 + q r1) for (p, q) in {(1,1), (1,-1), (1,0)}, with
    r1 = nm - n - m and r2 = nm + n - m; they generate the invariant trace
    field."""
    n, m = params.n, params.m
    N = params.N
    nm = n * m
    r1, r2 = nm - n - m, nm + n - m
    exps = []
    for p, q in ((1, 1), (1, -1), (1, 0)):
        u, v = p * r1 + q * r2, p * r2 + q * r1
        exps.append((u, -u, v, -v))
    scalars = tuple(CyclotomicElement.from_root_powers(N, e) for e in exps)
    return HeckeScalars(scalars, subfield_degree(N, exps))


# ---------------------------------------------------------------------------
# algebraic primitivity
# ---------------------------------------------------------------------------

def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    p = 2
    while p * p <= k:
        if k % p == 0:
            return False
        p += 1 if p == 2 else 2
    return True


def _ap_criterion(n: int, m: int) -> bool:
    """One of n, m equals 2 and the other is a prime, twice a prime, or a
    power of two."""
    if 2 not in (n, m):
        return False
    other = m if n == 2 else n
    if _is_prime(other):
        return True
    if other % 2 == 0 and _is_prime(other // 2):
        return True
    return other >= 2 and other & (other - 1) == 0


@dataclass(frozen=True)
class PrimitivityVerdict:
    """Algebraic primitivity; not applicable on arithmetic curves.

    When applicable, the number-theoretic criterion and the degree test
    deg E = genus agree by construction (a mismatch raises).
    """

    applicable: bool
    primitive: bool
    by_criterion: bool | None
    by_trace_degree: bool | None


def algebraically_primitive(params: CurveParams) -> PrimitivityVerdict:
    if is_arithmetic(params):
        return PrimitivityVerdict(False, False, None, None)
    crit = _ap_criterion(params.n, params.m)
    match = trace_degrees(params)[1] == genus(params)
    if crit != match:
        raise AssertionError(
            f"primitivity criterion and degree test disagree at {params}")
    return PrimitivityVerdict(True, crit, crit, match)


# ---------------------------------------------------------------------------
# aggregate report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CurveReport:
    params: CurveParams
    genus: int
    spectrum: tuple[Fraction, ...]
    summand_list: tuple[Summand, ...]
    arithmetic: bool
    uniformizer: Uniformizer
    zeros: tuple[int, bool]
    covers: tuple[CurveParams, ...]
    trace_degree_F: int
    trace_degree_E: int
    admissible_triangle_group: bool
    algebraically_primitive: bool
    primitivity: PrimitivityVerdict
    hecke_field_degree: int
    generator: GeneratorEquation
    notes: tuple[str, ...]


def curve_report(params: CurveParams) -> CurveReport:
    """Compute every invariant of T(n, m) and bundle it into one report."""
    cls = classify(params)
    sums = summands(params)
    deg_f, deg_e = trace_degrees(params)
    verdict = algebraically_primitive(params)
    hecke = hecke_scalars(params)
    notes = [f"T({params.n},{params.m}) = T({params.m},{params.n})"]
    if cls.arithmetic:
        notes.append("arithmetic: generated by a square-tiled surface")
    if 2 in (params.n, params.m):
        k = params.m if params.n == 2 else params.n
        notes.append(f"Veech curve of the regular {k}-gon")
    if 3 in (params.n, params.m):
        k = params.m if params.n == 3 else params.n
        notes.append(
            f"Ward curve from billiards in the triangle with angles "
            f"pi/{2 * k}, pi/{k}, {2 * k - 3}pi/{2 * k}")
    return CurveReport(
        params=params,
        genus=genus(params),
        spectrum=tuple(s.lyapunov for s in sums),
        summand_list=sums,
        arithmetic=cls.arithmetic,
        uniformizer=cls.uniformizer,
        zeros=(cls.zero_count, cls.zeros_equal_order),
        covers=covers(params),
        trace_degree_F=deg_f,
        trace_degree_E=deg_e,
        admissible_triangle_group=admissible_triangle_group(params),
        algebraically_primitive=verdict.primitive,
        primitivity=verdict,
        hecke_field_degree=hecke.field_degree,
        generator=generator_equation(params),
        notes=tuple(notes),
    )
