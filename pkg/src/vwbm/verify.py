r"""Cross-module consistency suites over (n, m) grids.

Each check sweeps every valid pair up to a bound and returns a
:class:`CheckResult` carrying a named counterexample on failure.  These
suites are the oracles behind the ``verify`` CLI command and the
acceptance tests: closed forms are compared against independent
enumerations (row-span combinatorics against Riemann-Hurwitz counts,
divisibility criteria against containment certificates, degree formulas
against Galois-stabilizer scans, exact polynomials against floating-point
product forms).

Set VWBM_THREADS > 1 to fan the per-pair work out to a process pool.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import generators as gens
from . import invariants as inv
from .exact import chebyshev_c, IntPolynomial
from .rowspan import (CurveParams, klein_orbits, row_span, summand_dimension,
                      summands)
from .surface import (build_surface, commute_check,
                      cylinder_preservation_check, fixed_edges,
                      intertwine_check, lift_class_count, lift_sigma2,
                      lift_sigma4, surface_genus)

HECKE_SWEEP_CAP = 12  # Galois scans in Q(zeta_2nm) stay cheap below this


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    stats: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  [{self.detail}]" if (self.detail and not self.passed) else ""
        pairs = self.stats.get("pairs")
        counted = f" ({pairs} pairs)" if pairs is not None else ""
        return f"{status}  {self.name}{counted}{extra}"


def valid_pairs(nmax: int) -> list[tuple[int, int]]:
    return [(n, m) for n in range(2, nmax + 1) for m in range(2, nmax + 1)
            if n * m >= 6]


def _thread_cap() -> int:
    raw = os.environ.get("VWBM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_pairs(worker, pairs):
    cap = _thread_cap()
    if cap > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=cap) as pool:
            chunk = max(1, len(pairs) // (4 * cap))
            return list(pool.map(worker, pairs, chunksize=chunk))
    return [worker(p) for p in pairs]


def _collect(name: str, pairs, worker) -> CheckResult:
    for outcome in _map_pairs(worker, pairs):
        if outcome is not None:
            return CheckResult(name, False, outcome, {"pairs": len(pairs)})
    return CheckResult(name, True, stats={"pairs": len(pairs)})


# ---------------------------------------------------------------------------
# row span
# ---------------------------------------------------------------------------

def _rowspan_pair(pair) -> str | None:
    n, m = pair
    params = CurveParams(n, m)
    N = params.N
    for r in row_span(params):
        e = r.entries
        if e[2] != (-e[0]) % N or e[3] != (-e[1]) % N:
            return f"({n},{m}): entries of {e} are not negation-paired"
        if r.is_zero():
            continue
        nonzero = not r.has_zero_entry()
        t_two = sum(e) == 2 * N and sum((-v) % N for v in e) == 2 * N
        if nonzero != t_two:
            return f"({n},{m}): t(r)=2=t(-r) mismatch at {e}"
        if nonzero and (e[0] + e[2] != N or e[1] + e[3] != N):
            return f"({n},{m}): t1+t3 or t2+t4 differs from 1 at {e}"
    # stated members of the span: always (2m,2m,-2m,-2m), (2n,-2n,-2n,2n)
    # and (-n-m, n-m, n+m, -n+m); also the halved pair when n or m is odd
    members = [(2 * m, 2 * m, -2 * m, -2 * m), (2 * n, -2 * n, -2 * n, 2 * n),
               (-n - m, n - m, n + m, -n + m)]
    if n % 2 or m % 2:
        members += [(m, m, -m, -m), (n, -n, -n, n)]
    span_entries = {r.entries for r in row_span(params)}
    for vec in members:
        if tuple(v % N for v in vec) not in span_entries:
            return f"({n},{m}): {vec} missing from the row span"
    return None


def check_rowspan_identities(nmax: int) -> CheckResult:
    return _collect("row-span t identities", valid_pairs(nmax), _rowspan_pair)


def _klein_pair(pair) -> str | None:
    n, m = pair
    params = CurveParams(n, m)
    N = params.N
    nm = n * m
    selected = {s.vector for s in summands(params)}
    expected = 0
    for orbit in klein_orbits(params):
        rep = next(iter(orbit))
        dim = summand_dimension(rep)
        if any(summand_dimension(r) != dim for r in orbit):
            return f"({n},{m}): dimension not constant on an orbit"
        hits = len(selected & orbit)
        if len(orbit) == 4 and dim > 0:
            expected += 1
            if hits != 1:
                return f"({n},{m}): size-4 orbit selected {hits} times"
        elif hits:
            return f"({n},{m}): degenerate orbit selected"
        # nonzero sigma3-fixed vectors without zero entries must be all-nm
        for r in orbit:
            e = r.entries
            if 0 in e:
                continue
            if e[0] == e[2] and e[1] == e[3] and e != (nm, nm, nm, nm):
                return f"({n},{m}): unexpected sigma3-fixed vector {e}"
    if len(selected) != expected:
        return f"({n},{m}): {len(selected)} summands vs {expected} free orbits"
    all_nm = (nm % N, nm % N, nm % N, nm % N)
    span_entries = {r.entries for r in row_span(params)}
    if all_nm in span_entries and any(s.vector.entries == all_nm for s in summands(params)):
        return f"({n},{m}): Klein-fixed vector selected"
    return None


def check_klein_orbits(nmax: int) -> CheckResult:
    return _collect("Klein orbit selection", valid_pairs(nmax), _klein_pair)


# ---------------------------------------------------------------------------
# genus
# ---------------------------------------------------------------------------

def _genus_pair(pair) -> str | None:
    n, m = pair
    params = CurveParams(n, m)
    closed = inv.genus(params)
    count = len(summands(params))
    dim_sum = 0
    total_dim = 0
    for orbit in klein_orbits(params):
        rep = next(iter(orbit))
        dim = summand_dimension(rep)
        total_dim += dim * len(orbit)
        if len(orbit) == 4 and dim > 0:
            dim_sum += dim
    if dim_sum % 2:
        return f"({n},{m}): odd dimension sum {dim_sum}"
    orbit_genus = dim_sum // 2
    if not closed == count == orbit_genus:
        return (f"({n},{m}): genus closed={closed} summands={count} "
                f"orbit={orbit_genus}")
    cover_genus = surface_genus(build_surface(params))
    if total_dim != 2 * cover_genus:
        return (f"({n},{m}): dimension sum {total_dim} vs "
                f"2 * S-genus {2 * cover_genus}")
    return None


def check_genus_agreement(nmax: int) -> CheckResult:
    return _collect("genus triple agreement", valid_pairs(nmax), _genus_pair)


# ---------------------------------------------------------------------------
# trace fields
# ---------------------------------------------------------------------------

def _trace_pair(pair) -> str | None:
    n, m = pair
    params = CurveParams(n, m)
    closed = inv.trace_degrees(params)
    oracle = inv.trace_degrees_oracle(params)
    if closed != oracle:
        return f"({n},{m}): closed {closed} vs oracle {oracle}"
    deg_f, deg_e = closed
    if (n % 2 or m % 2) and deg_f != deg_e:
        return f"({n},{m}): E = F expected for odd parameter"
    g = params.gamma
    inadmissible = (n % 2 == 0 and m % 2 == 0
                    and (g == 2 or ((n // g) % 2 and (m // g) % 2)))
    if inadmissible != (deg_f == 2 * deg_e):
        return f"({n},{m}): degree-two extension test mismatch"
    if inv.admissible_triangle_group(params) == inadmissible:
        return f"({n},{m}): admissibility flag wrong"
    if max(n, m) <= HECKE_SWEEP_CAP:
        if inv.hecke_scalars(params).field_degree != deg_e:
            return f"({n},{m}): Hecke scalars do not generate E"
    return None


def check_trace_fields(nmax: int) -> CheckResult:
    return _collect("trace degrees formula vs oracle", valid_pairs(nmax),
                    _trace_pair)


def _primitivity_pair(pair) -> str | None:
    n, m = pair
    params = CurveParams(n, m)
    verdict = inv.algebraically_primitive(params)  # raises on disagreement
    if verdict.applicable == inv.is_arithmetic(params):
        return f"({n},{m}): applicability flag wrong"
    if verdict.applicable and verdict.primitive != (
            inv.trace_degrees(params)[1] == inv.genus(params)):
        return f"({n},{m}): primitivity verdict inconsistent"
    return None


def check_primitivity(nmax: int) -> CheckResult:
    return _collect("algebraic primitivity criterion vs degrees",
                    valid_pairs(nmax), _primitivity_pair)


# ---------------------------------------------------------------------------
# covers
# ---------------------------------------------------------------------------

def _covers_pair(pair) -> str | None:
    n, m = pair
    big = CurveParams(n, m)
    for np_ in range(2, n + 1):
        if n % np_:
            continue
        for mp in range(2, m + 1):
            if m % mp or np_ * mp < 6 or (np_, mp) == (n, m):
                continue
            small = CurveParams(np_, mp)
            criterion = inv.covers_criterion(big, small)
            oracle = inv.verify_cover(big, small).holds
            if criterion != oracle:
                return (f"({n},{m}) vs ({np_},{mp}): criterion={criterion} "
                        f"containment={oracle}")
    listed = inv.covers(big)
    if any(not inv.verify_cover(big, small).holds for small in listed):
        return f"({n},{m}): a listed cover fails its certificate"
    return None


def check_covers(nmax: int) -> CheckResult:
    return _collect("covering criterion vs containment oracle",
                    valid_pairs(nmax), _covers_pair)


# ---------------------------------------------------------------------------
# square-tiled lifts
# ---------------------------------------------------------------------------

def _lift_pair(pair) -> str | None:
    n, m = pair
    params = CurveParams(n, m)
    surface = build_surface(params)
    lift2 = lift_sigma2(surface)
    variants = [lift_sigma4(surface, 1)]
    if n % 2 == 0 and m % 2 == 0:
        variants.append(lift_sigma4(surface, 2))
    if not lift2.is_involution():
        return f"({n},{m}): sigma2 lift is not an involution"
    if not fixed_edges(surface, lift2):
        return f"({n},{m}): sigma2 lift has no fixed edge"
    horiz = cylinder_preservation_check(surface, lift2)
    if not horiz.ok:
        return f"({n},{m}): sigma2 {horiz.detail}"
    for lift4 in variants:
        tag = f"sigma4 variant {lift4.variant}"
        if not lift4.is_involution():
            return f"({n},{m}): {tag} is not an involution"
        if not fixed_edges(surface, lift4):
            return f"({n},{m}): {tag} has no fixed edge"
        if not commute_check(lift2, lift4).ok:
            return f"({n},{m}): {tag} does not commute with sigma2"
        rel = intertwine_check(surface, lift2, lift4)
        if not rel.ok:
            return f"({n},{m}): {tag} {rel.detail}"
        vert = cylinder_preservation_check(surface, lift4)
        if not vert.ok:
            return f"({n},{m}): {tag} {vert.detail}"
    want = 2 if (n % 2 == 0 and m % 2 == 0) else 1
    got = lift_class_count(surface).classes
    if got != want:
        return f"({n},{m}): {got} lift classes, expected {want}"
    return None


def check_lifts(nmax: int) -> CheckResult:
    return _collect("pillowcase symmetry lift suite", valid_pairs(nmax),
                    _lift_pair)


# ---------------------------------------------------------------------------
# generator equations
# ---------------------------------------------------------------------------

def _sign_changes(p: IntPolynomial, lo: float, hi: float, steps: int) -> int:
    changes = 0
    prev = 0.0
    first = True
    for i in range(steps + 1):
        u = lo + (hi - lo) * i / steps
        v = float(p(u))
        if v == 0.0:
            continue
        if not first and (v > 0) != (prev > 0):
            changes += 1
        prev, first = v, False
    return changes


def _generator_pair(pair) -> str | None:
    n, m = pair
    params = CurveParams(n, m)
    eq = gens.generator_equation(params)
    expected_deg = m if m % 2 else (n + m if n % 2 else (n + m) // 2)
    if eq.rhs.degree() != expected_deg:
        return f"({n},{m}): rhs degree {eq.rhs.degree()} != {expected_deg}"
    check = gens.verify_equation_numeric(eq, params, 1e-9)
    if not check.ok:
        return (f"({n},{m}): product form deviates by "
                f"{check.max_relative_deviation:.3e}")
    gens.differential_description(eq)  # asserts exact divisibility
    lin, q, mult = eq.rhs_factored
    if (gens.U_MINUS_2 ** lin) * (q ** mult) != eq.rhs:
        return f"({n},{m}): stored factorization does not multiply out"
    # all roots of the square-free cosine factor are real and in [-2, 2]
    if q.degree() > 0 and _sign_changes(q, -2.000001, 2.000001, 4096) != q.degree():
        return f"({n},{m}): cosine factor roots escape [-2, 2]"
    if m % 2 == 0:
        half = chebyshev_c(m // 2)
        if chebyshev_c(m) + IntPolynomial((2,)) != half * half:
            return f"m={m}: C_m + 2 is not C_(m/2)^2"
        if n % 2 == 0:
            other = (gens.U_MINUS_2 ** n) * (chebyshev_c(m) + IntPolynomial((2,)))
            if eq.rhs * eq.rhs != other:
                return f"({n},{m}): squared equation mismatch"
    else:
        body = (chebyshev_c(m) - IntPolynomial((2,))).exact_div(gens.U_MINUS_2)
        if body.sqrt_exact() ** 2 != body:
            return f"m={m}: (C_m - 2)/(u - 2) is not a perfect square"
    return None


def check_generators(nmax: int) -> CheckResult:
    return _collect("generator equations exact vs numeric",
                    valid_pairs(nmax), _generator_pair)


# ---------------------------------------------------------------------------
# spectrum laws and swap symmetry
# ---------------------------------------------------------------------------

def _spectrum_pair(pair) -> str | None:
    n, m = pair
    params = CurveParams(n, m)
    sums = summands(params)
    step = Fraction(params.gamma, n * m - n - m)
    for s in sums:
        if s.lyapunov <= 0 or s.lyapunov > 1:
            return f"({n},{m}): exponent {s.lyapunov} outside (0, 1]"
        if (s.lyapunov / step).denominator != 1:
            return f"({n},{m}): {s.lyapunov} is not a multiple of {step}"
        if s.kappa != 0 or not (0 < s.mu < 1) or not (0 < s.nu < 1):
            return f"({n},{m}): bad angle triple {s.angles}"
        if (s.mu * m).denominator != 1 or (s.nu * n).denominator != 1:
            return f"({n},{m}): angle denominators escape 1/m, 1/n lattices"
        defect = (1 - s.kappa - s.mu - s.nu) / (1 - Fraction(1, n) - Fraction(1, m))
        if defect != s.lyapunov:
            return f"({n},{m}): area-defect law fails at {s.angles}"
    top = sums[0]
    if top.lyapunov != 1 or top.angles != (0, Fraction(1, m), Fraction(1, n)):
        return f"({n},{m}): top exponent is not 1 at (0, 1/m, 1/n)"
    flagged = {(s.kappa, s.mu, s.nu) for s in sums if s.tiling}
    if len(flagged) != sum(1 for s in sums if s.tiling):
        return f"({n},{m}): repeated flagged triple"
    targets = {(Fraction(0), Fraction(1, c.m), Fraction(1, c.n))
               for c in inv.covers(params)}
    targets.add((Fraction(0), Fraction(1, m), Fraction(1, n)))
    if flagged != targets:
        return f"({n},{m}): flagged triples {flagged} != covers {targets}"
    return None


def check_spectrum_laws(nmax: int) -> CheckResult:
    return _collect("spectrum laws and tiling correspondence",
                    valid_pairs(nmax), _spectrum_pair)


def _swap_pair(pair) -> str | None:
    n, m = pair
    if n > m:
        return None  # each unordered pair once
    a, b = CurveParams(n, m), CurveParams(m, n)
    if inv.genus(a) != inv.genus(b):
        return f"({n},{m}): genus changes under swap"
    if sorted(inv.lyapunov_spectrum(a)) != sorted(inv.lyapunov_spectrum(b)):
        return f"({n},{m}): spectrum changes under swap"
    if inv.is_arithmetic(a) != inv.is_arithmetic(b):
        return f"({n},{m}): arithmeticity changes under swap"
    if inv.trace_degrees(a) != inv.trace_degrees(b):
        return f"({n},{m}): trace degrees change under swap"
    if inv.algebraically_primitive(a).primitive != inv.algebraically_primitive(b).primitive:
        return f"({n},{m}): primitivity changes under swap"
    if inv.classify(a).uniformizer.normalized() != inv.classify(b).uniformizer.normalized():
        return f"({n},{m}): uniformizer changes under swap"
    left = sorted(tuple(sorted((c.n, c.m))) for c in inv.covers(a))
    right = sorted(tuple(sorted((c.n, c.m))) for c in inv.covers(b))
    if left != right:
        return f"({n},{m}): covers change under swap"
    return None


def check_swap_symmetry(nmax: int) -> CheckResult:
    return _collect("invariants agree under (n, m) swap", valid_pairs(nmax),
                    _swap_pair)


# ---------------------------------------------------------------------------
# suite driver
# ---------------------------------------------------------------------------

LEVELS: dict[str, tuple] = {
    "rowspan": (check_rowspan_identities, check_klein_orbits),
    "genus": (check_genus_agreement,),
    "trace": (check_trace_fields, check_primitivity),
    "covers": (check_covers,),
    "lifts": (check_lifts,),
    "generators": (check_generators,),
    "spectrum": (check_spectrum_laws, check_swap_symmetry),
}


def run_suite(nmax: int, level: str = "all") -> list[CheckResult]:
    """Run the verification suites for all valid n, m <= nmax.

    ``level`` is "all" or one of rowspan, genus, trace, covers, lifts,
    generators, spectrum (a trailing "-only" is accepted).
    """
    if nmax < 3:
        raise ValueError("verification needs nmax >= 3")
    key = level.removesuffix("-only")
    if key == "all":
        checks = [fn for fns in LEVELS.values() for fn in fns]
    elif key in LEVELS:
        checks = list(LEVELS[key])
    else:
        raise ValueError(
            f"unknown level {level!r}; expected all or one of {sorted(LEVELS)}")
    return [fn(nmax) for fn in checks]
