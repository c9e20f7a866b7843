r"""Combinatorial model of the square-tiled surface S(n, m).

Squares are labelled by elements of the column span (the deck group), the
subgroup of (Z/NZ)^2 generated by the four columns of the defining matrix,
with one white and one black square per label.  The deck transformation T_j
adds column j to the label and preserves color.

Edge conventions.  Every edge borders one white and one black square and is
tagged by the pair of corner points it joins (12, 23, 34 or 14).  The tag
table for the white square labelled c, with columns col_1 .. col_4, is

    34 edge (left):    partner (c)_b
    12 edge (right):   partner (c + col_1 + col_4)_b
    14 edge (bottom):  partner (c + col_4)_b
    23 edge (top):     partner (c - col_3)_b

so same-label white/black squares share their 34 edge.  A horizontal
cylinder is the set of squares whose labels agree modulo <col_1 + col_4>
(either color); a vertical cylinder pairs the whites of a class modulo
<col_1 + col_2> with the blacks offset by col_4.  These conventions are the
unique ones under which the explicit symmetry lifts below fix the edges
they are normalized to fix, and they are validated wholesale by the
consistency suite rather than postulated square by square.

The pillowcase symmetries sigma_2 (sending corner 1 to corner 2) and
sigma_4 (corner 1 to corner 4) admit the color-swapping lifts

    sigma2~: (c1, c2)_w/b -> (c2, c1)_b/w
    sigma4~ (variant 1):
        (c1, c2)_w -> (-c2 + nm - n + m, -c1 + nm + n + m)_b
        (c1, c2)_b -> (-c2 + nm + n + m, -c1 + nm - n + m)_w
    sigma4~ (variant 2, both n and m even):
        (c1, c2)_w -> (-c2 + nm - n - m, -c1 + nm + n - m)_b
        (c1, c2)_b -> (-c2 + nm + n - m, -c1 + nm - n - m)_w

Both variants are involutions commuting with sigma2~; when n or m is odd
they are conjugate under the deck group, when both are even they represent
the two distinct conjugacy classes of fixed-point lifts.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, NamedTuple

from .rowspan import CurveParams, _matrix_rows

WHITE = "w"
BLACK = "b"

# Edge tags carried by a white square, keyed by side.
EDGE_TAGS = ("12", "23", "34", "14")

# Downstairs, sigma2 preserves the set of 12 and 34 edges while sigma4
# preserves the 14 and 23 edges; fixed points of lifts sit on those edges.
FIXABLE_TAGS = {"sigma2": ("34", "12"), "sigma4": ("14", "23")}

Pair = tuple[int, int]


class Square(NamedTuple):
    label: Pair
    color: str


@dataclass(frozen=True)
class ColumnSpan:
    """The deck group: subgroup of (Z/NZ)^2 spanned by the matrix columns."""

    modulus: int
    columns: tuple[Pair, Pair, Pair, Pair]
    elements: tuple[Pair, ...]

    def __contains__(self, pair: Pair) -> bool:
        return (pair[0] % self.modulus, pair[1] % self.modulus) in self._index

    @property
    def _index(self) -> frozenset:
        return self._index_cache

    def __post_init__(self):
        object.__setattr__(self, "_index_cache", frozenset(self.elements))

    def order_of(self, pair: Pair) -> int:
        """Order of an element of (Z/NZ)^2 (componentwise lcm of orders)."""
        N = self.modulus
        oa = N // gcd(pair[0] % N, N) if pair[0] % N else 1
        ob = N // gcd(pair[1] % N, N) if pair[1] % N else 1
        return oa * ob // gcd(oa, ob)


def _close_under_addition(modulus: int, gens: list[Pair]) -> tuple[Pair, ...]:
    seen = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                cand = ((e[0] + g[0]) % modulus, (e[1] + g[1]) % modulus)
                if cand not in seen:
                    seen.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return tuple(sorted(seen))


@dataclass(frozen=True)
class CombSurface:
    """S(n, m) as colored squares over the column span, with deck action."""

    params: CurveParams
    span: ColumnSpan
    squares: tuple[Square, ...]

    # -- label arithmetic ---------------------------------------------------

    def add(self, a: Pair, b: Pair) -> Pair:
        N = self.span.modulus
        return ((a[0] + b[0]) % N, (a[1] + b[1]) % N)

    def sub(self, a: Pair, b: Pair) -> Pair:
        N = self.span.modulus
        return ((a[0] - b[0]) % N, (a[1] - b[1]) % N)

    def neg(self, a: Pair) -> Pair:
        N = self.span.modulus
        return ((-a[0]) % N, (-a[1]) % N)

    # -- deck action ----------------------------------------------------------

    def translation(self, shift: Pair) -> Callable[[Square], Square]:
        """The deck transformation adding ``shift`` to labels (color kept)."""
        def move(sq: Square) -> Square:
            return Square(self.add(sq.label, shift), sq.color)
        return move

    def deck(self, j: int) -> Callable[[Square], Square]:
        """T_j for j in 1..4, translation by column j."""
        if j not in (1, 2, 3, 4):
            raise ValueError("deck transformations are indexed 1..4")
        return self.translation(self.span.columns[j - 1])

    # -- edges ------------------------------------------------------------------

    def neighbor(self, sq: Square, tag: str) -> Square:
        """The square across the given edge of ``sq``."""
        if tag not in EDGE_TAGS:
            raise ValueError(f"unknown edge tag {tag!r}")
        c1, c2, c3, c4 = self.span.columns
        offsets = {
            "34": (0, 0),
            "12": self.add(c1, c4),
            "14": c4,
            "23": self.neg(c3),
        }
        off = offsets[tag]
        if sq.color == WHITE:
            return Square(self.add(sq.label, off), BLACK)
        return Square(self.sub(sq.label, off), WHITE)

    def color_flip(self, sq: Square) -> Square:
        return Square(sq.label, BLACK if sq.color == WHITE else WHITE)


def build_surface(params: CurveParams) -> CombSurface:
    """Enumerate the column span and assemble the colored squares."""
    N = params.N
    rows = _matrix_rows(params.n, params.m)
    columns = tuple((rows[0][j] % N, rows[1][j] % N) for j in range(4))
    elements = _close_under_addition(N, list(columns))
    span = ColumnSpan(N, columns, elements)
    squares = tuple(
        Square(label, color) for label in elements for color in (WHITE, BLACK))
    return CombSurface(params, span, squares)


@dataclass(eq=False)
class SymmetryLift:
    """A lift of a pillowcase symmetry, as a total map on squares."""

    surface: CombSurface
    kind: str                 # "sigma2" | "sigma4"
    variant: int | None
    mapping: dict[Square, Square]

    def __call__(self, sq: Square) -> Square:
        return self.mapping[sq]

    def is_involution(self) -> bool:
        return all(self.mapping[img] == sq for sq, img in self.mapping.items())

    def composed_with_translation(self, shift: Pair) -> "SymmetryLift":
        """T_shift composed after this lift (another lift of the same symmetry)."""
        move = self.surface.translation(shift)
        return SymmetryLift(
            self.surface, self.kind, None,
            {sq: move(img) for sq, img in self.mapping.items()})


def lift_sigma2(surface: CombSurface) -> SymmetryLift:
    """The lift swapping label coordinates and colors.

    It fixes the 34 edge of the white square labelled (0, 0).
    """
    mapping = {}
    for sq in surface.squares:
        c1, c2 = sq.label
        mapping[sq] = Square((c2, c1), BLACK if sq.color == WHITE else WHITE)
    return SymmetryLift(surface, "sigma2", None, mapping)


def lift_sigma4(surface: CombSurface, variant: int = 1) -> SymmetryLift:
    """An explicit fixed-point lift of sigma_4; see the module docstring.

    Variant 2 exists as a separate conjugacy class only when n and m are
    both even and is rejected otherwise.
    """
    params = surface.params
    n, m = params.n, params.m
    nm = n * m
    if variant == 1:
        w_shift = (nm - n + m, nm + n + m)
        b_shift = (nm + n + m, nm - n + m)
    elif variant == 2:
        if n % 2 or m % 2:
            raise ValueError(
                "variant 2 is a distinct lift only when n and m are both even")
        w_shift = (nm - n - m, nm + n - m)
        b_shift = (nm + n - m, nm - n - m)
    else:
        raise ValueError("variant must be 1 or 2")
    mapping = {}
    for sq in surface.squares:
        c1, c2 = sq.label
        shift = w_shift if sq.color == WHITE else b_shift
        label = surface.add((-c2, -c1), shift)
        mapping[sq] = Square(label, BLACK if sq.color == WHITE else WHITE)
    return SymmetryLift(surface, "sigma4", variant, mapping)


def fixed_edges(surface: CombSurface, lift: SymmetryLift) -> tuple[tuple[Square, str], ...]:
    """All edges fixed by the lift, reported from their white side.

    A color-swapping involution fixes the edge (sq, tag) exactly when it
    maps sq to the neighbor across that edge; sigma2-type lifts can only
    fix 12 or 34 edges, sigma4-type only 14 or 23 edges.
    """
    found = []
    tags = FIXABLE_TAGS[lift.kind]
    for sq in surface.squares:
        if sq.color != WHITE:
            continue
        for tag in tags:
            if lift(sq) == surface.neighbor(sq, tag):
                found.append((sq, tag))
    return tuple(found)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an exhaustive check, with a witness on failure."""

    ok: bool
    witness: tuple | None = None
    detail: str = ""


def intertwine_check(surface: CombSurface,
                     lift2: SymmetryLift,
                     lift4: SymmetryLift) -> CheckReport:
    """Conjugation of the deck group by the lifts, checked on every square.

    Specific relations: s2 T1 s2 = T2, s2 T3 s2 = T4, s4 T1 s4 = T4,
    s4 T2 s4 = T3.  General form, for every deck element (c1, c2):
    s2 (c1, c2) s2 = (c2, c1) and s4 (c1, c2) s4 = (-c2, -c1).
    """
    pairs = [(lift2, 1, 2), (lift2, 3, 4), (lift4, 1, 4), (lift4, 2, 3)]
    for lift, a, b in pairs:
        ta, tb = surface.deck(a), surface.deck(b)
        for sq in surface.squares:
            if lift(ta(lift(sq))) != tb(sq):
                return CheckReport(
                    False, (sq,),
                    f"{lift.kind} T{a} {lift.kind} != T{b} at {sq}")
    for c in surface.span.elements:
        tc = surface.translation(c)
        swap = surface.translation((c[1], c[0]))
        nswap = surface.translation(surface.neg((c[1], c[0])))
        for sq in surface.squares:
            if lift2(tc(lift2(sq))) != swap(sq):
                return CheckReport(False, (sq, c), "sigma2 conjugation failed")
            if lift4(tc(lift4(sq))) != nswap(sq):
                return CheckReport(False, (sq, c), "sigma4 conjugation failed")
    return CheckReport(True)


def commute_check(lift_a: SymmetryLift, lift_b: SymmetryLift) -> CheckReport:
    for sq in lift_a.surface.squares:
        if lift_a(lift_b(sq)) != lift_b(lift_a(sq)):
            return CheckReport(False, (sq,), f"lifts do not commute at {sq}")
    return CheckReport(True)


def _cyclic_subgroup(surface: CombSurface, gen: Pair) -> frozenset:
    N = surface.span.modulus
    out = set()
    cur = (0, 0)
    while True:
        out.add(cur)
        cur = ((cur[0] + gen[0]) % N, (cur[1] + gen[1]) % N)
        if cur == (0, 0):
            return frozenset(out)


def cylinder_preservation_check(surface: CombSurface, lift: SymmetryLift) -> CheckReport:
    """Does the lift map every horizontal (sigma2) / vertical (sigma4)
    cylinder to itself?

    sigma2: the image of s and the color flip of s must differ by a power
    of T1 T4.  sigma4: vertical neighbors pair (c)_w with (c + col_4)_b, so
    the image of a white s must differ from its color flip by col_4 plus a
    power of T1 T2, and the image of a black s by col_3 plus a power of
    T1 T2.  Returns a counterexample square on failure.
    """
    c1, c2, c3, c4 = surface.span.columns
    if lift.kind == "sigma2":
        sub = _cyclic_subgroup(surface, surface.add(c1, c4))
        offsets = {WHITE: (0, 0), BLACK: (0, 0)}
    else:
        sub = _cyclic_subgroup(surface, surface.add(c1, c2))
        offsets = {WHITE: c4, BLACK: c3}
    for sq in surface.squares:
        img = lift(sq)
        if img.color == sq.color:
            return CheckReport(False, (sq,), f"image keeps the color of {sq}")
        delta = surface.sub(surface.sub(img.label, sq.label), offsets[sq.color])
        if delta not in sub:
            return CheckReport(False, (sq,), f"cylinder broken at {sq}")
    return CheckReport(True)


def surface_genus(surface: CombSurface) -> int:
    """Genus of S(n, m) from the branched-cover Euler characteristic.

    2 - 2g = |G| (2 - sum_j (1 - 1/e_j)) where e_j is the order of column j
    in the deck group G.
    """
    G = len(surface.span.elements)
    chi = Fraction(2)
    for col in surface.span.columns:
        chi -= 1 - Fraction(1, surface.span.order_of(col))
    chi *= G
    g = (2 - chi) / 2
    assert g.denominator == 1 and g >= 0
    return int(g)


@dataclass(frozen=True)
class LiftClassSummary:
    """Census of fixed-point lift pairs of the pillowcase symmetry group."""

    classes: int
    valid_pairs: int
    sigma2_candidates: int
    sigma4_candidates: int


def lift_class_count(surface: CombSurface) -> LiftClassSummary:
    """Count deck-conjugacy classes of lifts of the full symmetry group.

    A candidate pair is (T_e sigma2~, T_f sigma4~) for deck elements e, f
    such that both maps are involutions with at least one fixed edge and the
    two commute.  Pairs are then identified under simultaneous conjugation
    by the deck group.  The count is 1 when n or m is odd and 2 when both
    are even.

    Conjugation is reduced to offset bookkeeping, which is sound because the
    conjugation relations are first verified on every square.
    """
    base2 = lift_sigma2(surface)
    base4 = lift_sigma4(surface, 1)
    rel = intertwine_check(surface, base2, base4)
    if not rel.ok:
        raise AssertionError(f"conjugation relations failed: {rel.detail}")

    span = surface.span
    elements = span.elements
    add, sub_ = surface.add, surface.sub

    def candidates(base: SymmetryLift) -> list[Pair]:
        out = []
        for e in elements:
            cand = base.composed_with_translation(e)
            if cand.is_involution() and fixed_edges(surface, cand):
                out.append(e)
        return out

    cands2 = candidates(base2)
    cands4 = candidates(base4)

    valid_pairs = []
    lifts4 = {f: base4.composed_with_translation(f) for f in cands4}
    for e in cands2:
        le = base2.composed_with_translation(e)
        for f in cands4:
            if commute_check(le, lifts4[f]).ok:
                valid_pairs.append((e, f))

    # Conjugating by T_a shifts e by a - swap(a) and f by a + swap(a).
    shifts = {(sub_(a, (a[1], a[0])), add(a, (a[1], a[0]))) for a in elements}
    pair_set = set(valid_pairs)
    remaining = set(valid_pairs)
    classes = 0
    while remaining:
        e, f = next(iter(remaining))
        orbit = {(add(e, de), add(f, df)) for de, df in shifts}
        if not orbit <= pair_set:
            raise AssertionError("conjugacy moved a valid pair outside the census")
        remaining -= orbit
        classes += 1
    return LiftClassSummary(classes, len(valid_pairs), len(cands2), len(cands4))
