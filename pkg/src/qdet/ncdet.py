"""Row and column determinants of quaternion matrices.

Because entries do not commute, a determinant here fixes the order of the
factors in every term.  Each permutation of {1..n} is written as a product
of disjoint cycles (fixed points count as cycles of length one).  A cycle
(c1 c2 ... cp) contributes the left-to-right entry chain

    a[c1,c2] * a[c2,c3] * ... * a[cp,c1]

and the term carries the classical sign (-1)**(n - r), where r is the
number of cycles.  The two determinant families differ only in how the
cycle chains are ordered inside the term:

* the row determinant anchored at row i multiplies the chain of the cycle
  containing i first (that chain starts at i), then the remaining chains
  by increasing minimal element, each starting at its minimal element;
* the column determinant anchored at column j multiplies the same chains
  in the mirrored order: decreasing minimal element first, the anchor
  cycle last.

On a Hermitian matrix all 2n row/column determinants coincide in a real
value, the double determinant `ddet`, which behaves like a classical
determinant (cofactor expansion, characteristic polynomial, inverse).

Two independent enumerators are provided: the canonical one generates
cycle decompositions combinatorially and never materializes one-line
permutations, while the reference one walks `itertools.permutations` and
decomposes each.  Their agreement on random matrices is a test gate, as
is the collapse to the classical determinant on commuting entries.

Every sum over permutations costs n! terms; enumeration is refused above
a size guard (default n = 8) rather than silently running for hours.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import EnumerationGuardError, NotHermitianError, ShapeError, SingularError
from .matrix import QMatrix, delete_row_col, max_abs_diff, replace_col, replace_row
from .scalar import EXACT, Quaternion

DEFAULT_ENUMERATION_GUARD = 8

_guard = DEFAULT_ENUMERATION_GUARD


def enumeration_guard() -> int:
    return _guard


def set_enumeration_guard(n: int) -> int:
    """Set the module-wide size guard; returns the previous value."""
    global _guard
    if n < 1:
        raise ValueError("guard must be at least 1")
    old, _guard = _guard, n
    return old


def _check(a: QMatrix, anchor: int, max_n):
    if not a.is_square():
        raise ShapeError("row/column determinants require a square matrix")
    n = a.rows
    limit = _guard if max_n is None else max_n
    if n > limit:
        raise EnumerationGuardError(
            f"n = {n} exceeds the enumeration guard {limit} ({n}! terms per determinant); "
            "raise the guard explicitly to proceed"
        )
    if not 1 <= anchor <= n:
        raise ValueError(f"anchor {anchor} out of range 1..{n}")
    return n


@dataclass(frozen=True)
class CycleForm:
    """Canonical disjoint-cycle decomposition of one permutation of {1..n}.

    `cycles[0]` is the cycle containing `anchor`, written starting at the
    anchor; the remaining cycles are sorted by ascending minimal element
    and each written starting at its minimal element.  Indices are
    1-based.  The column-determinant layout (anchor cycle last, anchor in
    final position, remaining cycles by descending minimal element) is a
    derived view, see `cdet_notation`.
    """

    anchor: int
    cycles: tuple

    @property
    def r(self) -> int:
        return len(self.cycles)

    @property
    def sign(self) -> int:
        n = sum(len(c) for c in self.cycles)
        return -1 if (n - self.r) % 2 else 1

    def cdet_notation(self) -> tuple:
        """Cycles as written for the column determinant: reversed cycle
        list, each cycle rotated so its starting element comes last."""
        return tuple(c[1:] + c[:1] for c in reversed(self.cycles))

    def validate(self) -> None:
        n = sum(len(c) for c in self.cycles)
        seen = sorted(x for c in self.cycles for x in c)
        if seen != list(range(1, n + 1)):
            raise ValueError("cycles do not partition 1..n")
        if self.cycles[0][0] != self.anchor:
            raise ValueError("first cycle must start at the anchor")
        mins = [min(c) for c in self.cycles[1:]]
        if mins != sorted(mins):
            raise ValueError("non-anchor cycles must be sorted by minimal element")
        for c in self.cycles[1:]:
            if c[0] != min(c):
                raise ValueError("non-anchor cycles must start at their minimal element")


def _arrangements(pool, size):
    for comb in itertools.combinations(pool, size):
        yield from itertools.permutations(comb)


def _min_rooted_partitions(elements):
    """All decompositions of `elements` (sorted tuple) into cycles rooted at
    their minimal element, emitted in increasing order of those minima."""
    if not elements:
        yield ()
        return
    head, rest = elements[0], elements[1:]
    for size in range(len(rest) + 1):
        for tail in _arrangements(rest, size):
            cycle = (head, *tail)
            remaining = tuple(x for x in rest if x not in tail)
            for more in _min_rooted_partitions(remaining):
                yield (cycle, *more)


@lru_cache(maxsize=128)
def cycle_forms(n: int, anchor: int) -> tuple:
    """All n! cycle forms of S_n anchored at `anchor` (1-based)."""
    if not 1 <= anchor <= n:
        raise ValueError(f"anchor {anchor} out of range 1..{n}")
    others = tuple(x for x in range(1, n + 1) if x != anchor)
    forms = []
    for size in range(len(others) + 1):
        for arr in _arrangements(others, size):
            first = (anchor, *arr)
            remaining = tuple(x for x in others if x not in arr)
            for tail in _min_rooted_partitions(remaining):
                forms.append(CycleForm(anchor, (first, *tail)))
    return tuple(forms)


def _chain(a: QMatrix, cycle) -> Quaternion:
    first = cycle[0]
    prev = first
    acc = None
    for cur in cycle[1:]:
        factor = a[prev - 1, cur - 1]
        acc = factor if acc is None else acc * factor
        prev = cur
    closing = a[prev - 1, first - 1]
    return closing if acc is None else acc * closing


def rdet(i: int, a: QMatrix, max_n: int | None = None) -> Quaternion:
    """Row determinant anchored at row i (1-based)."""
    n = _check(a, i, max_n)
    total = Quaternion.zero(a.mode)
    for form in cycle_forms(n, i):
        term = _chain(a, form.cycles[0])
        for cyc in form.cycles[1:]:
            term = term * _chain(a, cyc)
        total = total + (term if form.sign > 0 else -term)
    return total


def cdet(j: int, a: QMatrix, max_n: int | None = None) -> Quaternion:
    """Column determinant anchored at column j (1-based)."""
    n = _check(a, j, max_n)
    total = Quaternion.zero(a.mode)
    for form in cycle_forms(n, j):
        cycles = form.cycles
        term = _chain(a, cycles[-1])
        for idx in range(len(cycles) - 2, -1, -1):
            term = term * _chain(a, cycles[idx])
        total = total + (term if form.sign > 0 else -term)
    return total


# ---------------------------------------------------------------------------
# Reference enumerators: literal transcription working on one-line
# permutations.  Deliberately independent of the cycle-form generator.
# ---------------------------------------------------------------------------


def _orbit(perm, start):
    # perm maps 1-based x to perm[x - 1]
    orbit = [start]
    cur = perm[start - 1]
    while cur != start:
        orbit.append(cur)
        cur = perm[cur - 1]
    return tuple(orbit)


def _orbit_product(a, perm, start):
    acc = None
    cur = start
    while True:
        nxt = perm[cur - 1]
        factor = a[cur - 1, nxt - 1]
        acc = factor if acc is None else acc * factor
        cur = nxt
        if cur == start:
            return acc


def _blocks(perm, n, anchor):
    """Orbit starting points: the anchor, then the minima of the remaining
    orbits ascending; also returns the total number of orbits."""
    in_anchor_orbit = set(_orbit(perm, anchor))
    mins = []
    seen = set(in_anchor_orbit)
    for x in range(1, n + 1):
        if x in seen:
            continue
        orb = _orbit(perm, x)
        seen.update(orb)
        mins.append(min(orb))
    mins.sort()
    return [anchor] + mins, 1 + len(mins)


def rdet_reference(i: int, a: QMatrix, max_n: int | None = None) -> Quaternion:
    """Row determinant by direct summation over one-line permutations."""
    n = _check(a, i, max_n)
    total = Quaternion.zero(a.mode)
    for perm in itertools.permutations(range(1, n + 1)):
        starts, r = _blocks(perm, n, i)
        term = _orbit_product(a, perm, starts[0])
        for s in starts[1:]:
            term = term * _orbit_product(a, perm, s)
        sign = -1 if (n - r) % 2 else 1
        total = total + (term if sign > 0 else -term)
    return total


def cdet_reference(j: int, a: QMatrix, max_n: int | None = None) -> Quaternion:
    """Column determinant by direct summation over one-line permutations."""
    n = _check(a, j, max_n)
    total = Quaternion.zero(a.mode)
    for perm in itertools.permutations(range(1, n + 1)):
        starts, r = _blocks(perm, n, j)
        term = None
        for s in reversed(starts):
            p = _orbit_product(a, perm, s)
            term = p if term is None else term * p
        sign = -1 if (n - r) % 2 else 1
        total = total + (term if sign > 0 else -term)
    return total


# ---------------------------------------------------------------------------
# Hermitian determinant and its offspring
# ---------------------------------------------------------------------------


def ddet(a: QMatrix, max_n: int | None = None):
    """Double determinant of a Hermitian matrix: the common value of all
    its row and column determinants.  Returns a real scalar (Fraction in
    exact mode, float in float mode)."""
    if not a.is_hermitian():
        raise NotHermitianError("ddet requires a Hermitian matrix")
    value = rdet(1, a, max_n)
    if a.mode == EXACT and not value.is_real():
        raise RuntimeError("Hermitian determinant produced a non-real value")
    return value.a0


def principal_minor_sum(a: QMatrix, s: int, max_n: int | None = None):
    """Sum of the s x s principal minors of a Hermitian matrix."""
    if not a.is_hermitian():
        raise NotHermitianError("principal minors require a Hermitian matrix")
    if not 1 <= s <= a.rows:
        raise ValueError(f"minor order {s} out of range 1..{a.rows}")
    total = None
    for idx in itertools.combinations(range(a.rows), s):
        sub = QMatrix([[a[p, q] for q in idx] for p in idx])
        minor = ddet(sub, max_n)
        total = minor if total is None else total + minor
    return total


def char_poly(a: QMatrix, max_n: int | None = None) -> tuple:
    """Coefficients (d1, ..., dn) of the characteristic polynomial of a
    Hermitian matrix, in the alternating-sign convention

        p(t) = t^n - d1 t^(n-1) + d2 t^(n-2) - ... + (-1)^n dn,

    where ds is the sum of the s x s principal minors and dn = ddet(a)."""
    if not a.is_hermitian():
        raise NotHermitianError("characteristic polynomial requires a Hermitian matrix")
    return tuple(principal_minor_sum(a, s, max_n) for s in range(1, a.rows + 1))


def eval_char_poly(coeffs, t):
    """Evaluate t^n - d1 t^(n-1) + ... + (-1)^n dn at a real t."""
    n = len(coeffs)
    value = t**n
    sign = -1
    for s, d in enumerate(coeffs, start=1):
        value = value + sign * d * t ** (n - s)
        sign = -sign
    return value


def _right_cofactor(a: QMatrix, i: int, j: int, max_n) -> Quaternion:
    # 0-based i, j; row-determinant cofactor of the Hermitian inverse.
    if i == j:
        return rdet(1, delete_row_col(a, i, i), max_n)
    modified = delete_row_col(replace_col(a, j, a.col(i)), i, i)
    pos = j if j < i else j - 1
    return -rdet(pos + 1, modified, max_n)


def _left_cofactor(a: QMatrix, i: int, j: int, max_n) -> Quaternion:
    if i == j:
        return cdet(1, delete_row_col(a, j, j), max_n)
    modified = delete_row_col(replace_row(a, i, a.row(j)), j, j)
    pos = i if i < j else i - 1
    return -cdet(pos + 1, modified, max_n)


def hermitian_inverse(a: QMatrix, max_n: int | None = None) -> QMatrix:
    """Inverse of a nonsingular Hermitian matrix assembled from cofactors.

    Both the right-cofactor and the left-cofactor assemblies are computed
    and must agree; the result is verified to be a two-sided inverse.
    """
    det = ddet(a, max_n)
    if det == 0:
        raise SingularError("Hermitian matrix has zero determinant")
    n = a.rows
    if n == 1:
        return QMatrix([[a[0, 0].inv()]])
    right = QMatrix(
        [[_right_cofactor(a, j, i, max_n) / det for j in range(n)] for i in range(n)]
    )
    left = QMatrix(
        [[_left_cofactor(a, j, i, max_n) / det for j in range(n)] for i in range(n)]
    )
    if a.mode == EXACT:
        if right != left:
            raise RuntimeError("cofactor assemblies disagree on a Hermitian matrix")
        ident = QMatrix.identity(n, a.mode)
        if not (a @ right == ident and right @ a == ident):
            raise RuntimeError("cofactor inverse failed the product check")
    elif max_abs_diff(right, left) > 1e-9 * (1.0 + abs(det)):
        raise RuntimeError("cofactor assemblies disagree beyond float tolerance")
    return right
