"""Fibonacci and Lucas numbers over all integers, and the cyclic constraint counts
they bound.

A constraint sequence ``s`` in {0,1,2}^n asks for binary ``x`` with
``x[i] + x[i+1] != s[i]`` (indices mod n). The number of solutions is at most
``lucas(n)``; for sequences without 1s it equals the trace of a product of
two 2x2 transfer matrices. Python integers are unbounded, so none of these
functions can overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import InputError, PreconditionError, ResourceError

Matrix = tuple[tuple[int, int], tuple[int, int]]

IDENTITY: Matrix = ((1, 0), (0, 1))
# transfer matrices for a constraint value of 0 and of 2
ZERO_STEP: Matrix = ((1, 1), (1, 0))
TWO_STEP: Matrix = ((0, 1), (1, 1))

BRUTE_FORCE_LIMIT = 24


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def mat_pow(a: Matrix, k: int) -> Matrix:
    if k < 0:
        raise InputError("negative matrix power")
    out = IDENTITY
    while k:
        if k & 1:
            out = mat_mul(out, a)
        a = mat_mul(a, a)
        k >>= 1
    return out


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c: int, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def trace(a: Matrix) -> int:
    return a[0][0] + a[1][1]


def fibonacci(n: int) -> int:
    """phi(n), with phi(-n) = (-1)^(n+1) phi(n) for negative indices."""
    if n < 0:
        f = fibonacci(-n)
        return f if n % 2 else -f
    # ZERO_STEP^n = [[phi(n+1), phi(n)], [phi(n), phi(n-1)]]
    return mat_pow(ZERO_STEP, n)[0][1]


def lucas(n: int) -> int:
    return fibonacci(n - 1) + fibonacci(n + 1)


@dataclass(frozen=True)
class LucasValues:
    index: int
    fib: int
    lucas: int


def lucas_values(n: int) -> LucasValues:
    return LucasValues(n, fibonacci(n), lucas(n))


# constraint sequences --------------------------------------------------------


def _check_sequence(s) -> tuple[int, ...]:
    s = tuple(s)
    if len(s) < 2:
        raise InputError("constraint sequences need length at least 2")
    if any(x not in (0, 1, 2) for x in s):
        raise InputError(f"constraint values must be in {{0, 1, 2}}: {s}")
    return s


def count_valid_assignments(s, limit: int = BRUTE_FORCE_LIMIT) -> int:
    """Count x in {0,1}^n satisfying every cyclic constraint, by enumeration."""
    s = _check_sequence(s)
    n = len(s)
    if n > limit:
        raise ResourceError(f"brute force limited to n <= {limit}; use the trace formula", reached=n)
    return sum(
        all(x[i] + x[(i + 1) % n] != s[i] for i in range(n))
        for x in product((0, 1), repeat=n)
    )


def trace_count(s) -> int:
    """Tr(A_1 ... A_n) for a sequence over {0, 2}."""
    s = _check_sequence(s)
    if 1 in s:
        raise PreconditionError("trace formula needs a sequence without 1s; project first")
    m = IDENTITY
    for x in s:
        m = mat_mul(m, ZERO_STEP if x == 0 else TWO_STEP)
    return trace(m)


@dataclass(frozen=True)
class Projection:
    """Outcome of merging variables across every ``1`` constraint.

    ``sequence`` is the remaining cyclic sequence over {0, 2}. If merging
    would leave fewer than two variables, ``collapsed`` is set and ``count``
    was obtained by enumerating the original sequence instead.
    """

    sequence: tuple[int, ...]
    merges: int
    collapsed: bool
    count: int


def project_ones(s) -> Projection:
    s = _check_sequence(s)
    seq = list(s)
    merges = 0
    while 1 in seq and len(seq) > 2:
        # a 1 at position i forces x_i = x_{i+1}; drop the constraint and merge
        seq.pop(seq.index(1))
        merges += 1
    if 1 in seq:
        return Projection(tuple(seq), merges, True, count_valid_assignments(s))
    return Projection(tuple(seq), merges, False, trace_count(seq))


@dataclass(frozen=True)
class ConstraintSequence:
    s: tuple[int, ...]
    count: int
    trace_value: int | None
    lucas_bound: int

    @property
    def within_bound(self) -> bool:
        return self.count <= self.lucas_bound


def analyze_sequence(s) -> ConstraintSequence:
    s = _check_sequence(s)
    tv = trace_count(s) if 1 not in s else None
    count = tv if tv is not None else project_ones(s).count
    return ConstraintSequence(s, count, tv, lucas(len(s)))


def lucas_triangle_row(n: int) -> list[int]:
    """Tr(F^m G^(n-m)) for m = 0..n with F = ZERO_STEP, G = TWO_STEP."""
    if n < 0:
        raise InputError("row index must be non-negative")
    return [trace(mat_mul(mat_pow(ZERO_STEP, m), mat_pow(TWO_STEP, n - m))) for m in range(n + 1)]


def lucas_sweep(n: int, limit: int = BRUTE_FORCE_LIMIT):
    """Check every s in {0,1,2}^n against lucas(n) and, for {0,2}-sequences,
    the trace formula against enumeration.

    Returns ``(checked, counterexample)``; the counterexample is ``None`` on
    success, otherwise a ``(s, reason)`` pair.
    """
    bound = lucas(n)
    checked = 0
    for s in product((0, 1, 2), repeat=n):
        c = count_valid_assignments(s, limit)
        checked += 1
        if c > bound:
            return checked, (s, f"count {c} exceeds lucas({n}) = {bound}")
        if 1 not in s and trace_count(s) != c:
            return checked, (s, f"trace {trace_count(s)} != count {c}")
    return checked, None


# bundling identity -----------------------------------------------------------


def bundling_difference(i: int, j: int, k: int, l: int) -> tuple[Matrix, Matrix]:
    """Return ``(difference, closed_form)``.

    difference  = F^(i+k) G^(j+l) - F^i G^j F^k G^l
    closed_form = 2 phi(j) phi(k) F^(i-1) [[phi(l-2), phi(l-1)], [phi(l), phi(l+1)]]
    """
    if min(i, j, k, l) < 1:
        raise InputError("bundling exponents must be at least 1")
    F, G = ZERO_STEP, TWO_STEP
    merged = mat_mul(mat_pow(F, i + k), mat_pow(G, j + l))
    split = mat_mul(mat_mul(mat_pow(F, i), mat_pow(G, j)), mat_mul(mat_pow(F, k), mat_pow(G, l)))
    tail = ((fibonacci(l - 2), fibonacci(l - 1)), (fibonacci(l), fibonacci(l + 1)))
    closed = mat_scale(2 * fibonacci(j) * fibonacci(k), mat_mul(mat_pow(F, i - 1), tail))
    return mat_sub(merged, split), closed


def bundling_inequality_check(i: int, j: int, k: int, l: int) -> bool:
    """True iff the closed form matches the difference and is entrywise >= 0."""
    diff, closed = bundling_difference(i, j, k, l)
    return diff == closed and all(x >= 0 for row in diff for x in row)
