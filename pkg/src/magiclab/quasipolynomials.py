"""Quasipolynomial algebra: evaluation, differences, fitting, periods.

A quasipolynomial of period s is s polynomial constituents; the value at
t is the constituent for the residue t mod s (nonnegative residue, so
negative arguments evaluate through the same constituents).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm

from . import geometry, labelings
from .graphs import Graph

Coeffs = tuple[Fraction, ...]


def binomial(j: int, m: int) -> int:
    """Binomial coefficient C(j, m) with C(j, m) = 0 for 0 <= j < m.

    Negative j is rejected: the summations this feeds never reach below
    zero, so no convention for negative upper entries is chosen.
    """
    if j < 0:
        raise ValueError("j must be nonnegative")
    if m < 0:
        raise ValueError("m must be nonnegative")
    return comb(j, m)


def f_n(n: int, k: int) -> int:
    """Sum of C(j, n) over 0 <= j <= k with j congruent to k mod n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if k < 0:
        raise ValueError("k must be nonnegative")
    return sum(binomial(j, n) for j in range(k % n, k + 1, n))


def closed_form_mn(n: int, k: int) -> int:
    """Closed-form count of magic k-labelings of ``make_gn(n)``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if k < 0:
        raise ValueError("k must be nonnegative")
    return binomial(k + n, n) + f_n(n - 1, k)


def iterated_difference_of_fn(n: int, i: int, t: int) -> int:
    """Value of the i-th difference of f_n(n, .) by direct summation.

    Equals the sum of C(j, n-i) over 0 <= j <= t with j congruent to
    t mod n.
    """
    if not 0 <= i <= n:
        raise ValueError("need 0 <= i <= n")
    if t < 0:
        raise ValueError("t must be nonnegative")
    return sum(binomial(j, n - i) for j in range(t % n, t + 1, n))


def _trim(coeffs) -> Coeffs:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _shift_poly(coeffs: Coeffs) -> Coeffs:
    # Coefficients of p(t + 1) given those of p(t).
    n = len(coeffs)
    out = [Fraction(0)] * n
    for j, c in enumerate(coeffs):
        for i in range(j + 1):
            out[i] += c * comb(j, i)
    return _trim(out)


def _eval_poly(coeffs: Coeffs, t: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


@dataclass(frozen=True)
class Quasipolynomial:
    """Period plus one coefficient tuple (low degree first) per residue."""

    period: int
    constituents: tuple[Coeffs, ...]

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")
        if len(self.constituents) != self.period:
            raise ValueError("need exactly one constituent per residue")
        object.__setattr__(
            self, "constituents", tuple(_trim(c) for c in self.constituents)
        )

    @property
    def degree(self) -> int:
        """Largest constituent degree; -1 for the zero quasipolynomial."""
        return max(len(c) for c in self.constituents) - 1

    def coefficient(self, residue: int, i: int) -> Fraction:
        c = self.constituents[residue % self.period]
        return c[i] if i < len(c) else Fraction(0)

    def evaluate(self, t: int) -> Fraction:
        return _eval_poly(self.constituents[t % self.period], t)

    def difference(self) -> Quasipolynomial:
        """The quasipolynomial t -> F(t+1) - F(t), with minimized period."""
        s = self.period
        parts = []
        for r in range(s):
            shifted = _shift_poly(self.constituents[(r + 1) % s])
            cur = self.constituents[r]
            n = max(len(shifted), len(cur))
            parts.append(
                tuple(
                    (shifted[i] if i < len(shifted) else Fraction(0))
                    - (cur[i] if i < len(cur) else Fraction(0))
                    for i in range(n)
                )
            )
        return Quasipolynomial(s, tuple(parts)).normalized()

    def minimum_quasiperiod(self) -> int:
        """Least divisor of the period under which constituents repeat."""
        for cand in range(1, self.period + 1):
            if self.period % cand:
                continue
            if all(
                self.constituents[r] == self.constituents[(r + cand) % self.period]
                for r in range(self.period)
            ):
                return cand
        return self.period

    def normalized(self) -> Quasipolynomial:
        """Equivalent quasipolynomial whose period is the minimum one."""
        mqp = self.minimum_quasiperiod()
        if mqp == self.period:
            return self
        return Quasipolynomial(mqp, self.constituents[:mqp])

    def to_json(self) -> str:
        import json

        return json.dumps(
            {
                "period": self.period,
                "constituents": [[str(c) for c in cs] for cs in self.constituents],
            },
            separators=(",", ":"),
        )

    @staticmethod
    def from_json(text: str) -> Quasipolynomial:
        import json

        data = json.loads(text)
        return Quasipolynomial(
            int(data["period"]),
            tuple(
                tuple(Fraction(c) for c in cs) for cs in data["constituents"]
            ),
        )


def fit_quasipolynomial(samples, period: int, degree: int) -> Quasipolynomial:
    """Exact interpolation of consecutive samples starting at 0.

    ``samples[k]`` is the value at k.  Each residue class is fitted from
    its first degree+1 samples; every remaining sample then validates
    the fit, so a wrong period or degree guess raises ValueError instead
    of returning a bad quasipolynomial.  Needs at least
    period * (degree + 2) samples.
    """
    if period < 1:
        raise ValueError("period must be positive")
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    values = [Fraction(v) for v in samples]
    if len(values) < period * (degree + 2):
        raise ValueError(
            f"need at least {period * (degree + 2)} samples, got {len(values)}"
        )
    parts = []
    for r in range(period):
        ts = [r + j * period for j in range(degree + 1)]
        matrix = [[Fraction(t) ** i for i in range(degree + 1)] for t in ts]
        rhs = [values[t] for t in ts]
        sol = geometry.solve_rational(matrix, rhs)
        if sol is None:  # Vandermonde on distinct points; cannot happen
            raise ValueError("interpolation system was singular")
        parts.append(sol)
    q = Quasipolynomial(period, tuple(tuple(p) for p in parts))
    for k, v in enumerate(values):
        if q.evaluate(k) != v:
            raise ValueError(
                f"samples do not follow a quasipolynomial of period {period} "
                f"and degree {degree} (first mismatch at {k})"
            )
    return q


def ehrhart_of_polytope(
    g: Graph,
    kind: str = "P",
    *,
    budget: int | None = None,
    vertex_budget: int = geometry.DEFAULT_VERTEX_BUDGET,
) -> Quasipolynomial:
    """Lattice-point counting quasipolynomial of the magic polytope.

    The vertex denominators fix the fitting period and the vertex set's
    affine rank the degree; counts for k = 0 .. period*(degree+2)-1 come
    from exhaustive enumeration, and the validated fit is returned with
    its period minimized.  ``budget`` caps enumeration nodes and
    ``vertex_budget`` the vertex-enumeration subsets.
    """
    verts = geometry.polytope_vertices(g, kind, budget=vertex_budget)
    if not verts:
        raise ValueError("polytope is empty")
    den = lcm(*(geometry.point_denominator(v) for v in verts))
    first = verts[0]
    diffs = [[a - b for a, b in zip(v, first)] for v in verts[1:]]
    dim = geometry.matrix_rank(diffs)
    count = labelings.count_magic_k if kind == "P" else labelings.count_index_k
    values = [count(g, k, budget=budget) for k in range(den * (dim + 2))]
    return fit_quasipolynomial(values, den, dim).normalized()
