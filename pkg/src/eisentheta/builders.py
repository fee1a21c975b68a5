"""Lattice point enumeration and theta series assembly.

The three series families share one monomial weight: a point alpha
contributes q^(|alpha|^2) z^(T(alpha)) w^(T(alpha/lam)).  The plain series
sums that weight over Z[w], the character-twisted family adds a chi(alpha)^k
coefficient, and the shifted family sums over the coset Z[w] + k/lam.
Double sums over (m, n) in Z^2, taken straight from the classical
two-variable definitions, serve as independent cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .eisenstein import EisInt, UnitPower
from .series import Monomial, TriSeries


@dataclass(frozen=True, slots=True)
class LatticePoint:
    """The point alpha = beta + shift_k/lam with beta in Z[w].

    norm3/z3/w3 are the scaled exponents of the monomial alpha contributes;
    all three are exact integers, no rational arithmetic involved:

      |alpha|^2  = |beta|^2 - k*T(beta/lam) + k^2/3
      T(alpha)   = T(beta)            (T(1/lam) = 0)
      T(alpha/lam) = T(beta/lam) - 2k/3   (T(1/lam^2) = -2/3)
    """

    beta: EisInt
    shift_k: int

    @property
    def norm3(self) -> int:
        k = self.shift_k
        return 3 * self.beta.norm() - 3 * k * self.beta.trace_div_lambda() + k * k

    @property
    def z3(self) -> int:
        return 3 * self.beta.trace()

    @property
    def w3(self) -> int:
        return 3 * self.beta.trace_div_lambda() - 2 * self.shift_k

    def monomial(self) -> Monomial:
        return Monomial(self.norm3, self.z3, self.w3)


def shifted_points(k: int, max_norm3: int) -> list[LatticePoint]:
    """All points of Z[w] + k/lam with 3*|alpha|^2 <= max_norm3.

    Scans a generous coordinate box and filters by the exact scaled norm.
    |x|, |y| <= (2/sqrt 3)|beta| and |beta| <= |alpha| + 2/sqrt(3), so the
    box bound isqrt(4*max_norm3/9) + 2 always covers.
    """
    if max_norm3 < 0:
        raise ValueError("negative norm bound")
    k = k % 3
    bound = isqrt(4 * max_norm3 // 9) + 2
    points = []
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            p = LatticePoint(EisInt(x, y), k)
            if p.norm3 <= max_norm3:
                points.append(p)
    points.sort(key=lambda p: (p.norm3, p.beta.x, p.beta.y))
    return points


def enumerate_norm_le(n: int) -> list[EisInt]:
    """All beta in Z[w] with |beta|^2 <= n, ordered by (norm, x, y)."""
    return [p.beta for p in shifted_points(0, 3 * n)]


def enumerate_shifted(k: int, n: int) -> list[LatticePoint]:
    """All alpha in Z[w] + k/lam with |alpha|^2 <= n."""
    return shifted_points(k, 3 * n)


def build_a(n: int) -> TriSeries:
    """The plain theta series over Z[w], exact to q-order n."""
    return build_b(0, n)


def build_b(k: int, n: int) -> TriSeries:
    """The chi^k-twisted theta series over Z[w], exact to q-order n."""
    k = k % 3
    terms: dict[Monomial, EisInt] = {}
    for p in shifted_points(0, 3 * n):
        m = p.monomial()
        c = UnitPower(k * (p.beta.x + p.beta.y)).as_eisint()
        terms[m] = terms.get(m, EisInt()) + c
    return TriSeries(3 * n, terms)


def build_c(k: int, n: int) -> TriSeries:
    """The theta series over the coset Z[w] + k/lam, exact to q-order n."""
    terms: dict[Monomial, EisInt] = {}
    for p in shifted_points(k, 3 * n):
        m = p.monomial()
        terms[m] = terms.get(m, EisInt()) + EisInt(1, 0)
    return TriSeries(3 * n, terms)


def build_one_var(name: str, n: int) -> TriSeries:
    """The z = w = 1 specialization of a, b (k=1) or c (k=1)."""
    if name == "a":
        s = build_a(n)
    elif name == "b":
        s = build_b(1, n)
    elif name == "c":
        s = build_c(1, n)
    else:
        raise ValueError(f"unknown one-variable series {name!r}")
    return s.specialize(z=True, w=True)


# -- independent (m, n) double-sum oracles ----------------------------------
#
# These never touch the lattice machinery above: exponents come directly
# from the classical quadratic form m^2 + mn + n^2 and its shift by 1/3.

ORACLE_NAMES = ("a_z", "a_w", "b_w", "c_z")


def oracle_two_variable(name: str, n: int) -> TriSeries:
    """Two-variable specializations as explicit sums over (m, n) in Z^2.

    a_z: sum q^(m^2+mn+n^2) z^(m-n)           = full series at w = 1
    a_w: sum q^(m^2+mn+n^2) w^n               = full series at z = 1
    b_w: sum w^(m-n as unit) q^(...) w^n      = twisted series at z = 1
    c_z: sum q^((m+1/3)^2+(m+1/3)(n+1/3)+(n+1/3)^2) z^(m-n)
                                              = shift class -1 at w = 1
    """
    if name not in ORACLE_NAMES:
        raise ValueError(f"unknown oracle {name!r}")
    terms: dict[Monomial, EisInt] = {}
    bound = isqrt(4 * n // 3 if n > 0 else 0) + 2
    for m in range(-bound, bound + 1):
        for nn in range(-bound, bound + 1):
            form = m * m + m * nn + nn * nn
            if name == "c_z":
                # (m+1/3)^2 + (m+1/3)(n+1/3) + (n+1/3)^2 = form + m + n + 1/3
                q3 = 3 * (form + m + nn) + 1
                key = Monomial(q3, 3 * (m - nn), 0)
                coeff = EisInt(1, 0)
            elif form > n:
                continue
            elif name == "a_z":
                key = Monomial(3 * form, 3 * (m - nn), 0)
                coeff = EisInt(1, 0)
            elif name == "a_w":
                key = Monomial(3 * form, 0, 3 * nn)
                coeff = EisInt(1, 0)
            else:  # b_w
                key = Monomial(3 * form, 0, 3 * nn)
                coeff = UnitPower(m - nn).as_eisint()
            if key.q3 > 3 * n:
                continue
            terms[key] = terms.get(key, EisInt()) + coeff
    return TriSeries(3 * n, terms)
