"""Sparse Laurent series in q, z, w with exponents on the (1/3)Z grid.

Exponents are stored as integers scaled by 3 (q3 = 3 * true q-exponent,
and so on), which keeps the whole thirds grid integral.  A TriSeries is
truncated in q only: it is exactly correct for every monomial with
q3 <= order3 and stores nothing above that.  Coefficients live in Z[w].
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple

from .eisenstein import ZERO, EisInt, UnitPower


class TruncationError(ValueError):
    """A comparison or operation asked for more q-order than is guaranteed."""


class SubstitutionError(ValueError):
    """A variable substitution is outside the supported monomial maps."""


class Monomial(NamedTuple):
    """Exponent triple (q3, z3, w3), each 3x the true exponent."""

    q3: int
    z3: int
    w3: int


class FirstDiff(NamedTuple):
    """Lexicographically least differing monomial and the two coefficients."""

    monomial: Monomial
    left: EisInt
    right: EisInt


@dataclass(frozen=True, slots=True)
class SubstitutionSpec:
    """Monomial substitution q -> q**d, z -> z**pz * w**rz, w -> z**pw * w**rw.

    Image exponents are stored scaled by 3: z_image = (3*pz, 3*rz) and
    w_image = (3*pw, 3*rw).  q never appears in the image of z or w, so
    the substitution cannot pull discarded high q-order terms below the
    truncation order; the result is guaranteed to q3 <= d * order3.
    """

    q_pow: int = 1
    z_image: tuple[int, int] = (3, 0)
    w_image: tuple[int, int] = (0, 3)

    def __post_init__(self) -> None:
        if self.q_pow < 1:
            raise SubstitutionError(f"q -> q**{self.q_pow} breaks truncation")

    def apply(self, m: Monomial) -> Monomial:
        z3 = m.z3 * self.z_image[0] + m.w3 * self.w_image[0]
        w3 = m.z3 * self.z_image[1] + m.w3 * self.w_image[1]
        if z3 % 3 or w3 % 3:
            raise SubstitutionError(f"substitution leaves the thirds grid at {m}")
        return Monomial(m.q3 * self.q_pow, z3 // 3, w3 // 3)


# The handful of argument rewrites the identity checks need.
SUB_IDENTITY = SubstitutionSpec()
SUB_INV_Z = SubstitutionSpec(1, (-3, 0), (0, 3))     # x(q, 1/z, w)
SUB_INV_W = SubstitutionSpec(1, (3, 0), (0, -3))     # x(q, z, 1/w)
SUB_INV_ZW = SubstitutionSpec(1, (-3, 0), (0, -3))   # x(q, 1/z, 1/w)
SUB_DOUBLE = SubstitutionSpec(2, (6, 0), (0, 6))     # x(q**2, z**2, w**2)
SUB_Q_SQUARED = SubstitutionSpec(2, (3, 0), (0, 3))  # x(q**2, z, w)
SUB_W_ZINV3 = SubstitutionSpec(1, (0, 3), (-9, 0))   # x(q, w, z**-3)
SUB_W_TO_Z3 = SubstitutionSpec(1, (3, 0), (9, 0))    # x(q, z, z**3)


class TriSeries:
    """Truncated sparse series: Monomial -> nonzero EisInt coefficient.

    Immutable by convention; every operation returns a new series.  Stored
    terms always satisfy 0 <= q3 <= order3, and zero coefficients are
    purged eagerly so equality is plain mapping equality.
    """

    __slots__ = ("order3", "_terms")

    def __init__(self, order3: int, terms: Mapping[Monomial, EisInt] | None = None):
        if order3 < 0:
            raise ValueError("negative truncation order")
        clean: dict[Monomial, EisInt] = {}
        for m, c in (terms or {}).items():
            if m.q3 < 0:
                raise ValueError(f"negative q-exponent in {m}")
            if m.q3 <= order3 and not c.is_zero():
                clean[m] = c
        self.order3 = order3
        self._terms = clean

    @classmethod
    def constant(cls, value: EisInt | int, order3: int) -> TriSeries:
        if isinstance(value, int):
            value = EisInt(value, 0)
        return cls(order3, {Monomial(0, 0, 0): value})

    @classmethod
    def zero(cls, order3: int) -> TriSeries:
        return cls(order3, {})

    @property
    def terms(self) -> dict[Monomial, EisInt]:
        return dict(self._terms)

    def coeff(self, m: Monomial) -> EisInt:
        return self._terms.get(m, ZERO)

    def q_coefficient(self, n: int) -> EisInt:
        """Coefficient of q**n z**0 w**0 (for one-variable series)."""
        return self.coeff(Monomial(3 * n, 0, 0))

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, EisInt]]:
        return iter(sorted(self._terms.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriSeries):
            return NotImplemented
        return self.order3 == other.order3 and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.order3, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"TriSeries(order3={self.order3}, terms={len(self._terms)})"

    def __add__(self, other: TriSeries) -> TriSeries:
        order3 = min(self.order3, other.order3)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, ZERO) + c
        return TriSeries(order3, acc)

    def __sub__(self, other: TriSeries) -> TriSeries:
        order3 = min(self.order3, other.order3)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, ZERO) - c
        return TriSeries(order3, acc)

    def __neg__(self) -> TriSeries:
        return TriSeries(self.order3, {m: -c for m, c in self._terms.items()})

    def scale(self, factor: EisInt | UnitPower | int) -> TriSeries:
        """Multiply every coefficient by a fixed element of Z[w]."""
        if isinstance(factor, UnitPower):
            factor = factor.as_eisint()
        elif isinstance(factor, int):
            factor = EisInt(factor, 0)
        return TriSeries(self.order3, {m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other: TriSeries | EisInt | UnitPower | int) -> TriSeries:
        if not isinstance(other, TriSeries):
            return self.scale(other)
        order3 = min(self.order3, other.order3)
        # With all q-exponents >= 0, any product monomial with q3 <= order3
        # only ever combines factor monomials with q3 <= order3, so the
        # truncated convolution is exact up to order3.
        acc: dict[Monomial, EisInt] = {}
        for m1, c1 in self._terms.items():
            if m1.q3 > order3:
                continue
            for m2, c2 in other._terms.items():
                q3 = m1.q3 + m2.q3
                if q3 > order3:
                    continue
                key = Monomial(q3, m1.z3 + m2.z3, m1.w3 + m2.w3)
                acc[key] = acc.get(key, ZERO) + c1 * c2
        return TriSeries(order3, acc)

    def __rmul__(self, other: EisInt | UnitPower | int) -> TriSeries:
        return self.scale(other)

    def __pow__(self, n: int) -> TriSeries:
        if n < 0:
            raise ValueError("negative powers are not defined for truncated series")
        out = TriSeries.constant(1, self.order3)
        for _ in range(n):
            out = out * self
        return out

    def substitute(self, sub: SubstitutionSpec) -> TriSeries:
        acc: dict[Monomial, EisInt] = {}
        for m, c in self._terms.items():
            key = sub.apply(m)
            acc[key] = acc.get(key, ZERO) + c
        return TriSeries(self.order3 * sub.q_pow, acc)

    def specialize(self, z: bool = False, w: bool = False) -> TriSeries:
        """Set z and/or w to 1: collapse that exponent to 0 and sum."""
        acc: dict[Monomial, EisInt] = {}
        for m, c in self._terms.items():
            key = Monomial(m.q3, 0 if z else m.z3, 0 if w else m.w3)
            acc[key] = acc.get(key, ZERO) + c
        return TriSeries(self.order3, acc)

    def difference_to_order(self, other: TriSeries, n: int) -> FirstDiff | None:
        """Compare up to q-order n; None if equal, else the least difference.

        Raises TruncationError if either series does not guarantee order n:
        a partial comparison would silently prove nothing.
        """
        max_q3 = 3 * n
        if max_q3 > self.order3 or max_q3 > other.order3:
            raise TruncationError(
                f"comparison to q-order {n} exceeds guaranteed orders "
                f"({self.order3}, {other.order3})"
            )
        keys = {m for m in self._terms if m.q3 <= max_q3}
        keys.update(m for m in other._terms if m.q3 <= max_q3)
        for m in sorted(keys):
            left = self._terms.get(m, ZERO)
            right = other._terms.get(m, ZERO)
            if left != right:
                return FirstDiff(m, left, right)
        return None

    def equal_to_order(self, other: TriSeries, n: int) -> bool:
        return self.difference_to_order(other, n) is None

    # -- canonical serialization ------------------------------------------

    def to_dict(self) -> dict:
        return {
            "order3": self.order3,
            "terms": [
                {"q3": m.q3, "z3": m.z3, "w3": m.w3, "re": c.x, "om": c.y}
                for m, c in sorted(self._terms.items())
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_csv_rows(self) -> Iterable[str]:
        yield "q3,z3,w3,re,om"
        for m, c in sorted(self._terms.items()):
            yield f"{m.q3},{m.z3},{m.w3},{c.x},{c.y}"

    @classmethod
    def from_dict(cls, data: dict) -> TriSeries:
        terms = {
            Monomial(t["q3"], t["z3"], t["w3"]): EisInt(t["re"], t["om"])
            for t in data["terms"]
        }
        return cls(data["order3"], terms)

    @classmethod
    def from_json(cls, text: str) -> TriSeries:
        return cls.from_dict(json.loads(text))
