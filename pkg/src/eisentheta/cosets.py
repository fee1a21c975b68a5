"""Triples over Q(sqrt(-3)): the triple lattice, its nine cosets, and the
two unitary transforms used to reshuffle them.

The lattice L is Z[w]^3 + Z*(1/lam, 1/lam, 1/lam).  A triple belongs to it
iff lam*a_i is integral for each coordinate with one common residue k mod
lam; the residue j of the coordinate sum picks one of the nine cosets
L[j, k].  Everything here is exact field arithmetic; the sweep functions
exhaustively check the transform laws on all lattice triples up to a norm
bound and report the first counterexample, if any.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, NamedTuple

from .eisenstein import INV_LAMBDA, EisInt, EisRat
from .series import Monomial, TriSeries
from .builders import shifted_points


class LatticeMembershipError(ValueError):
    """A triple is not in the triple lattice L."""


class CosetLabel(NamedTuple):
    j: int  # residue of the coordinate sum mod lam
    k: int  # common shift class of the coordinates


@dataclass(frozen=True, slots=True)
class Triple:
    a0: EisRat
    a1: EisRat
    a2: EisRat

    def __iter__(self) -> Iterator[EisRat]:
        return iter((self.a0, self.a1, self.a2))

    def norm(self) -> Fraction:
        return self.a0.norm() + self.a1.norm() + self.a2.norm()

    def in_v(self) -> bool:
        """Membership in the subspace with equal last two coordinates."""
        return self.a1 == self.a2

    def to_dict(self) -> dict:
        return {
            "coords": [
                {"x": a.num.x, "y": a.num.y, "den": a.den} for a in self
            ]
        }


_OMEGA_RAT = EisRat(EisInt(0, 1), 1)
_OMEGA2_RAT = EisRat(EisInt(-1, -1), 1)

# Row-vector convention: apply(t, T)_j = sum_i t_i * matrix[i][j].
_M_MATRIX = (
    (INV_LAMBDA, INV_LAMBDA, INV_LAMBDA),
    (INV_LAMBDA, _OMEGA_RAT * INV_LAMBDA, _OMEGA2_RAT * INV_LAMBDA),
    (INV_LAMBDA, _OMEGA2_RAT * INV_LAMBDA, _OMEGA_RAT * INV_LAMBDA),
)


class Transform(Enum):
    """The two unitary transforms: the character-table matrix over lam and
    the diagonal twist diag(1, w, w)."""

    M = "M"
    N = "N"


def apply(t: Triple, transform: Transform) -> Triple:
    if transform is Transform.N:
        return Triple(t.a0, t.a1 * _OMEGA_RAT, t.a2 * _OMEGA_RAT)
    coords = tuple(t)
    out = []
    for j in range(3):
        acc = EisRat()
        for i in range(3):
            acc = acc + coords[i] * _M_MATRIX[i][j]
        out.append(acc)
    return Triple(out[0], out[1], out[2])


def triple_norm(t: Triple) -> Fraction:
    return t.norm()


def coset_of(t: Triple) -> CosetLabel:
    """Coset label of a lattice triple; raises if the triple is not in L."""
    lam = EisInt(1, 2)
    shift = None
    total = EisRat()
    for a in t:
        scaled = a * lam
        if not scaled.is_integral():
            raise LatticeMembershipError(f"{a!r} is not in Z[w] + k/lam")
        residue = (scaled.num.x + scaled.num.y) % 3
        if shift is None:
            shift = residue
        elif residue != shift:
            raise LatticeMembershipError(f"mixed shift classes in {t!r}")
        total = total + a
    j = (total.num.x + total.num.y) % 3 if total.is_integral() else None
    if j is None:
        raise LatticeMembershipError(f"coordinate sum of {t!r} is not integral")
    assert shift is not None
    return CosetLabel(j, shift)


def phi(t: Triple) -> Monomial:
    """Monomial weight q^|t|^2 z^T(sum) w^T(sum/lam), scaled by 3.

    Defined only on lattice triples: there the total norm is a third-integer
    and the coordinate sum is integral, so all three scaled exponents are
    integers.
    """
    coset_of(t)  # membership check
    total = EisRat()
    for a in t:
        total = total + a
    q3 = 3 * t.norm()
    if q3.denominator != 1:
        raise LatticeMembershipError(f"norm of {t!r} is off the thirds grid")
    s = total.as_eisint()
    return Monomial(int(q3), 3 * s.trace(), 3 * s.trace_div_lambda())


def _point_rat(p) -> EisRat:
    return EisRat.from_eisint(p.beta) + INV_LAMBDA * p.shift_k


def lattice_triples(max_norm3: int) -> Iterator[tuple[CosetLabel, Triple]]:
    """All lattice triples with 3*|t|^2 <= max_norm3, deterministic order.

    Coordinates are drawn per shift class from the sorted point lists, so
    the first counterexample any sweep reports is reproducible.
    """
    for k in (0, 1, 2):
        pts = shifted_points(k, max_norm3)
        rats = [(_point_rat(p), p.norm3, (p.beta.x + p.beta.y) % 3) for p in pts]
        for r0, n0, e0 in rats:
            if n0 > max_norm3:
                break
            for r1, n1, e1 in rats:
                if n0 + n1 > max_norm3:
                    break
                for r2, n2, e2 in rats:
                    if n0 + n1 + n2 > max_norm3:
                        break
                    # sum = beta0+beta1+beta2 - k*lam, and lam has residue 0
                    j = (e0 + e1 + e2) % 3
                    yield CosetLabel(j, k), Triple(r0, r1, r2)


@dataclass
class CheckReport:
    """Outcome of one exhaustive sweep."""

    check: str
    bound_or_order: int | str
    status: str = "ok"
    counterexample: dict | None = None
    triples: int = 0

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "bound_or_order": self.bound_or_order,
            "status": self.status,
            "counterexample": self.counterexample,
            "triples": self.triples,
        }


def _norm3_bound(norm_bound: int | Fraction) -> int:
    scaled = 3 * Fraction(norm_bound)
    if scaled.denominator != 1:
        raise ValueError(f"norm bound {norm_bound} is off the thirds grid")
    return int(scaled)


def _bound_repr(norm_bound: int | Fraction) -> int | str:
    return norm_bound if isinstance(norm_bound, int) else str(norm_bound)


def verify_m_action(norm_bound: int | Fraction) -> CheckReport:
    """Check that the M transform maps coset (j, k) to (-k, j), preserving
    norm, over every lattice triple up to the bound."""
    report = CheckReport("M_action", _bound_repr(norm_bound))
    for label, t in lattice_triples(_norm3_bound(norm_bound)):
        report.triples += 1
        image = apply(t, Transform.M)
        expected = CosetLabel((-label.k) % 3, label.j)
        if coset_of(image) != expected or image.norm() != t.norm():
            report.status = "fail"
            report.counterexample = t.to_dict()
            return report
    return report


def verify_n_action(norm_bound: int | Fraction) -> CheckReport:
    """Check that the N transform maps coset (j, k) to (j+k, k), preserves
    norm, and fixes the first coordinate."""
    report = CheckReport("N_action", _bound_repr(norm_bound))
    for label, t in lattice_triples(_norm3_bound(norm_bound)):
        report.triples += 1
        image = apply(t, Transform.N)
        expected = CosetLabel((label.j + label.k) % 3, label.k)
        ok = (
            coset_of(image) == expected
            and image.norm() == t.norm()
            and image.a0 == t.a0
        )
        if not ok:
            report.status = "fail"
            report.counterexample = t.to_dict()
            return report
    return report


def verify_phi_pullback(norm_bound: int | Fraction) -> CheckReport:
    """Check phi(t) against the first coordinate of the M image:
    q3 = 3|image|^2, z3 = -9*T(image_0/lam), w3 = 3*T(image_0)."""
    report = CheckReport("phi_pullback", _bound_repr(norm_bound))
    for _, t in lattice_triples(_norm3_bound(norm_bound)):
        report.triples += 1
        image = apply(t, Transform.M)
        q3 = 3 * image.norm()
        z3 = -9 * image.a0.trace_div_lambda()
        w3 = 3 * image.a0.trace()
        if (
            q3.denominator != 1
            or z3.denominator != 1
            or w3.denominator != 1
            or phi(t) != Monomial(int(q3), int(z3), int(w3))
        ):
            report.status = "fail"
            report.counterexample = t.to_dict()
            return report
    return report


def verify_v_stability(norm_bound: int | Fraction) -> CheckReport:
    """Check that both transforms preserve equality of the last two
    coordinates."""
    report = CheckReport("V_stability", _bound_repr(norm_bound))
    for _, t in lattice_triples(_norm3_bound(norm_bound)):
        if not t.in_v():
            continue
        report.triples += 1
        if not (apply(t, Transform.M).in_v() and apply(t, Transform.N).in_v()):
            report.status = "fail"
            report.counterexample = t.to_dict()
            return report
    return report


def verify_partition(norm_bound: int | Fraction) -> CheckReport:
    """Check that the nine labels all occur and coset_of agrees with the
    enumeration's own labeling on every triple.

    Every coset contains a triple of norm 1 (a unit in one slot, or three
    norm-1/3 points), so full label coverage is required exactly when the
    bound is at least 1; below that only the zero triple exists.
    """
    bound3 = _norm3_bound(norm_bound)
    report = CheckReport("partition", _bound_repr(norm_bound))
    seen: dict[CosetLabel, int] = {}
    for label, t in lattice_triples(bound3):
        report.triples += 1
        if coset_of(t) != label:
            report.status = "fail"
            report.counterexample = t.to_dict()
            return report
        seen[label] = seen.get(label, 0) + 1
    if len(seen) != (9 if bound3 >= 3 else 1):
        report.status = "fail"
    return report


def coset_sum(label: CosetLabel, n: int, restrict_v: bool = False) -> TriSeries:
    """Sum of q^|t|^2 z^(-3*T(t0/lam)) w^(T(t0)) over the coset's triples of
    norm <= n, optionally restricted to equal last two coordinates.

    Integer arithmetic throughout: for a point beta + k/lam the pulled-back
    scaled exponents are z3 = -9*T(beta/lam) + 6k and w3 = 3*T(beta).
    """
    if n < 0:
        raise ValueError("negative order")
    j, k = label.j % 3, label.k % 3
    max_norm3 = 3 * n
    pts = [
        (p.norm3, -9 * p.beta.trace_div_lambda() + 6 * k, 3 * p.beta.trace(),
         (p.beta.x + p.beta.y) % 3)
        for p in shifted_points(k, max_norm3)
    ]
    one = EisInt(1, 0)
    terms: dict[Monomial, EisInt] = {}

    def add(q3: int, z3: int, w3: int) -> None:
        key = Monomial(q3, z3, w3)
        terms[key] = terms.get(key, EisInt()) + one

    if restrict_v:
        for n0, z3, w3, e0 in pts:
            for n1, _, _, e1 in pts:
                if n0 + 2 * n1 > max_norm3:
                    continue
                if (e0 + 2 * e1) % 3 == j:
                    add(n0 + 2 * n1, z3, w3)
    else:
        for n0, z3, w3, e0 in pts:
            for n1, _, _, e1 in pts:
                if n0 + n1 > max_norm3:
                    break
                for n2, _, _, e2 in pts:
                    if n0 + n1 + n2 > max_norm3:
                        break
                    if (e0 + e1 + e2) % 3 == j:
                        add(n0 + n1 + n2, z3, w3)
    return TriSeries(max_norm3, terms)
