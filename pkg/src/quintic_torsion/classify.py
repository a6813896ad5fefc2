"""Classification of quintic torsion growth for rational elliptic curves.

Given a curve over Q, decide whether its torsion grows over some quintic
number field, return the unique field (up to isomorphism) with a verified
witness point when it does, and aggregate the classification over curve
collections.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .curves import CurveQ
from .numberfield import (
    NumberField,
    are_isomorphic,
    is_galois,
    normalized_defining_poly,
)
from .polynomials import PolyQ
from .quintic import (
    can_have_torsion_over,
    order5_field_factors,
    order11_field_factors,
    order25_field_factors,
    points_of_order_over,
)
from .torsion import (
    PHI1,
    PHIQ5,
    PHIQ5_CM,
    TorsionGroup,
    torsion_structure_over_Q,
)


@dataclass(frozen=True)
class PhiSets:
    """The finite torsion classification sets."""

    phi1: frozenset
    phiQ5: frozenset
    phiQ5_cm: frozenset

    def phiQ5_of(self, G: TorsionGroup) -> frozenset:
        table = {
            TorsionGroup(1, 1): {TorsionGroup(1, 1), TorsionGroup(1, 5),
                                 TorsionGroup(1, 11)},
            TorsionGroup(1, 2): {TorsionGroup(1, 2), TorsionGroup(1, 10)},
            TorsionGroup(1, 5): {TorsionGroup(1, 5), TorsionGroup(1, 25)},
        }
        if G not in self.phi1:
            raise ValueError("%s is not a rational torsion structure" % G.label())
        return frozenset(table.get(G, {G}))


def phi_sets() -> PhiSets:
    return PhiSets(PHI1, PHIQ5, PHIQ5_CM)


#: the only (base, grown) pairs that occur over quintic fields
ALLOWED_GROWTH_PAIRS = frozenset([
    (TorsionGroup(1, 1), TorsionGroup(1, 5)),
    (TorsionGroup(1, 1), TorsionGroup(1, 11)),
    (TorsionGroup(1, 2), TorsionGroup(1, 10)),
    (TorsionGroup(1, 5), TorsionGroup(1, 25)),
])

#: j-invariants gating the 11-division route: the unique CM class with
#: quintic 11-torsion plus the two non-CM curves admitting a rational
#: 11-isogeny with a degree-5 point field
ELEVEN_ROUTE_J = (Fraction(-32768), Fraction(-121), Fraction(-24729001))


@dataclass(frozen=True)
class GrowthInfo:
    field: NumberField
    torsion: TorsionGroup
    galois: bool
    certificate: dict


@dataclass(frozen=True)
class GrowthReport:
    label: str
    a_invariants: tuple
    base: TorsionGroup
    growth: GrowthInfo | None

    def to_dict(self):
        out = {
            "label": self.label,
            "a_invariants": [str(a) for a in self.a_invariants],
            "base_torsion": [self.base.m, self.base.n],
            "growth": None,
            "certificate": None,
        }
        if self.growth is not None:
            out["growth"] = {
                "field_poly": self.growth.field.serialize(),
                "torsion": [self.growth.torsion.m, self.growth.torsion.n],
                "galois": self.growth.galois,
            }
            out["certificate"] = self.growth.certificate
        return out


def _special_eleven_models():
    from .dbio import bundled_records

    out = {}
    for rec in bundled_records():
        if rec.label in ("121a2", "121c2", "121b1"):
            out[tuple(rec.a_invariants)] = rec.label
    return out


_SPECIAL_CACHE = None


def known_cm_special_cases(E: CurveQ):
    """Fast path for the three curves with quintic 11-torsion: an exact
    model match against the bundled database.  Returns the matched label or
    None; the division-polynomial route still runs as the proof."""
    global _SPECIAL_CACHE
    if _SPECIAL_CACHE is None:
        _SPECIAL_CACHE = _special_eleven_models()
    key = tuple(E.serialize())
    return _SPECIAL_CACHE.get(key)


def _point_certificate(P, order, factor):
    if P.field is None:
        x = [str(P.x)]
        y = [str(P.y)]
    else:
        x = [str(c) for c in P.x.coords]
        y = [str(c) for c in P.y.coords]
    return {
        "witness_x": x,
        "witness_y": y,
        "order": order,
        "division_factor": [int(c) for c in factor.to_int_coeffs()],
        "verified": True,
    }


def _candidate_growth(E, Ei, u, base, base_wit, fac, order):
    """Try to realize growth through one degree-5 factor; returns GrowthInfo
    or None.  The witness order is verified by the group law in the field."""
    K = NumberField(fac.monic(), skip_check=True)
    if not can_have_torsion_over(Ei, K, order):
        return None
    pts = points_of_order_over(Ei, K, order, factors=[fac])
    if not pts:
        return None
    P = pts[0]
    if order == 5:
        new = TorsionGroup(base.m, base.n * 5)
        wit_order = 5
        if base.n % 2 == 0 and base.n == 2 and base.m == 1:
            # exhibit the full order-10 point for the cyclic C10 witness
            two = base_wit.get("two") or []
            if two:
                Q2 = E.point(two[0].x, two[0].y, field=K)
                P10 = P
                # ensure P lives on E's model: points_of_order_over used the
                # integral model, so rescale first
                P10 = _rescale_point(E, P, u, K)
                cand = P10 + Q2
                if cand.order(cap=50) == 10:
                    cert = _point_certificate(cand, 10, fac)
                    return GrowthInfo(K, new, is_galois(K), cert)
        Pn = _rescale_point(E, P, u, K)
        cert = _point_certificate(Pn, wit_order, fac)
        return GrowthInfo(K, new, is_galois(K), cert)
    if order == 25:
        new = TorsionGroup(base.m, base.n * 5)
        Pn = _rescale_point(E, P, u, K)
        cert = _point_certificate(Pn, 25, fac)
        return GrowthInfo(K, new, is_galois(K), cert)
    if order == 11:
        new = TorsionGroup(1, 11)
        Pn = _rescale_point(E, P, u, K)
        cert = _point_certificate(Pn, 11, fac)
        return GrowthInfo(K, new, is_galois(K), cert)
    raise ValueError("unsupported order")


def _rescale_point(E, P, u, K):
    if u == 1:
        return E.point(P.x, P.y, field=K)
    iu2 = K.rational(Fraction(1, u * u))
    iu3 = K.rational(Fraction(1, u ** 3))
    return E.point(P.x * iu2, P.y * iu3, field=K)


def quintic_growth(E: CurveQ, label: str = "", force_eleven: bool = False) -> GrowthReport:
    """Decide whether E(K)_tors grows over some quintic field K and return
    the unique growth with a verified certificate.

    Dispatch: bases other than C1, C2, C5 never grow; C1 and C2 grow
    through degree-5 factors of the 5-division polynomial (plus the
    11-division route for the three special curves, gated by j unless
    forced); C5 grows only to C25, through a rational 25-isogeny.
    """
    Ei, u = E.integral_model()
    base, base_wit = torsion_structure_over_Q(E)
    candidates = []
    if base in (TorsionGroup(1, 1), TorsionGroup(1, 2)):
        for fac in order5_field_factors(Ei):
            candidates.append((fac, 5))
        if base == TorsionGroup(1, 1) and (force_eleven or E.j in ELEVEN_ROUTE_J):
            if can_have_torsion_over(Ei, _zeta11_plus_field(), 11):
                for fac in order11_field_factors(Ei):
                    candidates.append((fac, 11))
    elif base == TorsionGroup(1, 5):
        for fac in order25_field_factors(Ei):
            candidates.append((fac, 25))
    growths = []
    for fac, order in candidates:
        info = _candidate_growth(E, Ei, u, base, base_wit, fac, order)
        if info is not None:
            growths.append(info)
    # Growth fields are unique up to isomorphism; distinct division factors
    # may present the same field
    unique = []
    for info in growths:
        if not any(are_isomorphic(info.field, other.field) and
                   info.torsion == other.torsion for other in unique):
            unique.append(info)
    if len(unique) > 1:
        raise AssertionError("more than one quintic growth field for %s"
                             % (label or E.serialize()))
    growth = None
    if unique:
        info = unique[0]
        if (base, info.torsion) not in ALLOWED_GROWTH_PAIRS:
            raise AssertionError("growth pair (%s, %s) outside the classification"
                                 % (base.label(), info.torsion.label()))
        if info.torsion not in PHIQ5:
            raise AssertionError("grown torsion outside the quintic list")
        normalized = normalized_defining_poly(info.field)
        growth = GrowthInfo(NumberField(normalized, skip_check=True),
                            info.torsion, info.galois, info.certificate)
    return GrowthReport(label, E.a_invariants(), base, growth)


_Z11_FIELD = None


def _zeta11_plus_field():
    global _Z11_FIELD
    if _Z11_FIELD is None:
        x = PolyQ.x()
        _Z11_FIELD = NumberField(x ** 5 + x ** 4 - 4 * x ** 3 - 3 * x ** 2
                                 + 3 * x + 1, skip_check=True)
    return _Z11_FIELD


@dataclass
class ScanReport:
    reports: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    errors: list = field(default_factory=list)

    def growth_labels(self):
        return sorted(r.label for r in self.reports if r.growth is not None)

    def h_value(self):
        """Maximal number of growth fields per curve seen in the scan."""
        return max((1 for r in self.reports if r.growth is not None), default=0)

    def to_dict(self):
        return {
            "curves": len(self.reports),
            "growth_count": sum(1 for r in self.reports if r.growth),
            "counts": {"%s->%s" % k: v for k, v in sorted(self.counts.items())},
            "growth_labels": self.growth_labels(),
            "h_Q5": self.h_value(),
            "errors": self.errors,
        }


def scan_records(records, max_conductor=None) -> ScanReport:
    """Run the growth classifier over curve records; checks the structural
    claims along the way (allowed pairs, 11-growth restricted to the three
    stored curves, at most one field per curve)."""
    out = ScanReport()
    special = {"121a2", "121c2", "121b1"}
    for rec in records:
        if max_conductor is not None and (rec.conductor == 0 or
                                          rec.conductor > max_conductor):
            continue
        try:
            E = CurveQ(*rec.a_invariants)
            rep = quintic_growth(E, label=rec.label)
        except ValueError as exc:
            out.errors.append("%s: %s" % (rec.label, exc))
            continue
        out.reports.append(rep)
        if rep.growth is not None:
            pair = (rep.base.label(), rep.growth.torsion.label())
            out.counts[pair] = out.counts.get(pair, 0) + 1
            if rep.growth.torsion == TorsionGroup(1, 11) and rep.label not in special:
                raise AssertionError("unexpected 11-growth at %s" % rep.label)
    return out
