"""Rank-2 intersection arithmetic on the blow-up of 3-space along a curve.

Blowing up P^3 along the double curve of a generic projection gives a
threefold T whose divisor lattice has rank 2, spanned by the hyperplane
pullback H and the exceptional E.  The strict transform of the surface is
S_T = deg_s * H - 2 E (the projection is double along the curve), and
K_T = -4 H + E.  Restricted to the normalized surface these give two linear
functionals on curve classes:

    st_dot(C) = deg_s * C.H - 2 * C.Gamma_W
    kt_dot(C) = -4 * C.H + C.Gamma_W

where Gamma_W is the double point class.  The second contraction of the
two-ray game on T is classified by the signs of these numbers on the chosen
extremal curve class.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .lattice import DivisorClass, LatticeMismatchError, pair
from .projection import ProjectionModel

# a generic projection is double along its double curve, and K of P^3 is -4H
DOUBLE_LOCUS_MULTIPLICITY = 2
AMBIENT_CANONICAL_DEGREE = -4


@dataclass(frozen=True)
class BlowupThreefold:
    projection: ProjectionModel

    @property
    def h_restrict(self) -> DivisorClass:
        """Restriction of the hyperplane pullback: the polarization class."""
        return self.projection.surface.polarization

    @property
    def e_restrict(self) -> DivisorClass:
        """Restriction of the exceptional: the double point class."""
        return self.projection.gamma_w

    @property
    def sing_points(self) -> int | None:
        """Count of half(1,-1,1) points of T: the triple points of the curve."""
        return self.projection.triple_points

    def _check(self, c: DivisorClass) -> None:
        if c.lattice != self.projection.surface.lattice:
            raise LatticeMismatchError(
                "curve class must live on the surface's lattice"
            )


class RayKind(enum.Enum):
    FIBRATION = "FIBRATION"
    BIRATIONAL_CONTRACTION_FANO = "BIRATIONAL_CONTRACTION_FANO"
    FLOP_WALL_CANONICAL_FANO = "FLOP_WALL_CANONICAL_FANO"
    UNCLASSIFIED = "UNCLASSIFIED"


@dataclass(frozen=True)
class RayVerdict:
    ray: DivisorClass
    s_dot: int
    k_dot: int
    kind: RayKind
    contracting_divisor: tuple[int, int] | None = None
    assumption: str | None = None

    def to_json_dict(self) -> dict:
        d: dict = {
            "ray": list(self.ray.coeffs),
            "s_dot": self.s_dot,
            "k_dot": self.k_dot,
            "kind": self.kind.value,
        }
        if self.contracting_divisor is not None:
            d["contracting_divisor"] = list(self.contracting_divisor)
        if self.assumption is not None:
            d["assumption"] = self.assumption
        return d


def st_dot(t: BlowupThreefold, c: DivisorClass) -> int:
    """Degree of the strict transform of the surface on the curve class c."""
    t._check(c)
    return t.projection.deg_s * pair(c, t.h_restrict) - DOUBLE_LOCUS_MULTIPLICITY * pair(
        c, t.e_restrict
    )


def kt_dot(t: BlowupThreefold, c: DivisorClass) -> int:
    """Degree of the canonical class of T on the curve class c."""
    t._check(c)
    return AMBIENT_CANONICAL_DEGREE * pair(c, t.h_restrict) + pair(c, t.e_restrict)


def is_nef_on(t: BlowupThreefold, generators: list[DivisorClass]) -> bool:
    """Whether the surface class is nef against the declared curve cone.

    Nefness is only ever asserted against an explicit generator list; an
    empty list would make the claim vacuous and is refused.
    """
    if not generators:
        raise ValueError("nefness needs a nonempty list of cone generators")
    return all(st_dot(t, c) >= 0 for c in generators)


def divisor_dot(t: BlowupThreefold, he: tuple[int, int], c: DivisorClass) -> int:
    """Pair the rank-2 divisor class a*H + b*E of T with a curve class on S."""
    a, b = he
    return a * pair(c, t.h_restrict) + b * pair(c, t.e_restrict)


def classify_second_ray(
    t: BlowupThreefold,
    ray: DivisorClass,
    cone: list[DivisorClass] | None = None,
    contracting_divisor: tuple[int, int] | None = None,
) -> RayVerdict:
    """Classify the contraction of the second extremal ray.

    Sign patterns (s = st_dot, k = kt_dot on the ray):

    * s < 0, k = 0: the surface is negative on a canonically trivial ray, a
      flop wall; past it the threefold is Fano (FLOP_WALL_CANONICAL_FANO).
    * s = 0, k < 0 with a declared divisor pairing negatively against the
      ray: a birational contraction (BIRATIONAL_CONTRACTION_FANO).  The
      divisor's effectivity is the caller's assumption and is recorded on the
      verdict, not derived.
    * s = 0, k < 0, the surface nef on the declared cone, and the exact
      numerology deg_s^2 = 4 * deg_gamma: the surface class is pulled back
      from a fibration (FIBRATION).

    Anything else is UNCLASSIFIED, a value rather than an exception: the
    caller may well probe rays outside the catalogue.
    """
    s = st_dot(t, ray)
    k = kt_dot(t, ray)
    if s < 0 and k == 0:
        return RayVerdict(ray=ray, s_dot=s, k_dot=k, kind=RayKind.FLOP_WALL_CANONICAL_FANO)
    if s == 0 and k < 0:
        if contracting_divisor is not None:
            if divisor_dot(t, contracting_divisor, ray) < 0:
                return RayVerdict(
                    ray=ray,
                    s_dot=s,
                    k_dot=k,
                    kind=RayKind.BIRATIONAL_CONTRACTION_FANO,
                    contracting_divisor=contracting_divisor,
                    assumption=(
                        "effectivity of the declared contracting divisor is "
                        "assumed, not derived"
                    ),
                )
            return RayVerdict(ray=ray, s_dot=s, k_dot=k, kind=RayKind.UNCLASSIFIED)
        if cone:
            p = t.projection
            if is_nef_on(t, cone) and p.deg_s**2 == 4 * p.deg_gamma:
                return RayVerdict(ray=ray, s_dot=s, k_dot=k, kind=RayKind.FIBRATION)
    return RayVerdict(ray=ray, s_dot=s, k_dot=k, kind=RayKind.UNCLASSIFIED)


def fano_check(t: BlowupThreefold, rays: list[DivisorClass]) -> bool:
    """Whether -K_T is positive on every supplied extremal curve class.

    The fibers of the exceptional divisor over the blown-up curve always have
    -K_T degree 1 > 0, so that ray is built in; the caller supplies the rest.
    """
    if not rays:
        raise ValueError("fano check needs the non-fiber extremal rays")
    return all(-kt_dot(t, c) > 0 for c in rays)
