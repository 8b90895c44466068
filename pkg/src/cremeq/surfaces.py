"""Named surface models used by the built-in scenarios.

Each model is a PolarizedSurface: a divisor-class lattice together with the
hyperplane class of a degree-6 embedding-then-projection to 3-space.  Three
classical degree-6 surfaces are shipped:

* the quadric with the (1,3) polarization (a rational ruled sextic of
  sectional genus 0),
* the Bordiga surface (plane blown up in 10 points, quartics through them,
  sectional genus 3),
* the generic projection of the del Pezzo sextic (plane blown up in 3 points,
  anticanonical, sectional genus 1).

The SZModel is the rank-3 lattice of the plane blown up in two points,
presented in the basis of its three (-1)-classes.  It admits two blow-downs,
one to the quadric and one to the plane, and the two pullback predicates that
come with them; the obstruction machinery lives on it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import (
    BlowupMap,
    DivisorClass,
    EffectivityRule,
    IntersectionLattice,
    LatticeMismatchError,
    genus,
    pair,
)


@dataclass(frozen=True)
class PolarizedSurface:
    lattice: IntersectionLattice
    polarization: DivisorClass
    name: str

    def __post_init__(self) -> None:
        if self.polarization.lattice != self.lattice:
            raise LatticeMismatchError(
                f"polarization of {self.name!r} lives on the wrong lattice"
            )

    @property
    def degree(self) -> int:
        return pair(self.polarization, self.polarization)

    @property
    def sectional_genus(self) -> int:
        return genus(self.polarization)

    @property
    def k_squared(self) -> int:
        k = self.lattice.canonical
        return pair(k, k)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "lattice": self.lattice.to_json_dict(),
            "polarization": list(self.polarization.coeffs),
        }

    @staticmethod
    def from_json_dict(d: dict) -> "PolarizedSurface":
        lat = IntersectionLattice.from_json_dict(d["lattice"])
        return PolarizedSurface(
            lattice=lat, polarization=lat(d["polarization"]), name=d["name"]
        )


def _f0_lattice() -> IntersectionLattice:
    # hyperbolic plane: the two rulings of a smooth quadric
    return IntersectionLattice(
        name="F0",
        basis=("f1", "f2"),
        gram=((0, 1), (1, 0)),
        canonical_coeffs=(-2, -2),
        effectivity=EffectivityRule.ALL_COORDS_NONNEG,
    )


def _plane_lattice() -> IntersectionLattice:
    return IntersectionLattice(
        name="P2",
        basis=("L",),
        gram=((1,),),
        canonical_coeffs=(-3,),
        effectivity=EffectivityRule.ALL_COORDS_NONNEG,
    )


def _blowup_plane_lattice(
    n: int,
    name: str,
    effectivity: EffectivityRule | None,
    generators: tuple[tuple[int, ...], ...] | None = None,
) -> IntersectionLattice:
    basis = ("L",) + tuple(f"E{i}" for i in range(1, n + 1))
    gram = tuple(
        tuple((1 if i == j == 0 else -1 if i == j else 0) for j in range(n + 1))
        for i in range(n + 1)
    )
    return IntersectionLattice(
        name=name,
        basis=basis,
        gram=gram,
        canonical_coeffs=(-3,) + (1,) * n,
        effectivity=effectivity,
        generators=generators,
    )


def make_f0_sextic() -> PolarizedSurface:
    """The quadric embedded by the (1,3) system, then generically projected.

    Degree 2*1*3 = 6, sectional genus 0.  The f2 ruling maps to the lines of
    the image, the f1 ruling to twisted cubics.
    """
    lat = _f0_lattice()
    return PolarizedSurface(lattice=lat, polarization=lat((1, 3)), name="f0_sextic")


def make_bordiga() -> PolarizedSurface:
    """Bordiga surface: Bl_10 P^2 embedded by quartics through the points.

    Degree 16 - 10 = 6, sectional genus 3.  Effectivity is declared by the
    generator list (c, m_1, ..., m_10) with c the strict transform of a line
    through the first two points and m_i the point exceptionals; that list is
    a declared decomposition basis for curve classes, not a claim about the
    full effective cone.
    """
    c = (1, -1, -1) + (0,) * 8
    ms = tuple(
        tuple(1 if j == i else 0 for j in range(11)) for i in range(1, 11)
    )
    lat = _blowup_plane_lattice(
        10,
        name="Bl10P2",
        effectivity=EffectivityRule.EXPLICIT_GENERATOR_LIST,
        generators=(c,) + ms,
    )
    return PolarizedSurface(
        lattice=lat, polarization=lat((4,) + (-1,) * 10), name="bordiga"
    )


def make_dp6() -> PolarizedSurface:
    """Del Pezzo sextic: Bl_3 P^2, anticanonically embedded, then projected.

    Degree 9 - 3 = 6, sectional genus 1.  No effectivity rule is declared on
    this lattice; nothing downstream needs one (the six lines are passed
    around explicitly where a curve cone is required).
    """
    lat = _blowup_plane_lattice(3, name="Bl3P2", effectivity=None)
    return PolarizedSurface(lattice=lat, polarization=lat((3, -1, -1, -1)), name="dp6")


def dp6_line_classes(lat: IntersectionLattice) -> tuple[DivisorClass, ...]:
    """The six (-1)-lines of the del Pezzo sextic: E_i and L - E_i - E_j."""
    es = [lat((0, 1, 0, 0)), lat((0, 0, 1, 0)), lat((0, 0, 0, 1))]
    ls = [
        lat((1, -1, -1, 0)),
        lat((1, -1, 0, -1)),
        lat((1, 0, -1, -1)),
    ]
    return tuple(es + ls)


def make_blowup_plane(n_points: int, polarization: tuple[int, ...], name: str | None = None) -> PolarizedSurface:
    """Generic constructor: plane blown up in n_points with a chosen polarization.

    The lattice carries the STANDARD_BLOWUP_CONE effectivity declaration,
    i.e. the conservative cone spanned by the line pullback and the
    exceptionals.
    """
    if n_points < 0:
        raise ValueError("n_points must be >= 0")
    lat = _blowup_plane_lattice(
        n_points,
        name=name or f"Bl{n_points}P2",
        effectivity=EffectivityRule.STANDARD_BLOWUP_CONE,
    )
    return PolarizedSurface(
        lattice=lat,
        polarization=lat(polarization),
        name=name or f"blowup_plane_{n_points}",
    )


@dataclass(frozen=True)
class SZModel:
    """Plane blown up in two points, in the basis of its three (-1)-classes.

    Basis (F1, F2, M): the two point exceptionals and the strict transform of
    the line joining the points.  Contracting M is the blow-down to the
    quadric; contracting F1 and F2 is the blow-down to the plane.  Both
    blow-downs are carried as validated BlowupMap values, and the two
    pullback sublattices have the hyperplane descriptions

        from the quadric:  a + b = c,
        from the plane:    a = b = c,

    for a class with coefficients (a, b, c).
    """

    lattice: IntersectionLattice
    from_f0: BlowupMap
    from_plane: BlowupMap

    @property
    def f0(self) -> IntersectionLattice:
        return self.from_f0.source

    @property
    def plane(self) -> IntersectionLattice:
        return self.from_plane.source

    def is_f0_pullback(self, c: DivisorClass) -> bool:
        if c.lattice != self.lattice:
            raise LatticeMismatchError("class is not on the SZ lattice")
        a, b, m = c.coeffs
        return a + b == m

    def is_plane_pullback(self, c: DivisorClass) -> bool:
        if c.lattice != self.lattice:
            raise LatticeMismatchError("class is not on the SZ lattice")
        a, b, m = c.coeffs
        return a == b == m

    @property
    def rulings(self) -> tuple[DivisorClass, DivisorClass]:
        """Strict transforms of the two rulings of the quadric: (0,1,1), (1,0,1)."""
        return self.lattice((0, 1, 1)), self.lattice((1, 0, 1))


def make_sz() -> SZModel:
    lat = IntersectionLattice(
        name="SZ",
        basis=("F1", "F2", "M"),
        gram=((-1, 0, 1), (0, -1, 1), (1, 1, -1)),
        canonical_coeffs=(-2, -2, -3),
        effectivity=EffectivityRule.ALL_COORDS_NONNEG,
    )
    from_f0 = BlowupMap(
        source=_f0_lattice(),
        target=lat,
        matrix=((1, 0), (0, 1), (1, 1)),
        exceptional_classes=(lat((0, 0, 1)),),
    )
    from_plane = BlowupMap(
        source=_plane_lattice(),
        target=lat,
        matrix=((1,), (1,), (1,)),
        exceptional_classes=(lat((1, 0, 0)), lat((0, 1, 0))),
    )
    return SZModel(lattice=lat, from_f0=from_f0, from_plane=from_plane)
