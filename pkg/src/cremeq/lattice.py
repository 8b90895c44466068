"""Divisor class lattices with exact integer intersection pairing.

A lattice here is a free Z-module with a named basis, a symmetric integer
gram matrix, and a distinguished canonical class.  Classes are coefficient
vectors against that basis; the pairing of two classes is u^T gram v and is
always an exact Python int.

Lattice identity is nominal: classes living on lattices with different names
(or different structure) never combine, even if the gram matrices happen to
agree.  This is deliberate.  Mixing coefficients of a quadric's class group
with a blown-up plane's is the kind of silent bug this package exists to rule
out.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .linalg import invert_unimodular, solve_exact


class LatticeMismatchError(ValueError):
    """Arithmetic attempted between classes of different lattices."""


class AdjunctionParityError(ValueError):
    """C.(C+K) came out odd, so the genus formula does not apply."""


class EffectivityRuleError(ValueError):
    """Effectivity queried without a usable declared rule."""


class EffectivityRule(enum.Enum):
    # Effectivity is *declared*, never computed from geometry.  A lattice
    # either ships with a rule or is_effective refuses to answer.
    ALL_COORDS_NONNEG = "ALL_COORDS_NONNEG"
    STANDARD_BLOWUP_CONE = "STANDARD_BLOWUP_CONE"
    EXPLICIT_GENERATOR_LIST = "EXPLICIT_GENERATOR_LIST"


@dataclass(frozen=True)
class IntersectionLattice:
    name: str
    basis: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    canonical_coeffs: tuple[int, ...]
    effectivity: EffectivityRule | None = None
    generators: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        n = len(self.basis)
        if len(self.gram) != n or any(len(row) != n for row in self.gram):
            raise ValueError(f"gram matrix must be {n}x{n} for basis {self.basis}")
        for i in range(n):
            for j in range(n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("gram matrix must be symmetric")
        if len(self.canonical_coeffs) != n:
            raise ValueError("canonical class has wrong length")
        if self.effectivity is EffectivityRule.EXPLICIT_GENERATOR_LIST:
            if not self.generators:
                raise EffectivityRuleError(
                    f"lattice {self.name!r}: EXPLICIT_GENERATOR_LIST needs a "
                    "nonempty generator list"
                )
            for g in self.generators:
                if len(g) != n:
                    raise ValueError("effectivity generator has wrong length")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __call__(self, coeffs) -> "DivisorClass":
        return DivisorClass(self, tuple(int(c) for c in coeffs))

    def divisor(self, *coeffs: int) -> "DivisorClass":
        return self(coeffs)

    @property
    def canonical(self) -> "DivisorClass":
        return self(self.canonical_coeffs)

    def pair(self, a: "DivisorClass", b: "DivisorClass") -> int:
        return pair(a, b)

    def genus(self, c: "DivisorClass") -> int:
        return genus(c)

    def to_json_dict(self) -> dict:
        d = {
            "name": self.name,
            "basis": list(self.basis),
            "gram": [list(row) for row in self.gram],
            "canonical": list(self.canonical_coeffs),
            "effectivity": self.effectivity.value if self.effectivity else None,
        }
        if self.generators is not None:
            d["generators"] = [list(g) for g in self.generators]
        return d

    @staticmethod
    def from_json_dict(d: dict) -> "IntersectionLattice":
        rule = EffectivityRule(d["effectivity"]) if d.get("effectivity") else None
        gens = d.get("generators")
        return IntersectionLattice(
            name=d["name"],
            basis=tuple(d["basis"]),
            gram=tuple(tuple(int(v) for v in row) for row in d["gram"]),
            canonical_coeffs=tuple(int(v) for v in d["canonical"]),
            effectivity=rule,
            generators=tuple(tuple(int(v) for v in g) for g in gens) if gens else None,
        )


@dataclass(frozen=True)
class DivisorClass:
    lattice: IntersectionLattice
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.lattice.dim:
            raise ValueError(
                f"class has {len(self.coeffs)} coefficients on a "
                f"{self.lattice.dim}-dimensional lattice"
            )

    def _check_same(self, other: "DivisorClass") -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError("expected a DivisorClass")
        if self.lattice != other.lattice:
            raise LatticeMismatchError(
                f"classes live on different lattices: "
                f"{self.lattice.name!r} vs {other.lattice.name!r}"
            )

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_same(other)
        return self.lattice(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_same(other)
        return self.lattice(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return self.lattice(tuple(-a for a in self.coeffs))

    def __mul__(self, k: int) -> "DivisorClass":
        if not isinstance(k, int):
            return NotImplemented
        return self.lattice(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def dot(self, other: "DivisorClass") -> int:
        return pair(self, other)

    def to_json_dict(self) -> dict:
        return {"lattice": self.lattice.name, "coeffs": list(self.coeffs)}

    @staticmethod
    def from_json_dict(d: dict, lattice: IntersectionLattice) -> "DivisorClass":
        if d["lattice"] != lattice.name:
            raise LatticeMismatchError(
                f"class serialized against {d['lattice']!r}, "
                f"got lattice {lattice.name!r}"
            )
        return lattice(d["coeffs"])


def pair(a: DivisorClass, b: DivisorClass) -> int:
    """Intersection number a.b, an exact integer."""
    a._check_same(b)
    gram = a.lattice.gram
    total = 0
    for i, u in enumerate(a.coeffs):
        if u == 0:
            continue
        row = gram[i]
        total += u * sum(r * v for r, v in zip(row, b.coeffs) if v != 0)
    return total


def genus(c: DivisorClass) -> int:
    """Arithmetic genus from adjunction: C.(C+K)/2 + 1.

    Raises AdjunctionParityError when C.(C+K) is odd, which cannot happen on a
    surface lattice with integral canonical class but can on an arbitrary
    user-supplied gram matrix.
    """
    t = pair(c, c + c.lattice.canonical)
    if t % 2 != 0:
        raise AdjunctionParityError(f"C.(C+K) = {t} is odd; genus undefined")
    return t // 2 + 1


def is_effective(c: DivisorClass) -> bool:
    """Evaluate the lattice's declared effectivity rule on c.

    The rules are declarations about a chosen cone, not computed geometry:

    * ALL_COORDS_NONNEG: the basis classes generate the declared cone.
    * STANDARD_BLOWUP_CONE: lattice must be in the standard blow-up
      presentation diag(d, -1, ..., -1); the cone is spanned by the pullback
      polarization and the exceptionals, i.e. again coordinatewise >= 0.
      This is a conservative subcone (strict transforms fall outside it).
    * EXPLICIT_GENERATOR_LIST: c must be a nonnegative integer combination of
      the declared generators.  Generators must be linearly independent, which
      every shipped model satisfies; dependent lists are refused rather than
      half-answered.
    """
    L = c.lattice
    rule = L.effectivity
    if rule is None:
        raise EffectivityRuleError(
            f"lattice {L.name!r} has no declared effectivity rule"
        )
    if rule is EffectivityRule.ALL_COORDS_NONNEG:
        return all(v >= 0 for v in c.coeffs)
    if rule is EffectivityRule.STANDARD_BLOWUP_CONE:
        ok = all(
            L.gram[i][j] == 0 for i in range(L.dim) for j in range(L.dim) if i != j
        ) and all(L.gram[i][i] == -1 for i in range(1, L.dim))
        if not ok:
            raise EffectivityRuleError(
                f"lattice {L.name!r} is not in the standard blow-up "
                "presentation required by STANDARD_BLOWUP_CONE"
            )
        return all(v >= 0 for v in c.coeffs)
    # EXPLICIT_GENERATOR_LIST
    gens = L.generators
    if not gens:  # construction already guards this; keep the check local too
        raise EffectivityRuleError(f"lattice {L.name!r}: empty generator list")
    matrix = [[g[i] for g in gens] for i in range(L.dim)]
    status, xs = solve_exact(matrix, list(c.coeffs))
    if status == "underdetermined":
        raise EffectivityRuleError(
            f"lattice {L.name!r}: effectivity generators are linearly "
            "dependent; cannot decide membership with this rule"
        )
    if status == "inconsistent":
        return False
    assert xs is not None
    return all(x.denominator == 1 and x >= 0 for x in xs)


@dataclass(frozen=True)
class BlowupMap:
    """Pullback along a point blow-up (or a composite of them).

    target coefficients of a pulled-back class are matrix @ source
    coefficients.  Construction checks the three identities that make the map
    a blow-up on class groups: the pullback is an isometry, each exceptional
    is a (-1)-class orthogonal to every pullback, and the canonical classes
    satisfy K_target = pullback(K_source) + sum of exceptionals.
    """

    source: IntersectionLattice
    target: IntersectionLattice
    matrix: tuple[tuple[int, ...], ...]  # shape target.dim x source.dim
    exceptional_classes: tuple[DivisorClass, ...]

    def __post_init__(self) -> None:
        nt, ns = self.target.dim, self.source.dim
        if len(self.matrix) != nt or any(len(r) != ns for r in self.matrix):
            raise ValueError("pullback matrix has wrong shape")
        # isometry: P^T G_target P == G_source, checked entrywise
        cols = [self.pullback(self.source(tuple(int(i == j) for i in range(ns))))
                for j in range(ns)]
        for i in range(ns):
            for j in range(ns):
                if pair(cols[i], cols[j]) != self.source.gram[i][j]:
                    raise ValueError("pullback is not an isometry")
        for e in self.exceptional_classes:
            if e.lattice != self.target:
                raise LatticeMismatchError("exceptional class on wrong lattice")
            if pair(e, e) != -1:
                raise ValueError("exceptional class must have self-intersection -1")
            for col in cols:
                if pair(col, e) != 0:
                    raise ValueError("exceptional class must be orthogonal to pullbacks")
        k = self.pullback(self.source.canonical)
        for e in self.exceptional_classes:
            k = k + e
        if k.coeffs != self.target.canonical_coeffs:
            raise ValueError("canonical classes violate K' = p*K + sum(E)")

    def pullback(self, c: DivisorClass) -> DivisorClass:
        if c.lattice != self.source:
            raise LatticeMismatchError(
                f"pullback expects a class on {self.source.name!r}"
            )
        return self.target(
            tuple(sum(r * v for r, v in zip(row, c.coeffs)) for row in self.matrix)
        )


def blow_up_point(L: IntersectionLattice, label: str | None = None):
    """Blow up a point: extend by an orthogonal (-1)-class E, K += E.

    Returns (new_lattice, BlowupMap).  The new lattice carries *no* declared
    effectivity rule; blowing up does not tell us which cone the caller wants
    to assert afterwards.
    """
    if label is None:
        taken = set(L.basis)
        k = 1
        while f"E{k}" in taken:
            k += 1
        label = f"E{k}"
    if label in L.basis:
        raise ValueError(f"basis label {label!r} already in use")
    n = L.dim
    gram = tuple(
        tuple(list(row) + [0]) for row in L.gram
    ) + ((tuple([0] * n + [-1])),)
    L2 = IntersectionLattice(
        name=f"{L.name}+{label}",
        basis=L.basis + (label,),
        gram=gram,
        canonical_coeffs=L.canonical_coeffs + (1,),
    )
    matrix = tuple(
        tuple(int(i == j) for j in range(n)) for i in range(n)
    ) + (tuple([0] * n),)
    e = L2(tuple([0] * n + [1]))
    return L2, BlowupMap(source=L, target=L2, matrix=matrix, exceptional_classes=(e,))


@dataclass(frozen=True)
class BasisChange:
    """Unimodular change of presentation of one lattice.

    new_basis[j] is the j-th new basis vector written in old coordinates.
    to_new/to_old convert classes; the gram and canonical class of the new
    lattice are recomputed and therefore consistent by construction.
    """

    old: IntersectionLattice
    new: IntersectionLattice
    matrix: tuple[tuple[int, ...], ...]  # columns = new basis in old coords
    inverse: tuple[tuple[int, ...], ...] = field(repr=False)

    def to_new(self, c: DivisorClass) -> DivisorClass:
        if c.lattice != self.old:
            raise LatticeMismatchError("class not on the source presentation")
        return self.new(
            tuple(sum(r * v for r, v in zip(row, c.coeffs)) for row in self.inverse)
        )

    def to_old(self, c: DivisorClass) -> DivisorClass:
        if c.lattice != self.new:
            raise LatticeMismatchError("class not on the target presentation")
        return self.old(
            tuple(sum(r * v for r, v in zip(row, c.coeffs)) for row in self.matrix)
        )


def change_basis(
    L: IntersectionLattice,
    new_basis: list[tuple[int, ...]],
    labels: tuple[str, ...],
    name: str | None = None,
    effectivity: EffectivityRule | None = None,
    generators: tuple[tuple[int, ...], ...] | None = None,
) -> BasisChange:
    """Re-present L in the basis given by new_basis (vectors in old coords).

    The matrix must be unimodular; gram transforms as A^T G A and the
    canonical class by A^{-1}.
    """
    n = L.dim
    if len(new_basis) != n or len(labels) != n:
        raise ValueError("need exactly dim basis vectors and labels")
    A = [[new_basis[j][i] for j in range(n)] for i in range(n)]  # columns
    A_inv = invert_unimodular(A)
    gram2 = tuple(
        tuple(
            pair(L(new_basis[i]), L(new_basis[j])) for j in range(n)
        )
        for i in range(n)
    )
    k2 = tuple(
        sum(A_inv[i][j] * L.canonical_coeffs[j] for j in range(n)) for i in range(n)
    )
    L2 = IntersectionLattice(
        name=name or f"{L.name}#rebased",
        basis=labels,
        gram=gram2,
        canonical_coeffs=k2,
        effectivity=effectivity,
        generators=generators,
    )
    return BasisChange(
        old=L,
        new=L2,
        matrix=tuple(tuple(row) for row in A),
        inverse=tuple(tuple(row) for row in A_inv),
    )
