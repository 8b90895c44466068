"""Nonnegative-integer linear feasibility with replayable certificates.

The question is always the same shape: does an integer linear system
A x = b admit a solution with every unknown >= 0?  The solver answers with a
certificate rather than a bare verdict:

* INFEASIBLE comes with a derivation chain.  Every chain line is either an
  integer combination of earlier lines (originals included) or a forced
  vanishing x = 0, justified by an earlier line whose left side has only
  nonnegative coefficients and whose right side is zero.  The last line has
  nonnegative coefficients and a negative right side, which no nonnegative
  assignment can satisfy.  replay_chain re-checks all of this mechanically.
* FEASIBLE comes with a witness, re-verified on construction.
* UNKNOWN_UP_TO_BOUND records that sign analysis concluded nothing and no
  witness exists with entries up to the bound.  Deciding beyond that honestly
  would need integer-programming machinery this package deliberately avoids.

Elimination is rational Gaussian elimination (forward only) followed by sign
analysis; that is enough for the rank-3 systems in six unknowns this package
cares about, and for plenty more.

build_obstruction_system encodes the restriction bookkeeping that obstructs
moving a sextic ruled surface to a plane: on the two-blowdown lattice the
hyperplane pullbacks from the surface side and from the plane side decompose
against the same restriction class, and eliminating it leaves three equations
in six nonnegative multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .lattice import DivisorClass, LatticeMismatchError
from .linalg import echelon_with_transform
from .surfaces import SZModel


class PullbackPredicateError(ValueError):
    """An obstruction input fails its declared pullback predicate."""


def _render_terms(pairs: list[tuple[str, int]]) -> str:
    if not pairs:
        return "0"
    out = ""
    for i, (name, c) in enumerate(pairs):
        mag = abs(c)
        term = name if mag == 1 else f"{mag}*{name}"
        if i == 0:
            out = term if c > 0 else f"-{term}"
        else:
            out += f" + {term}" if c > 0 else f" - {term}"
    return out


@dataclass(frozen=True)
class LinearEquation:
    coeffs: tuple[int, ...]
    rhs: int

    def render(self, names: tuple[str, ...]) -> str:
        pairs = [(n, c) for n, c in zip(names, self.coeffs) if c != 0]
        return f"{_render_terms(pairs)} = {self.rhs}"


@dataclass(frozen=True)
class FeasibilitySystem:
    unknowns: tuple[str, ...]
    equations: tuple[LinearEquation, ...]

    def __post_init__(self) -> None:
        if len(set(self.unknowns)) != len(self.unknowns):
            raise ValueError("unknown names must be distinct")
        for eq in self.equations:
            if len(eq.coeffs) != len(self.unknowns):
                raise ValueError("equation width does not match unknown count")

    def to_json_dict(self) -> dict:
        return {
            "unknowns": list(self.unknowns),
            "equations": [
                {"coeffs": list(eq.coeffs), "rhs": eq.rhs} for eq in self.equations
            ],
        }

    @staticmethod
    def from_json_dict(d: dict) -> "FeasibilitySystem":
        return FeasibilitySystem(
            unknowns=tuple(d["unknowns"]),
            equations=tuple(
                LinearEquation(tuple(int(c) for c in e["coeffs"]), int(e["rhs"]))
                for e in d["equations"]
            ),
        )


@dataclass(frozen=True)
class ChainLine:
    line_id: str
    coeffs: tuple[int, ...]
    rhs: int
    kind: str  # "combination" | "nonneg_zero"
    combination: tuple[tuple[str, int], ...] = ()
    source: str | None = None
    variable: str | None = None

    def render(self, names: tuple[str, ...]) -> str:
        eq = LinearEquation(self.coeffs, self.rhs).render(names)
        if self.kind == "combination":
            just = _render_terms(list(self.combination))
            return f"[{self.line_id}] {eq}   (= {just})"
        return (
            f"[{self.line_id}] {eq}   "
            f"(forced: {self.source} has nonnegative terms summing to 0)"
        )

    def to_json_dict(self) -> dict:
        d: dict = {
            "id": self.line_id,
            "coeffs": list(self.coeffs),
            "rhs": self.rhs,
            "kind": self.kind,
        }
        if self.kind == "combination":
            d["combination"] = [[ref, mult] for ref, mult in self.combination]
        else:
            d["source"] = self.source
            d["variable"] = self.variable
        return d


def replay_chain(system: FeasibilitySystem, chain: tuple[ChainLine, ...]) -> None:
    """Re-check an INFEASIBLE chain from scratch; raises ValueError if broken."""
    if not chain:
        raise ValueError("empty chain proves nothing")
    n = len(system.unknowns)
    by_id: dict[str, tuple[tuple[int, ...], int]] = {}
    for i, eq in enumerate(system.equations, 1):
        by_id[f"eq{i}"] = (eq.coeffs, eq.rhs)
    for line in chain:
        if line.line_id in by_id:
            raise ValueError(f"duplicate line id {line.line_id!r}")
        if line.kind == "combination":
            if not line.combination:
                raise ValueError(f"{line.line_id}: empty combination")
            acc = [0] * n
            rhs = 0
            for ref, mult in line.combination:
                if ref not in by_id:
                    raise ValueError(f"{line.line_id}: unknown reference {ref!r}")
                c, r = by_id[ref]
                acc = [a + mult * v for a, v in zip(acc, c)]
                rhs += mult * r
            if tuple(acc) != line.coeffs or rhs != line.rhs:
                raise ValueError(f"{line.line_id}: combination does not reproduce line")
        elif line.kind == "nonneg_zero":
            if line.source not in by_id:
                raise ValueError(f"{line.line_id}: unknown source {line.source!r}")
            sc, sr = by_id[line.source]
            if sr != 0 or any(v < 0 for v in sc):
                raise ValueError(
                    f"{line.line_id}: source is not a nonnegative combination "
                    "equal to zero"
                )
            if line.variable not in system.unknowns:
                raise ValueError(f"{line.line_id}: unknown variable {line.variable!r}")
            v = system.unknowns.index(line.variable)
            if sc[v] <= 0:
                raise ValueError(
                    f"{line.line_id}: variable {line.variable!r} absent from source"
                )
            unit = tuple(int(i == v) for i in range(n))
            if line.coeffs != unit or line.rhs != 0:
                raise ValueError(f"{line.line_id}: forced line must read x = 0")
        else:
            raise ValueError(f"{line.line_id}: unknown rule kind {line.kind!r}")
        by_id[line.line_id] = (line.coeffs, line.rhs)
    last = chain[-1]
    if any(v < 0 for v in last.coeffs) or last.rhs >= 0:
        raise ValueError(
            "final line must equate a nonnegative combination to a negative integer"
        )


def _solved_form(names: tuple[str, ...], coeffs: tuple[int, ...], rhs: int) -> str | None:
    """Render 'e = -2 - b2' style when some unknown appears with coefficient 1."""
    idx = next((i for i, c in enumerate(coeffs) if c == 1), None)
    if idx is None:
        return None
    out = f"{names[idx]} = {rhs}"
    for j, c in enumerate(coeffs):
        if j == idx or c == 0:
            continue
        mag = abs(c)
        term = names[j] if mag == 1 else f"{mag}*{names[j]}"
        out += f" - {term}" if c > 0 else f" + {term}"
    return out


@dataclass(frozen=True)
class FeasibilityCertificate:
    system: FeasibilitySystem
    status: str  # FEASIBLE | INFEASIBLE | UNKNOWN_UP_TO_BOUND
    witness: tuple[int, ...] | None = None
    chain: tuple[ChainLine, ...] = ()
    bound: int | None = None

    def __post_init__(self) -> None:
        if self.status == "FEASIBLE":
            if self.witness is None:
                raise ValueError("FEASIBLE requires a witness")
            if len(self.witness) != len(self.system.unknowns):
                raise ValueError("witness has wrong length")
            if any(w < 0 for w in self.witness):
                raise ValueError("witness must be nonnegative")
            for eq in self.system.equations:
                if sum(c * w for c, w in zip(eq.coeffs, self.witness)) != eq.rhs:
                    raise ValueError("witness fails an equation")
        elif self.status == "INFEASIBLE":
            replay_chain(self.system, self.chain)
        elif self.status == "UNKNOWN_UP_TO_BOUND":
            if self.bound is None:
                raise ValueError("UNKNOWN_UP_TO_BOUND must record the bound")
        else:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def final_line_solved(self) -> str | None:
        if not self.chain:
            return None
        last = self.chain[-1]
        return _solved_form(self.system.unknowns, last.coeffs, last.rhs)

    def transcript(self) -> str:
        names = self.system.unknowns
        out = [f"system over nonnegative integers ({', '.join(names)}):"]
        for i, eq in enumerate(self.system.equations, 1):
            out.append(f"  [eq{i}] {eq.render(names)}")
        if self.status == "INFEASIBLE":
            out.append("derivation:")
            for line in self.chain:
                out.append(f"  {line.render(names)}")
            solved = self.final_line_solved
            if solved is not None:
                out.append(f"  i.e. {solved}")
            out.append(
                "  a nonnegative combination of the unknowns equals a negative "
                "integer: no solution exists."
            )
        elif self.status == "FEASIBLE":
            assert self.witness is not None
            pairs = ", ".join(f"{n} = {w}" for n, w in zip(names, self.witness))
            out.append(f"feasible; witness: {pairs}")
        else:
            out.append(
                f"sign analysis inconclusive; no witness with all unknowns "
                f"<= {self.bound}."
            )
        return "\n".join(out)

    def to_json_dict(self) -> dict:
        return {
            "status": self.status,
            "witness": list(self.witness) if self.witness is not None else None,
            "bound": self.bound,
            "final_line_solved": self.final_line_solved,
            "system": self.system.to_json_dict(),
            "chain": [line.to_json_dict() for line in self.chain],
        }


def _search_witness(system: FeasibilitySystem, bound: int) -> tuple[int, ...] | None:
    """Exhaustive search of the box [0, bound]^n, depth first.

    Pruning is sound (intervals): a partial assignment is abandoned only when
    some equation provably cannot be met by any completion inside the box,
    so a None return really means the box holds no witness.
    """
    n = len(system.unknowns)
    eqs = [(eq.coeffs, eq.rhs) for eq in system.equations]
    lo_suffix = []
    hi_suffix = []
    for coeffs, _ in eqs:
        lo = [0] * (n + 1)
        hi = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            lo[i] = lo[i + 1] + min(coeffs[i], 0) * bound
            hi[i] = hi[i + 1] + max(coeffs[i], 0) * bound
        lo_suffix.append(lo)
        hi_suffix.append(hi)
    assignment = [0] * n

    def rec(i: int) -> tuple[int, ...] | None:
        for (coeffs, rhs), lo, hi in zip(eqs, lo_suffix, hi_suffix):
            fixed = sum(coeffs[j] * assignment[j] for j in range(i))
            if not (fixed + lo[i] <= rhs <= fixed + hi[i]):
                return None
        if i == n:
            return tuple(assignment)
        for v in range(bound + 1):
            assignment[i] = v
            found = rec(i + 1)
            if found is not None:
                return found
        assignment[i] = 0
        return None

    return rec(0)


def _ref_sort_key(ref: str) -> tuple[int, int]:
    if ref.startswith("eq"):
        return (0, int(ref[2:]))
    if ref.startswith("z"):
        return (1, int(ref[1:]))
    return (2, int(ref[1:]))


def solve_nonneg(system: FeasibilitySystem, bound: int = 20) -> FeasibilityCertificate:
    """Decide nonnegative-integer feasibility, certificate included.

    Sign analysis first: eliminate, look for derived equations that are
    already decisive over x >= 0 (a nonnegative combination equal to a
    negative constant kills the system; equal to zero it forces its unknowns
    to vanish, which feeds back into the scan).  Scanning prefers the
    original equations to derived rows, so the shipped chains read like the
    hand derivation.  If signs decide nothing, search the box [0, bound]^n
    for a witness; failing that, answer UNKNOWN_UP_TO_BOUND.
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    names = system.unknowns
    n = len(names)
    originals = [
        (f"eq{i + 1}", eq.coeffs, eq.rhs) for i, eq in enumerate(system.equations)
    ]
    chain: list[ChainLine] = []
    zero_line_for: dict[int, str] = {}
    pool: list[tuple[tuple[int, ...], int, tuple[tuple[str, int], ...]]] = []
    seen = {(c, r) for _, c, r in originals}
    counter = {"d": 0, "z": 0}

    def substituted(coeffs, terms):
        out = list(coeffs)
        acc = list(terms)
        for v in sorted(zero_line_for):
            if out[v] != 0:
                acc.append((zero_line_for[v], -out[v]))
                out[v] = 0
        return tuple(out), tuple(acc)

    def all_lines():
        for ref, c, r in originals:
            yield c, r, ((ref, 1),)
        for c, r, terms in pool:
            yield c, r, terms

    def emit_combination(coeffs, rhs, terms) -> str:
        counter["d"] += 1
        lid = f"d{counter['d']}"
        ordered = tuple(sorted(terms, key=lambda t: _ref_sort_key(t[0])))
        chain.append(
            ChainLine(lid, coeffs, rhs, "combination", combination=ordered)
        )
        return lid

    def scan():
        infeasible = None
        force = None
        for coeffs, rhs, terms in all_lines():
            c2, t2 = substituted(coeffs, terms)
            if all(v >= 0 for v in c2):
                cand = (c2, rhs, t2)
            elif all(v <= 0 for v in c2):
                cand = (
                    tuple(-v for v in c2),
                    -rhs,
                    tuple((ref, -m) for ref, m in t2),
                )
            else:
                continue
            cc, rr, tt = cand
            if rr < 0:
                if infeasible is None:
                    infeasible = cand
            elif rr == 0 and any(v > 0 for v in cc):
                if force is None:
                    force = cand
        return infeasible, force

    def apply_force(cand) -> None:
        cc, rr, tt = cand
        if len(tt) == 1 and tt[0][1] == 1 and tt[0][0].startswith("eq"):
            src = tt[0][0]  # an original equation already has the right form
        else:
            src = emit_combination(cc, rr, tt)
        for v, cv in enumerate(cc):
            if cv > 0 and v not in zero_line_for:
                counter["z"] += 1
                lid = f"z{counter['z']}"
                unit = tuple(int(i == v) for i in range(n))
                chain.append(
                    ChainLine(
                        lid, unit, 0, "nonneg_zero", source=src, variable=names[v]
                    )
                )
                zero_line_for[v] = lid

    for _ in range(2 * n + 4):
        infeasible, force = scan()
        if infeasible is not None:
            cc, rr, tt = infeasible
            emit_combination(cc, rr, tt)
            return FeasibilityCertificate(
                system=system, status="INFEASIBLE", chain=tuple(chain)
            )
        if force is not None:
            apply_force(force)
            continue
        rows_in = []
        basis_terms = []
        for coeffs, rhs, terms in all_lines():
            c2, t2 = substituted(coeffs, terms)
            rows_in.append([Fraction(v) for v in c2] + [Fraction(rhs)])
            basis_terms.append(t2)
        if not rows_in:
            break
        ech, T = echelon_with_transform(rows_in)
        grew = False
        for trow, row in zip(T, ech):
            dens = [f.denominator for f in trow] + [f.denominator for f in row]
            m = lcm(*dens)
            coeffs2 = tuple(int(f * m) for f in row[:-1])
            rhs2 = int(row[-1] * m)
            if all(v == 0 for v in coeffs2) and rhs2 == 0:
                continue
            if (coeffs2, rhs2) in seen:
                continue
            acc: dict[str, int] = {}
            for f, terms in zip(trow, basis_terms):
                mult = int(f * m)
                if mult == 0:
                    continue
                for ref, q in terms:
                    acc[ref] = acc.get(ref, 0) + mult * q
            terms2 = tuple(
                (ref, q)
                for ref, q in sorted(acc.items(), key=lambda t: _ref_sort_key(t[0]))
                if q != 0
            )
            if not terms2:
                continue
            pool.append((coeffs2, rhs2, terms2))
            seen.add((coeffs2, rhs2))
            grew = True
        if not grew:
            break

    witness = _search_witness(system, bound)
    if witness is not None:
        return FeasibilityCertificate(
            system=system, status="FEASIBLE", witness=witness, bound=bound
        )
    return FeasibilityCertificate(
        system=system, status="UNKNOWN_UP_TO_BOUND", bound=bound
    )


OBSTRUCTION_UNKNOWNS = ("e", "s1", "s2", "a", "b1", "b2")


def build_obstruction_system(
    sz: SZModel,
    s_pullback: DivisorClass,
    h_pullback: DivisorClass,
    e_gamma_total: DivisorClass,
    deg_s_mult: int = 2,
) -> FeasibilitySystem:
    """Restriction bookkeeping on the two-blowdown lattice, as equations.

    Suppose some composite of blow-ups resolves a birational map carrying the
    projected surface to a plane, and restrict everything to the rank-3
    lattice.  The surface-side hyperplane pullback decomposes as the common
    restriction class plus deg_s_mult copies of e_gamma_total plus a vertical
    part (s1, s2, s1+s2) plus one forced exceptional (0, 0, a+1); the
    plane-side pullback decomposes as the same restriction class plus
    (e, e, e) plus (b1+1, b2+1, 0).  The "+1" offsets are fixed: each blowdown
    direction is hit at least once.  Subtracting the two decompositions
    eliminates the restriction class and leaves

        e - s1 + b1 = h1 - S1 + m*g1 - 1
        e - s2 + b2 = h2 - S2 + m*g2 - 1
        e - s1 - s2 - a = h3 - S3 + m*g3 + 1

    in the six multiplicities, all of which must be nonnegative integers if
    the resolving surface exists.  Infeasibility is therefore an obstruction.

    Inputs are validated against the pullback predicates: s_pullback and
    e_gamma_total must come from the quadric side (a + b = c), h_pullback
    from the plane side (a = b = c).
    """
    for label, cls in (("s_pullback", s_pullback), ("e_gamma_total", e_gamma_total)):
        if cls.lattice != sz.lattice:
            raise LatticeMismatchError(f"{label} must live on the SZ lattice")
        if not sz.is_f0_pullback(cls):
            raise PullbackPredicateError(
                f"{label} {cls.coeffs} fails the quadric-side predicate a + b = c"
            )
    if h_pullback.lattice != sz.lattice:
        raise LatticeMismatchError("h_pullback must live on the SZ lattice")
    if not sz.is_plane_pullback(h_pullback):
        raise PullbackPredicateError(
            f"h_pullback {h_pullback.coeffs} fails the plane-side predicate a = b = c"
        )
    if deg_s_mult < 1:
        raise ValueError("deg_s_mult must be a positive integer")
    s = s_pullback.coeffs
    h = h_pullback.coeffs
    g = e_gamma_total.coeffs
    m = deg_s_mult
    return FeasibilitySystem(
        unknowns=OBSTRUCTION_UNKNOWNS,
        equations=(
            LinearEquation((1, -1, 0, 0, 1, 0), h[0] - s[0] + m * g[0] - 1),
            LinearEquation((1, 0, -1, 0, 0, 1), h[1] - s[1] + m * g[1] - 1),
            LinearEquation((1, -1, -1, -1, 0, 0), h[2] - s[2] + m * g[2] + 1),
        ),
    )
