"""Multigraded Betti numbers of S/I and the depth read off from them.

Two independent routes are provided.  ``betti_lcm`` reads
``beta_{i,m}(S/I)`` from the reduced homology of the open interval ``(1, m)``
of the lcm lattice.  ``betti_taylor`` restricts the Taylor simplex on G(I)
to the faces whose lcm strictly divides ``m``.  Depth follows from the
projective dimension through Auslander-Buchsbaum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .core import MonomialIdeal, divides, lcm, unit
from .linalg import DEFAULT_CHARACTERISTIC, check_characteristic, rank

DEFAULT_GENERATOR_CAP = 20
TAYLOR_GENERATOR_CAP = 12
# open intervals up to this many elements use the literal chain complex
CHAIN_INTERVAL_LIMIT = 14


class TooManyGenerators(ValueError):
    pass


# ---------- simplicial homology ----------

def faces_from_facets(facets) -> set:
    """Downward closure of a set of facets, the empty face included."""
    out = set()
    for f in facets:
        f = tuple(sorted(f))
        for k in range(len(f) + 1):
            out.update(combinations(f, k))
    return out


def reduced_homology(faces, p: int = DEFAULT_CHARACTERISTIC) -> dict:
    """Dimensions of reduced homology by degree (degree -1 included).

    ``faces`` is a downward closed collection of sorted vertex tuples.  With
    only the empty face the complex is the irrelevant complex and
    ``H_{-1}`` is one-dimensional; with no faces at all there is no homology.
    """
    by_dim: dict = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(f))
    if not by_dim:
        return {}
    top = max(by_dim)
    index = {d: {f: k for k, f in enumerate(sorted(fs))} for d, fs in by_dim.items()}
    ranks = {}
    for d in range(0, top + 1):
        rows = []
        lower = index.get(d - 1, {})
        for f in index.get(d, {}):
            row = {}
            for k in range(len(f)):
                row[lower[f[:k] + f[k + 1:]]] = -1 if k % 2 else 1
            rows.append(row)
        ranks[d] = rank(rows, p) if rows else 0
    out = {}
    for d in range(-1, top + 1):
        dim_c = len(by_dim.get(d, ()))
        h = dim_c - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def reduced_euler_characteristic(faces) -> int:
    return sum((-1) ** (len(f) - 1) for f in faces)


@dataclass(frozen=True)
class SimplicialComplex:
    facets: frozenset

    @classmethod
    def from_faces(cls, faces) -> "SimplicialComplex":
        faces = {tuple(sorted(f)) for f in faces}
        facets = [f for f in faces if not any(set(f) < set(g) for g in faces)]
        return cls(frozenset(facets))

    def faces(self) -> set:
        return faces_from_facets(self.facets)

    def homology(self, p: int = DEFAULT_CHARACTERISTIC) -> dict:
        return reduced_homology(self.faces(), p)


# ---------- lcm lattice ----------

@dataclass
class LcmLattice:
    """Lcm lattice of G(I): elements, atoms and the cover relation."""

    n: int
    atoms: tuple
    elements: tuple
    lower_covers: dict = field(repr=False)

    @property
    def bottom(self):
        return unit(self.n)

    @property
    def top(self):
        return self.elements[-1]

    def below(self, m) -> list:
        """Elements strictly between the bottom and ``m``."""
        b = self.bottom
        return [x for x in self.elements if x != m and x != b and divides(x, m)]

    def coatoms(self, m) -> tuple:
        return self.lower_covers[m]


def _lower_covers(atoms, m) -> tuple:
    # every element strictly below m divides, for some j with m_j > 0, the lcm
    # of the atoms under m whose j-th exponent is below m_j; the maximal such
    # lcms are the lower covers
    under = [g for g in atoms if divides(g, m)]
    cands = set()
    for j, mj in enumerate(m):
        if mj == 0:
            continue
        sel = [g for g in under if g[j] < mj]
        if sel:
            c = sel[0]
            for g in sel[1:]:
                c = lcm(c, g)
            cands.add(c)
    if not cands and m != unit(len(m)):
        cands.add(unit(len(m)))
    return tuple(sorted(c for c in cands if not any(c != d and divides(c, d) for d in cands)))


def lcm_lattice(I: MonomialIdeal, cap: int = DEFAULT_GENERATOR_CAP) -> LcmLattice:
    if not I.is_proper_nonzero:
        raise ValueError("the lcm lattice needs a proper nonzero ideal")
    if len(I.gens) > cap:
        raise TooManyGenerators(f"{len(I.gens)} generators exceed the cap of {cap}")
    elems = {unit(I.n)}
    for g in I.gens:
        elems |= {lcm(x, g) for x in elems}
    ordered = tuple(sorted(elems, key=lambda m: (sum(m), m)))
    covers = {m: _lower_covers(I.gens, m) for m in ordered}
    return LcmLattice(I.n, I.gens, ordered, covers)


def _chain_faces(lattice: LcmLattice, m) -> set:
    pts = lattice.below(m)
    idx = {x: k for k, x in enumerate(pts)}
    above = {x: [idx[y] for y in pts if y != x and divides(x, y)] for x in pts}
    faces = {()}
    stack = [(k,) for k in range(len(pts))]
    while stack:
        chain = stack.pop()
        faces.add(tuple(sorted(chain)))
        for y in above[pts[chain[-1]]]:
            stack.append(chain + (y,))
    return faces


def _crosscut_faces(lattice: LcmLattice, m) -> set:
    coatoms = lattice.coatoms(m)
    if coatoms == (lattice.bottom,):
        return {()}
    facets = []
    for g in lattice.atoms:
        if divides(g, m):
            facets.append(tuple(k for k, c in enumerate(coatoms) if divides(g, c)))
    return faces_from_facets(facets) | {()}


def order_complex_homology(lattice: LcmLattice, m, p: int = DEFAULT_CHARACTERISTIC,
                           method: str = "chains") -> dict:
    """Reduced homology of the order complex of the open interval (bottom, m).

    ``method="chains"`` builds the order complex itself.  ``"crosscut"`` uses
    the complex of lower covers of ``m`` with a common atom beneath them,
    which is homotopy equivalent and has at most ``n`` vertices.
    """
    p = check_characteristic(p)
    if m == lattice.bottom:
        raise ValueError("m must lie above the bottom element")
    if method == "chains":
        faces = _chain_faces(lattice, m)
    elif method == "crosscut":
        faces = _crosscut_faces(lattice, m)
    else:
        raise ValueError(f"unknown method {method!r}")
    return reduced_homology(faces, p)


# ---------- Betti tables ----------

@dataclass(frozen=True)
class BettiTable:
    n: int
    betti: dict
    characteristic: int

    @property
    def pd(self) -> int:
        return max((i for i, _ in self.betti), default=0)

    @property
    def depth_quotient(self) -> int:
        return self.n - self.pd

    @property
    def depth_ideal(self) -> int:
        return self.depth_quotient + 1

    def rows(self) -> list:
        return sorted((i, m, b) for (i, m), b in self.betti.items())

    def totals(self) -> dict:
        out: dict = {}
        for (i, _), b in self.betti.items():
            out[i] = out.get(i, 0) + b
        return dict(sorted(out.items()))

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.n == other.n and self.betti == other.betti

    def to_dict(self) -> dict:
        return {
            "rows": [{"i": i, "multidegree": list(m), "beta": b} for i, m, b in self.rows()],
            "pd": self.pd,
            "depth_quotient": self.depth_quotient,
            "depth_ideal": self.depth_ideal,
            "characteristic": self.characteristic,
        }


def _table(n, homologies, p) -> BettiTable:
    betti = {}
    for m, h in homologies:
        for d, dim in h.items():
            betti[(d + 2, m)] = dim
    return BettiTable(n, betti, p)


def betti_lcm(I: MonomialIdeal, p: int = DEFAULT_CHARACTERISTIC,
              cap: int = DEFAULT_GENERATOR_CAP, method: str = "auto") -> BettiTable:
    """beta_{i,m}(S/I) = dim H_{i-2} of the open interval (1, m) of the lcm lattice."""
    p = check_characteristic(p)
    L = lcm_lattice(I, cap)
    homs = []
    for m in L.elements:
        if m == L.bottom:
            continue
        how = method
        if how == "auto":
            how = "chains" if len(L.below(m)) <= CHAIN_INTERVAL_LIMIT else "crosscut"
        homs.append((m, order_complex_homology(L, m, p, how)))
    return _table(I.n, homs, p)


def betti_taylor(I: MonomialIdeal, p: int = DEFAULT_CHARACTERISTIC,
                 cap: int = TAYLOR_GENERATOR_CAP) -> BettiTable:
    """Same table from restrictions of the Taylor simplex on G(I)."""
    p = check_characteristic(p)
    if not I.is_proper_nonzero:
        raise ValueError("Betti numbers need a proper nonzero ideal")
    gens = I.gens
    if len(gens) > cap:
        raise TooManyGenerators(f"{len(gens)} generators exceed the Taylor cap of {cap}")
    one = unit(I.n)
    subset_lcm = {(): one}
    for k in range(1, len(gens) + 1):
        for sigma in combinations(range(len(gens)), k):
            subset_lcm[sigma] = lcm(subset_lcm[sigma[:-1]], gens[sigma[-1]])
    degrees = sorted(set(subset_lcm.values()) - {one})
    homs = []
    for m in degrees:
        faces = [s for s, l in subset_lcm.items() if l != m and divides(l, m)]
        homs.append((m, reduced_homology(faces, p)))
    return _table(I.n, homs, p)


def depth_quotient(I: MonomialIdeal, p: int = DEFAULT_CHARACTERISTIC,
                   cap: int = DEFAULT_GENERATOR_CAP) -> int:
    return betti_lcm(I, p, cap).depth_quotient


def depth_ideal(I: MonomialIdeal, p: int = DEFAULT_CHARACTERISTIC,
                cap: int = DEFAULT_GENERATOR_CAP) -> int:
    return depth_quotient(I, p, cap) + 1
