"""Surfaces with boundary and the curve systems living on them.

A curve system is a finite family of simple closed curves together with
their algebraic intersection numbers. Two families matter here: the
(p-1) x (p-1) hexagonal packing, whose curves gamma_{i,j} pair as

    <gamma_{i,j}, gamma_{i+1,j}>   =  1
    <gamma_{i,j}, gamma_{i,j+1}>   =  1
    <gamma_{i,j}, gamma_{i+1,j+1}> = -1

with every other distinct pair zero, and the m-chain alpha_1..alpha_m
with consecutive pairing 1. A 1 x m packing and an m-chain are the same
system. Only algebraic intersection numbers are stored; there is no curve
geometry here.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import gcd

from . import linalg

PACKING = "packing"
CHAIN = "chain"
CUSTOM = "custom"


@dataclass(frozen=True)
class SurfaceSpec:
    """A compact oriented surface, up to homeomorphism."""

    genus: int
    boundary_count: int

    def __post_init__(self):
        if self.genus < 0 or self.boundary_count < 0:
            raise ValueError("genus and boundary count must be non-negative")

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.boundary_count


@dataclass(frozen=True)
class CurveSystem:
    """An indexed curve family with a skew-symmetric integer pairing.

    ``curves`` fixes the basis order of ``pairing``: packings use (i, j)
    labels in row-major order, chains use 1..m. ``signs`` records the
    chosen orientation of each curve; flipping curve a negates row and
    column a of the pairing.
    """

    kind: str
    curves: tuple
    pairing: tuple[tuple[int, ...], ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        n = len(self.curves)
        if len(self.pairing) != n or any(len(r) != n for r in self.pairing):
            raise ValueError("pairing shape does not match the curve count")
        if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1, one per curve")
        if not linalg.is_skew(self.pairing):
            raise ValueError("pairing must be skew-symmetric with zero diagonal")

    def __len__(self) -> int:
        return len(self.curves)

    def index(self, curve) -> int:
        try:
            return self.curves.index(curve)
        except ValueError:
            raise ValueError(f"unknown curve id {curve!r}") from None

    def pairing_of(self, a, b) -> int:
        return self.pairing[self.index(a)][self.index(b)]

    def reoriented(self, signs) -> "CurveSystem":
        """Same curves with the given absolute orientation signs."""
        signs = tuple(signs)
        if len(signs) != len(self) or any(s not in (1, -1) for s in signs):
            raise ValueError("need one sign in {+1,-1} per curve")
        delta = [a * b for a, b in zip(signs, self.signs)]
        new = tuple(
            tuple(delta[a] * delta[b] * self.pairing[a][b] for b in range(len(self)))
            for a in range(len(self))
        )
        return replace(self, pairing=new, signs=signs)

    def flipped(self, curve) -> "CurveSystem":
        a = self.index(curve)
        signs = list(self.signs)
        signs[a] = -signs[a]
        return self.reoriented(signs)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "curves": [curve_label(c) for c in self.curves],
            "pairing": [list(row) for row in self.pairing],
            "signs": list(self.signs),
        }


def curve_label(curve):
    """Serialized label: packing curves (i,j) print as "g<i>_<j>"."""
    if isinstance(curve, tuple) and len(curve) == 2:
        return f"g{curve[0]}_{curve[1]}"
    return curve


def build_packing(rows: int, cols: int) -> CurveSystem:
    """The rows x cols packing system with all curves oriented +1."""
    if rows < 1 or cols < 1:
        raise ValueError("packing dimensions must be positive")
    curves = [(i, j) for i in range(1, rows + 1) for j in range(1, cols + 1)]
    idx = {c: a for a, c in enumerate(curves)}
    n = len(curves)
    pairing = [[0] * n for _ in range(n)]
    for (i, j) in curves:
        for di, dj, v in ((1, 0, 1), (0, 1, 1), (1, 1, -1)):
            other = (i + di, j + dj)
            if other in idx:
                a, b = idx[(i, j)], idx[other]
                pairing[a][b] = v
                pairing[b][a] = -v
    return CurveSystem(
        kind=PACKING,
        curves=tuple(curves),
        pairing=tuple(tuple(r) for r in pairing),
        signs=(1,) * n,
    )


def build_chain(m: int) -> CurveSystem:
    """The m-chain: consecutive curves pair to 1, everything else to 0."""
    if m < 1:
        raise ValueError("chain length must be positive")
    pairing = [[0] * m for _ in range(m)]
    for a in range(m - 1):
        pairing[a][a + 1] = 1
        pairing[a + 1][a] = -1
    return CurveSystem(
        kind=CHAIN,
        curves=tuple(range(1, m + 1)),
        pairing=tuple(tuple(r) for r in pairing),
        signs=(1,) * m,
    )


def custom_system(curves, pairing, signs=None) -> CurveSystem:
    curves = tuple(curves)
    if signs is None:
        signs = (1,) * len(curves)
    return CurveSystem(
        kind=CUSTOM,
        curves=curves,
        pairing=tuple(tuple(int(x) for x in row) for row in pairing),
        signs=tuple(signs),
    )


def packing_shape(system: CurveSystem) -> tuple[int, int]:
    if system.kind != PACKING:
        raise ValueError("not a packing system")
    rows = max(i for i, _ in system.curves)
    cols = max(j for _, j in system.curves)
    return rows, cols


def neighborhood_surface(system: CurveSystem) -> SurfaceSpec:
    """Surface filled by a regular neighborhood of the whole system.

    Square (p-1) x (p-1) packings fill a genus (p-1)(p-2)/2 surface with
    p boundary circles; a 2g-chain fills a genus g surface with one
    boundary circle, a (2g+1)-chain one with two.
    """
    if system.kind == PACKING:
        rows, cols = packing_shape(system)
        if rows != cols:
            raise ValueError("neighborhood surface is only defined for square packings")
        p = rows + 1
        return SurfaceSpec(genus=(p - 1) * (p - 2) // 2, boundary_count=p)
    if system.kind == CHAIN:
        m = len(system)
        if m % 2 == 0:
            return SurfaceSpec(genus=m // 2, boundary_count=1)
        return SurfaceSpec(genus=(m - 1) // 2, boundary_count=2)
    raise ValueError("neighborhood surface is defined for packings and chains only")


def torus_link_fiber(p: int, q: int) -> SurfaceSpec:
    """Fiber surface of the (p,q) torus link.

    The quasipositive Seifert surface has p disks joined by (p-1)q bands,
    so chi = p - (p-1)q, and it has gcd(p,q) boundary components.
    """
    if p < 2 or q < 2:
        raise ValueError("torus link parameters must be at least 2")
    b = gcd(p, q)
    chi = p - (p - 1) * q
    genus2 = 2 - chi - b
    if genus2 % 2 != 0:
        raise ValueError(f"non-integral genus for ({p},{q})")
    return SurfaceSpec(genus=genus2 // 2, boundary_count=b)


def genus_of_degree(p: int) -> int:
    """Genus (p-1)(p-2)/2 of a smooth degree p curve."""
    if p < 2:
        raise ValueError("degree must be at least 2")
    return (p - 1) * (p - 2) // 2
