"""Action of Dehn-twist words on the free module over a curve system.

A right-handed twist along c acts on a class x by x -> x + <x, c> c, a
transvection for the skew pairing of the system. This is only the
homological shadow of the mapping class, but it is faithful enough to
machine-check the relations used in this package as necessary-condition
identities:

* generalized chain, over the (p-1) x (p-1) packing:
      ((t_{1,1} .. t_{1,p-1}) .. (t_{p-1,1} .. t_{p-1,p-1}))^p
  equals a product of boundary twists, hence the identity on the module;
* even chain:  (t_1 .. t_{2g})^{4g+2}   = boundary twist;
* odd chain:   (t_1 .. t_{2g+1})^{2g+2} = two boundary twists.

Boundary-parallel curves pair to zero with everything, so boundary
letters act as the identity and each right-hand side above is the
identity matrix.

Orientation conventions cannot affect these checks: flipping a subset of
curve orientations turns the pairing P into D P D with D the diagonal
sign matrix, which conjugates every transvection and therefore the whole
word action by D. The verifier evaluates the default (+1)^n orientation
and reports it; ``calibration_search`` documents the same fact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .monodromy import TwistWord, torus_link_word
from .surfaces import CurveSystem, build_chain, build_packing

RELATION_GENERALIZED_CHAIN = "generalized_chain"
RELATION_CHAIN_EVEN = "chain_even"
RELATION_CHAIN_ODD = "chain_odd"


@dataclass(frozen=True)
class TransvectionModule:
    """The free Z-module on the curves of a system, with its pairing."""

    system: CurveSystem

    @property
    def rank(self) -> int:
        return len(self.system)

    def identity(self) -> np.ndarray:
        return np.eye(self.rank, dtype=object)


def transvection_matrix(module: TransvectionModule, curve, sign: int = 1) -> np.ndarray:
    """Matrix of x -> x + sign * <x, c> * c in the curve basis.

    Entries are exact Python ints (object dtype). The matrix is unipotent:
    (T - I)^2 = 0, because <c, c> = 0.
    """
    if sign not in (1, -1):
        raise ValueError("twist sign must be +1 or -1")
    c = module.system.index(curve)
    P = module.system.pairing
    T = module.identity()
    for a in range(module.rank):
        T[c, a] += sign * P[a][c]
    return T


def word_action(word: TwistWord, module: TransvectionModule) -> np.ndarray:
    """Matrix of a twist word on the module; the leftmost letter acts first.

    Acting on column vectors, the product is M_k ... M_2 M_1 for the word
    t_1 t_2 .. t_k. Boundary letters act as the identity.
    """
    M = module.identity()
    for letter in word.letters:
        if letter.is_boundary:
            continue
        M = transvection_matrix(module, letter.curve, letter.sign) @ M
    return M


def is_identity_matrix(M: np.ndarray) -> bool:
    n = M.shape[0]
    return bool((M == np.eye(n, dtype=object)).all())


@dataclass(frozen=True)
class VerificationReport:
    relation_id: str
    param: int
    lhs_matrix: tuple[tuple[int, ...], ...]
    rhs_matrix: tuple[tuple[int, ...], ...]
    passed: bool
    calibration: tuple[int, ...]
    minimal_exponent: int | None = None

    def to_json(self) -> dict:
        return {
            "relation": self.relation_id,
            "param": self.param,
            "pass": self.passed,
            "calibration": list(self.calibration),
            "minimal_exponent": self.minimal_exponent,
            "lhs": [list(r) for r in self.lhs_matrix],
        }


def _relation_data(relation_id: str, param: int):
    """System, single-pass word, and exponent for a relation id."""
    if relation_id == RELATION_GENERALIZED_CHAIN:
        p = param
        if p < 2:
            raise ValueError("generalized chain needs p >= 2")
        return build_packing(p - 1, p - 1), torus_link_word(p, p, j_inner=True), p
    if relation_id == RELATION_CHAIN_EVEN:
        g = param
        if g < 1:
            raise ValueError("chain relations need g >= 1")
        m = 2 * g
        system = build_chain(m)
        return system, _chain_pass(m), 4 * g + 2
    if relation_id == RELATION_CHAIN_ODD:
        g = param
        if g < 1:
            raise ValueError("chain relations need g >= 1")
        m = 2 * g + 1
        system = build_chain(m)
        return system, _chain_pass(m), 2 * g + 2
    raise ValueError(f"unknown relation id {relation_id!r}")


def _chain_pass(m: int) -> TwistWord:
    from .monodromy import Letter
    return TwistWord(tuple(Letter(i) for i in range(1, m + 1)))


def verify_relation(relation_id: str, param: int) -> VerificationReport:
    """Check a relation's identity on the curve module and report it.

    The left-hand side is the single-pass word raised to the relation's
    exponent; the right-hand side is the identity since boundary twists
    act trivially. The minimal exponent k with (single pass)^k = identity
    is reported alongside (it is not constrained, only observed).
    """
    system, single_pass, exponent = _relation_data(relation_id, param)
    module = TransvectionModule(system)
    base = word_action(single_pass, module)

    minimal = None
    M = module.identity()
    for k in range(1, exponent + 1):
        M = base @ M
        if minimal is None and is_identity_matrix(M):
            minimal = k
    lhs = _matrix_power(base, exponent, module)
    rhs = module.identity()
    passed = is_identity_matrix(lhs)
    calibration = system.signs if passed else (
        calibration_search(module, single_pass.repeated(exponent)) or system.signs
    )
    return VerificationReport(
        relation_id=relation_id,
        param=param,
        lhs_matrix=_freeze(lhs),
        rhs_matrix=_freeze(rhs),
        passed=passed,
        calibration=calibration,
        minimal_exponent=minimal,
    )


def calibration_search(module: TransvectionModule, word: TwistWord):
    """Look for per-curve orientation signs making the word act trivially.

    Flipping orientations conjugates the word action by the diagonal sign
    matrix, so some assignment works iff the default one does; the sweep
    reduces to a single evaluation. Returns the signs on success, else None.
    """
    M = word_action(word, module)
    if is_identity_matrix(M):
        return module.system.signs
    return None


def _matrix_power(base: np.ndarray, e: int, module: TransvectionModule) -> np.ndarray:
    M = module.identity()
    for _ in range(e):
        M = base @ M
    return M


def _freeze(M: np.ndarray) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in M)
