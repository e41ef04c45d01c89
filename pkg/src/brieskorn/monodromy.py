"""Twist words, Lefschetz fibrations over the disk, and open books.

A twist word is an ordered product of signed Dehn twists; the leftmost
letter acts first everywhere in this package. Letters twist either along
a curve of a curve system or along a boundary-parallel curve delta_k.

The two families built here bound the same 3-manifold when p = q = r:

* ``milnor_fiber_word(p, q, r)`` carries the fibration whose monodromy is
  the torus-link word repeated r times, with (p-1)(q-1)(r-1) of the
  letters attached as 2-handles;
* ``boundary_twist_word(p)`` carries the fibration on the neighborhood of
  a genus (p-1)(p-2)/2 surface of square -p, with one boundary twist per
  boundary circle.

Their induced open books are compared through binding vectors: two
horizontal open books over the same one-vertex plumbing agree exactly
when the binding vectors agree, so that is the equality notion
``OpenBookDescriptor.matches`` implements.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .surfaces import (
    CurveSystem,
    SurfaceSpec,
    build_packing,
    curve_label,
    genus_of_degree,
    torus_link_fiber,
)


@dataclass(frozen=True)
class Boundary:
    """The boundary-parallel curve delta_k (1-based)."""

    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("boundary index is 1-based")


@dataclass(frozen=True)
class Letter:
    curve: object  # a curve id of the ambient system, or a Boundary
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("letter sign must be +1 or -1")

    @property
    def is_boundary(self) -> bool:
        return isinstance(self.curve, Boundary)

    def inverse(self) -> "Letter":
        return Letter(self.curve, -self.sign)


@dataclass(frozen=True)
class TwistWord:
    letters: tuple[Letter, ...]

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "TwistWord") -> "TwistWord":
        return TwistWord(self.letters + other.letters)

    def repeated(self, n: int) -> "TwistWord":
        if n < 0:
            raise ValueError("repetition count must be non-negative")
        return TwistWord(self.letters * n)

    def inverse(self) -> "TwistWord":
        return TwistWord(tuple(l.inverse() for l in reversed(self.letters)))

    def tokens(self) -> str:
        return " ".join(letter_token(l) for l in self.letters)


def word(letters) -> TwistWord:
    return TwistWord(tuple(letters))


EMPTY_WORD = TwistWord(())


# ---------------------------------------------------------------------------
# serialization: "t<i>_<j>" packing twist, "t<i>" chain twist, "d<k>" boundary
# twist; capitalized forms are the inverses.

_TOKEN = re.compile(r"^([tTdD])(\d+)(?:_(\d+))?$")


def letter_token(letter: Letter) -> str:
    if letter.is_boundary:
        head = "d" if letter.sign == 1 else "D"
        return f"{head}{letter.curve.index}"
    head = "t" if letter.sign == 1 else "T"
    c = letter.curve
    if isinstance(c, tuple) and len(c) == 2:
        return f"{head}{c[0]}_{c[1]}"
    return f"{head}{c}"


def parse_word(text: str) -> TwistWord:
    letters = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"unparsable twist letter {tok!r}")
        head, a, b = m.group(1), int(m.group(2)), m.group(3)
        sign = 1 if head.islower() else -1
        if head in "dD":
            if b is not None:
                raise ValueError(f"boundary letter {tok!r} takes a single index")
            letters.append(Letter(Boundary(a), sign))
        elif b is None:
            letters.append(Letter(a, sign))
        else:
            letters.append(Letter((a, int(b)), sign))
    return TwistWord(tuple(letters))


# ---------------------------------------------------------------------------
# fibrations


@dataclass(frozen=True)
class LefschetzFibration:
    """A fibration over the disk: fiber surface, curve system, twist word.

    ``source`` tags the construction that produced the fibration, e.g.
    ("milnor", p, q, r) or ("resolution", p); it is what open-book
    extraction keys on. ``handle_count`` counts the letters attached as
    2-handles beyond the trivial piece, when that is meaningful.
    """

    fiber: SurfaceSpec
    system: CurveSystem
    word: TwistWord
    source: tuple | None = None
    handle_count: int | None = None

    def __post_init__(self):
        ids = set(self.system.curves)
        for letter in self.word.letters:
            if letter.is_boundary:
                if letter.curve.index > self.fiber.boundary_count:
                    raise ValueError(
                        f"boundary letter d{letter.curve.index} exceeds the "
                        f"{self.fiber.boundary_count} fiber boundary components"
                    )
            elif letter.curve not in ids:
                raise ValueError(f"letter twists along unknown curve {letter.curve!r}")

    def to_json(self) -> dict:
        out = {
            "fiber": {
                "genus": self.fiber.genus,
                "boundary_count": self.fiber.boundary_count,
            },
            "word": self.word.tokens(),
            "length": len(self.word),
            "system": self.system.to_json(),
        }
        if self.source is not None:
            out["source"] = list(self.source)
        if self.handle_count is not None:
            out["handle_count"] = self.handle_count
        return out


@dataclass(frozen=True)
class LefschetzInvariants:
    euler: int
    letter_count: int
    fiber_euler: int


@dataclass(frozen=True)
class OpenBookDescriptor:
    page: SurfaceSpec
    monodromy: TwistWord
    binding_vector: tuple[int, ...]

    def __post_init__(self):
        if any(n < 0 for n in self.binding_vector):
            raise ValueError("binding vector entries are non-negative")
        if len(self.binding_vector) == 1 and sum(self.binding_vector) != self.page.boundary_count:
            raise ValueError("one-vertex binding vector must sum to the page boundary count")

    def matches(self, other: "OpenBookDescriptor") -> bool:
        """Equality of horizontal open books: same page, same binding vector."""
        return self.page == other.page and self.binding_vector == other.binding_vector


def torus_link_word(p: int, q: int, j_inner: bool = False) -> TwistWord:
    """Monodromy word of the (p,q) torus link fibration.

    Default letter order runs i fastest (t_{1,1} t_{2,1} ... t_{p-1,1}
    t_{1,2} ...); ``j_inner=True`` gives the row-block order
    (t_{1,1} ... t_{1,q-1})(t_{2,1} ...) instead. The two orders are
    conjugate and every derived invariant is insensitive to the choice.
    """
    if p < 2 or q < 2:
        raise ValueError("torus link parameters must be at least 2")
    if j_inner:
        letters = [Letter((i, j)) for i in range(1, p) for j in range(1, q)]
    else:
        letters = [Letter((i, j)) for j in range(1, q) for i in range(1, p)]
    return TwistWord(tuple(letters))


def milnor_fiber_word(p: int, q: int, r: int) -> LefschetzFibration:
    """The fibration on the Milnor fiber of x^p + y^q + z^r."""
    if min(p, q, r) < 2:
        raise ValueError("exponents must be at least 2")
    base = torus_link_word(p, q)
    return LefschetzFibration(
        fiber=torus_link_fiber(p, q),
        system=build_packing(p - 1, q - 1),
        word=base.repeated(r),
        source=("milnor", p, q, r),
        handle_count=(p - 1) * (q - 1) * (r - 1),
    )


def boundary_twist_word(p: int) -> LefschetzFibration:
    """The fibration on the neighborhood of the exceptional genus
    (p-1)(p-2)/2 surface of square -p: one right twist per boundary circle."""
    if p < 2:
        raise ValueError("p must be at least 2")
    fiber = SurfaceSpec(genus=genus_of_degree(p), boundary_count=p)
    letters = tuple(Letter(Boundary(k)) for k in range(1, p + 1))
    return LefschetzFibration(
        fiber=fiber,
        system=build_packing(p - 1, p - 1),
        word=TwistWord(letters),
        source=("resolution", p),
    )


def lefschetz_invariants(fib: LefschetzFibration) -> LefschetzInvariants:
    """Euler characteristic bookkeeping: fiber x disk plus one 2-handle per
    letter."""
    chi = fib.fiber.euler_characteristic
    return LefschetzInvariants(
        euler=chi + len(fib.word),
        letter_count=len(fib.word),
        fiber_euler=chi,
    )


def substitute(word: TwistWord, pattern: TwistWord, replacement: TwistWord,
               at: int) -> TwistWord:
    """Replace the occurrence of ``pattern`` starting at letter index ``at``.

    The match is syntactic: the letters of ``pattern`` must appear verbatim
    as word[at : at+len(pattern)].
    """
    if at < 0 or at + len(pattern) > len(word):
        raise ValueError(
            f"pattern of length {len(pattern)} does not fit at index {at} "
            f"in a word of length {len(word)}"
        )
    window = word.letters[at:at + len(pattern)]
    if window != pattern.letters:
        raise ValueError(
            "pattern not found at index "
            f"{at}: searched window [{TwistWord(window).tokens()}], "
            f"expected [{pattern.tokens()}]"
        )
    return TwistWord(word.letters[:at] + replacement.letters
                     + word.letters[at + len(pattern):])


def find_pattern(word: TwistWord, pattern: TwistWord) -> list[int]:
    """All start indices where pattern occurs as a contiguous subword."""
    n, m = len(word), len(pattern)
    return [a for a in range(n - m + 1)
            if word.letters[a:a + m] == pattern.letters]


def open_book_descriptor(fib: LefschetzFibration) -> OpenBookDescriptor:
    """Boundary open book of the fibration, with its binding vector.

    Supported sources: ("milnor", p, p, p) and ("resolution", p), both of
    which are horizontal over the one-vertex plumbing with binding vector
    (p). Anything else has no binding vector known to this package.
    """
    src = fib.source
    if src is not None and src[0] == "resolution":
        return OpenBookDescriptor(fib.fiber, fib.word, (src[1],))
    if src is not None and src[0] == "milnor":
        _, p, q, r = src
        if p == q == r:
            return OpenBookDescriptor(fib.fiber, fib.word, (p,))
    raise ValueError(f"binding vector unknown for fibration source {src!r}")
