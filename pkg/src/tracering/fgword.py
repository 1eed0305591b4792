"""Words in the free group F(a, w).

A word is stored as a tuple of syllables ``(generator, exponent)`` with
generator ``"a"`` or ``"w"``.  Free reduction happens on construction, so
two words are equal exactly when their syllable tuples are equal.

Text grammar::

    word   := "1" | term+
    term   := atom ("^" int)?
    atom   := "a" | "w" | "A" | "W" | "(" word ")"
    int    := "-"? digit+

Uppercase letters denote inverses; whitespace between terms is ignored.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

GENERATORS = ("a", "w")

Syllable = tuple[str, int]


class WordSyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


def reduce_syllables(syllables: Iterable[Syllable]) -> tuple[Syllable, ...]:
    """Freely reduce a syllable sequence (merge equal neighbours, drop zeros)."""
    stack: list[Syllable] = []
    for g, e in syllables:
        if g not in GENERATORS:
            raise ValueError(f"unknown generator {g!r}")
        if not e:
            continue
        if stack and stack[-1][0] == g:
            e += stack.pop()[1]
            if not e:
                continue
        stack.append((g, e))
    return tuple(stack)


class Word:
    """Freely reduced element of F(a, w).

    >>> Word.parse("(aw)^2 W")
    Word('awa')
    >>> Word.parse("a a^-1")
    Word('1')
    """

    __slots__ = ("syllables", "_hash")

    def __init__(self, syllables: Iterable[Syllable] = ()):
        self.syllables = reduce_syllables(syllables)
        self._hash = None

    @classmethod
    def _trusted(cls, syllables: tuple[Syllable, ...]) -> "Word":
        w = cls.__new__(cls)
        w.syllables = syllables
        w._hash = None
        return w

    @classmethod
    def parse(cls, text: str) -> "Word":
        return parse_word(text)

    @classmethod
    def gen(cls, g: str, e: int = 1) -> "Word":
        return cls([(g, e)])

    def __eq__(self, other):
        if isinstance(other, str):
            other = parse_word(other)
        if not isinstance(other, Word):
            return NotImplemented
        return self.syllables == other.syllables

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.syllables)
        return self._hash

    def __len__(self) -> int:
        return len(self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __mul__(self, other: "Word | str") -> "Word":
        if isinstance(other, str):
            other = parse_word(other)
        return concat(self, other)

    def __rmul__(self, other: str) -> "Word":
        return concat(parse_word(other), self)

    def __pow__(self, k: int) -> "Word":
        return power(self, k)

    def __invert__(self) -> "Word":
        return invert(self)

    def letter_length(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


IDENTITY = Word._trusted(())


def as_word(u: "Word | str") -> Word:
    return parse_word(u) if isinstance(u, str) else u


def format_word(u: Word) -> str:
    """Print a word so that ``parse_word(format_word(u)) == u``."""
    if not u.syllables:
        return "1"
    out = []
    for g, e in u.syllables:
        if e == 1:
            out.append(g)
        elif e == -1:
            out.append(g.upper())
        else:
            out.append(f"{g}^{e}")
    return "".join(out)


def parse_word(text: str) -> Word:
    """Parse the word grammar; raises :class:`WordSyntaxError` on bad input."""
    parser = _WordParser(text)
    syl = parser.word(top=True)
    return Word(syl)


class _WordParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _fail(self, msg: str):
        raise WordSyntaxError(msg, self.text, self.pos)

    def word(self, top: bool = False) -> list[Syllable]:
        syl: list[Syllable] = []
        if self._peek() == "1":
            self.pos += 1
        else:
            if self._peek() in ("", ")"):
                self._fail("expected a word")
            while self._peek() not in ("", ")"):
                syl.extend(self.term())
        if top and self._peek():
            self._fail(f"unexpected {self._peek()!r}")
        return syl

    def term(self) -> list[Syllable]:
        ch = self._peek()
        start = self.pos
        if ch in ("a", "w"):
            self.pos += 1
            body = [(ch, 1)]
        elif ch in ("A", "W"):
            self.pos += 1
            body = [(ch.lower(), -1)]
        elif ch == "(":
            self.pos += 1
            inner = self.word()
            if self._peek() != ")":
                self._fail("expected ')'")
            self.pos += 1
            body = list(reduce_syllables(inner))
        elif ch.isalpha():
            self._fail(f"unknown generator {ch!r}")
        else:
            self.pos = start
            self._fail(f"unexpected {ch!r}" if ch else "unexpected end of input")
        if self._peek() == "^":
            k = self._exponent()
            return list(_power_syllables(tuple(body), k))
        return body

    def _exponent(self) -> int:
        self.pos += 1  # '^'
        self._skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            self._fail("expected integer exponent")
        return int(self.text[start:self.pos])


def _power_syllables(syl: tuple[Syllable, ...], k: int) -> tuple[Syllable, ...]:
    base = reduce_syllables(syl)
    if k < 0:
        base = invert(Word._trusted(base)).syllables
        k = -k
    return power(Word._trusted(base), k).syllables


# -- basic operations -------------------------------------------------------

def concat(*words: Word) -> Word:
    syl: list[Syllable] = []
    for u in words:
        syl.extend(as_word(u).syllables)
    return Word(syl)


def invert(u: Word) -> Word:
    return Word._trusted(tuple((g, -e) for g, e in reversed(u.syllables)))


def reverse(u: Word) -> Word:
    """The word with its letters written in reverse order."""
    return Word._trusted(tuple(reversed(u.syllables)))


def is_palindrome(u: Word) -> bool:
    return reverse(u) == u


def power(u: Word, k: int) -> Word:
    if k < 0:
        return power(invert(u), -k)
    if k == 0 or not u:
        return IDENTITY
    core, conj = cyclic_reduce(u)
    if len(core.syllables) == 1:
        g, e = core.syllables[0]
        mid = Word._trusted(((g, e * k),))
    else:
        mid = Word._trusted(core.syllables * k)
    return concat(conj, mid, invert(conj))


def cyclic_reduce(u: Word) -> tuple[Word, Word]:
    """Split ``u = conjugator * core * conjugator^-1`` with ``core`` cyclically reduced.

    >>> cyclic_reduce(Word.parse("awA"))
    (Word('w'), Word('a'))
    """
    syl = list(u.syllables)
    conj: list[Syllable] = []
    while len(syl) >= 2 and syl[0][0] == syl[-1][0]:
        (g, p), (_, q) = syl[0], syl[-1]
        if p + q == 0:
            conj.append((g, p))
            syl = syl[1:-1]
        else:
            conj.append((g, p))
            syl = syl[1:-1] + [(g, p + q)]
            break
    return Word._trusted(tuple(syl)), Word(conj)


def cyclic_core(syl: Sequence[Syllable], merged_first: bool = False) -> tuple[Syllable, ...]:
    """Cyclically reduced syllables of a freely reduced sequence (conjugator dropped).

    When the two end syllables merge, the merged syllable goes last, or
    first if ``merged_first`` is set.
    """
    lo, hi = 0, len(syl)
    while hi - lo >= 2 and syl[lo][0] == syl[hi - 1][0]:
        g, p = syl[lo]
        q = syl[hi - 1][1]
        if p + q:
            if merged_first:
                return ((g, p + q),) + tuple(syl[lo + 1:hi - 1])
            return tuple(syl[lo + 1:hi - 1]) + ((g, p + q),)
        lo += 1
        hi -= 1
    return tuple(syl[lo:hi])


def _rotations(syl: tuple[Syllable, ...]):
    for i in range(len(syl)):
        yield syl[i:] + syl[:i]


def cyclic_key(u: Word | Sequence[Syllable], with_inverse: bool = True) -> tuple[Syllable, ...]:
    """Canonical representative of the conjugacy class of ``u``.

    Minimum over the rotations of the cyclically reduced core, and also of
    its inverse when ``with_inverse`` is set.  Two words get the same key
    iff they are conjugate (up to inversion).
    """
    syl = u.syllables if isinstance(u, Word) else tuple(u)
    core = cyclic_core(syl)
    if not core:
        return ()
    best = min(_rotations(core))
    if with_inverse:
        inv = tuple((g, -e) for g, e in reversed(core))
        best = min(best, min(_rotations(inv)))
    return best


def are_conjugate(u: Word, v: Word, allow_inverse: bool = False) -> bool:
    return cyclic_key(u, allow_inverse) == cyclic_key(v, allow_inverse)


def random_word(rng: random.Random, max_syllables: int, max_exponent: int = 4,
                min_syllables: int = 0) -> Word:
    """Random freely reduced word with the given syllable count bounds."""
    n = rng.randint(min_syllables, max_syllables)
    g = rng.choice(GENERATORS)
    syl = []
    for _ in range(n):
        e = rng.choice([k for k in range(-max_exponent, max_exponent + 1) if k])
        syl.append((g, e))
        g = "w" if g == "a" else "a"
    return Word._trusted(tuple(syl))
