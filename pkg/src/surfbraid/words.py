"""Braid words over the generators s_i and a[j,r], and rewriting to normal form.

Grammar (whitespace or '*' separates terms, indices 1-based)::

    word := term (('*' | whitespace) term)*
    term := gen ('^' signed-int)?
    gen  := 's' int | 'a[' int ',' int ']'

The empty string is the identity word.  Rewriting is a single left fold:
the quotient presentation has an abelian kernel and a splitting, so a
running normal form absorbs one letter at a time and no confluence
machinery is needed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .core import CoeffVector, Element, GroupDescriptor
from .errors import GeneratorIndexError, WordSyntaxError
from .permutations import Permutation

SIGMA = "s"
HANDLE = "a"


@dataclass(frozen=True)
class Letter:
    """One signed generator: kind 's' uses index i; kind 'a' uses (i, r)."""

    kind: str
    i: int
    r: int = 0
    exp: int = 1

    def __post_init__(self):
        if self.kind not in (SIGMA, HANDLE):
            raise ValueError(f"unknown letter kind {self.kind!r}")
        if self.exp == 0:
            raise ValueError("letter exponent must be nonzero")

    def text(self) -> str:
        base = f"s{self.i}" if self.kind == SIGMA else f"a[{self.i},{self.r}]"
        return base if self.exp == 1 else f"{base}^{self.exp}"


@dataclass(frozen=True)
class BraidWord:
    """A sequence of signed generator letters; the empty word is the identity."""

    letters: tuple[Letter, ...] = ()

    def __mul__(self, other: BraidWord) -> BraidWord:
        return BraidWord(self.letters + other.letters)

    def inverse_word(self) -> BraidWord:
        return BraidWord(
            tuple(
                Letter(l.kind, l.i, l.r, -l.exp) for l in reversed(self.letters)
            )
        )

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse_word() ** (-k)
        return BraidWord(self.letters * k)

    def text(self) -> str:
        return " ".join(l.text() for l in self.letters)

    def __str__(self) -> str:
        return self.text()


def check_letter(group: GroupDescriptor, letter: Letter) -> None:
    if letter.kind == SIGMA:
        if not 1 <= letter.i <= group.n - 1:
            raise GeneratorIndexError(
                f"s{letter.i}: index {letter.i} out of range 1..{group.n - 1}"
            )
    else:
        handles = group.handle_count  # raises UnsupportedSurfaceError on the sphere
        if not 1 <= letter.i <= group.n:
            raise GeneratorIndexError(
                f"a[{letter.i},{letter.r}]: strand {letter.i} out of range 1..{group.n}"
            )
        if not 1 <= letter.r <= handles:
            raise GeneratorIndexError(
                f"a[{letter.i},{letter.r}]: handle {letter.r} out of range 1..{handles}"
            )


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<sep>\*)
      | s(?P<si>\d+)
      | a\[\s*(?P<aj>\d+)\s*,\s*(?P<ar>\d+)\s*\]
      | (?P<bad>\S)
    )""",
    re.VERBOSE,
)
_EXP = re.compile(r"\^(?P<exp>[+-]?\d+)")


def parse(group: GroupDescriptor, text: str) -> BraidWord:
    """Parse a braid word string, validating all generator indices against the group."""
    letters: list[Letter] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace remains
            break
        if m.group("bad"):
            raise WordSyntaxError(f"unexpected character {m.group('bad')!r}", m.start("bad"))
        pos = m.end()
        if m.group("sep"):
            continue
        if m.group("si") is not None:
            letter = Letter(SIGMA, int(m.group("si")))
        else:
            letter = Letter(HANDLE, int(m.group("aj")), int(m.group("ar")))
        e = _EXP.match(text, pos)
        if e:
            pos = e.end()
            exp = int(e.group("exp"))
            if exp == 0:
                raise WordSyntaxError("exponent 0 is not allowed", e.start("exp"))
            letter = Letter(letter.kind, letter.i, letter.r, exp)
        elif pos < len(text) and text[pos] == "^":
            raise WordSyntaxError("malformed exponent", pos)
        check_letter(group, letter)
        letters.append(letter)
    return BraidWord(tuple(letters))


def normalize(group: GroupDescriptor, word: BraidWord) -> Element:
    """Rewrite a word to its unique normal form (orientable surfaces).

    Folding left to right: an s_i letter multiplies the permutation part by
    the transposition (i, i+1) (its section squares to the identity, so the
    sign of the exponent is irrelevant); an a[j,r]^e letter adds e to the
    coefficient at strand w(j), handle r, where w is the permutation
    accumulated so far.
    """
    group.require_orientable("word normalization")
    n, handles = group.n, group.handle_count
    rows = [[0] * handles for _ in range(n)]
    perm = Permutation.identity(n)
    for letter in word.letters:
        check_letter(group, letter)
        if letter.kind == SIGMA:
            if letter.exp % 2:
                perm = perm * Permutation.transposition(n, letter.i)
        else:
            rows[perm(letter.i) - 1][letter.r - 1] += letter.exp
    return Element(group, CoeffVector(tuple(tuple(r) for r in rows)), perm)


def normalize_text(group: GroupDescriptor, text: str) -> Element:
    return normalize(group, parse(group, text))


def sigma_word(indices: Iterable[int], exp: int = 1) -> BraidWord:
    return BraidWord(tuple(Letter(SIGMA, i, 0, exp) for i in indices))


def t_word(group: GroupDescriptor, i: int, j: int) -> BraidWord:
    """The two-strand twist word: s_i ... s_{j-2} s_{j-1}^2 s_{j-2} ... s_i."""
    if not 1 <= i < j <= group.n:
        raise GeneratorIndexError(f"need 1 <= i < j <= n, got ({i},{j}) with n={group.n}")
    ascent = list(range(i, j - 1))
    return sigma_word(ascent) * BraidWord((Letter(SIGMA, j - 1, 0, 2),)) * sigma_word(reversed(ascent))


def a_word(group: GroupDescriptor, i: int, j: int) -> BraidWord:
    """The pure-braid band generator word: s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1."""
    if not 1 <= i < j <= group.n:
        raise GeneratorIndexError(f"need 1 <= i < j <= n, got ({i},{j}) with n={group.n}")
    descent = list(range(j - 1, i, -1))
    return (
        sigma_word(descent)
        * BraidWord((Letter(SIGMA, i, 0, 2),))
        * sigma_word(reversed(descent), exp=-1)
    )


def full_twist_word(group: GroupDescriptor) -> BraidWord:
    """The full twist (s_1 ... s_{n-1})^n, expanded letter by letter."""
    return sigma_word(range(1, group.n)) ** group.n


def other_handles_word(group: GroupDescriptor, j: int, r: int) -> BraidWord:
    """a[j,1] ... a[j,r-1] a[j,r+1]^-1 ... a[j,2g]^-1, a word builder only."""
    handles = group.handle_count
    if not (1 <= j <= group.n and 1 <= r <= handles):
        raise GeneratorIndexError(f"index ({j},{r}) out of range for n={group.n}, handles={handles}")
    letters = [Letter(HANDLE, j, s) for s in range(1, r)]
    letters += [Letter(HANDLE, j, s, -1) for s in range(r + 1, handles + 1)]
    return BraidWord(tuple(letters))


@dataclass(frozen=True)
class RelationReport:
    """Result of checking every defining relation instance for one group."""

    group: GroupDescriptor
    checked: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_relations(group: GroupDescriptor) -> RelationReport:
    """Normalize both sides of every defining relation of the quotient presentation.

    Checked: commuting and braid relations among the s_i, the involutivity
    s_i^2 = 1, commutativity of the a[j,r], the strand-relabelling relation
    s_i a[j,r] s_i^-1 = a[t_i(j),r], and triviality of the two-strand twist
    words, band generator words, and the full twist.
    """
    group.require_orientable("relation checking")
    n, handles = group.n, group.handle_count
    checked = 0
    failures: list[str] = []

    def expect_equal(lhs: BraidWord, rhs: BraidWord, label: str) -> None:
        nonlocal checked
        checked += 1
        if normalize(group, lhs) != normalize(group, rhs):
            failures.append(label)

    def expect_trivial(word: BraidWord, label: str) -> None:
        nonlocal checked
        checked += 1
        if not normalize(group, word).is_identity():
            failures.append(label)

    empty = BraidWord()
    for i in range(1, n):
        expect_trivial(sigma_word([i, i]), f"s{i}^2 = 1")
        for j in range(1, n):
            if abs(i - j) >= 2:
                expect_equal(sigma_word([i, j]), sigma_word([j, i]), f"s{i} s{j} = s{j} s{i}")
        if i <= n - 2:
            expect_equal(
                sigma_word([i, i + 1, i]),
                sigma_word([i + 1, i, i + 1]),
                f"braid relation at s{i}",
            )
    for i in range(1, n + 1):
        for r in range(1, handles + 1):
            x = BraidWord((Letter(HANDLE, i, r),))
            for j in range(1, n + 1):
                for s in range(1, handles + 1):
                    y = BraidWord((Letter(HANDLE, j, s),))
                    expect_equal(x * y, y * x, f"[a[{i},{r}], a[{j},{s}]] = 1")
    for i in range(1, n):
        tau = Permutation.transposition(n, i)
        si = BraidWord((Letter(SIGMA, i),))
        for j in range(1, n + 1):
            for r in range(1, handles + 1):
                lhs = si * BraidWord((Letter(HANDLE, j, r),)) * si.inverse_word()
                rhs = BraidWord((Letter(HANDLE, tau(j), r),))
                expect_equal(lhs, rhs, f"s{i} a[{j},{r}] s{i}^-1 = a[{tau(j)},{r}]")
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            expect_trivial(t_word(group, i, j), f"T({i},{j}) = 1")
            expect_trivial(a_word(group, i, j), f"A({i},{j}) = 1")
    if n >= 2:
        expect_trivial(full_twist_word(group), "full twist = 1")
    expect_trivial(empty, "empty word = 1")
    return RelationReport(group, checked, tuple(failures))
