"""
Letters and reduced words of a free group.

A letter is stored compactly as a signed integer code: ``a`` for x_a and
``-a`` for its inverse. ``Letter`` is the structured view of such a code.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union

from .errors import AlphabetError, ContractViolation, FormatError


@dataclass(frozen=True, slots=True)
class Letter:
    """A free generator x_index (sign +1) or its inverse (sign -1)."""
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.index < 1:
            raise ContractViolation(f"letter index must be at least 1, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"Letter sign must be +1 or -1, got {self.sign}")

    @property
    def code(self) -> int:
        return self.index * self.sign

    def inverse(self) -> 'Letter':
        return Letter(self.index, -self.sign)

    @classmethod
    def from_code(cls, code: int) -> 'Letter':
        if code == 0:
            raise ContractViolation("letter code 0 does not name a letter")
        return cls(abs(code), 1 if code > 0 else -1)

    def __str__(self) -> str:
        return str(self.code)


LetterLike = Union[Letter, int]


def _code(letter: LetterLike) -> int:
    code = letter.code if isinstance(letter, Letter) else int(letter)
    if code == 0:
        raise ContractViolation("letter code 0 does not name a letter")
    return code


@dataclass(frozen=True, slots=True)
class Word:
    """A reduced word, stored as a tuple of signed letter codes."""
    codes: Tuple[int, ...] = ()

    def __post_init__(self):
        for left, right in zip(self.codes, self.codes[1:]):
            if left == -right:
                raise ValueError(f"Word is not reduced: {self.codes}")

    @property
    def letters(self) -> Tuple[Letter, ...]:
        return tuple(Letter.from_code(c) for c in self.codes)

    @property
    def max_index(self) -> int:
        return max((abs(c) for c in self.codes), default=0)

    def is_identity(self) -> bool:
        return not self.codes

    def inverse(self) -> 'Word':
        return Word(tuple(-c for c in reversed(self.codes)))

    def check_alphabet(self, rank: int) -> None:
        """Raise AlphabetError if any letter needs more than ``rank`` generators."""
        for c in self.codes:
            if abs(c) > rank:
                raise AlphabetError(abs(c), rank)

    def __mul__(self, other: 'Word') -> 'Word':
        return reduce(self.codes + other.codes)

    def __pow__(self, exponent: int) -> 'Word':
        base = self if exponent >= 0 else self.inverse()
        result = Word()
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self) -> Iterator[int]:
        return iter(self.codes)

    def __str__(self) -> str:
        return format_word(self)

    @classmethod
    def parse(cls, text: str) -> 'Word':
        return parse_word(text)


def reduce(letters: Iterable[LetterLike]) -> Word:
    """Free reduction: cancel adjacent inverse pairs until none remain."""
    stack = []
    for letter in letters:
        code = _code(letter)
        if stack and stack[-1] == -code:
            stack.pop()
        else:
            stack.append(code)
    return Word(tuple(stack))


def word(*codes: int) -> Word:
    """Shorthand used throughout the tests and examples: ``word(1, 2, -1)``."""
    return reduce(codes)


def parse_word(text: str, line_number: Optional[int] = None) -> Word:
    """Parse the ``1 -2 1`` signed-integer format and reduce the result."""
    codes = []
    for token in text.split():
        try:
            code = int(token)
        except ValueError:
            raise FormatError(f"Invalid letter {token!r}", line_number) from None
        if code == 0:
            raise FormatError("Letter 0 does not exist", line_number)
        codes.append(code)
    return reduce(codes)


def format_word(w: Word) -> str:
    return " ".join(str(c) for c in w.codes)


def display_word(w: Word, names: Optional[Sequence[str]] = None) -> str:
    """Human-readable form: ``x1 x2^-1`` or, with names, ``y x y^-1``."""
    if w.is_identity():
        return "1"
    parts = []
    for c in w.codes:
        name = names[abs(c) - 1] if names else f"x{abs(c)}"
        parts.append(name if c > 0 else f"{name}^-1")
    return " ".join(parts)
