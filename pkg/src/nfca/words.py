"""Words, shortlex order and the explicit finite-language container.

Words are plain ``str`` values whose characters are alphabet symbols; the
empty word is ``""``.  In text files the empty word is written ``_``.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import DomainError

EPSILON_TOKEN = "_"
RESERVED_SYMBOLS = frozenset("_#,:")


def normalize_alphabet(alphabet):
    """Return ``alphabet`` as a tuple of distinct one-character symbols."""
    symbols = tuple(alphabet)
    if not symbols:
        raise DomainError("alphabet must be non-empty")
    if len(set(symbols)) != len(symbols):
        raise DomainError(f"alphabet has repeated symbols: {''.join(symbols)!r}")
    for a in symbols:
        if not isinstance(a, str) or len(a) != 1 or a.isspace() or a in RESERVED_SYMBOLS:
            raise DomainError(f"invalid alphabet symbol {a!r}")
    return symbols


def shortlex_key(alphabet):
    """Sort key ordering words by length, then lexicographically in ``alphabet`` order."""
    rank = {a: i for i, a in enumerate(alphabet)}

    def key(word):
        return (len(word), tuple(rank[c] for c in word))

    return key


def words_up_to(alphabet, ell):
    """All words of length at most ``ell``, in shortlex order."""
    for n in range(ell + 1):
        for letters in product(alphabet, repeat=n):
            yield "".join(letters)


def format_word(word):
    return word if word else EPSILON_TOKEN


def parse_word(token):
    return "" if token == EPSILON_TOKEN else token


@dataclass(frozen=True, init=False)
class FiniteLanguage:
    """A finite set of words together with its cover length ``ell``.

    ``ell`` defaults to the length of the longest word (0 for the empty
    language).  Words longer than ``ell`` are rejected.  When ``alphabet`` is
    omitted it is inferred from the words, falling back to ``("a",)``.
    """

    words: tuple
    ell: int
    alphabet: tuple

    def __init__(self, words=(), ell=None, alphabet=None):
        words = set(words)
        if alphabet is None:
            alphabet = tuple(sorted({c for w in words for c in w})) or ("a",)
        alphabet = normalize_alphabet(alphabet)
        known = set(alphabet)
        for w in words:
            bad = set(w) - known
            if bad:
                raise DomainError(f"word {w!r} uses symbols outside the alphabet: {sorted(bad)}")
        longest = max((len(w) for w in words), default=0)
        if ell is None:
            ell = longest
        if ell < 0:
            raise DomainError("ell must be non-negative")
        if longest > ell:
            raise DomainError(f"word of length {longest} exceeds ell={ell}")
        object.__setattr__(self, "words", tuple(sorted(words, key=shortlex_key(alphabet))))
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "alphabet", alphabet)

    @cached_property
    def wordset(self):
        return frozenset(self.words)

    def __contains__(self, word):
        return word in self.wordset

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)

    def lengths(self):
        """The set of word lengths; a complete description for unary languages."""
        return {len(w) for w in self.words}

    def shortlex_key(self):
        return shortlex_key(self.alphabet)

    def with_ell(self, ell):
        return FiniteLanguage(self.words, ell=ell, alphabet=self.alphabet)

    def truncated(self, ell):
        """Words of length at most ``ell``, carried with cover length ``ell``."""
        return FiniteLanguage((w for w in self.words if len(w) <= ell), ell=ell, alphabet=self.alphabet)
