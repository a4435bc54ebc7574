"""
Reading and writing word lists.

A language file is UTF-8 text. Its first non-comment line declares the
alphabet, and every other line holds one word::

    # the code Z
    alphabet: a b
    abb
    baa

Everything after a ``#`` is a comment, and blank lines are skipped.
"""
from logging import getLogger
from pathlib import Path
from typing import Union

from codedit.errors import AlphabetError, LanguageFileError
from codedit.langs import FiniteLang
from codedit.words import Alphabet

log = getLogger(__name__)

_HEADER = 'alphabet:'


def parse_language(text: str) -> FiniteLang:
    """Parses the contents of a language file.

    Raises
    ------
    LanguageFileError
        With the line number of the first problem.
    """
    alphabet = None
    words = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue

        if alphabet is None:
            if not line.startswith(_HEADER):
                raise LanguageFileError(
                    f"expected '{_HEADER} s1 s2 ...', got {line!r}", lineno)
            try:
                alphabet = Alphabet(line[len(_HEADER):].split())
            except AlphabetError as e:
                raise LanguageFileError(str(e), lineno) from None
            continue

        if any(c.isspace() for c in line):
            raise LanguageFileError(
                f"one word per line expected, got {line!r}", lineno)
        try:
            alphabet.validate_word(line)
        except AlphabetError as e:
            raise LanguageFileError(str(e), lineno) from None
        if line in words:
            raise LanguageFileError(f"duplicate word {line!r}", lineno)
        words.add(line)

    if alphabet is None:
        raise LanguageFileError("missing alphabet header")

    return FiniteLang(alphabet, frozenset(words))


def read_language(path: Union[str, Path]) -> FiniteLang:
    """Reads a language file from disk."""
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except UnicodeDecodeError as e:
        raise LanguageFileError(f"{path} is not UTF-8: {e}") from None
    X = parse_language(text)
    log.debug("read %d words over %s from %s", len(X), X.alphabet, path)
    return X


def format_language(X: FiniteLang) -> str:
    """The language file text for X, words in length-lex order."""
    if '' in X:
        raise LanguageFileError("the empty word cannot be written")
    lines = [f"{_HEADER} {X.alphabet}"]
    lines.extend(X.sorted())
    return '\n'.join(lines) + '\n'


def write_language(X: FiniteLang, path: Union[str, Path]) -> None:
    Path(path).write_text(format_language(X), encoding='utf-8')
