"""Finite group presentations and their line-oriented file format.

File format, one directive per line, '#' starts a comment:

    generators: x y z
    alias midarc = x*y*z^-1*x^-1
    relators: x^5 y^2 z^2 (x*z)^3 (x*y)^2 (y*z^-1)^2

Aliases must be declared before use and expand inline; they are not
stored on the Presentation.  Relators are kept freely reduced but not
cyclically reduced.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from .errors import (
    DuplicateGenerator,
    EmptyRelator,
    InvalidParameter,
    WordSyntaxError,
)
from .words import Word, format_word, parse_word

__all__ = [
    "Presentation",
    "load_presentation",
    "load_presentation_with_aliases",
    "dump_presentation",
    "family_15e",
    "family_19",
]

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Presentation:
    """Generator names plus freely reduced relator words."""

    generator_names: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for name in self.generator_names:
            if not _NAME.match(name):
                raise WordSyntaxError(f"invalid generator name {name!r}")
            if name in seen:
                raise DuplicateGenerator(f"generator {name!r} declared twice")
            seen.add(name)
        for r in self.relators:
            if not r:
                raise EmptyRelator("relator freely reduces to the empty word")
            if r.max_generator_index() >= len(self.generator_names):
                raise WordSyntaxError("relator uses a generator outside the alphabet")

    @property
    def n_generators(self) -> int:
        return len(self.generator_names)


def load_presentation_with_aliases(text: str) -> tuple[Presentation, dict[str, Word]]:
    """Parse the file format; returns the presentation and its alias map."""
    names: tuple[str, ...] | None = None
    aliases: dict[str, Word] = {}
    relators: list[Word] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("generators:"):
                if names is not None:
                    raise WordSyntaxError("generators declared twice")
                names = tuple(line[len("generators:"):].split())
                if not names:
                    raise WordSyntaxError("empty generator list")
            elif line.startswith("alias"):
                if names is None:
                    raise WordSyntaxError("alias before generators line")
                body = line[len("alias"):].strip()
                if "=" not in body:
                    raise WordSyntaxError("alias needs 'alias name = word'")
                name, expr = (part.strip() for part in body.split("=", 1))
                if not _NAME.match(name):
                    raise WordSyntaxError(f"invalid alias name {name!r}")
                if name in names or name in aliases:
                    raise DuplicateGenerator(f"name {name!r} declared twice")
                aliases[name] = parse_word(expr, names, aliases)
            elif line.startswith("relators:"):
                if names is None:
                    raise WordSyntaxError("relators before generators line")
                for token in line[len("relators:"):].split():
                    relators.append(parse_word(token, names, aliases))
            else:
                raise WordSyntaxError(f"unrecognized directive {line.split()[0]!r}")
        except (WordSyntaxError, DuplicateGenerator) as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None
    if names is None:
        raise WordSyntaxError("missing generators line")
    return Presentation(names, tuple(relators)), aliases


def load_presentation(text: str) -> Presentation:
    """Parse the file format, discarding aliases."""
    return load_presentation_with_aliases(text)[0]


def dump_presentation(p: Presentation) -> str:
    """Re-serialize to the file format (same generators, same reduced relators)."""
    lines = ["generators: " + " ".join(p.generator_names)]
    if p.relators:
        lines.append("relators: " + " ".join(format_word(r, p.generator_names) for r in p.relators))
    return "\n".join(lines) + "\n"


def family_15e(n: int) -> Presentation:
    """<x, y | x^2, y^n, x*y*x^-1*y^-1>, order 2n."""
    if n < 2:
        raise InvalidParameter(f"family 15E needs n >= 2, got {n}")
    x, y = Word.generator(0), Word.generator(1)
    return Presentation(("x", "y"), (x ** 2, y ** n, x * y * ~x * ~y))


def family_19(n: int) -> Presentation:
    """<x, y | x^n, y^n, x*y*x^-1*y^-1>, order n^2."""
    if n < 2:
        raise InvalidParameter(f"family 19 needs n >= 2, got {n}")
    x, y = Word.generator(0), Word.generator(1)
    return Presentation(("x", "y"), (x ** n, y ** n, x * y * ~x * ~y))
