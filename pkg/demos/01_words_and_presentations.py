"""Words and presentations: parsing, printing, and the file format."""

from orbisym import (
    Word,
    conjugate,
    dump_presentation,
    format_word,
    load_presentation_with_aliases,
    parse_word,
)

ALPHABET = ("x", "y", "z")

# words are tuples of signed letters; +1 is x, -1 is x^-1, +2 is y, ...
w = parse_word("(x*y)^2 * z^-1", ALPHABET)
print("parsed:   ", w.letters)
print("printed:  ", format_word(w, ALPHABET))

# products reduce freely: x*y times y^-1*x^-1 collapses to the identity
u = parse_word("x*y", ALPHABET)
print("u * ~u:   ", format_word(u * ~u, ALPHABET))
print("conjugate:", format_word(conjugate(u, parse_word("z", ALPHABET)), ALPHABET))

TEXT = """\
# an order-120 group: five relators over three generators
generators: x y z
alias arc = x*y
relators: x^5 y^2 z^2 (x*z)^3 arc^2 (y*z^-1)^2
"""

pres, aliases = load_presentation_with_aliases(TEXT)
print()
print("generators:", pres.generator_names)
print("relators:  ", [format_word(r, pres.generator_names) for r in pres.relators])
print("aliases:   ", {k: format_word(v, pres.generator_names) for k, v in aliases.items()})
print()
print(dump_presentation(pres))
