"""Orientability via homomorphisms onto Z2.

A quotient surface is orientable exactly when some homomorphism onto
Z2 sends every reflection boundary word to the nontrivial element.
The solver works in the mod-2 abelianization, so each check is a small
GF(2) linear system.
"""

from orbisym import Z2Constraint, load_presentation, parse_word, solve_hom_to_z2

TEXT = """\
generators: x y z
relators: x^5 y^2 z^2 (x*z)^3 (x*y)^2 (y*z^-1)^2
"""

pres = load_presentation(TEXT)
names = pres.generator_names


def check(pairs):
    constraints = tuple(Z2Constraint(parse_word(w, names), bit) for w, bit in pairs)
    result = solve_hom_to_z2(pres, constraints)
    wanted = ", ".join(f"{w} -> {bit}" for w, bit in pairs)
    if result.solvable:
        witness = ", ".join(f"h({g})={v}" for g, v in zip(names, result.assignment))
        print(f"{wanted}:  solvable with {witness}")
    else:
        print(f"{wanted}:  unsolvable")


# all three reflection words to 1: solvable, so that surface is orientable
check([("x*y*z^-1*x^-1", 1), ("x*y*x^-1", 1), ("x*y", 1)])

# this pair cannot both map to 1: the corresponding surface is non-orientable
check([("y", 1), ("x*z", 1)])

# the same pair with the arc word sent to 0 is fine
check([("y", 1), ("x*z", 0)])
