"""Coset enumeration: group orders, subgroup indices, and the table."""

from orbisym import (
    enumerate_cosets,
    group_order,
    load_presentation,
    parse_word,
    table_to_tsv,
    trace_word,
)

# the (2,3,q) rotation groups land on the orders 12, 24, 60
for q in (3, 4, 5):
    pres = load_presentation(f"generators: x y\nrelators: x^3 y^2 (x*y)^{q}\n")
    print(f"(2,3,{q}) rotation group order:", group_order(pres))

# a dihedral group of order 14, then the index of the rotation subgroup
dihedral = load_presentation("generators: x y\nrelators: x^7 y^2 (x*y)^2\n")
print("dihedral order:", group_order(dihedral))

rotations = (parse_word("x", dihedral.generator_names),)
table = enumerate_cosets(dihedral, subgroup=rotations)
print("rotation subgroup index:", table.n_cosets)
print()
print(table_to_tsv(table))

# tracing words through the table: relators fix every coset
relator = dihedral.relators[2]
print("tracing (x*y)^2 from coset 1 lands on:", trace_word(table, 1, relator))
