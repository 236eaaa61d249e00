"""Group actions on factor sets and why the embedding matters.

A subgroup G of S_n acts on length-n words by permuting positions, and so
partitions a factor set into orbit classes.  Two isomorphic subgroups can
behave very differently: the class count depends on how the group sits
inside S_n, not just on its isomorphism type.
"""

from wordorbits import (PermGroup, factors, fibonacci, is_abelian_transitive,
                        orbit_classes, parse_cycles)


def show_partition(title, blocks):
    print(f"  {title}")
    for i, cls in enumerate(blocks, start=1):
        print(f"    class {i}: {' '.join(cls)}")


def main():
    print("Two embeddings of the Klein four-group in S_4")
    klein1 = PermGroup((parse_cycles("(1,2)", 4), parse_cycles("(3,4)", 4)))
    klein2 = PermGroup((parse_cycles("(1,2)(3,4)"), parse_cycles("(1,3)(2,4)")))
    for name, group in (("<(1,2),(3,4)>", klein1),
                        ("<(1,2)(3,4),(1,3)(2,4)>", klein2)):
        orbits = group.point_orbits()
        print(f"  {name}: point orbits {orbits.blocks}, epsilon = {orbits.count}")
    print("  Same abstract group, different orbit counts.")

    fib = fibonacci()
    fs = factors(fib, 4)
    print(f"\nFibonacci factors of length 4: {' '.join(fs.members)}")
    print(f"Abelian (Parikh) classes: {fs.parikh_classes()}")

    for notation in ("(1,2,3,4)", "(1,3,2,4)"):
        group = PermGroup((parse_cycles(notation),))
        part = orbit_classes(fs, group)
        print(f"\nOrbit classes under <{notation}>  (epsilon = {group.epsilon})")
        show_partition(f"{part.class_count} classes", part.blocks)
        verdict = "matches" if is_abelian_transitive(fs, group) else "refines"
        print(f"    the partition {verdict} the abelian classes")

    print("\nBoth groups are 4-cycles, yet only (1,3,2,4) identifies exactly")
    print("the abelian classes; class counts are not conjugacy-invariant.")


if __name__ == "__main__":
    main()
