"""Building group embeddings that meet the complexity bound exactly.

Given any abstract finite abelian group, written as prime-power cyclic
factors, there is an embedding into S_n whose action on the length-n factors
of a Sturmian word has exactly epsilon + 1 classes: pad the factors with
trivial ones up to trace n, give each factor a consecutive interval block,
and put an interval-exchange cycle on every block.  Conjugating instead of
padding is not always possible; the scan at the end measures the classic
obstruction in S_6.
"""

from wordorbits import (AbelianSpec, PermGroup, build_conjugate_witness,
                        build_isomorphic_witness, conjugacy_scan, fibonacci,
                        parse_cycles)


def show(report):
    blocks = " ".join("{" + ",".join(map(str, b)) + "}"
                      for b in report.partition.blocks)
    print(f"  blocks {blocks}")
    print(f"  cycles {' '.join(report.cycle_strings())}")
    print(f"  epsilon = {report.epsilon}, classes = {report.class_count}, "
          f"passed = {report.passed}")
    for i, cls in enumerate(report.classes, start=1):
        print(f"    class {i}: {' '.join(cls)}")


def main():
    fib = fibonacci()

    print("Witness for Z4 at n = 4 (a single 4-cycle)")
    show(build_isomorphic_witness(fib, 4, AbelianSpec.parse("Z4")))

    print("\nWitness for Z2 at n = 4 (padded with two trivial factors)")
    show(build_isomorphic_witness(fib, 4, AbelianSpec.parse("Z2")))

    print("\nWitness for Z6 = Z2 x Z3 at n = 7")
    show(build_isomorphic_witness(fib, 7, AbelianSpec.parse("Z6")))

    print("\nRebuilding a cycle type: (1,2,3,4,5) with two fixed points in S_7")
    show(build_conjugate_witness(fib, parse_cycles("(1,2,3,4,5)", 7)))

    print("\nThe obstruction: sigma = (1,2,3)(4,5,6) in S_6 has gcd of cycle")
    print("lengths 3, and no conjugate of <sigma> reaches epsilon + 1 = 3:")
    scan = conjugacy_scan(fib, PermGroup((parse_cycles("(1,2,3)(4,5,6)"),)))
    print(f"  {len(scan.rows)} distinct conjugate subgroups, class counts "
          f"range {scan.min_classes}..{scan.max_classes}")
    print("  so the isomorphic witness is the best possible here: replacing")
    print("  'isomorphic' by 'conjugate' genuinely loses the guarantee.")


if __name__ == "__main__":
    main()
