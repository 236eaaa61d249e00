"""Words, prefixes and factor counting.

Every aperiodic infinite word has at least n + 1 distinct factors of each
length n, and the words that meet this floor exactly are the Sturmian words:
aperiodic, binary and balanced.  This script generates a few classic words
and counts their factors to see the gap.
"""

from wordorbits import (PeriodicWord, SturmianWord, factors, fibonacci,
                        is_balanced, special_factors, thue_morse)


def main():
    fib = fibonacci()
    tm = thue_morse()
    golden_plus = SturmianWord((2, 1))
    toy = PeriodicWord("01")

    print("Prefixes")
    for source in (fib, tm, golden_plus, toy):
        print(f"  {source.name:<12} {source.prefix(40)}")

    print("\nFactor counts by length (floor for aperiodic words is n + 1)")
    header = "  " + "n".ljust(14) + "".join(f"{n:>5}" for n in range(1, 13))
    print(header)
    for source in (fib, golden_plus, tm, toy):
        counts = [len(factors(source, n)) for n in range(1, 13)]
        print("  " + source.name.ljust(14) + "".join(f"{c:>5}" for c in counts))
    print("  The Sturmian rows sit exactly on n + 1; Thue-Morse grows away;")
    print("  the periodic word is capped at its period.")

    print("\nBalance")
    for source in (fib, tm):
        report = is_balanced(source, 10)
        if report.balanced:
            print(f"  {source.name}: balanced up to length 10")
        else:
            u, v = report.witness
            print(f"  {source.name}: unbalanced at length {report.length}, "
                  f"witness {u} vs {v}")

    print("\nSpecial factors of the Fibonacci word")
    for n in range(0, 7):
        left, right, bispecial = special_factors(fib, n)
        row = ", ".join(repr(w) for w in bispecial) or "-"
        print(f"  n={n}: left={left[0]!r} right={right[0]!r} bispecial={row}")
    print("  One left and one right special factor per length is the")
    print("  signature of a Sturmian word; the bispecial ones are palindromes.")


if __name__ == "__main__":
    main()
