"""Discrete 3-interval exchanges that realize abelian equivalence.

For a Sturmian word and any length m there is an m-cycle, built from three
interval lengths (a, b, c), whose action identifies exactly the abelian
classes of the length-m factors.  The data comes from two consecutive
bispecial (central) factors: letter counts of 0w1 give coprime periods p, q
and then a = m - p, b = p + q - m, c = m - q.  Sorting the cyclic conjugates
of 0w1 produces the Christoffel array, whose rows step by a fixed cyclic
shift; that rigidity is what makes the cycle work.
"""

from wordorbits import (PermGroup, christoffel_array, factors, fibonacci,
                        fine_wilf_data, orbit_classes, sturmian_cycle)


def main():
    fib = fibonacci()

    print("Interval-exchange data on the Fibonacci word")
    print("  m   w          w_prev   r  s  p  q   (a,b,c)   cycle")
    for m in range(4, 11):
        d = fine_wilf_data(fib, m)
        sigma = sturmian_cycle(fib, m)
        print(f"  {m:<3} {d.w:<10} {d.w_prev:<8} {d.r}  {d.s}  {d.p}  {d.q}"
              f"   ({d.a},{d.b},{d.c})   {sigma.cycle_string()}")

    m = 6
    d = fine_wilf_data(fib, m)
    sigma = sturmian_cycle(fib, m)
    fs = factors(fib, m)
    print(f"\nHow the m = {m} cycle acts: split u into C|B|A with sizes "
          f"({d.c},{d.b},{d.a}), output A|B|C")
    for u in fs.members:
        head, mid, tail = u[:d.c], u[d.c:d.c + d.b], u[d.c + d.b:]
        print(f"  {head}|{mid}|{tail} -> {sigma.act(u)}")
    part = orbit_classes(fs, PermGroup((sigma,)))
    print(f"  orbit classes: {part.blocks}")
    print(f"  abelian classes: {fs.parikh_classes()}")

    w = "010010"
    arr = christoffel_array(w)
    print(f"\nChristoffel array of 0{w}1 "
          f"(r = {arr.r} ones, s = {arr.s} zeros, shift q = {arr.shift})")
    print(arr.render())
    print("  Adjacent rows differ by one 01 -> 10 swap and each row is the")
    print(f"  previous one rotated right by q = {arr.shift}.")


if __name__ == "__main__":
    main()
