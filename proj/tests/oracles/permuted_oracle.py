"""Independent brute-force oracle for permuted bracketed implications.

Builds every bracketing shape over n leaves, assigns each permutation of
p1..pn to the leaves, evaluates the truth table row by row and prints
n,total_formulae,distinct_functions,false_total_all,false_total_distinct.
Used to freeze the regression values in the C++ tests.
"""
import itertools
import sys
from functools import lru_cache


@lru_cache(maxsize=None)
def shapes(m):
    if m == 1:
        return ("leaf",)
    out = []
    for r in range(1, m):
        for a in shapes(r):
            for c in shapes(m - r):
                out.append((a, c))
    return tuple(out)


def evaluate(shape, leaves, row, n):
    # leaves: iterator over the variable assigned to each leaf, in order.
    if shape == "leaf":
        var = next(leaves)
        return (row >> (n - var)) & 1
    a = evaluate(shape[0], leaves, row, n)
    c = evaluate(shape[1], leaves, row, n)
    return 0 if (a == 1 and c == 0) else 1


def main(n_max):
    print("n,total_formulae,distinct_functions,false_total_all,false_total_distinct")
    for n in range(1, n_max + 1):
        total = 0
        false_all = 0
        distinct = {}
        for shape in shapes(n):
            for perm in itertools.permutations(range(1, n + 1)):
                col = tuple(evaluate(shape, iter(perm), row, n) for row in range(2 ** n))
                total += 1
                zeros = col.count(0)
                false_all += zeros
                distinct[col] = zeros
        print(f"{n},{total},{len(distinct)},{false_all},{sum(distinct.values())}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 5)
