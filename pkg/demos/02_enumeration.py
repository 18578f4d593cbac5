"""Enumerate both diagram models and check their weights agree.

Pipe dreams place crossings in the staircase; bumpless diagrams place
blank tiles in a square grid.  Both families are generated for one
permutation, rendered, and their weight sums are compared against the
divided-difference polynomial.
"""

from pipedreams import (
    Permutation,
    SparsePolynomial,
    enumerate_bpds,
    enumerate_pipe_dreams,
    render,
    schubert_polynomial,
)


def weight_sum(diagrams):
    total = SparsePolynomial({})
    for d in diagrams:
        total = total + d.weight()
    return total


def main():
    pi = Permutation.parse("2143")
    print("permutation:", pi)

    dreams = sorted(enumerate_pipe_dreams(pi), key=lambda d: d.sorted_crosses())
    print(f"\n{len(dreams)} pipe dreams:")
    for d in dreams:
        print(render(d, pretty=True))
        print("  weight:", d.weight())

    bpds = sorted(enumerate_bpds(pi), key=lambda b: b.rows)
    print(f"\n{len(bpds)} bumpless diagrams:")
    for b in bpds:
        print(render(b, pretty=True))
        print("  weight:", b.weight())

    S = schubert_polynomial(pi)
    print("\nSchubert polynomial:", S)
    print("pipe dream weights sum to it:", weight_sum(dreams) == S)
    print("bumpless weights sum to it:  ", weight_sum(bpds) == S)


if __name__ == "__main__":
    main()
