"""Permutations and Schubert polynomials from the command line down.

Walks through the core objects: one-line permutations, lengths and
descents, reduced words, and the Schubert polynomial computed by folding
divided difference operators over a reduced word of the complement.
"""

from pipedreams import (
    Permutation,
    divided_difference,
    reduced_words,
    schubert_polynomial,
    staircase_monomial,
)


def main():
    pi = Permutation.parse("21543")
    print("permutation:", pi)
    print("length:", pi.length())
    print("left descents:", sorted(pi.left_descents()))
    print("right descents:", sorted(pi.right_descents()))

    words = sorted(reduced_words(pi))
    print(f"{len(words)} reduced words, first three:")
    for w in words[:3]:
        print("  ", w)

    S = schubert_polynomial(pi)
    print("Schubert polynomial:", S)
    print("coefficient of x1^2 x2 x3:", S.terms.get((2, 1, 1), 0))

    # The staircase monomial is the top of the recursion: applying the
    # divided difference for each letter of a reduced word of the
    # complement peels it down to the Schubert polynomial.
    top = staircase_monomial(3)
    print("staircase for n=3:", top)
    print("d_1 applied once:", divided_difference(top, 1))

    for sigma in (Permutation.parse("132"), Permutation.parse("321")):
        print(f"S_{sigma} =", schubert_polynomial(sigma))


if __name__ == "__main__":
    main()
