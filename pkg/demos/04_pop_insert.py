"""Popping and reinserting blanks on bumpless diagrams.

pop removes the first blank (smallest row, then rightmost) by sliding
its column rightward, recording which simple reflection left the
permutation.  insert is its partial inverse: it either rebuilds the
popped diagram exactly or reports that no preimage exists.
"""

from pipedreams import (
    BumplessPipeDream,
    Permutation,
    bpd_insert,
    bpd_pop,
    enumerate_bpds,
    render,
)


def main():
    pi = Permutation.parse("321")
    start = BumplessPipeDream.rothe(pi)
    print("Rothe diagram of", pi)
    print(render(start, pretty=True))

    step = bpd_pop(start)
    print(f"\npop removed letter a={step.a} from row r={step.r}:")
    print(render(step.result, pretty=True))
    print("footprints of the slide:", step.footprints)

    back = bpd_insert(step.result, step.a, step.r)
    print("\ninsert undoes it exactly:", back == start)

    # Insertion can fail: no diagram of a longer permutation pops to the
    # Rothe diagram of 21 with letter 1, whatever the row.
    blocked = BumplessPipeDream.rothe(Permutation((2, 1)))
    misses = [r for r in range(1, 5) if bpd_insert(blocked, 1, r) is None]
    print("rows 1..4 all fail to insert letter 1 over Rothe(21):", misses)

    # Round trip over a whole fiber.
    sigma = Permutation.parse("1432")
    count = 0
    for b in enumerate_bpds(sigma):
        res = bpd_pop(b)
        assert bpd_insert(res.result, res.a, res.r) == b
        count += 1
    print(f"pop/insert round trip holds for all {count} diagrams of {sigma}")


if __name__ == "__main__":
    main()
