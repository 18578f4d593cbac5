"""Monk move sequences on both diagram models.

Multiplying a Schubert polynomial by x_alpha acts diagram by diagram:
the x move adds a crossing in row alpha and cascades until the diagram
is reduced again.  The m moves relocate a crossing, walking diagrams
from one Bruhat cover to the next.  Together their images partition the
diagrams of all covers, which is Monk's rule made bijective.
"""

from collections import Counter

from pipedreams import (
    Permutation,
    bpd_x_insert,
    enumerate_pipe_dreams,
    monk_covers,
    pd_m_move,
    pd_x_insert,
    phi_inverse,
    render,
    verify_partition,
)


def main():
    pi = Permutation.parse("132")
    alpha = 2
    smaller, larger = monk_covers(pi, alpha)
    print(f"x_{alpha} * S_{pi} expands over covers:",
          [pi.right_t(s, alpha) for s in smaller]
          + [pi.right_t(alpha, l) for l in larger])

    print("\nx insertion on each pipe dream of", pi)
    for d in sorted(enumerate_pipe_dreams(pi), key=lambda d: d.sorted_crosses()):
        out, trace = pd_x_insert(d, alpha)
        print("from", d.sorted_crosses(), "to", out.sorted_crosses(),
              "target", out.perm())
        print("  steps:", trace.steps)

    # The same insertion on the bumpless side, through the bijection.
    first = min(enumerate_pipe_dreams(pi), key=lambda d: d.sorted_crosses())
    out_b, _ = bpd_x_insert(phi_inverse(first), alpha)
    print("\nbumpless x insertion lands on", out_b.perm())
    print(render(out_b, pretty=True))

    # m moves carry the diagrams of one cover onto another, all at once.
    sigma = Permutation.parse("1432")
    targets = Counter()
    for d in enumerate_pipe_dreams(sigma):
        out, _ = pd_m_move(d, 2, 3)
        targets[out.perm()] += 1
    print("\nm move (2,3) sends the diagrams of", sigma, "to:", dict(targets))

    ok = all(
        verify_partition(pi, a, model)
        for a in (1, 2, 3)
        for model in ("pd", "bpd")
    )
    print("x and m images partition the covers for alpha = 1..3:", ok)


if __name__ == "__main__":
    main()
