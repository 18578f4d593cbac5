"""Exhaustive consistency checks over a full symmetric group.

Each function returns (ok, detail); run_checks bundles them into the named
check groups used by the command line tool.  Everything here is exact and
deterministic except the ring axiom spot checks, which draw random small
polynomials from a seeded generator.
"""

from __future__ import annotations

import random
from collections import Counter

from .bijection import phi, phi_inverse
from .bumpless import bpd_insert, bpd_pop, enumerate_bpds
from .monk import (
    bpd_m_move,
    bpd_x_insert,
    footprints_audit,
    lemma_case_audit,
    pd_m_move,
    pd_x_insert,
)
from .perm import Permutation, monk_covers, symmetric_group
from .pipedream import enumerate_pipe_dreams
from .poly import SparsePolynomial, schubert_polynomial


def verify_monk_poly(pi: Permutation, alpha: int) -> bool:
    """x_alpha * S_pi + sum of lower cover terms equals the upper cover sum."""
    left, right = monk_covers(pi, alpha)
    lhs = SparsePolynomial.variable(alpha) * schubert_polynomial(pi)
    for s in left:
        lhs = lhs + schubert_polynomial(pi.right_t(s, alpha))
    rhs = SparsePolynomial.zero()
    for l in right:
        rhs = rhs + schubert_polynomial(pi.right_t(alpha, l))
    return lhs == rhs


def verify_monk_commutation(pi: Permutation, alpha: int) -> bool:
    """phi intertwines the two x_alpha moves pointwise on diagrams of pi."""
    for b in enumerate_bpds(pi):
        via_bpd = phi(bpd_x_insert(b, alpha)[0]).pipe_dream()
        via_pd = pd_x_insert(phi(b).pipe_dream(), alpha)[0]
        if via_bpd != via_pd:
            return False
    return True


def verify_monk_commutation_m(pi: Permutation, s: int, beta: int) -> bool:
    """phi intertwines the two m_{s,beta} moves on diagrams of pi t_{s,beta}."""
    sigma = pi.right_t(s, beta)
    for b in enumerate_bpds(sigma):
        via_bpd = phi(bpd_m_move(b, s, beta)[0]).pipe_dream()
        via_pd = pd_m_move(phi(b).pipe_dream(), s, beta)[0]
        if via_bpd != via_pd:
            return False
    return True


def bruhat_covers(pi: Permutation, bound: int | None = None) -> list[tuple[int, int]]:
    """All (s, beta) with s < beta <= bound and pi t_{s,beta} covering pi."""
    if bound is None:
        bound = max(pi.size, 1) + 1
    out = []
    for b in range(2, bound + 1):
        for s in range(1, b):
            if pi.right_t(s, b).length() == pi.length() + 1:
                out.append((s, b))
    return out


def verify_partition(pi: Permutation, alpha: int, model: str) -> bool:
    """The move images partition the diagrams of the upper covers exactly."""
    if model == "pd":
        enum, x_move, m_move = (
            enumerate_pipe_dreams,
            lambda d: pd_x_insert(d, alpha)[0],
            lambda d, s: pd_m_move(d, s, alpha)[0],
        )
    elif model == "bpd":
        enum, x_move, m_move = (
            enumerate_bpds,
            lambda d: bpd_x_insert(d, alpha)[0],
            lambda d, s: bpd_m_move(d, s, alpha)[0],
        )
    else:
        raise ValueError(f"unknown model {model!r}")
    left, right = monk_covers(pi, alpha)
    produced: Counter = Counter()
    for d in enum(pi):
        produced[x_move(d)] += 1
    for s in left:
        for d in enum(pi.right_t(s, alpha)):
            produced[m_move(d, s)] += 1
    expected: Counter = Counter()
    for l in right:
        for d in enum(pi.right_t(alpha, l)):
            expected[d] += 1
    return produced == expected


def _triple_agreement(n: int) -> tuple[bool, str]:
    for pi in symmetric_group(n):
        s = schubert_polynomial(pi)
        pd_sum = SparsePolynomial.zero()
        for d in enumerate_pipe_dreams(pi):
            pd_sum = pd_sum + d.weight()
        bpd_sum = SparsePolynomial.zero()
        for d in enumerate_bpds(pi):
            bpd_sum = bpd_sum + d.weight()
        if not (s == pd_sum == bpd_sum):
            return False, f"disagreement at {pi}"
    return True, f"all {len(list(symmetric_group(n)))} permutations agree"


def _monk_poly(n: int) -> tuple[bool, str]:
    count = 0
    for pi in symmetric_group(n):
        for alpha in range(1, n + 2):
            if not verify_monk_poly(pi, alpha):
                return False, f"failure at {pi}, alpha={alpha}"
            count += 1
    return True, f"{count} instances hold"


def _stability(n: int) -> tuple[bool, str]:
    for pi in symmetric_group(n):
        if schubert_polynomial(pi, n + 2) != schubert_polynomial(pi):
            return False, f"ambient change alters the polynomial at {pi}"
    return True, "polynomials independent of the ambient size"


def _poly_ring(seed) -> tuple[bool, str]:
    rng = random.Random(seed if seed is not None else 0)

    def rand_poly():
        p = SparsePolynomial.zero()
        for _ in range(rng.randrange(4)):
            exps = [rng.randrange(3) for _ in range(rng.randrange(3))]
            p = p + SparsePolynomial.monomial(exps, rng.randrange(-3, 4))
        return p

    for _ in range(50):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        if (a + b) * c != a * c + b * c:
            return False, "distributivity failed"
        if a * b != b * a or a + b != b + a:
            return False, "commutativity failed"
        if (a * b) * c != a * (b * c):
            return False, "associativity failed"
        if a - a != SparsePolynomial.zero():
            return False, "subtraction failed"
    return True, "ring axioms hold on random samples"


def _bijection(n: int) -> tuple[bool, str]:
    pairs = 0
    for pi in symmetric_group(n):
        bpds = enumerate_bpds(pi)
        pds = enumerate_pipe_dreams(pi)
        image = {}
        for b in bpds:
            d = phi(b).pipe_dream()
            if d in image:
                return False, f"phi not injective at {pi}"
            if d.weight() != b.weight():
                return False, f"phi changes a weight at {pi}"
            image[d] = b
        if set(image) != pds:
            return False, f"phi image misses diagrams at {pi}"
        for d in pds:
            if phi(phi_inverse(d)).pipe_dream() != d:
                return False, f"phi_inverse not inverse at {pi}"
        pairs += len(bpds)
    return True, f"bijective on {pairs} diagrams"


def _compatible(n: int) -> tuple[bool, str]:
    from .errors import InvalidSequenceError

    count = 0
    for pi in symmetric_group(n):
        for b in enumerate_bpds(pi):
            seq = phi(b).sequence
            try:
                seq.validate()
            except InvalidSequenceError as exc:
                return False, f"invalid sequence at {pi}: {exc}"
            if seq.permutation() != pi:
                return False, f"sequence permutation mismatch at {pi}"
            count += 1
    return True, f"{count} sequences valid"


def _roundtrip(n: int) -> tuple[bool, str]:
    count = 0
    for pi in symmetric_group(n):
        if pi.is_identity():
            continue
        for b in enumerate_bpds(pi):
            res = bpd_pop(b)
            back = bpd_insert(res.result, res.a, res.r)
            if back != b:
                return False, f"insert does not undo pop at {pi}"
            count += 1
    return True, f"{count} pop/insert round trips"


def _commutation(n: int) -> tuple[bool, str]:
    runs = 0
    for pi in symmetric_group(n):
        for alpha in range(1, n + 1):
            if not verify_monk_commutation(pi, alpha):
                return False, f"x move disagreement at {pi}, alpha={alpha}"
            runs += 1
        for s, beta in bruhat_covers(pi, n + 1):
            if not verify_monk_commutation_m(pi, s, beta):
                return False, f"m move disagreement at {pi}, ({s},{beta})"
            runs += 1
    return True, f"{runs} move families commute with phi"


def _partition(n: int) -> tuple[bool, str]:
    for pi in symmetric_group(n):
        for alpha in range(1, n + 1):
            for model in ("pd", "bpd"):
                if not verify_partition(pi, alpha, model):
                    return (
                        False,
                        f"partition fails at {pi}, alpha={alpha}, {model}",
                    )
    return True, "images partition the upper cover diagrams"


def _lemmas(n: int) -> tuple[bool, str]:
    audited = 0
    skipped = 0
    for pi in symmetric_group(n):
        for alpha in range(1, n + 1):
            if pi.is_identity():
                continue
            for enum, _ in (
                (enumerate_pipe_dreams, "pd"),
                (enumerate_bpds, "bpd"),
            ):
                for d in enum(pi):
                    report = lemma_case_audit(d, ("x", alpha))
                    if not report.passed():
                        return False, f"{report!r} at {pi}"
                    audited += 1
                    skipped += sum(
                        1 for c in report.checks if c[1] == "skip"
                    )
        for s, beta in bruhat_covers(pi, n + 1):
            sigma = pi.right_t(s, beta)
            for enum, _ in (
                (enumerate_pipe_dreams, "pd"),
                (enumerate_bpds, "bpd"),
            ):
                for d in enum(sigma):
                    report = lemma_case_audit(d, ("m", s, beta))
                    if not report.passed():
                        return False, f"{report!r} at {pi}"
                    audited += 1
                    skipped += sum(
                        1 for c in report.checks if c[1] == "skip"
                    )
    return True, f"{audited} audits pass ({skipped} clauses skipped)"


def _footprints(n: int) -> tuple[bool, str]:
    runs = 0
    for pi in symmetric_group(n):
        for alpha in range(1, n + 1):
            for d in enumerate_pipe_dreams(pi):
                if not footprints_audit(pd_x_insert(d, alpha)[1]):
                    return False, f"repeated footprint at {pi}, alpha={alpha}"
                runs += 1
        for s, beta in bruhat_covers(pi, n + 1):
            for d in enumerate_pipe_dreams(pi.right_t(s, beta)):
                if not footprints_audit(pd_m_move(d, s, beta)[1]):
                    return False, f"repeated footprint at {pi}, ({s},{beta})"
                runs += 1
    return True, f"{runs} moves leave distinct footprints"


CHECK_GROUPS = {
    "poly": ("triple_agreement", "monk_poly", "stability", "poly_ring"),
    "diagrams": ("bijection", "compatible", "roundtrip", "commutation", "partition"),
    "lemmas": ("lemmas",),
    "footprints": ("footprints",),
}


def run_checks(n: int, which: str = "all", seed=None) -> dict:
    """Run the named check group over the symmetric group of size n.

    Returns {check_name: (ok, detail)}.
    """
    if which == "all":
        names = [name for group in CHECK_GROUPS.values() for name in group]
    elif which in CHECK_GROUPS:
        names = list(CHECK_GROUPS[which])
    else:
        raise ValueError(f"unknown check group {which!r}")
    runners = {
        "triple_agreement": lambda: _triple_agreement(n),
        "monk_poly": lambda: _monk_poly(n),
        "stability": lambda: _stability(n),
        "poly_ring": lambda: _poly_ring(seed),
        "bijection": lambda: _bijection(n),
        "compatible": lambda: _compatible(n),
        "roundtrip": lambda: _roundtrip(n),
        "commutation": lambda: _commutation(n),
        "partition": lambda: _partition(n),
        "lemmas": lambda: _lemmas(n),
        "footprints": lambda: _footprints(n),
    }
    return {name: runners[name]() for name in names}
