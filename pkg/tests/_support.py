"""Shared randomized constructors for the test suite.

Everything here is exact (fractions.Fraction) and driven by a seeded
`random.Random`, so every test run is reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from stochex.dist import ExactJointDist, SignedPermutation, UnivariateDist

# Support coordinates live on a small half-integer grid so that reflections
# land back on the grid and collisions (shared support with the image) occur
# often enough to exercise the merge paths.
COORD_GRID = [Fraction(i, 2) for i in range(-4, 5)]

# Nonnegative grid for absolute-value laws.
ABS_GRID = [Fraction(i, 2) for i in range(0, 7)]


def random_joint(rng: random.Random, dim: int = 2, max_atoms: int = 6) -> ExactJointDist:
    """Random exact pmf on the half-integer grid with integer weights."""
    n_atoms = rng.randint(1, max_atoms)
    points: set[tuple[Fraction, ...]] = set()
    while len(points) < n_atoms:
        points.add(tuple(rng.choice(COORD_GRID) for _ in range(dim)))
    weights = [rng.randint(1, 9) for _ in range(len(points))]
    total = sum(weights)
    return ExactJointDist.build(
        dim,
        [(pt, Fraction(w, total)) for pt, w in zip(sorted(points), weights)],
    )


def symmetrize(d: ExactJointDist, maps: list[SignedPermutation]) -> ExactJointDist:
    """Equal-weight mixture of the images of d under the given maps."""
    w = Fraction(1, len(maps))
    raw = []
    for m in maps:
        for a in d.transform(m).atoms:
            raw.append((a.point, a.prob * w))
    return ExactJointDist.build(d.dim, raw)


def re_symmetrize(d: ExactJointDist, k: int = 1, l: int | None = None) -> ExactJointDist:
    """Make d invariant under the (k,l) pair reversal (average with its image)."""
    l = d.dim if l is None else l
    return symmetrize(
        d,
        [SignedPermutation.identity(d.dim), SignedPermutation.reverse_pair(d.dim, k, l)],
    )


def exchange_symmetrize(d: ExactJointDist) -> ExactJointDist:
    """Average over all coordinate permutations."""
    import itertools

    maps = [
        SignedPermutation.from_permutation(p)
        for p in itertools.permutations(range(d.dim))
    ]
    return symmetrize(d, maps)


def esci_symmetrize(d: ExactJointDist) -> ExactJointDist:
    """Average over all permutations and all sign changes."""
    import itertools

    maps = []
    for p in itertools.permutations(range(d.dim)):
        for signs in itertools.product((1, -1), repeat=d.dim):
            maps.append(SignedPermutation(tuple(p), tuple(signs)))
    return symmetrize(d, maps)


def ere_symmetrize(d: ExactJointDist) -> ExactJointDist:
    """Average over the bivariate group generated by the swap and the reversal."""
    assert d.dim == 2
    swap = SignedPermutation.from_permutation((1, 0))
    rev = SignedPermutation.reverse_pair(2, 1, 2)
    neg = SignedPermutation.negate_all(2)
    return symmetrize(d, [SignedPermutation.identity(2), swap, rev, neg])


def one_sided_symmetrize(d: ExactJointDist, side: str) -> ExactJointDist:
    """Average the pmf with its reflection only on one open half-plane
    (a < b for "upper" / the URE region, a > b for "lower" / LRE); everything
    else, including the diagonal a == b, is left untouched.  The reflection
    maps each open half-plane onto itself, so total probability is preserved."""
    assert d.dim == 2 and side in ("upper", "lower")
    m = SignedPermutation.reverse_pair(2, 1, 2)
    pmf = {a.point: a.prob for a in d.atoms}
    candidates = set(pmf)
    candidates.update(m.apply(p) for p in pmf)
    out = dict(pmf)
    visited: set[tuple[Fraction, ...]] = set()
    for p in sorted(candidates):
        if p in visited:
            continue
        a, b = p
        in_region = a < b if side == "upper" else a > b
        if not in_region:
            continue
        q = m.apply(p)
        visited.update((p, q))
        if p == q:
            avg = pmf.get(p, Fraction(0))  # fixed point of the reflection
        else:
            avg = (pmf.get(p, Fraction(0)) + pmf.get(q, Fraction(0))) / 2
        for pt in {p, q}:
            if avg > 0:
                out[pt] = avg
            else:
                out.pop(pt, None)
    return ExactJointDist.build(2, list(out.items()))


def random_abs_dist(rng: random.Random, max_vals: int = 3) -> UnivariateDist:
    """Random law of a nonnegative |X| on the half-integer grid."""
    n_vals = rng.randint(1, max_vals)
    values = rng.sample(ABS_GRID, n_vals)
    weights = [rng.randint(1, 9) for _ in values]
    total = sum(weights)
    return UnivariateDist.build(
        [(v, Fraction(w, total)) for v, w in zip(values, weights)]
    )


def shift_abs_up(
    rng: random.Random, u: UnivariateDist, force_strict: bool
) -> UnivariateDist:
    """A law weakly above u in first order, built by moving atom mass upward.

    With force_strict, the lowest atom always donates half its mass one grid
    step up, which makes the cdf strictly smaller at that point.
    """
    top = ABS_GRID[-1]
    raw: list[tuple[Fraction, Fraction]] = []
    for i, (v, p) in enumerate(u.atoms):
        if force_strict and i == 0 and v < top:
            raw.append((v, p / 2))
            raw.append((v + Fraction(1, 2), p / 2))
            continue
        candidates = [g for g in ABS_GRID if g >= v]
        raw.append((rng.choice(candidates), p))
    return UnivariateDist.build(raw)


def sign_symmetrize_univariate(u: UnivariateDist) -> UnivariateDist:
    """Signed symmetric law whose absolute value has law u (u must be >= 0)."""
    raw: list[tuple[Fraction, Fraction]] = []
    for v, p in u.atoms:
        assert v >= 0
        if v == 0:
            raw.append((v, p))
        else:
            raw.append((v, p / 2))
            raw.append((-v, p / 2))
    return UnivariateDist.build(raw)


def product_of(marginals: list[UnivariateDist]) -> ExactJointDist:
    """Product distribution of independent univariate marginals."""
    import itertools

    raw = []
    for combo in itertools.product(*[m.atoms for m in marginals]):
        point = tuple(v for v, _ in combo)
        prob = Fraction(1)
        for _, p in combo:
            prob *= p
        raw.append((point, prob))
    return ExactJointDist.build(len(marginals), raw)
