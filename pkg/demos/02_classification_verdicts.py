"""Deciding diffeomorphism, homeomorphism, and homotopy equivalence.

The classification theory says: two spaces of the same cohomology type
and order are orientation-preserving diffeomorphic exactly when their
(s1, s2, s3) agree mod 1, homeomorphic exactly when (28*s1, s2, s3)
agree, and orientation-reversing versions hold after a sign flip.  The
homotopy test is decided only in three regimes; everything else is
reported as undetermined rather than guessed.

Run:  python3 demos/02_classification_verdicts.py
"""

from kreckstolz import (
    fixture_profile,
    ks_diffeomorphic,
    ks_homeomorphic,
    kruggel_homotopy,
    load_fixtures,
    profile_circle,
    profile_sphere,
)


def verdicts(title, p, q):
    d = ks_diffeomorphic(p, q)
    h = ks_homeomorphic(p, q)
    print(f"{title}")
    print(f"  diffeomorphic:  {d.value if d else 'no'}")
    print(f"  homeomorphic:   {h.value if h else 'no'}")
    print(f"  homotopy:       {kruggel_homotopy(p, q).value}")
    print()


# The order-3 bundle pair found by the residue solver (see demo 03):
# a = 2 and a = 146 are the only classes mod 504 with these invariants.
verdicts(
    "S_{2,-1} vs S_{146,143}",
    profile_sphere(2, -1),
    profile_sphere(146, 143),
)

# Swapping the two parameters of a sphere bundle reverses orientation.
verdicts(
    "S_{2,-1} vs S_{-1,2}",
    profile_sphere(2, -1),
    profile_sphere(-1, 2),
)

# Homeomorphic but NOT diffeomorphic: s2 and s3 agree and 28*s1 agrees,
# but s1 itself differs — an exotic pair within one homeomorphism type.
verdicts(
    "S_{2,-1} vs S_{38,35}",
    profile_sphere(2, -1),
    profile_sphere(38, 35),
)

# The Aloff-Wallach space W_{1,1} = M^1_{1,1} against the catalog entry
# for the biquotient with k = (1,1,-2): the t = 1 circle bundles have
# proven-trivial pi4, so the homotopy test is decided here.
fixtures = load_fixtures()
w11 = fixture_profile(next(f for f in fixtures if f.space.k == (1, 1, -2)))
verdicts("M^1_{1,1} vs catalog (1,1,-2 | 0,0,0)", profile_circle(1, 1, 1), w11)

# Different orders: nothing to decide, the spaces are distinguished by
# H^4 alone and the homotopy verdict is definite.
verdicts("S_{2,-1} vs S_{3,-2}", profile_sphere(2, -1), profile_sphere(3, -2))
