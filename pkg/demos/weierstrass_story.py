"""The Weierstrass fibration, end to end.

Take a threefold X with a line bundle L, and inside P(O + L^2 + L^3) cut
the cubic hypersurface of class 3H + 6L.  Its fibers are elliptic curves
that degenerate over a discriminant locus, and the pushed-down total Chern
class of the fibration packages every Euler-characteristic statement one
could ask for:

  * codimension 0 vanishes (a smooth elliptic curve has chi = 0);
  * the top component integrates to chi of the total space;
  * with L the anticanonical class of a Fano base the numbers match the
    famous 12 c1 c2 + 360 c1^3.
"""

from relchern import (BundleSpec, FormalBase, HypersurfaceSpec,
                      ProjectiveSpaceBase, euler_characteristic, q_class,
                      relative_chern_class, specialize, svw_components)


def weierstrass(base, multiple=None):
    if multiple is None:
        ell = base.ring.sym("L")
    else:
        ell = multiple * base.hyperplane()
    bundle = BundleSpec([base.ring.zero, 2 * ell, 3 * ell])
    return HypersurfaceSpec(3, 6 * ell, bundle)


def main():
    base = FormalBase(3)
    hyp = weierstrass(base)

    print("multiplier class Q over a formal threefold:")
    print("  Q =", q_class(hyp))

    rc = relative_chern_class(hyp, base)
    print("\npushed-down Chern class, graded by codimension:")
    for j, piece in enumerate(svw_components(hyp, base), start=1):
        print(f"  codim {j}:", piece)
    print("  codim 0:", rc.component(0), " (smooth fiber has chi = 0)")

    fano = FormalBase(3, fano=True)
    top = fano.apply_binding(euler_characteristic(weierstrass(fano), fano))
    print("\nFano convention L = c1: chi-class =", top)

    print("\nconcrete bases:")
    p3 = ProjectiveSpaceBase(3, multiple=4)
    print("  chi over P^3 with L = 4h:", euler_characteristic(weierstrass(p3, 4), p3))
    p2 = ProjectiveSpaceBase(2, multiple=3)
    print("  chi over P^2 with L = 3h:", euler_characteristic(weierstrass(p2, 3), p2))

    # the formal answer specializes to the same integers
    spec = specialize(euler_characteristic(hyp, base), p3)
    print("  formal answer pushed to P^3:", p3.integrate(spec))


if __name__ == "__main__":
    main()
