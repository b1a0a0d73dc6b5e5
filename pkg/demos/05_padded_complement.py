"""Pad a bipartite complement so small bicliques force large matchings.

Builds the padded complement gadget over a random bipartite graph with a
planted balanced biclique.  The planted sides yield an explicit maximal
matching of size n(1 + 2 eps); when the true biclique is small the
anti-biclique bound pushes the minimum maximal matching up instead.  At a
desk-scale size the exact solver brackets both quantities.
"""

from fractions import Fraction

from mmmkit import (
    anti_biclique_bound,
    exact_mbb,
    exact_mmm,
    random_planted_biclique,
    sseh_gadget,
    sseh_yes_matching,
    verify_maximal_matching,
)


def main() -> None:
    n = 4
    epsilon = Fraction(1, 4)
    original, k_a, k_b = random_planted_biclique(n, epsilon, seed=0)
    print(f"original bipartite graph: sides {len(original.left)} x {len(original.right)}, "
          f"planted biclique {len(k_a)} x {len(k_b)}")

    gadget = sseh_gadget(original, epsilon)
    print(f"padded gadget: {2 * gadget.side} vertices "
          f"({len(gadget.a_pad)} pads per side)")

    matching = sseh_yes_matching(gadget, k_a, k_b)
    check = verify_maximal_matching(gadget.graph.to_graph(), matching)
    print(f"yes matching: {len(matching)} edges, maximal: {check.ok}")
    assert check, check.reason

    mbb = exact_mbb(original)
    print(f"maximum balanced biclique: {mbb.value} per side")

    bound = anti_biclique_bound(gadget, mbb.value)
    exact = exact_mmm(gadget.graph.to_graph())
    print(f"anti-biclique bound {bound} <= exact minimum {exact.value} "
          f"<= yes matching {len(matching)}")
    assert bound <= exact.value <= len(matching)


if __name__ == "__main__":
    main()
