import itertools
import random

import pytest

from dwlink import braids, groups, holonomy
from dwlink.errors import LengthMismatch, NotAFixedPoint, SearchTooLarge

from wirtinger_oracle import wirtinger_count


def random_braid(rng, max_strands=4, max_len=8):
    m = rng.randint(1, max_strands)
    length = rng.randint(0, max_len) if m > 1 else 0
    alphabet = [s * i for i in range(1, m) for s in (1, -1)]
    return braids.BraidWord(m, tuple(rng.choice(alphabet) for _ in range(length)))


class TestArtinAction:
    def test_empty(self):
        G = groups.symmetric(3)
        b = braids.BraidWord(3, ())
        for a in itertools.product(range(G.order), repeat=3):
            assert holonomy.artin_action(b, a, G) == a

    def test_diagonal_fixed(self):
        G = groups.symmetric(3)
        b = braids.parse_braid("2: 1")
        for g in G.elements():
            assert holonomy.artin_action(b, (g, g), G) == (g, g)

    def test_length_mismatch(self):
        G = groups.cyclic(2)
        with pytest.raises(LengthMismatch):
            holonomy.artin_action(braids.parse_braid("2: 1"), (0, 1, 0), G)

    def test_group_action_property(self):
        rng = random.Random(11)
        G = groups.symmetric(3)
        for _ in range(200):
            m = rng.randint(2, 4)
            alphabet = [s * i for i in range(1, m) for s in (1, -1)]
            b1 = braids.BraidWord(
                m, tuple(rng.choice(alphabet) for _ in range(rng.randint(0, 5)))
            )
            b2 = braids.BraidWord(
                m, tuple(rng.choice(alphabet) for _ in range(rng.randint(0, 5)))
            )
            a = tuple(rng.randrange(G.order) for _ in range(m))
            via_compose = holonomy.artin_action(braids.compose(b2, b1), a, G)
            stepwise = holonomy.artin_action(b2, holonomy.artin_action(b1, a, G), G)
            assert via_compose == stepwise

    def test_generator_invertible(self):
        G = groups.quaternion8()
        pos = braids.parse_braid("2: 1")
        neg = braids.parse_braid("2: -1")
        for a in itertools.product(range(8), repeat=2):
            assert holonomy.artin_action(neg, holonomy.artin_action(pos, a, G), G) == a


class TestEnumerateHoms:
    def test_unlink(self):
        G = groups.cyclic(3)
        recs = holonomy.enumerate_homs(braids.BraidWord(2, ()), G)
        assert len(recs) == 9

    def test_unknot_diagonal(self):
        G = groups.symmetric(3)
        recs = holonomy.enumerate_homs(braids.parse_braid("2: 1"), G)
        assert len(recs) == G.order
        for r in recs:
            assert r.tuple[0] == r.tuple[1]

    def test_hopf_s3(self):
        G = groups.symmetric(3)
        recs = holonomy.enumerate_homs(braids.parse_braid("2: 1 1"), G)
        assert len(recs) == 18  # commuting pairs in S3

    def test_trefoil_s3(self):
        G = groups.symmetric(3)
        b = braids.parse_braid("2: 1 1 1")
        assert len(holonomy.enumerate_homs(b, G)) == wirtinger_count(b, G) == 12

    def test_lexicographic_order(self):
        G = groups.cyclic(4)
        recs = holonomy.enumerate_homs(braids.BraidWord(2, ()), G)
        tuples = [r.tuple for r in recs]
        assert tuples == sorted(tuples)

    def test_meridian_constraint(self):
        G = groups.symmetric(3)
        b = braids.parse_braid("2: 1 1 1")
        x = G.element_index("(1 2)")
        recs = holonomy.enumerate_homs(b, G, x_constraint=(x,))
        assert all(r.meridian == (x,) for r in recs)
        unconstrained = holonomy.enumerate_homs(b, G)
        assert len(recs) == sum(1 for r in unconstrained if r.meridian == (x,))

    def test_thread_invariance(self):
        G = groups.symmetric(3)
        b = braids.parse_braid("3: 1 2 1")
        assert holonomy.enumerate_homs(b, G) == holonomy.enumerate_homs(
            b, G, threads=8
        )

    def test_search_cap(self):
        G = groups.quaternion8()
        b = braids.BraidWord(12, ())
        with pytest.raises(SearchTooLarge):
            holonomy.enumerate_homs(b, G)

    def test_cycle_entries_conjugate(self):
        rng = random.Random(12)
        G = groups.symmetric(3)
        for _ in range(30):
            b = random_braid(rng, max_strands=3, max_len=5)
            comp = braids.components(b)
            for r in holonomy.enumerate_homs(b, G):
                for cyc in comp.cycles:
                    cls = {G.class_of[r.tuple[p]] for p in cyc}
                    assert len(cls) == 1

    def test_wirtinger_oracle_random(self):
        rng = random.Random(13)
        pool = [groups.cyclic(4), groups.symmetric(3), groups.dihedral(2)]
        for _ in range(40):
            b = random_braid(rng, max_strands=3, max_len=4)
            G = rng.choice(pool)
            assert holonomy.count_homs(b, G) == wirtinger_count(b, G)


class TestLongitude:
    def test_unknot_trivial(self):
        G = groups.symmetric(3)
        b = braids.parse_braid("2: 1")
        for r in holonomy.enumerate_homs(b, G):
            assert r.longitude == (G.id,)

    def test_hopf_longitudes(self):
        G = groups.quaternion8()
        b = braids.parse_braid("2: 1 1")
        for r in holonomy.enumerate_homs(b, G):
            # each longitude is the other component's meridian
            assert r.longitude == (r.meridian[1], r.meridian[0])

    def test_not_a_fixed_point(self):
        G = groups.symmetric(3)
        b = braids.parse_braid("2: 1")
        with pytest.raises(NotAFixedPoint):
            holonomy.longitude_image(b, (0, 1), 0, G)

    def test_commutes_with_meridian(self):
        rng = random.Random(14)
        for G in (groups.symmetric(3), groups.quaternion8(), groups.dihedral(3)):
            for _ in range(20):
                b = random_braid(rng, max_strands=3, max_len=6)
                for r in holonomy.enumerate_homs(b, G):
                    for t in range(len(r.meridian)):
                        assert G.mul(r.meridian[t], r.longitude[t]) == G.mul(
                            r.longitude[t], r.meridian[t]
                        )

    def test_abelian_linking_formula(self):
        rng = random.Random(15)
        for _ in range(50):
            b = random_braid(rng)
            N = rng.choice([2, 3, 5])
            G = groups.cyclic(N)
            comp = braids.components(b)
            for r in holonomy.enumerate_homs(b, G):
                for t in range(comp.count):
                    expect = (
                        sum(
                            comp.linking[t][s] * r.meridian[s]
                            for s in range(comp.count)
                        )
                        % N
                    )
                    assert r.longitude[t] == expect


class TestMarkovInvariance:
    def test_conjugation_and_stabilization(self):
        rng = random.Random(16)
        pool = [groups.cyclic(5), groups.symmetric(3), groups.dihedral(4)]
        for _ in range(20):
            b = random_braid(rng, max_strands=4, max_len=8)
            G = rng.choice(pool)
            base = holonomy.count_homs(b, G)

            m = b.strands
            if m > 1:
                alphabet = [s * i for i in range(1, m) for s in (1, -1)]
                alpha = braids.BraidWord(
                    m, tuple(rng.choice(alphabet) for _ in range(rng.randint(1, 3)))
                )
                alpha_inv = braids.BraidWord(
                    m, tuple(-l for l in reversed(alpha.letters))
                )
                conj = braids.compose(alpha, braids.compose(b, alpha_inv))
                assert holonomy.count_homs(conj, G) == base

            stab = braids.BraidWord(m + 1, b.letters + (m,))
            assert holonomy.count_homs(stab, G) == base
