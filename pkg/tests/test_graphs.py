"""Canonical forms, signs and gradings of decorated graphs."""

import itertools
import random

import pytest

from weight11.graphs import (
    KV, KL, KE, KW, KH, KX,
    MODE_X, MODE_GC0, MODE_FHGC, MODE_G1,
    RawGraph, StructuralError, GraphVector,
    blown_generator, plain_graph, canonicalize, decode, decode_oriented,
    canonical_orientation, validate, degree, genus, excess, excess_budget,
    components, omega_count,
)


def V(i):
    return (KV, i)


def L(i):
    return (KL, i)


def E(i):
    return (KE, i)


def W(i):
    return (KW, i)


def tripod():
    return blown_generator(0, 1, [(V(0), W(0)), (V(0), W(1)), (V(0), W(2))])


def intro_gen_9_1():
    # epsilon-1 edge plus four omega tripods
    edges = [(E(0), L(1))]
    for t in range(4):
        for j in range(3):
            edges.append((V(t), W(3 * t + j)))
    return blown_generator(1, 4, edges)


class TestCanonicalZeroes:
    def test_omega_omega_edge_is_zero(self):
        raw = blown_generator(0, 0, [(W(0), W(1))])
        key, sign = canonicalize(raw)
        assert sign == 0

    def test_triangle_three_omega_legs_is_zero(self):
        edges = [(V(0), V(1)), (V(1), V(2)), (V(0), V(2)),
                 (V(0), W(0)), (V(1), W(1)), (V(2), W(2))]
        raw = blown_generator(0, 3, edges)
        key, sign = canonicalize(raw)
        assert sign == 0

    def test_double_internal_edge_is_zero(self):
        edges = [(V(0), V(1)), (V(0), V(1)),
                 (V(0), E(0)), (V(1), E(1)),
                 (V(0), W(0)), (V(1), W(1))]
        raw = blown_generator(0, 2, edges)
        key, sign = canonicalize(raw)
        assert sign == 0

    def test_two_parallel_epsilon_legs_are_zero(self):
        edges = [(V(0), E(0)), (V(0), E(1)), (V(0), W(0))]
        raw = blown_generator(0, 1, edges)
        key, sign = canonicalize(raw)
        assert sign == 0

    def test_two_epsilon_epsilon_components_are_zero(self):
        raw = blown_generator(0, 0, [(E(0), E(1)), (E(2), E(3))])
        key, sign = canonicalize(raw)
        assert sign == 0

    def test_single_epsilon_epsilon_survives(self):
        raw = blown_generator(0, 0, [(E(0), E(1))])
        key, sign = canonicalize(raw)
        assert sign == 1


class TestTripod:
    def test_tripod_nonzero(self):
        key, sign = canonicalize(tripod())
        assert sign == 1

    def test_tripod_automorphism_parities_by_brute_force(self):
        # all six leg permutations act by even permutations of the
        # orientation set (3 leg edges + 3 marks move together)
        base = tripod()
        key0, s0 = canonicalize(base)
        for perm in itertools.permutations(range(3)):
            edges = [(V(0), W(perm[j])) for j in range(3)]
            raw = blown_generator(0, 1, edges)
            orient = [("E", i) for i in range(3)] + \
                     [("M", w) for w in range(3)]
            key, sign = canonicalize(raw, orient)
            assert key == key0
            assert sign == s0 == 1

    def test_swapped_orientation_flips_sign(self):
        raw = tripod()
        orient = raw.default_orientation()
        orient[0], orient[1] = orient[1], orient[0]
        key, sign = canonicalize(raw, orient)
        key0, sign0 = canonicalize(tripod())
        assert key == key0
        assert sign == -sign0


class TestIdempotence:
    def cases(self):
        yield tripod()
        yield intro_gen_9_1()
        yield blown_generator(0, 0, [(E(0), E(1))])
        yield blown_generator(0, 0, [(E(0), W(0))])
        yield blown_generator(2, 0, [(W(0), L(1)), (E(0), L(2))])
        yield plain_graph(MODE_GC0, 4, [(V(a), V(b))
                                        for a in range(4)
                                        for b in range(a + 1, 4)])

    def test_decode_recanonicalize_round_trip(self):
        for raw in self.cases():
            key, sign = canonicalize(raw)
            assert sign == 1
            raw2, orient2 = decode_oriented(key, raw.mode)
            key2, sign2 = canonicalize(raw2, orient2)
            assert key2 == key
            assert sign2 == 1

    def test_random_orientation_permutation_sign(self):
        rng = random.Random(7)
        for raw in self.cases():
            base = canonical_orientation(raw) if False else \
                raw.default_orientation()
            key0, s0 = canonicalize(raw, list(base))
            for _ in range(10):
                perm = list(range(len(base)))
                rng.shuffle(perm)
                orient = [base[i] for i in perm]
                # parity of perm via transposition count
                par, seen = 0, [False] * len(perm)
                for i in range(len(perm)):
                    if seen[i]:
                        continue
                    j, clen = i, 0
                    while not seen[j]:
                        seen[j] = True
                        j = perm[j]
                        clen += 1
                    par ^= (clen - 1) & 1
                key, s = canonicalize(raw, orient)
                assert key == key0
                if s0 != 0:
                    assert s == (s0 if par == 0 else -s0)


class TestGradings:
    def test_intro_generator_degree_and_genus(self):
        raw = intro_gen_9_1()
        assert degree(raw, "B") == 22
        assert genus(raw) == 9
        assert excess(raw) == 2
        assert excess_budget(9, 1) == 4
        assert excess(raw) % 2 == excess_budget(9, 1) % 2

    def test_gamma0_5_5_degree(self):
        # five omega-j edges and two tripods
        edges = [(W(j - 1), L(j)) for j in range(1, 6)]
        for t in range(2):
            for j in range(3):
                edges.append((V(t), W(5 + 3 * t + j)))
        raw = blown_generator(5, 2, edges)
        assert degree(raw, "B") == 17
        assert genus(raw) == 5

    def test_single_epsilon_epsilon_degree(self):
        raw = blown_generator(0, 0, [(E(0), E(1))])
        assert degree(raw, "X") == 1
        assert genus(raw) == 2

    def test_tripod_component_genus(self):
        assert genus(tripod()) == 3  # 1 + (0 + 0 + 3 - 1)

    def test_omega_j_edge_component_excess(self):
        raw = blown_generator(1, 0, [(W(0), L(1))])
        comps = components(raw)
        assert len(comps) == 1
        assert comps[0][1] == 0 and comps[0][2] == 0

    def test_budget_9_0(self):
        assert excess_budget(9, 0) == 2

    def test_components_additivity(self):
        raw = intro_gen_9_1()
        comps = components(raw)
        assert sum(c[2] for c in comps) == excess(raw)
        assert all(c[2] >= 0 for c in comps)


class TestValidation:
    def test_internal_tadpole_rejected(self):
        raw = blown_generator(0, 1, [(V(0), V(0)), (V(0), W(0))])
        with pytest.raises(StructuralError) as e:
            validate(raw)
        assert e.value.rule == "internal-tadpole"

    def test_valence_rejected(self):
        raw = blown_generator(0, 1, [(V(0), W(0)), (V(0), W(1))])
        with pytest.raises(StructuralError) as e:
            validate(raw)
        assert e.value.rule == "valence"

    def test_component_without_special_rejected(self):
        raw = RawGraph(MODE_X, 2, 0, [((KL, 1), (KL, 2))])
        with pytest.raises(StructuralError):
            validate(raw)

    def test_numbered_legs_exactly_once(self):
        raw = blown_generator(2, 0, [(W(0), L(1)), (W(1), L(1))])
        with pytest.raises(StructuralError):
            validate(raw)


class TestPlainModes:
    def test_k4_canonical(self):
        k4 = plain_graph(MODE_GC0, 4, [(V(a), V(b))
                                       for a in range(4)
                                       for b in range(a + 1, 4)])
        key, sign = canonicalize(k4)
        assert sign == 1
        assert genus(k4) == 3
        assert degree(k4, MODE_GC0) == 6

    def test_hairs_do_not_orient(self):
        # two hairs at one vertex survive (their swap moves no
        # orientation element)
        g = plain_graph(MODE_FHGC, 2, [(V(0), V(1)), (V(0), (KH, 0)),
                                       (V(0), (KH, 1)), (V(1), (KH, 2)),
                                       (V(1), (KH, 3)), (V(0), (KH, 4))])
        key, sign = canonicalize(g)
        assert sign == 1
        assert degree(g, MODE_FHGC) == 1
        assert genus(g) == 0

    def test_g1_unit(self):
        unit = plain_graph(MODE_G1, 0, [], has_external=True)
        key, sign = canonicalize(unit)
        assert sign == 1
        assert degree(unit, MODE_G1) == 0
