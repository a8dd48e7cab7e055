import random

from linkdet.generators import random_corpus, random_plane_map


def test_same_seed_same_maps():
    assert random_corpus(7, 20) == random_corpus(7, 20)
    assert random_corpus(7, 20) != random_corpus(8, 20)


def test_maps_are_spherical_and_sized():
    rng = random.Random(71)
    for _ in range(300):
        n = rng.randint(0, 15)
        m = random_plane_map(rng, n)
        assert m.n_edges == n
        assert m.vertex_count - m.n_edges + m.face_count == 2


def test_corpus_contains_loops_and_parallel_edges():
    maps = random_corpus(72, 200, max_edges=10)
    assert any(any(e.is_loop for e in m.graph.edges) for m in maps)

    def has_parallel(m):
        pairs = [tuple(sorted((e.u, e.v))) for e in m.graph.edges if not e.is_loop]
        return len(pairs) != len(set(pairs))

    assert any(has_parallel(m) for m in maps)


def test_simple_chords_avoid_loops():
    rng = random.Random(73)
    for _ in range(100):
        m = random_plane_map(rng, 12, loop=0.0, simple_chords=True)
        assert not any(e.is_loop for e in m.graph.edges)


def test_unsigned_maps_are_all_positive():
    m = random_plane_map(random.Random(74), 10, signed=False)
    assert set(m.signs) == {1}
