import pytest

from compshuffle.dyck import (
    DyckPath,
    PathError,
    bounce,
    bounce_seq,
    enumerate_partial_paths,
    enumerate_paths,
    flip_corners,
    inv,
    is_wp,
    is_wp_prime,
    parse_path,
    path_from_area_seq,
    reverse_path,
    touch_prime,
    touch_prime_data,
    verify_bijection,
    wp_enumerate,
    zeta,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_parse(example_path):
    assert example_path.area_seq == (0, 0, 1, 2, 2, 3, 0, 1)
    assert parse_path("NE").n == 1
    assert parse_path("-+").steps == "NE"
    for bad in ["EN", "NNE", "NX", "NEE"]:
        with pytest.raises(PathError):
            parse_path(bad)


def test_example_statistics(example_path):
    p = example_path
    assert p.area == 9
    assert p.dinv == 8
    assert p.touch == (1, 5, 2)
    assert p.coarea_seq == (1, 2, 2, 2, 3, 3, 7, 7)
    assert p.area_cells == {(2, 3), (2, 4), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6), (7, 8)}
    assert p.dinv_pairs == {(1, 2), (1, 7), (2, 7), (3, 8), (4, 5), (7, 3), (8, 4), (8, 5)}
    assert all(a + x == j for j, (a, x) in enumerate(zip(p.area_seq, p.coarea_seq), start=1))
    ne = parse_path("NE")
    assert (ne.area, ne.dinv, ne.touch) == (0, 0, (1,))


def test_zeta_example(example_path, image_path):
    z = zeta(example_path)
    assert z.sigma == (1, 2, 4, 6, 7, 8, 3, 5)
    assert z.pi_prime == image_path
    assert image_path.area == 8
    assert image_path.corners == {(2, 4), (3, 5), (4, 6), (7, 8)}
    assert bounce_seq(image_path) == (0, 0, 0, 1, 1, 2, 2, 3)
    assert bounce(image_path) == 9
    assert touch_prime_data(image_path) == (3, (17, 16, 11, 9))
    assert touch_prime(image_path) == (1, 5, 2)
    ne = zeta(parse_path("NE"))
    assert ne.pi_prime.steps == "NE" and ne.sigma == (1,)


def test_bounce_small():
    assert bounce_seq(parse_path("NE")) == (0,)
    assert bounce_seq(parse_path("NENENE")) == (0, 1, 2)
    assert bounce(parse_path("NENENE")) == 3


def test_reverse_and_flip():
    assert reverse_path(parse_path("NE")).steps == "NE"
    assert reverse_path(parse_path("NNEE")).steps == "NNEE"
    assert reverse_path(parse_path("NENE")).steps == "NENE"
    for n in range(6):
        for p in enumerate_paths(n):
            assert reverse_path(reverse_path(p)) == p
            assert flip_corners(p, []) == p
    assert flip_corners(parse_path("NENE"), [(1, 2)]).steps == "NNEE"
    with pytest.raises(PathError):
        flip_corners(parse_path("NENE"), [(1, 3)])


def test_small_path_corner_flip(small_path):
    # the flipped corner of the small example is (2, 3): its valley E N sits at height 2
    assert small_path.corners == {(2, 3)}
    flipped = flip_corners(small_path, [(2, 3)])
    assert flipped.steps == "NNENEE"
    for n in range(6):
        for p in enumerate_paths(n):
            for c in p.corners:
                f = flip_corners(p, [c])
                if c in f.corners:
                    assert flip_corners(f, [c]) == p


def test_enumeration():
    for n, c in enumerate(CATALAN):
        assert len(enumerate_paths(n)) == c
    assert enumerate_paths(0) == [DyckPath("")]
    assert [p.steps for p in enumerate_paths(3, (1, 2))] == ["NNEENE"]
    assert len(enumerate_partial_paths(2, 1)) == 3


def test_word_parking_functions(image_path):
    w = (9, 5, 3, 2, 2, 1, 5, 2)
    assert is_wp_prime(image_path, w)
    assert inv(image_path, w) == 5
    ne = wp_enumerate(parse_path("NE"), 2)
    assert [(x.labels, i) for x, i in ne] == [((1,), 0), ((2,), 0)]
    # NNEE has no corner, so the corner condition admits every word; the
    # column-strict condition keeps only (2, 1), with one inversion
    nnee = parse_path("NNEE")
    assert nnee.corners == set()
    assert len(wp_enumerate(nnee, 2)) == 4
    strict = [(x.labels, i) for x, i in wp_enumerate(nnee, 2) if is_wp(nnee, x.labels)]
    assert strict == [((2, 1), 1)]
    with pytest.raises(ValueError):
        wp_enumerate(parse_path("NE"), 0)


def test_bijection_suite():
    assert verify_bijection(7)["status"] == "pass"


def test_path_from_area_seq_roundtrip():
    for n in range(6):
        for p in enumerate_paths(n):
            assert path_from_area_seq(p.area_seq) == p
