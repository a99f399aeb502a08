import pytest
from hypothesis import given
from hypothesis import strategies as st

from baxlab.perm import (
    InvalidPermutationError,
    LetterClass,
    all_permutations,
    as_permutation,
    classify_letters,
    descent_bottoms,
    descent_positions,
    descent_tops,
    generate_baxter,
    identity,
    insertion_slots,
    inverse,
    is_baxter,
    is_baxter_bruteforce,
    shape_flags,
    stat_profile,
)

EX9 = (2, 3, 5, 4, 1, 9, 7, 8, 6)

perms = st.integers(1, 9).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
)


def test_as_permutation_accepts_valid_words():
    assert as_permutation([2, 1, 3]) == (2, 1, 3)
    assert as_permutation((1,)) == (1,)


@pytest.mark.parametrize("bad", [[], [0, 1], [1, 1], [2, 3], [1, 2, 4]])
def test_as_permutation_rejects_invalid_words(bad):
    with pytest.raises(InvalidPermutationError):
        as_permutation(bad)


def test_inverse_against_position_of_value():
    # independent oracle: the position of each value, assembled by search
    oracle = tuple(EX9.index(v) + 1 for v in range(1, 10))
    assert inverse(EX9) == oracle == (5, 1, 2, 4, 3, 9, 7, 8, 6)
    assert inverse(identity(5)) == identity(5)
    assert inverse((2, 1)) == (2, 1)


@given(perms)
def test_inverse_is_an_involution(p):
    assert inverse(inverse(p)) == p
    assert tuple(p[i - 1] for i in inverse(p)) == identity(len(p))


def test_is_baxter_known_cases():
    assert is_baxter(EX9)
    assert is_baxter(identity(6))
    assert not is_baxter((2, 4, 1, 3))
    assert not is_baxter((3, 1, 4, 2))
    assert not is_baxter_bruteforce((2, 4, 1, 3))
    assert not is_baxter_bruteforce((3, 1, 4, 2))


def test_is_baxter_matches_bruteforce_exhaustively():
    for n in range(1, 7):
        for p in all_permutations(n):
            assert is_baxter(p) == is_baxter_bruteforce(p), p


@given(perms)
def test_is_baxter_matches_bruteforce_random(p):
    assert is_baxter(p) == is_baxter_bruteforce(p)


def test_stat_profile_nine_letter_example():
    prof = stat_profile(EX9)
    assert prof.idb_set == frozenset({1, 3, 6, 7})
    assert prof.des_set == frozenset({3, 4, 6, 8})
    assert prof.idt_mod_set == frozenset({3, 4, 7, 8})
    assert prof.maj == 21
    assert prof.imaj_b == 17
    assert prof.imaj_t == 22
    assert prof.dt_hat_set == frozenset({4, 5, 6, 8})
    assert prof.db_set == frozenset({1, 4, 6, 7})
    assert prof.ides_set == frozenset({1, 4, 6, 8})
    assert prof.dt_mod_set == frozenset({3, 4, 7, 8})
    assert prof.des == 4


def test_stat_profile_identity():
    prof = stat_profile(identity(5))
    assert prof.des_set == prof.dt_set == prof.db_set == frozenset()
    assert prof.des == prof.maj == prof.imaj_b == prof.imaj_t == 0
    assert prof.dt_hat_set == frozenset()


@given(perms)
def test_stat_profile_internal_consistency(p):
    prof = stat_profile(p)
    q = inverse(p)
    assert prof.des_set == descent_positions(p)
    assert prof.ides_set == descent_positions(q)
    assert prof.idt_set == descent_tops(q)
    assert prof.idb_set == descent_bottoms(q)
    assert prof.dt_mod_set == frozenset(v - 1 for v in prof.dt_set)
    assert len(prof.dt_hat_set) == len(prof.dt_set)
    if p[-1] == len(p):
        assert prof.dt_hat_set == prof.dt_set
    else:
        assert prof.dt_hat_set == (prof.dt_set | {p[-1]}) - {len(p)}
    assert prof.maj == sum(prof.des_set)
    assert prof.imaj_b == sum(prof.idb_set)
    assert prof.imaj_t == sum(prof.idt_mod_set)


def test_statistic_duality_exhaustive():
    for n in range(1, 7):
        for p in all_permutations(n):
            direct = stat_profile(inverse(p))
            dual = stat_profile(p)
            assert dual.ides_set == direct.des_set
            assert dual.idt_set == direct.dt_set
            assert dual.idb_set == direct.db_set
            assert dual.idt_mod_set == direct.dt_mod_set


def test_baxter_descent_counts_match_inverse(bax):
    for n in range(1, 8):
        for p in bax.get(n):
            prof = stat_profile(p)
            assert len(prof.des_set) == len(prof.ides_set)


def test_baxter_closed_under_inversion():
    for n in range(1, 8):
        for p in all_permutations(n):
            assert is_baxter(p) == is_baxter(inverse(p))


def test_classify_letters_worked_example():
    C = LetterClass
    assert classify_letters((5, 1, 2, 4, 3, 9, 7, 8, 6)) == (
        C.VALLEY,
        C.DOUBLE_ASCENT,
        C.VALLEY,
        C.PEAK,
        C.PEAK,
        C.DOUBLE_DESCENT,
        C.VALLEY,
        C.PEAK,
    )
    assert classify_letters((2, 1)) == (C.DOUBLE_DESCENT,)
    assert classify_letters((1, 2)) == (C.DOUBLE_ASCENT,)
    assert classify_letters((1,)) == ()


def test_letters_passed_downward_are_the_descent_bottoms():
    # the valley/double-descent letters are exactly those whose predecessor
    # in the word is larger, i.e. the descent bottoms
    for n in range(1, 7):
        for p in all_permutations(n):
            classes = classify_letters(p)
            downward = {
                i
                for i in range(1, n)
                if classes[i - 1] in (LetterClass.VALLEY, LetterClass.DOUBLE_DESCENT)
            }
            pos = {v: i for i, v in enumerate(p)}
            direct = {
                i
                for i in range(1, n)
                if (p[pos[i] - 1] if pos[i] >= 1 else 0) > i
            }
            assert downward == direct == descent_bottoms(p)


def test_generate_baxter_small_golden_order():
    assert generate_baxter(1) == [(1,)]
    assert generate_baxter(2) == [(2, 1), (1, 2)]
    assert generate_baxter(3) == [
        (3, 2, 1),
        (2, 3, 1),
        (2, 1, 3),
        (3, 1, 2),
        (1, 3, 2),
        (1, 2, 3),
    ]


def test_generate_baxter_matches_filter():
    for n in range(1, 7):
        generated = generate_baxter(n)
        assert len(set(generated)) == len(generated)
        filtered = {p for p in all_permutations(n) if is_baxter_bruteforce(p)}
        assert set(generated) == filtered
    assert len(generate_baxter(4)) == 22


def test_insertion_slots_disjoint_families():
    for n in range(1, 7):
        for p in all_permutations(n):
            slots = insertion_slots(p)
            assert len(set(slots)) == len(slots)
            assert slots == tuple(sorted(slots))


def test_shape_flags_known_cases():
    flags = shape_flags((2, 1, 5, 4, 6, 3))
    assert flags.reverse_alternating and not flags.alternating
    assert shape_flags(inverse((2, 1, 5, 4, 6, 3))).genocchi
    assert inverse((2, 1, 5, 4, 6, 3)) == (2, 1, 6, 4, 3, 5)

    flags = shape_flags(identity(4))
    assert flags == type(flags)(False, False, False)

    flags = shape_flags((2, 1))
    assert not flags.alternating and flags.reverse_alternating and flags.genocchi

    flags = shape_flags((1, 2))
    assert flags.alternating and not flags.reverse_alternating and flags.genocchi

    flags = shape_flags((1,))
    assert flags.alternating and flags.reverse_alternating and flags.genocchi


def test_shape_flags_against_descent_sets():
    for n in range(1, 7):
        for p in all_permutations(n):
            des = descent_positions(p)
            flags = shape_flags(p)
            assert flags.alternating == (des == {i for i in range(2, n, 2)})
            assert flags.reverse_alternating == (des == {i for i in range(1, n, 2)})
            want = all((p[i] > p[i + 1]) == (p[i] % 2 == 0) for i in range(n - 1))
            assert flags.genocchi == want
