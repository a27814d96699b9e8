from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chiprank import dyck


def catalan(p):
    return comb(2 * p, p) // (p + 1)


@st.composite
def random_word(draw, min_n=2, max_n=10):
    """A word with n b's and n-1 a's, no b-heavy strict prefix, sampled by
    rotating a random letter arrangement."""
    n = draw(st.integers(min_n, max_n))
    letters = draw(st.permutations(list("a" * (n - 1) + "b" * n)))
    u, v = dyck.cyclic_factorization("".join(letters))
    return v + u


def all_dn(max_n):
    for n in range(2, max_n + 1):
        yield from dyck.dn_words(n)


def test_heights_and_area():
    assert list(dyck.heights("aababb")) == [0, 1, 1]
    assert dyck.area("aababb") == 2
    assert dyck.area("ab" * 5) == 0
    assert dyck.area("a" * 4 + "b" * 4) == 6


def test_word_predicates():
    assert dyck.is_dyck_word("aababb")
    assert not dyck.is_dyck_word("abba")
    assert not dyck.is_dyck_word("ba")
    assert dyck.is_dn_word("abb")
    assert not dyck.is_dn_word("bab")
    assert not dyck.is_dn_word("aabb")


def test_form_conversions():
    assert dyck.to_dn_word("aababb") == "aababbb"
    assert dyck.to_dyck_word("aababbb") == "aababb"
    with pytest.raises(ValueError):
        dyck.to_dn_word("aabab")  # not balanced
    with pytest.raises(ValueError):
        dyck.to_dyck_word("aabb")  # no extra b
    for w in dyck.dyck_words(5):
        assert dyck.to_dyck_word(dyck.to_dn_word(w)) == w


def test_enumeration_counts_and_order():
    for p in range(1, 8):
        words = list(dyck.dyck_words(p))
        assert len(words) == catalan(p)
        assert words == sorted(words)
        assert all(dyck.is_dyck_word(w) for w in words)
    for n in range(2, 8):
        words = list(dyck.dn_words(n))
        assert len(words) == catalan(n - 1)
        assert all(dyck.is_dn_word(w) for w in words)


def test_theta_pinned():
    # rotating at the first return: a u b v -> v a b u
    assert dyck.theta("aabb") == "abab"
    assert dyck.theta("abab") == "abab"
    assert dyck.theta("aababb") == "ababab"


def test_prerank_pinned():
    assert dyck.prerank("abaabb") == 2
    assert dyck.prerank("a" * 8 + "b" * 8) == 28
    assert dyck.prerank("ab" * 5) == 0


@given(random_word())
def test_prerank_dual_routes_agree_and_theta_terminates(w):
    # prerank itself asserts that the rotation count equals the coheight sum
    value = dyck.prerank(w)
    assert 0 <= value <= comb(len(w) // 2, 2)


def test_coheights_pinned():
    assert list(dyck.coheights("aababbb")) == [1, 0, 0]
    assert list(dyck.coheights("aaabbbb")) == [2, 1, 0]
    assert list(dyck.coheights("ababab")) == [0, 0, 0]


def test_dinv_and_cdinv_pinned():
    assert dyck.dinv("aababbb") == 1
    assert dyck.cdinv("aabaaabbabbabbb") == 7
    assert dyck.cdinv(dyck.phi_involution("aabaaabbabbabbb")) == 7


@given(random_word(max_n=8))
def test_cdinv_equals_dinv(w):
    """The cell-reading and the pair-reading of the statistic agree."""
    assert dyck.cdinv(w) == dyck.dinv(w)


def test_phi_pinned():
    w = "aabaabbabbaabaabbabb"
    assert dyck.phi_involution(w) == "aabaabbabbaabaabbbab"
    assert dyck.zeta_haglund(w) == "aabaaabaaabbabbbabbb"
    assert dyck.zeta_haglund(dyck.phi_involution(w)) == "aaabaaabaabbbabbbabb"
    assert dyck.r_map(dyck.zeta_haglund(w)) == "aaabaaabaabbbabbbabb"


@given(random_word())
def test_phi_is_an_involution_preserving_the_statistics(w):
    img = dyck.phi_involution(w)
    assert dyck.phi_involution(img) == w
    assert dyck.prerank(w) == dyck.area(dyck.to_dyck_word(img))
    assert dyck.dinv(img) == dyck.dinv(w)


def test_phi_on_balanced_words_exhaustive():
    for p in range(1, 7):
        for w in dyck.dyck_words(p):
            img = dyck.phi_involution(w)
            assert dyck.is_dyck_word(img)
            assert dyck.phi_involution(img) == w
            assert dyck.r_map(dyck.zeta_haglund(w)) == dyck.zeta_haglund(img)


def test_r_map_is_an_area_preserving_involution():
    for p in range(1, 7):
        for w in dyck.dyck_words(p):
            r = dyck.r_map(w)
            assert dyck.is_dyck_word(r)
            assert dyck.r_map(r) == w
            assert dyck.area(r) == dyck.area(w)


def test_zeta_pinned_small():
    assert dyck.zeta_haglund("ab") == "ab"
    assert dyck.zeta_haglund("aabb") == "abab"
    assert dyck.zeta_haglund("abab") == "aabb"


def test_zeta_is_a_bijection_on_each_size():
    for p in range(1, 8):
        words = list(dyck.dyck_words(p))
        images = {dyck.zeta_haglund(w) for w in words}
        assert len(images) == len(words)
        assert all(dyck.is_dyck_word(w) for w in images)


def test_cyclic_factorization_pinned():
    assert dyck.cyclic_factorization("bab") == ("b", "ab")
    # a word already in canonical form splits after its final letter
    assert dyck.cyclic_factorization("abb") == ("abb", "")
    assert dyck.cyclic_factorization("bba") == ("bb", "a")


@given(st.permutations(list("aaabbbb")))
def test_cyclic_factorization_properties(letters):
    w = "".join(letters)
    u, v = dyck.cyclic_factorization(w)
    assert u + v == w
    assert dyck.is_dn_word(v + u)
    # the rotation is unique: no other split point works
    others = [
        w[k:] + w[:k]
        for k in range(1, len(w))
        if w[k:] + w[:k] != v + u
    ]
    assert not any(dyck.is_dn_word(o) for o in others)


def test_statistics_reject_malformed_words():
    with pytest.raises(ValueError):
        dyck.area("abx")
    with pytest.raises(ValueError):
        dyck.prerank("ba")
    with pytest.raises(ValueError):
        dyck.theta("ba")
    with pytest.raises(ValueError):
        dyck.phi_involution("aabab")
