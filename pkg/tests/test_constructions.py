"""Syndrome codes, the explicit families, and code verification."""

import itertools
import math

import pytest

from blockperm.constructions import (
    CodeBook,
    PairEncoder,
    codebook_from_payload,
    codebook_from_text,
    codebook_payload,
    codebook_to_text,
    cyclic_class_code,
    even_n_code,
    ham_decomp_code,
    in_syndrome_class,
    largest_syndrome_class,
    select_prime,
    syndrome,
    syndrome_class,
    syndrome_classes,
    verify_min_distance,
    with_verified_min_distance,
    zn1_code,
)
from blockperm.perm import block_distance, char_set


def test_select_prime_frozen():
    assert select_prime(4) == 7
    assert select_prime(5) == 11
    assert select_prime(2) == 2
    with pytest.raises(ValueError):
        select_prime(1)


@pytest.mark.parametrize("n", range(2, 41))
def test_select_prime_stays_below_pair_count(n):
    q = select_prime(n)
    assert q >= n * (n - 1) // 2
    assert q <= max(n * (n - 1), 2)
    assert all(q % f for f in range(2, int(q**0.5) + 1))


def test_pair_encoder_frozen_table():
    enc = PairEncoder(4, 7)
    table = {(a, b): enc.value(a, b) for a in range(1, 5) for b in range(a + 1, 5)}
    assert table == {(1, 2): 0, (1, 3): 1, (1, 4): 2, (2, 3): 3, (2, 4): 4, (3, 4): 5}
    assert enc.value(2, 1) == enc.value(1, 2) == 0


@pytest.mark.parametrize("n", range(2, 9))
def test_pair_encoder_injective_on_unordered_pairs(n):
    enc = PairEncoder.for_n(n)
    values = [enc.value(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    assert len(set(values)) == n * (n - 1) // 2
    assert all(0 <= v < enc.q for v in values)


def test_pair_encoder_validation():
    with pytest.raises(ValueError):
        PairEncoder(4, 5)  # needs q >= 6
    enc = PairEncoder(4, 7)
    with pytest.raises(ValueError):
        enc.value(1, 1)
    with pytest.raises(ValueError):
        enc.value(0, 3)


def test_pair_encoder_minimal_field():
    enc = PairEncoder(3, 3)  # image fills the whole field
    assert sorted(enc.value(a, b) for a in (1, 2, 3) for b in range(a + 1, 4)) == [0, 1, 2]


def test_syndrome_frozen_values():
    enc = PairEncoder(4, 7)
    assert syndrome((1, 2, 3, 4), 3, enc) == (1, 1)  # labels 0,3,5: e1=8, e2=15
    assert syndrome((4, 3, 2, 1), 3, enc) == (1, 1)  # same unordered pairs
    assert block_distance((1, 2, 3, 4), (4, 3, 2, 1)) == 3


def test_syndrome_single_coordinate_is_label_sum():
    enc = PairEncoder.for_n(5)
    for p in [(1, 2, 3, 4, 5), (3, 1, 5, 2, 4)]:
        total = sum(enc.value(a, b) for a, b in zip(p, p[1:])) % enc.q
        assert syndrome(p, 2, enc) == (total,)


def test_syndrome_surplus_coordinates_are_zero():
    enc = PairEncoder.for_n(3)
    values = syndrome((2, 1, 3), 6, enc)
    assert len(values) == 5
    assert values[2:] == (0, 0, 0)  # only two pair labels exist


def test_syndrome_validation():
    enc = PairEncoder.for_n(4)
    with pytest.raises(ValueError):
        syndrome((1, 2, 3), 3, enc)
    with pytest.raises(ValueError):
        syndrome((1, 2, 3, 4), 1, enc)


def test_syndrome_class_frozen():
    enc = PairEncoder(4, 7)
    code = syndrome_class(4, 3, (1, 1), enc)
    assert (1, 2, 3, 4) in code.words
    assert (4, 3, 2, 1) in code.words
    assert verify_min_distance(code) >= 3
    assert code.provenance == "syndrome"


def test_syndrome_class_can_be_empty():
    enc = PairEncoder.for_n(4)
    sizes = {f: len(syndrome_class(4, 3, f, enc).words)
             for f in itertools.product(range(3), repeat=2)}
    assert any(size == 0 for size in sizes.values())


def test_in_syndrome_class_matches_scan():
    enc = PairEncoder.for_n(5)
    code = syndrome_class(5, 3, (1, 1), enc)
    members = set(code.words)
    for p in itertools.permutations(range(1, 6)):
        assert in_syndrome_class(p, 3, (1, 1), enc) == (p in members)
    # usable beyond the scan guard
    big = PairEncoder.for_n(12)
    assert isinstance(in_syndrome_class(tuple(range(1, 13)), 4, (0, 0, 0), big), bool)


@pytest.mark.parametrize("d", [3, 4])
def test_syndrome_fibers_separate_at_n7(d):
    enc = PairEncoder.for_n(7)
    buckets = syndrome_classes(7, d, enc)
    assert sum(len(ws) for ws in buckets.values()) == math.factorial(7)
    for words in buckets.values():
        sets = [char_set(w) for w in words]
        for i, si in enumerate(sets):
            for sj in sets[i + 1 :]:
                assert len(si - sj) >= d


@pytest.mark.parametrize("d", [3, 4])
def test_syndrome_fibers_partition_and_separate(d):
    n = 5
    enc = PairEncoder.for_n(n)
    buckets = syndrome_classes(n, d, enc)
    assert sum(len(ws) for ws in buckets.values()) == math.factorial(n)
    for words in buckets.values():
        for a, b in itertools.combinations(words, 2):
            assert block_distance(a, b) >= d


def test_largest_syndrome_class_pigeonhole():
    for n, d in [(5, 3), (6, 3)]:
        enc = PairEncoder.for_n(n)
        code = largest_syndrome_class(n, d, enc)
        assert len(code.words) >= -(-math.factorial(n) // enc.q ** (d - 1))
    assert len(largest_syndrome_class(6, 3).words) >= 3


def test_cyclic_class_code():
    assert set(cyclic_class_code(3).words) == {(1, 2, 3), (2, 1, 3)}
    code4 = cyclic_class_code(4)
    assert len(code4.words) == 6
    assert all(w[-1] == 4 for w in code4.words)
    assert verify_min_distance(code4) == 2


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_cyclic_class_code_distance_property(n):
    code = cyclic_class_code(n)
    assert len(code.words) == math.factorial(n - 1)
    assert verify_min_distance(code) >= 2


def _assert_pairs_partition(code):
    pairs = [pr for w in code.words for pr in char_set(w)]
    n = code.n
    assert len(pairs) == n * (n - 1)
    assert len(set(pairs)) == n * (n - 1)


def test_even_n_code_frozen():
    code = even_n_code(4)
    assert set(code.words) == {(1, 2, 4, 3), (2, 3, 1, 4), (3, 4, 2, 1), (4, 1, 3, 2)}
    assert verify_min_distance(code) == 3
    _assert_pairs_partition(code)
    with pytest.raises(ValueError):
        even_n_code(5)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_even_n_code_properties(n):
    code = even_n_code(n)
    assert len(code.words) == n
    assert verify_min_distance(code) == max(n - 1, 1)
    _assert_pairs_partition(code)


def test_zn1_code_frozen():
    code = zn1_code(4)
    assert set(code.words) == {(1, 2, 3, 4), (2, 4, 1, 3), (3, 1, 4, 2), (4, 3, 2, 1)}
    assert verify_min_distance(code) == 3
    _assert_pairs_partition(code)
    with pytest.raises(ValueError):
        zn1_code(5)  # 6 is composite


@pytest.mark.parametrize("n", [4, 6, 10])
def test_zn1_code_properties(n):
    code = zn1_code(n)
    assert len(code.words) == n
    assert verify_min_distance(code) == n - 1
    _assert_pairs_partition(code)


def test_ham_decomp_code_found_at_7():
    code = ham_decomp_code(7)
    assert code is not None
    assert len(code.words) == 7
    assert verify_min_distance(code) == 6
    _assert_pairs_partition(code)


@pytest.mark.parametrize("n", [3, 5])
def test_ham_decomp_code_not_found(n):
    assert ham_decomp_code(n) is None


def test_ham_decomp_code_validation():
    with pytest.raises(ValueError):
        ham_decomp_code(6)
    with pytest.raises(ValueError):
        ham_decomp_code(11)  # beyond the default search guard


def test_verify_min_distance_conventions():
    assert verify_min_distance(CodeBook(5, 4, ((1, 2, 3, 4, 5),), "file")) == 5
    assert verify_min_distance(CodeBook(3, 1, (), "file")) == 3
    with pytest.raises(ValueError):
        verify_min_distance(cyclic_class_code(5), max_words=5)


def test_with_verified_min_distance():
    code = with_verified_min_distance(even_n_code(6))
    assert code.verified_min_distance == 5


def test_codebook_rejects_bad_words():
    with pytest.raises(ValueError):
        CodeBook(3, 2, ((1, 2, 3), (1, 2, 3)), "file")
    with pytest.raises(ValueError):
        CodeBook(3, 2, ((1, 2),), "file")
    with pytest.raises(ValueError):
        CodeBook(3, 0, ((1, 2, 3),), "file")


def test_codebook_text_round_trip():
    code = even_n_code(4)
    text = codebook_to_text(code)
    assert text.splitlines()[0] == "4 3 even"
    back = codebook_from_text(text)
    assert back.words == code.words
    assert back.design_distance == 3
    with pytest.raises(ValueError):
        codebook_from_text("4 3\n1 2 3 4\n")


def test_codebook_payload_round_trip():
    code = with_verified_min_distance(zn1_code(4))
    assert codebook_from_payload(codebook_payload(code)) == code
