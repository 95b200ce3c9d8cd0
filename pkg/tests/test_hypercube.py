import json
import math
import re
from pathlib import Path

import numpy as np
import pytest
from reference_cube import CUBE5_EDGES, CUBE5_LABELS, SPOT_CHECKS
from hypothesis import given
from hypothesis import strategies as st
from oracles import all_pairs_hypercube, bit_loop_hamming, brute_signature

from segrecube.errors import LengthMismatchError, OverflowGuardError, SegreError
from segrecube.hypercube import (
    BinaryWord,
    SpaceSignature,
    from_json,
    generate_hypercube,
    hamming,
    hamming_many,
    merge_index,
    neighbors,
    signature_of,
    to_dot,
    to_json,
)

GOLDEN = Path(__file__).parent / "golden"
W = BinaryWord.parse


@pytest.mark.parametrize("a, b, d", [("000", "000", 0), ("101", "100", 1), ("000", "111", 3)])
def test_hamming_examples(a, b, d):
    assert hamming(W(a), W(b)) == d


def test_hamming_length_mismatch():
    with pytest.raises(LengthMismatchError):
        hamming(W("01"), W("011"))


_words = st.integers(1, 40).flatmap(
    lambda n: st.tuples(*[st.lists(st.integers(0, 1), min_size=n, max_size=n).map(tuple)] * 3)
)


@given(_words)
def test_hamming_is_a_metric(triple):
    a, b, c = (BinaryWord(t) for t in triple)
    assert (hamming(a, b) == 0) == (a == b)
    assert hamming(a, b) == hamming(b, a)
    assert hamming(a, c) <= hamming(a, b) + hamming(b, c)


def test_hamming_many_matches_bit_loop(rng):
    length = 30
    a = rng.integers(0, 1 << length, size=500)
    b = rng.integers(0, 1 << length, size=500)
    got = hamming_many(a, b)
    for x, y, d in zip(a, b, got):
        wa, wb = BinaryWord.from_code(int(x), length), BinaryWord.from_code(int(y), length)
        assert d == bit_loop_hamming(wa.bits, wb.bits)


def test_word_code_round_trip():
    for length in range(1, 8):
        for code in range(1 << length):
            assert BinaryWord.from_code(code, length).code == code
    assert str(W("(1001)")) == "1001"


def test_word_rejects_non_bits():
    with pytest.raises(SegreError):
        BinaryWord((0, 2))


@pytest.mark.parametrize(
    "word, dims",
    [
        ("0000", (1, 1, 1, 1, 1)),
        ("1001", (3, 1, 3)),
        ("1111", (31,)),
        ("0", (1, 1)),
        ("1", (3,)),
    ],
)
def test_signature_examples(word, dims):
    assert signature_of(W(word)).dims == dims


def test_signature_pretty():
    assert signature_of(W("1001")).pretty() == "ℙ³×ℙ¹×ℙ³"
    assert str(signature_of(W("1001"))) == "P3 x P1 x P3"


def test_signature_matches_block_oracle():
    for length in range(1, 10):
        for code in range(1 << length):
            w = BinaryWord.from_code(code, length)
            assert signature_of(w).dims == brute_signature(str(w))


def test_signature_general_base():
    # P2 x P1 x P4 with the first pair merged: (3*2) - 1 = 5
    assert signature_of(W("10"), base=(2, 1, 4)).dims == (5, 4)
    assert signature_of(W("11"), base=(2, 1, 4)).dims == (29,)
    assert signature_of(W("11"), base=(2, 1, 4)).ambient_dim == 3 * 2 * 5 - 1


def test_signature_base_length_checked():
    with pytest.raises(LengthMismatchError):
        signature_of(W("10"), base=(1, 1))


def test_qubits_conserved():
    for n in range(2, 11):
        for code in range(1 << (n - 1)):
            sig = signature_of(BinaryWord.from_code(code, n - 1))
            assert sum(math.log2(d + 1) for d in sig.dims) == n
            assert sig.qubits == n


def test_qubits_undefined_for_non_qubit_factor():
    with pytest.raises(SegreError):
        SpaceSignature((2,)).qubits


def test_signature_injective():
    for n in range(2, 12):
        sigs = {signature_of(BinaryWord.from_code(c, n - 1)) for c in range(1 << (n - 1))}
        assert len(sigs) == 1 << (n - 1)


def test_edge_is_one_segre_merge():
    for n in range(2, 9):
        g = generate_hypercube(n)
        for a, b in g.edge_words():
            (i,) = [t for t in range(len(a)) if a[t] != b[t]]
            lo, hi = (a, b) if a[i] == 0 else (b, a)
            j = merge_index(lo, i)
            small, big = signature_of(lo), signature_of(hi)
            assert small.merge(j) == big
            assert (small.dims[j] + 1) * (small.dims[j + 1] + 1) == big.dims[j] + 1


@pytest.mark.parametrize(
    "word, expect",
    [("0", {"1"}), ("00", {"10", "01"}), ("101", {"001", "111", "100"})],
)
def test_neighbors(word, expect):
    assert neighbors(W(word)) == {W(e) for e in expect}


def test_generate_small_cubes():
    g2 = generate_hypercube(2)
    assert [(str(w), str(s)) for w, s in g2.vertices] == [("0", "P1 x P1"), ("1", "P3")]
    assert g2.edge_count == 1
    g3 = generate_hypercube(3)
    assert (g3.vertex_count, g3.edge_count) == (4, 4)
    g5 = generate_hypercube(5)
    assert (g5.vertex_count, g5.edge_count) == (16, 32)


def test_generate_guards():
    with pytest.raises(SegreError):
        generate_hypercube(1)
    with pytest.raises(OverflowGuardError):
        generate_hypercube(25)


@pytest.mark.parametrize("n", range(2, 9))
def test_generate_matches_all_pairs_oracle(n):
    words, edges = all_pairs_hypercube(n - 1)
    g = generate_hypercube(n)
    assert [str(w) for w, _ in g.vertices] == words
    assert {(str(a), str(b)) for a, b in g.edge_words()} == edges


def test_n5_matches_reference_cube():
    g = generate_hypercube(5)
    assert {str(w): str(s) for w, s in g.vertices} == CUBE5_LABELS
    assert {(str(a), str(b)) for a, b in g.edge_words()} == CUBE5_EDGES
    for word, dims in SPOT_CHECKS.items():
        assert signature_of(W(word)).dims == dims


def test_dot_counts_and_labels():
    text = to_dot(generate_hypercube(2))
    assert len(re.findall(r"\[label=", text)) == 2
    assert text.count(" -- ") == 1
    text5 = to_dot(generate_hypercube(5))
    assert len(re.findall(r"\[label=", text5)) == 16
    assert text5.count(" -- ") == 32
    assert '"1001" [label="(1001) P3 x P1 x P3"];' in text5


def test_dot_deterministic():
    assert to_dot(generate_hypercube(6)) == to_dot(generate_hypercube(6))


def test_dot_sorted():
    lines = to_dot(generate_hypercube(4)).splitlines()
    nodes = [ln.split('"')[1] for ln in lines if "[label=" in ln]
    edges = [tuple(ln.split('"')[1::2]) for ln in lines if " -- " in ln]
    assert nodes == sorted(nodes)
    assert edges == sorted(edges)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_golden_files(n):
    g = generate_hypercube(n)
    assert to_dot(g) == (GOLDEN / f"hypercube_n{n}.dot").read_text()
    assert to_json(g) + "\n" == (GOLDEN / f"hypercube_n{n}.json").read_text()


@pytest.mark.parametrize("n", [2, 4, 7])
def test_json_round_trip(n):
    g = generate_hypercube(n)
    back = from_json(to_json(g))
    assert back == g
    assert back.vertices == g.vertices


def test_json_counts():
    doc = json.loads(to_json(generate_hypercube(4)))
    assert doc["vertex_count"] == 8 == len(doc["vertices"])
    assert doc["edge_count"] == 12 == len(doc["edges"])
    assert list(doc) == ["n", "vertex_count", "edge_count", "vertices", "edges"]


def test_json_rejects_tampered_signature():
    doc = json.loads(to_json(generate_hypercube(3)))
    doc["vertices"][1]["dims"] = [7]
    with pytest.raises(SegreError):
        from_json(json.dumps(doc))


def test_edges_are_array_backed():
    g = generate_hypercube(12)
    assert g.edges.dtype == np.int64
    assert g.edges.shape == (11 * 2**10, 2)
