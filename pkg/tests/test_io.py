import numpy as np
import pytest
from hypothesis import given

from conftest import EX1_SEQS, instances
from cspreopt import (
    Instance,
    ParseError,
    PlantedSpec,
    gen_planted,
    gen_random,
    hamming,
    parse_instance,
    parse_solution,
    serialize_instance,
    serialize_solution,
    solve_exact_tuples,
)

EX1_TEXT = "l=4\nAAAABBBB\nBBBBAAAA\nAAAABBBA\nBBBBAAAA\n"


def test_parse_example1(ex1):
    assert parse_instance(EX1_TEXT) == ex1
    assert serialize_instance(ex1) == EX1_TEXT


def test_single_sequence():
    inst = parse_instance("l=4\nAAAA\n")
    assert (inst.t, inst.n, inst.l) == (1, 4, 4)


@pytest.mark.parametrize(
    "text,line",
    [
        ("l=9\nAAAABBBB\n", 1),
        ("", None),
        ("l=2\nAAAA\nAAA\n", 3),
        ("l=2\nAA A\n", 2),
        ("l=2\nAAAA", 2),
        ("AAAA\n", 1),
        ("l=x\nAAAA\n", 1),
        ("l=2\nalphabet=AB\nABC\n", 3),
        ("l=2\n\nAA\n", 2),
        ("l=2\n", 1),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as err:
        parse_instance(text)
    assert err.value.line == line


def test_alphabet_header_round_trip():
    text = "l=2\nalphabet=ABC\nABAB\nBABA\n"
    inst = parse_instance(text)
    assert inst.alphabet == "ABC"
    assert serialize_instance(inst) == text


def test_fasta_reader():
    inst = parse_instance(">s1\nAAAA\nBBBB\n>s2\nBBBBAAAA\n", fasta=True, l=4)
    assert inst.sequences == ("AAAABBBB", "BBBBAAAA")


@given(instances())
def test_instance_round_trip(inst):
    text = serialize_instance(inst)
    assert parse_instance(text) == inst
    assert serialize_instance(parse_instance(text)) == text


def test_solution_format(ex1p):
    text = serialize_solution(solve_exact_tuples(ex1p).costed)
    assert text == "cost=1\npattern=BBBB\nocc 0 4\nocc 1 0\nocc 2 3\nocc 3 0\nocc 4 0\n"
    assert serialize_solution(parse_solution(text)) == text
    assert parse_solution(text) == solve_exact_tuples(ex1p).costed


def test_empty_solution_cannot_be_written():
    class Empty:
        solution = ()
        cost = 0
        pattern = "AAAA"

    with pytest.raises(ValueError):
        serialize_solution(Empty())


@pytest.mark.parametrize("text", ["cost=1\npattern=AA\n", "cost=1\npattern=AA\nocc 1 0\n", "cost=1\npattern=AA\nocc 0\n"])
def test_bad_solution_files(text):
    with pytest.raises(ParseError):
        parse_solution(text)


def test_gen_random_deterministic():
    a = gen_random(5, 12, 3, 4, 99)
    assert a == gen_random(5, 12, 3, 4, 99)
    assert a != gen_random(5, 12, 3, 4, 100)
    assert gen_random(1, 6, 2, 2, 0).t == 1
    assert a.alphabet == "ABCD"


def test_gen_random_matches_raw_pcg64_stream():
    raw = np.random.Generator(np.random.PCG64(7)).integers(0, 2, size=(2, 10))
    expected = tuple("".join("AB"[c] for c in row) for row in raw)
    assert gen_random(2, 10, 3, 2, 7).sequences == expected


def test_unary_alphabet_is_free():
    for l in (1, 3, 5):
        assert solve_exact_tuples(gen_random(3, 5, l, 1, 0)).cost == 0


def test_planted_zero_mutations():
    inst, motif = gen_planted(PlantedSpec(5, 12, 4, 0, 2, 3))
    assert all(motif in s for s in inst.sequences)
    assert solve_exact_tuples(inst).cost == 0


def test_planted_deterministic_and_witness_bound():
    spec = PlantedSpec(4, 10, 4, 1, 2, 7)
    inst, motif = gen_planted(spec)
    assert gen_planted(spec) == (inst, motif)
    assert solve_exact_tuples(inst).cost <= 4 * 1
    for s in inst.sequences:
        assert min(hamming(motif, s[p:p + 4]) for p in range(7)) <= 1


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_planted_mutation_count(d):
    inst, motif = gen_planted(PlantedSpec(6, 4, 4, d, 4, d))
    assert all(hamming(motif, s) == d for s in inst.sequences)


def test_planted_spec_validation():
    with pytest.raises(ValueError):
        PlantedSpec(3, 5, 4, 5, 2, 0)
    with pytest.raises(ValueError):
        PlantedSpec(0, 5, 4, 1, 2, 0)
    with pytest.raises(ValueError):
        PlantedSpec(3, 5, 4, 1, 2, -1)
