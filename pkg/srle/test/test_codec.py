import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from pytest import approx

from srle.bitio import BitPacking, VariableLength
from srle.codec import (compression_ratio, decode, deserialize, encode,
                        encode_pair, exploratory_suitable_set, find_runs,
                        make_config, payload_bits, raw_payload_bits,
                        read_encoded_pair, select_suitable_set, serialize,
                        split_run)
from srle.core.errors import RepresentationError
from srle.core.sequence import (CodecConfig, DistributionEstimate, Mode,
                                SuitableSet, SymbolSequence)


@pytest.mark.ci
@pytest.mark.parametrize('n,b_r,divisions', [
    (10, 2, [4, 4, 2]),
    (16, 4, [16]),
    (17, 4, [16, 1]),
    (1, 1, [1]),
])
def test_split_run(n, b_r, divisions):
    assert split_run(n, b_r) == divisions
    assert sum(divisions) == n


@pytest.mark.ci
def test_split_run_rejects_empty_run():
    with pytest.raises(ValueError):
        split_run(0, 4)


@pytest.mark.ci
def test_find_runs():
    symbols, lengths = find_runs(np.array([5, 5, 1, 5, 5, 5]))
    assert symbols.tolist() == [5, 1, 5]
    assert lengths.tolist() == [2, 1, 3]


@pytest.mark.ci
def test_encode_example(example_sequence, example_config):
    pair = encode_pair(example_sequence, SuitableSet({0, 1}, Mode.OURS),
                       example_config)
    assert pair.encoded_variable.tolist() == [0, 1, 0, 2, 2]
    assert pair.run_control.tolist() == [1, 3, 2]

    vrle = encode_pair(example_sequence, SuitableSet({0, 1, 2}, Mode.VRLE),
                       example_config)
    assert vrle.encoded_variable.tolist() == [0, 1, 0, 2]
    assert vrle.run_control.tolist() == [1, 3, 2, 2]


@pytest.mark.ci
def test_decode_example(example_sequence, example_config):
    container = encode(example_sequence, SuitableSet({0, 1}, Mode.OURS),
                       example_config)
    assert container.length == 8 and container.encoded_count == 5
    assert decode(container) == example_sequence


@pytest.mark.ci
def test_long_runs_are_split():
    seq = SymbolSequence([7] * 37)
    config = CodecConfig(b_r=4, representation=BitPacking(3))
    pair = encode_pair(seq, SuitableSet({7}, Mode.OURS), config)
    assert pair.encoded_variable.tolist() == [7, 7, 7]
    assert pair.run_control.tolist() == [16, 16, 5]
    assert decode(encode(seq, SuitableSet({7}, Mode.OURS), config)) == seq


@pytest.mark.ci
def test_encode_empty_sequence():
    container = encode(SymbolSequence(), SuitableSet({3}, Mode.OURS),
                       CodecConfig())
    assert container.length == 0 and container.payload_bits == 0
    pair = read_encoded_pair(container)
    assert len(pair.encoded_variable) == 0 and len(pair.run_control) == 0
    assert len(decode(container)) == 0


@pytest.mark.ci
def test_empty_suitable_set_is_pass_through(example_sequence, example_config):
    g = SuitableSet(frozenset(), Mode.OURS)
    pair = encode_pair(example_sequence, g, example_config)
    assert pair.encoded_variable.tolist() == example_sequence.tolist()
    assert len(pair.run_control) == 0
    assert decode(encode(example_sequence, g, example_config)) \
        == example_sequence


@pytest.mark.ci
def test_encode_rejects_wide_symbols(example_sequence):
    with pytest.raises(RepresentationError):
        encode(example_sequence, SuitableSet({0}, Mode.OURS),
               CodecConfig(representation=BitPacking(1)))
    with pytest.raises(RepresentationError):
        encode(SymbolSequence([1]), SuitableSet({2 ** 16}, Mode.OURS),
               CodecConfig())


@pytest.mark.ci
def test_exploratory_single_long_run():
    seq = SymbolSequence([0] * 1000)
    config = CodecConfig(b_r=4, representation=BitPacking(8))
    g = exploratory_suitable_set(seq, config)
    assert g.members == {0} and g.mode is Mode.ORACLE


@pytest.mark.ci
def test_exploratory_alternation_is_empty():
    seq = SymbolSequence([0, 1] * 500)
    config = CodecConfig(b_r=4, representation=BitPacking(8))
    assert not exploratory_suitable_set(seq, config)


@pytest.mark.ci
def test_exploratory_empty_sequence():
    assert not exploratory_suitable_set(SymbolSequence(), CodecConfig())


@pytest.mark.ci
def test_exploratory_agrees_with_threshold(rng):
    # a = 0 with probability 0.6, the rest spread over 15 symbols.
    N = 10 ** 5
    others = rng.integers(1, 16, size=N)
    seq = SymbolSequence(np.where(rng.random(N) < 0.6, 0, others))
    config = CodecConfig(b_r=4, representation=BitPacking(4))
    oracle = exploratory_suitable_set(seq, config)
    dist = DistributionEstimate.from_elements(seq.elements)
    threshold = select_suitable_set(seq, dist, config)
    assert 0 in oracle and 0 in threshold
    assert oracle.members == threshold.members == {0}


@pytest.mark.ci
def test_select_suitable_set_per_mode(example_sequence, example_config):
    dist = DistributionEstimate.from_elements(example_sequence.elements)
    for mode, members in [(Mode.OURS, set()), (Mode.VRLE, {0, 1, 2}),
                          (Mode.DRLE, {0}), (Mode.ORACLE, {1})]:
        config = CodecConfig(b_r=4, representation=BitPacking(2), mode=mode)
        g = select_suitable_set(example_sequence, dist, config)
        assert g.members == members, mode
        assert g.mode is mode


@pytest.mark.ci
def test_make_config(example_sequence):
    config = make_config(example_sequence, 'ours', 4, 'bitpack')
    assert config.representation == BitPacking(2)
    assert make_config(example_sequence, 'drle', 2, 'bitpack',
                       bx=8).representation == BitPacking(8)
    assert make_config(SymbolSequence(), 'vrle', 4,
                       'bitpack').representation == BitPacking(1)
    config = make_config(example_sequence, 'oracle', 4, 'varlen')
    assert config.representation == VariableLength()
    assert config.mode is Mode.ORACLE
    with pytest.raises(ValueError):
        make_config(example_sequence, 'ours', 4, 'varlen', bx=8)
    with pytest.raises(ValueError):
        make_config(example_sequence, 'ours', 4, 'huffman')
    with pytest.raises(RepresentationError):
        make_config(example_sequence, 'ours', 4, 'bitpack', bx=1)
    for bx in [0, 65]:
        with pytest.raises(ValueError) as error:
            make_config(example_sequence, 'ours', 4, 'bitpack', bx=bx)
        assert not isinstance(error.value, RepresentationError)


@pytest.mark.ci
def test_compression_ratio():
    assert compression_ratio(0, 0) == 1.0
    assert compression_ratio(10, 0) == float('inf')
    assert compression_ratio(10, 20) == approx(0.5)


sequences = st.lists(st.integers(0, 15), max_size=200).map(SymbolSequence)
runny_sequences = st.lists(
    st.tuples(st.integers(0, 15), st.integers(1, 40)), max_size=30).map(
        lambda runs: SymbolSequence([x for x, n in runs for _ in range(n)]))
representations = st.sampled_from([VariableLength(), BitPacking(4),
                                   BitPacking(11)])
widths = st.sampled_from([1, 2, 4, 8])
subsets = st.sets(st.integers(0, 15))


@pytest.mark.ci
@settings(max_examples=300, deadline=None)
@given(st.one_of(sequences, runny_sequences), subsets, representations,
       widths)
def test_round_trip(seq, members, representation, b_r):
    config = CodecConfig(b_r=b_r, representation=representation)
    container = encode(seq, SuitableSet(members, Mode.OURS), config)
    assert decode(deserialize(serialize(container))) == seq


@pytest.mark.ci
@settings(max_examples=200, deadline=None)
@given(runny_sequences, subsets, representations, widths)
def test_payload_accounting(seq, members, representation, b_r):
    config = CodecConfig(b_r=b_r, representation=representation)
    g = SuitableSet(members, Mode.OURS)
    pair = encode_pair(seq, g, config)
    container = encode(seq, g, config)
    assert container.payload_bits == payload_bits(pair, representation, b_r)
    assert container.encoded.bit_length + b_r * len(pair.run_control) \
        == container.payload_bits
    n_members = int(np.isin(pair.encoded_variable, list(members)).sum())
    assert len(pair.run_control) == n_members


@pytest.mark.ci
@settings(max_examples=200, deadline=None)
@given(runny_sequences, widths)
def test_vrle_lists_have_equal_length(seq, b_r):
    config = CodecConfig(b_r=b_r)
    pair = encode_pair(seq, SuitableSet(seq.alphabet(), Mode.VRLE), config)
    assert len(pair.encoded_variable) == len(pair.run_control)


@pytest.mark.ci
@settings(max_examples=200, deadline=None)
@given(st.one_of(sequences, runny_sequences), representations, widths)
def test_oracle_never_inflates(seq, representation, b_r):
    config = CodecConfig(b_r=b_r, representation=representation)
    oracle = exploratory_suitable_set(seq, config)
    best = encode(seq, oracle, config).payload_bits
    assert best <= raw_payload_bits(seq, representation)

    vrle = SuitableSet(seq.alphabet(), Mode.VRLE)
    assert best <= encode(seq, vrle, config).payload_bits
    if seq.alphabet():
        dist = DistributionEstimate.from_elements(seq.elements)
        ours = select_suitable_set(seq, dist, config)
        assert best <= encode(seq, ours, config).payload_bits
