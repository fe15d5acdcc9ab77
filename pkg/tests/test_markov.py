import math
import random

import pytest

from letterlab import (
    BinarySequence,
    InputError,
    LanguageModel,
    LetterSequence,
    TransitionCounts,
    count_digrams,
    count_letters,
    entropy_estimates,
    fit_transitions,
    generate,
    independence_test,
    normalize,
    to_vc_sequence,
    vc_profile,
)
from letterlab.markov import chi_square_tail_df1


def counts(vv, vc, cv, cc, initial="V"):
    return TransitionCounts(
        n={("V", "V"): vv, ("V", "C"): vc, ("C", "V"): cv, ("C", "C"): cc},
        initial=initial,
    )


def test_to_vc_sequence(en):
    assert to_vc_sequence(normalize("onegin", en)).states == "VCVCVC"
    assert to_vc_sequence(normalize("rhythm", en)).states == "CCCCCC"


def test_vc_counts_agree_with_stylometry(en, analysis_corpus):
    b = to_vc_sequence(analysis_corpus)
    assert b.states.count("V") == vc_profile(analysis_corpus).vowel_count


def test_to_vc_commutes_with_concatenation(en):
    a = normalize("letter", en)
    b = normalize("counting", en)
    joined = LetterSequence(en, a.symbols + b.symbols)
    assert to_vc_sequence(joined).states == to_vc_sequence(a).states + to_vc_sequence(b).states


def test_fit_transitions_alternating():
    t = fit_transitions(BinarySequence("VCVCVC"))
    assert t.n[("V", "C")] == 3 and t.n[("C", "V")] == 2
    assert t.n[("V", "V")] == 0 and t.n[("C", "C")] == 0
    assert t.initial == "V"


def test_fit_transitions_runs():
    t = fit_transitions(BinarySequence("VVV"))
    assert t.n[("V", "V")] == 2 and t.total == 2


def test_fit_transitions_counts_sum_to_length_minus_one():
    rng = random.Random(5)
    for _ in range(200):
        states = "".join(rng.choice("VC") for _ in range(rng.randint(2, 40)))
        assert fit_transitions(BinarySequence(states)).total == len(states) - 1


def test_fit_transitions_needs_two_states():
    with pytest.raises(InputError):
        fit_transitions(BinarySequence("V"))


def test_independence_balanced_counts():
    report = independence_test(counts(50, 50, 50, 50))
    assert report.chi_square == 0.0
    assert report.p_value == 1.0
    assert report.degrees_of_freedom == 1


def test_independence_perfect_alternation():
    # V,C,V,...,length 1001: 500 of each transition direction, expected
    # cells all 250, so chi-square is exactly 4 * 250 = 1000
    t = fit_transitions(BinarySequence("VC" * 500 + "V"))
    report = independence_test(t)
    assert math.isclose(report.chi_square, 1000.0, rel_tol=1e-12)
    assert report.p_value < 1e-15


def test_independence_natural_text(analysis_corpus):
    t = fit_transitions(to_vc_sequence(analysis_corpus))
    report = independence_test(t)
    assert report.p_value < 1e-6
    # vowels avoid following vowels in English
    assert report.transition_probabilities[("V", "C")] > report.transition_probabilities[("V", "V")]


def test_independence_zero_row_is_degenerate():
    with pytest.raises(InputError):
        independence_test(counts(5, 0, 0, 0))


def test_independence_report_json_fields():
    d = independence_test(counts(10, 20, 20, 10)).to_json_dict()
    assert set(d) == {"chi_square", "df", "p_value", "p_vv", "p_vc", "p_cv", "p_cc"}
    assert math.isclose(d["p_vv"] + d["p_vc"], 1.0)


def test_chi_square_tail_reference_point():
    # 3.841459 is the familiar 5% critical value at one degree of freedom
    assert math.isclose(chi_square_tail_df1(3.8414588206941254), 0.05, rel_tol=1e-9)


def test_entropy_uniform(en):
    from letterlab import DigramTable, FrequencyTable

    uni = FrequencyTable.from_counts(en, {ch: 10 for ch in en.letters})
    dig = DigramTable(en, {(a, b): 1 for a in en.letters for b in en.letters}, 26 * 26)
    rep = entropy_estimates(uni, dig)
    assert math.isclose(rep.h1, math.log2(26), abs_tol=1e-9)
    assert math.isclose(rep.h2, math.log2(26), abs_tol=1e-9)
    assert rep.h0 == math.log2(26)


def test_entropy_single_letter(en):
    s = normalize("aaaa", en)
    rep = entropy_estimates(count_letters(s), count_digrams(s))
    assert rep.h1 == 0.0 and rep.h2 == 0.0


def test_entropy_english_conditioning_helps(analysis_corpus):
    rep = entropy_estimates(count_letters(analysis_corpus), count_digrams(analysis_corpus))
    assert rep.h2 < rep.h1 < rep.h0


def test_entropy_empty_errors(en):
    from letterlab import DigramTable, FrequencyTable

    with pytest.raises(InputError):
        entropy_estimates(FrequencyTable.empty(en), DigramTable(en, {}, 0))


def test_generate_length_zero(en, training_model):
    assert generate(counts(1, 1, 1, 1), 0, seed=1).states == ""
    assert generate(training_model, 0, seed=1).symbols == ""


def test_generate_degenerate_unigram(en):
    from letterlab import DigramTable, FrequencyTable

    model = LanguageModel(
        unigram=FrequencyTable.from_counts(en, {"q": 7}),
        digram=DigramTable(en, {}, 0),
    )
    out = generate(model, 20, seed=3, order=0)
    assert out.symbols == "q" * 20


def test_generate_deterministic(en, training_model):
    a = generate(training_model, 200, seed=42, order=1)
    b = generate(training_model, 200, seed=42, order=1)
    assert a.symbols == b.symbols
    c = generate(training_model, 200, seed=43, order=1)
    assert a.symbols != c.symbols


def test_generate_states_match_model():
    # law of large numbers: at 100k steps the binomial standard error of
    # each row probability is under 0.003, so 0.01 is a comfortable band
    t = counts(30, 70, 40, 60)
    out = generate(t, 100000, seed=9)
    fitted = fit_transitions(out).probabilities()
    want = t.probabilities()
    for pair in want:
        assert abs(fitted[pair] - want[pair]) < 0.01


def test_generate_errors():
    with pytest.raises(InputError):
        generate(counts(0, 0, 0, 0), 5, seed=1)
    with pytest.raises(InputError):
        generate(counts(1, 1, 1, 1), -1, seed=1)


def test_generate_unreachable_zero_row_is_fine():
    # row C is empty but the chain starting at V never needs it
    t = counts(10, 0, 0, 0)
    out = generate(t, 50, seed=2)
    assert out.states == "V" * 50
