import json

import numpy as np

from signum.patterns import SignPattern
from signum.spectra import SampleConfig, sample, spectral_profile
from signum.verdict import Conclusion, Overall, analyze, explain, verdict_to_json

CFG = SampleConfig(trials=300, seed=3)


def rule(verdict, rule_id):
    return next(f for f in verdict.findings if f.rule_id == rule_id)


def test_requires_unique_triangle(pat):
    v = analyze(pat("PAT_XX2"), cfg=CFG)
    assert v.overall is Overall.REQUIRES_UNIQUE
    assert rule(v, "R2").conclusion is Conclusion.REQUIRES_UNIQUE


def test_alternating_four_cycle(pat):
    v = analyze(pat("PAT_XNFIG2"), cfg=CFG)
    assert v.overall is Overall.DOES_NOT_REQUIRE
    r5 = rule(v, "R5")
    assert r5.conclusion is Conclusion.DOES_NOT_REQUIRE
    assert r5.details["conditions"]["even_length_odd_run"]


def test_inconclusive_with_single_key_census(pat):
    v = analyze(pat("PAT_EG06"), cfg=CFG)
    assert v.overall is Overall.INCONCLUSIVE
    assert v.census.inertia_keys() == [(1, 1, 2)]
    assert all(f.conclusion is Conclusion.NO_CONCLUSION for f in v.findings)


def test_precondition_failure_reports_single_finding():
    loops = SignPattern.from_rows([[1, 1], [1, 1]])
    v = analyze(loops, cfg=CFG)
    assert v.overall is Overall.INCONCLUSIVE
    assert [f.rule_id for f in v.findings] == ["R0"]
    assert v.census is None
    assert "preconditions" in explain(v)


def test_explain_p6_names_the_window(pat):
    v = analyze(pat("PAT_P6"), cfg=CFG)
    text = explain(v)
    assert "R4: does_not_require" in text
    assert "'block4': [2]" in text
    assert "R3: no_conclusion" in text


def test_explain_triangle_mentions_determinant(pat):
    text = explain(analyze(pat("PAT_XX2"), cfg=CFG))
    assert "determinant term" in text
    assert "overall: requires_unique" in text


def test_r9_reports_flip_census(pat):
    v = analyze(pat("PAT_P6"), cfg=CFG)
    r9 = rule(v, "R9")
    assert r9.applicable
    assert "flipped_frequencies" in r9.details


def test_strict_distance_flag(pat):
    v = analyze(pat("PAT_TWOCYC82"), cfg=CFG, strict_distance=True)
    assert rule(v, "R7").conclusion is Conclusion.DOES_NOT_REQUIRE


def test_witness_attached_and_confirmed(pat):
    for name in ("PAT_XNFIG2", "PAT_UNI61", "PAT_TWOCYC81"):
        v = analyze(pat(name), cfg=CFG)
        pair = v.witness_pair()
        assert pair is not None, name
        pa = spectral_profile(np.asarray(pair.a))
        pb = spectral_profile(np.asarray(pair.b))
        assert pa.inertia != pb.inertia


def test_r4_sees_through_signature_similarity(pat):
    from signum.patterns import SignatureSimilarity, apply_equivalence

    p6 = pat("PAT_P6")
    twisted = apply_equivalence(p6, SignatureSimilarity((1, -1, 1, 1, -1, 1)))
    v = analyze(twisted, cfg=CFG)
    assert v.overall is Overall.DOES_NOT_REQUIRE
    r4 = rule(v, "R4")
    assert r4.conclusion is Conclusion.DOES_NOT_REQUIRE
    assert r4.details["blocks_found"]["block4"] == [2]


def test_r7_requires_spanning_extension():
    # complete support on four vertices with one negative edge: the cycles
    # share vertices, so no pair is path-adjacent and the distance test is
    # vacuous; a triangle cannot extend to a spanning composite cycle, but
    # the negative-edge 4-cycles can, so the rule may only cite those
    rows = [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [-1, 1, 1, 0]]
    v = analyze(SignPattern.from_rows(rows), cfg=CFG)
    r7 = rule(v, "R7")
    assert r7.applicable
    for hit in r7.details["conditions_fired"]:
        if len(hit["cycle"]) == 3:
            assert not hit["extends_to_cover"]
        else:
            assert hit["extends_to_cover"]


def test_battery_consistency_on_fuzz_corpus():
    rng = np.random.default_rng(77)
    cfg = SampleConfig(trials=120, seed=9)
    checked = 0
    while checked < 20:
        n = int(rng.integers(2, 6))
        grid = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.6:
                    grid[i][j] = int(rng.choice((-1, 1)))
                    grid[j][i] = int(rng.choice((-1, 1)))
        p = SignPattern.from_rows(grid)
        v = analyze(p, cfg=cfg, witness_budget=400)
        conclusions = {f.conclusion for f in v.findings}
        assert not (
            Conclusion.REQUIRES_UNIQUE in conclusions
            and Conclusion.DOES_NOT_REQUIRE in conclusions
        )
        if v.overall is Overall.REQUIRES_UNIQUE and v.census is not None:
            assert len(v.census.solid_keys()) <= 1
        if v.overall is Overall.DOES_NOT_REQUIRE:
            pair = v.witness_pair()
            if pair is not None:
                pa = spectral_profile(np.asarray(pair.a))
                pb = spectral_profile(np.asarray(pair.b))
                assert pa.inertia != pb.inertia
                for mat in (pair.a, pair.b):
                    assert np.array_equal(
                        np.sign(np.asarray(mat)).astype(int), p.to_array()
                    )
        checked += 1


def test_requires_unique_samples_have_no_zero_real_part(pat):
    cfg = SampleConfig(trials=1, seed=15)
    for name in ("PAT_XX2", "PAT_XEG1"):
        p = pat(name)
        for t in range(200):
            prof = spectral_profile(sample(p, cfg, index=t))
            assert prof.inertia[2] == 0


def test_json_schema_and_round_trip(pat):
    v = analyze(pat("PAT_P4"), cfg=CFG)
    text = verdict_to_json(v)
    doc = json.loads(text)
    assert list(doc) == ["pattern", "flags", "shape", "findings", "overall", "census"]
    assert doc["overall"] == "does_not_require"
    assert json.dumps(doc, indent=2) == text
    rules = [f["rule"] for f in doc["findings"]]
    assert rules == [f"R{k}" for k in range(1, 10)]
    witnesses = [f["witness"] for f in doc["findings"] if "witness" in f]
    assert witnesses, "expected a witness in the JSON report"
    mat = np.array(witnesses[0]["matrix_a"])
    assert np.array_equal(np.sign(mat).astype(int), pat("PAT_P4").to_array())


def test_order_one_pattern_analyzes():
    v = analyze(SignPattern.from_rows([[0]]), cfg=SampleConfig(trials=30, seed=1))
    assert v.overall is Overall.INCONCLUSIVE
    assert v.census.inertia_keys() == [(0, 0, 1)]


def test_json_deterministic(pat):
    a = verdict_to_json(analyze(pat("PAT_EG06"), cfg=CFG))
    b = verdict_to_json(analyze(pat("PAT_EG06"), cfg=CFG))
    assert a == b
