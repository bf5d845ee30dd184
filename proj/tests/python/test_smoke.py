import json
import math

import pytest

import twoarm

scipy_stats = pytest.importorskip("scipy.stats")

A = [0.52, 0.47, 0.61, 0.39, 0.44, 0.50, 0.58, 0.41, 0.46, 0.55]
B = [0.36, 0.63, 0.21, 0.70, 0.45, 0.28, 0.66, 0.19, 0.52, 0.60]


def test_describe_matches_stdlib():
    s = twoarm.describe(A)
    assert s.n == len(A)
    assert s.mean == pytest.approx(sum(A) / len(A), abs=1e-15)
    mean = sum(A) / len(A)
    var = sum((x - mean) ** 2 for x in A) / (len(A) - 1)
    assert s.sd == pytest.approx(math.sqrt(var), abs=1e-15)


def test_shapiro_wilk_matches_scipy():
    for sample in (A, B):
        got = twoarm.shapiro_wilk(sample)
        want = scipy_stats.shapiro(sample)
        assert got.statistic == pytest.approx(want.statistic, abs=1e-6)
        assert got.p_value == pytest.approx(want.pvalue, abs=1e-6)


def test_brown_forsythe_matches_scipy():
    got = twoarm.brown_forsythe([A, B])
    want = scipy_stats.levene(A, B, center="median")
    assert got.test_name == "brown_forsythe"
    assert got.statistic == pytest.approx(want.statistic, rel=1e-9)
    assert got.p_value == pytest.approx(want.pvalue, rel=1e-9)

    got_mean = twoarm.brown_forsythe([A, B], center="mean")
    want_mean = scipy_stats.levene(A, B, center="mean")
    assert got_mean.test_name == "levene"
    assert got_mean.statistic == pytest.approx(want_mean.statistic, rel=1e-9)


def test_anova_matches_scipy():
    got = twoarm.one_way_anova([A, B])
    want = scipy_stats.f_oneway(A, B)
    assert got.statistic == pytest.approx(want.statistic, rel=1e-9)
    assert got.p_value == pytest.approx(want.pvalue, rel=1e-9)


def test_t_tests_match_scipy():
    got = twoarm.independent_t_test(A, B)
    want = scipy_stats.ttest_ind(B, A)  # statistic sign is treatment - control
    assert got.statistic == pytest.approx(want.statistic, rel=1e-9)
    assert got.p_value == pytest.approx(want.pvalue, rel=1e-9)
    assert got.estimate == pytest.approx(
        sum(B) / len(B) - sum(A) / len(A), abs=1e-12
    )

    got_dep = twoarm.dependent_t_test(A, B)
    want_dep = scipy_stats.ttest_rel(B, A)
    assert got_dep.statistic == pytest.approx(want_dep.statistic, rel=1e-9)
    assert got_dep.p_value == pytest.approx(want_dep.pvalue, rel=1e-9)


def test_effect_sizes():
    c = twoarm.ArmSummary(n=15, mean=0.413, sd=0.115)
    t = twoarm.ArmSummary(n=15, mean=0.398, sd=0.173)

    g = twoarm.hedges_g(c, t)
    d = twoarm.cohens_d(c, t)
    j = 1.0 - 3.0 / (4.0 * 28 - 1.0)
    assert g.name == "hedges_g"
    assert g.value == pytest.approx(d.value * j, abs=1e-15)

    lncvr = twoarm.ln_cvr(c, t)
    expected = (
        math.log((0.173 / 0.398) / (0.115 / 0.413))
        + 1.0 / (2.0 * 14)
        - 1.0 / (2.0 * 14)
    )
    assert lncvr.name == "lnCVR"
    assert lncvr.value == pytest.approx(expected, abs=1e-12)
    assert lncvr.auxiliary == pytest.approx(math.exp(expected), abs=1e-12)
    assert twoarm.variability_change_percent(lncvr) == pytest.approx(
        100.0 * (math.exp(expected) - 1.0), abs=1e-9
    )


def test_beta_moment_round_trip():
    p = twoarm.beta_from_moments(0.4, 0.2)
    assert p.alpha == pytest.approx(2.0, abs=1e-9)
    assert p.beta == pytest.approx(3.0, abs=1e-9)

    mean, sd = twoarm.beta_mean_sd(twoarm.BetaParams(12.0, 18.0))
    assert mean == pytest.approx(0.4, abs=1e-15)
    assert sd == pytest.approx(math.sqrt(12 * 18 / (30.0**2 * 31.0)), abs=1e-15)


def test_rng_pinned_values():
    rng = twoarm.RngState(42)
    assert rng.next_u64() == 15021278609987233951
    assert twoarm.derive_seed(7, []) == 7191089600892374487
    assert twoarm.derive_seed(7, [0]) == 10639093021788878346
    assert twoarm.derive_seed(0, [200, 9999]) == 12568633511918104021


def test_simulation_is_deterministic():
    pop_a = twoarm.BetaParams(12.0, 18.0)
    pop_b = twoarm.BetaParams(2.0, 3.0)
    first = twoarm.simulate_scores(pop_a, pop_b, 25, 2024)
    second = twoarm.simulate_scores(pop_a, pop_b, 25, 2024)
    assert first == second
    assert all(0.0 < x < 1.0 for arm in first for x in arm)
    other = twoarm.simulate_scores(pop_a, pop_b, 25, 2025)
    assert other != first


def test_power_study_smoke():
    pop_a = twoarm.BetaParams(12.0, 18.0)
    pop_b = twoarm.BetaParams(2.0, 3.0)
    report = twoarm.run_power_study(pop_a, pop_b, [10], 200, 0.05, 99)
    rerun = twoarm.run_power_study(pop_a, pop_b, [10], 200, 0.05, 99, threads=2)
    assert len(report.entries) == 1
    entry = report.entries[0]
    assert entry.n == 10
    assert entry.replications == 200
    assert 0.0 <= entry.rejection_rate_bf <= 1.0
    assert 0.0 <= entry.rejection_rate_t <= 1.0
    assert rerun.entries[0].rejection_rate_bf == entry.rejection_rate_bf
    assert rerun.entries[0].rejection_rate_t == entry.rejection_rate_t


def test_pdf_curve_shape():
    curve = twoarm.pdf_curve(twoarm.BetaParams(2.0, 3.0), 11)
    assert len(curve) == 11
    assert curve[0][0] == 0.0
    assert curve[-1][0] == 1.0
    assert all(curve[i][0] < curve[i + 1][0] for i in range(10))


def test_errors_raise_stat_error():
    with pytest.raises(twoarm.StatError):
        twoarm.shapiro_wilk([1.0, 1.0, 1.0])
    with pytest.raises(twoarm.StatError):
        twoarm.beta_from_moments(0.5, 0.9)
    with pytest.raises(twoarm.StatError):
        twoarm.describe([0.1])


def test_analyze_csv_round_trip(tmp_path):
    rows = ["subject,group,score"]
    for i, x in enumerate(A, start=1):
        rows.append(f"s{i:02d},control,{x}")
    for i, x in enumerate(B, start=1):
        rows.append(f"s{i + 10:02d},newtool,{x}")
    path = tmp_path / "exp.csv"
    path.write_text("\n".join(rows) + "\n")

    out = twoarm.analyze_csv(str(path), "between", 0.05, "control")
    report = json.loads(out)
    assert report["schema_version"] == 1
    assert report["arms"]["control"]["label"] == "control"
    assert report["arms"]["treatment"]["label"] == "newtool"
    want = scipy_stats.levene(A, B, center="median")
    assert report["variance_test"]["p_value"] == pytest.approx(
        want.pvalue, rel=1e-9
    )
