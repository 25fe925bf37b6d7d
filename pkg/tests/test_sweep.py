import json
import math

import pytest

from denumerant import (
    Failure,
    SplitMix64,
    SweepConfig,
    run_verify,
    shrink_failure,
)
from denumerant.sweep import _draw_coprime_tuple, _draw_pair, _draw_tuple


def test_splitmix_reference_vector():
    # First outputs for seed 0, as published for the reference stream.
    g = SplitMix64(0)
    assert [g.next_u64() for _ in range(4)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
        0xF88BB8A8724C81EC,
    ]


def test_uniform_draws_in_range():
    g = SplitMix64(42)
    values = [g.uniform(3, 9) for _ in range(200)]
    assert set(values) <= set(range(3, 10))
    assert len(set(values)) > 1


def test_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(suite="nope")
    with pytest.raises(ValueError):
        SweepConfig(suite="oracle-eq", trials=0)
    with pytest.raises(ValueError):
        SweepConfig(suite="oracle-eq", k_range=(3, 2))
    with pytest.raises(ValueError):
        SweepConfig(suite="inequality-a", k_range=(1, 1))
    with pytest.raises(ValueError):
        SweepConfig(suite="oracle-eq", n_max=-1)


def test_draw_protocols():
    cfg = SweepConfig(suite="oracle-eq", k_range=(1, 4), max_coeff=12)
    g = SplitMix64(5)
    for _ in range(50):
        coeffs = _draw_tuple(g, cfg)
        assert 1 <= len(coeffs) <= 4
        assert all(1 <= c <= 12 for c in coeffs)
    cfg = SweepConfig(suite="inequality-a", k_range=(1, 4), max_coeff=12)
    for _ in range(50):
        coeffs = _draw_coprime_tuple(g, cfg)
        assert len(coeffs) >= 2
        assert math.gcd(*coeffs) == 1
    for _ in range(50):
        pair = _draw_pair(g, SweepConfig(suite="popoviciu", max_coeff=9))
        assert len(pair) == 2 and math.gcd(*pair) == 1


def test_reports_are_deterministic():
    cfg = SweepConfig(suite="inequality-a", seed=11, trials=40, k_range=(2, 4))
    first = run_verify(cfg)
    second = run_verify(cfg)
    assert first.to_json(include_wall_time=False) == second.to_json(
        include_wall_time=False
    )
    assert first.instances == 40
    assert first.passed


def test_all_suites_pass_briefly():
    settings = {
        "oracle-eq": dict(trials=30),
        "popoviciu": dict(trials=30),
        "inequality-a": dict(trials=30),
        "inequality-b": dict(trials=30),
        "dhat": dict(trials=20, k_range=(1, 4)),
        "frobenius": dict(trials=12),
        "bf-identities": dict(trials=8, k_range=(2, 8)),
        "asymptotic": dict(trials=4),
    }
    for suite, extra in settings.items():
        report = run_verify(SweepConfig(suite=suite, seed=3, **extra))
        assert report.passed, f"{suite}: {report.failures[:2]}"
        assert report.suite == suite


def test_shrinking_minimizes_n_then_coeffs():
    # A synthetic property that fails whenever n >= 10: the shrinker must
    # push n down to the boundary and every coefficient down to 1.
    def check(instance):
        if instance["n"] >= 10:
            return Failure(instance, "n stays below 10", str(instance["n"]), "10")
        return None

    start = {"coeffs": (9, 7), "n": 97}
    minimal = shrink_failure(start, check, "n stays below 10")
    assert minimal["n"] == 10
    assert minimal["coeffs"] == (1, 1)


def test_shrinking_respects_relation_match():
    # Candidates that fail a different relation must not be accepted.
    def check(instance):
        if instance["n"] >= 50:
            return Failure(instance, "big", str(instance["n"]), "50")
        if instance["n"] >= 10:
            return Failure(instance, "medium", str(instance["n"]), "10")
        return None

    minimal = shrink_failure({"coeffs": (3,), "n": 80}, check, "big")
    assert minimal["n"] == 50


def test_report_json_shape():
    report = run_verify(SweepConfig(suite="popoviciu", seed=2, trials=10))
    data = json.loads(report.to_json())
    assert data["suite"] == "popoviciu"
    assert data["instances"] == 10
    assert data["failures"] == []
    assert "wall_time_s" in data
    assert data["config"]["seed"] == 2
    stripped = json.loads(report.to_json(include_wall_time=False))
    assert "wall_time_s" not in stripped
