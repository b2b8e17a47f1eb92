import json
from fractions import Fraction

import pytest

from isolev.constructs import catalog_graph
from isolev.langlib import HypothesisViolated, Language
from isolev.verify import (
    check_bounds,
    check_homothety,
    check_lemma3,
    check_lemma4,
    check_lemma5,
    check_metric,
    check_prop3,
    check_prop4,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    check_theorem4,
    check_theorem5,
    check_theorem6,
)


def test_metric_and_bounds_pass():
    assert check_metric(samples=200).passed
    assert check_metric(theta=Fraction(3, 2), samples=150).passed
    assert check_bounds(samples=200).passed
    assert check_bounds(gamma=2, theta=1, samples=150).passed


def test_homothety_passes_and_covers_large_ratios():
    report = check_homothety(samples=200)
    assert report.passed
    assert report.details["cases_with_ratio_above_two"] > 0


def test_prop3_passes():
    report = check_prop3(count=10, max_size=8)
    assert report.passed
    assert set(report.details["random_orders"]) <= {1, 2}


def test_prop4_passes():
    report = check_prop4(n_max=4)
    assert report.passed
    assert report.details["group_order"] == "2"


def test_theorem1_checker():
    report = check_theorem1(Language(["0", "00", "000"]))
    assert report.passed
    with pytest.raises(HypothesisViolated):
        check_theorem1(Language(["0", "1"]), theta=2)


def test_lemma3_checker_is_weight_sensitive():
    assert check_lemma3(samples=60, theta=1).passed
    off = check_lemma3(samples=60, theta=Fraction(1, 2))
    assert not off.passed
    assert off.witnesses


def test_lemma4_checker_all_catalog():
    report = check_lemma4()
    assert report.passed
    assert set(report.params["graphs"]) == {"k4", "k33", "petersen", "frucht"}


def test_theorem2_checker():
    report = check_theorem2("k33")
    assert report.passed
    assert report.details["group_order"] == "72"


def test_theorem3_checker():
    report = check_theorem3([catalog_graph("k4")], 1)
    assert report.passed
    assert report.details["group_order"] == "24"
    assert report.details["orbit_sizes"] == [1, 4]


def test_theorem4_checker_records_reading():
    report = check_theorem4(k=2, depth=1)
    assert report.passed
    assert report.details["layer1_group_order"] == "8"
    assert not report.details["closed_form_matches"]
    assert report.details["measured_layer_lengths"] == [20]
    assert report.details["closed_form_layer_lengths"] == [24]


def test_theorem5_checker():
    report = check_theorem5(catalog_graph("k4"), catalog_graph("k33"), depth=1)
    assert report.passed
    assert report.details["group_order"] == str(24 * 72 * 72)


def test_lemma5_checker_reports_truncation_reflection():
    report = check_lemma5(depth=2)
    assert not report.passed
    assert any("ratio 2" in w for w in report.witnesses)
    assert report.details["base_group_order"] == "2"


def test_theorem6_checker_by_weight():
    good = check_theorem6(layers=2, theta=1)
    assert good.passed
    assert good.details["group_order"] == "48"
    bad = check_theorem6(layers=1, theta=2)
    assert not bad.passed
    assert bad.details["group_order"] == "2"  # group is still the full layer swap


def test_report_json_shape():
    report = check_metric(samples=20)
    payload = report.to_json_dict()
    text = json.dumps(payload)
    parsed = json.loads(text)
    assert parsed["claim"] == "metric"
    assert parsed["passed"] is True
    assert "elapsed_seconds" in parsed
    assert parsed["params"]["samples"] == 20
    # rationals in reports are strings or ints, never floats
    def no_floats(obj):
        if isinstance(obj, float):
            return False
        if isinstance(obj, dict):
            return all(no_floats(v) for v in obj.values())
        if isinstance(obj, list):
            return all(no_floats(v) for v in obj)
        return True

    assert no_floats(parsed["params"]) and no_floats(parsed["details"])


def test_report_render_mentions_parameters():
    report = check_theorem6(layers=2, theta=1)
    text = report.render()
    assert "layers=2" in text and "theta=1" in text
    assert "PASS" in text
