import pytest

from performance_analyzer import SuitePerformanceAnalyzer


def test_measures_and_summarizes():
    analyzer = SuitePerformanceAnalyzer()
    result, record = analyzer.measure_performance(sum, [1, 2, 3], label="sum")
    assert result == 6
    assert record.success and record.function_name == "sum"
    analyzer.measure_performance(lambda: [0] * 10000, label="alloc")
    summary = analyzer.get_performance_summary()
    assert summary["total"] == 2
    assert summary["failed"] == 0
    assert set(summary["per_suite"]) == {"sum", "alloc"}
    assert summary["peak_mb"] >= 0
    assert "sum" in analyzer.generate_performance_report()


def test_errors_are_recorded_and_reraised():
    analyzer = SuitePerformanceAnalyzer(track_memory=False)

    def broken():
        raise ZeroDivisionError("boom")

    with pytest.raises(ZeroDivisionError):
        analyzer.measure_performance(broken)
    summary = analyzer.get_performance_summary()
    assert summary["failed"] == 1
    assert summary["slowest"] == "broken"
    assert "peak_mb" not in summary


def test_empty_summary():
    assert SuitePerformanceAnalyzer().get_performance_summary() == {}
