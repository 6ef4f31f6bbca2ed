#!/usr/bin/env python3
"""
محلل الأداء - Performance Analyzer
أدوات التحقق من نموذج بوتس الشيرالي

⏱️ قياس زمن كل مجموعة تحقق
💾 ذروة استهلاك الذاكرة عبر tracemalloc
📊 ملخص إحصائي لأزمنة المجموعات
"""

import statistics
import time
import tracemalloc
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple


@dataclass
class PerformanceResult:
    """نتيجة قياس الأداء"""
    function_name: str
    execution_time: float
    memory_usage: float
    success: bool
    error_message: str = ""

    def as_dict(self) -> Dict[str, Any]:
        return {"seconds": self.execution_time, "peak_mb": self.memory_usage, "success": self.success}


class SuitePerformanceAnalyzer:
    """
    محلل أداء مجموعات التحقق

    Wraps each suite call, records wall time and peak traced memory and
    re-raises whatever the suite raised so the caller keeps its error path.
    """

    def __init__(self, track_memory: bool = True, verbose: bool = False):
        self.track_memory = track_memory
        self.verbose = verbose
        self.performance_results: List[PerformanceResult] = []

    def measure_performance(self, func: Callable, *args, label: Optional[str] = None,
                            **kwargs) -> Tuple[Any, PerformanceResult]:
        """قياس أداء دالة"""
        function_name = label or getattr(func, "__name__", str(func))
        started_tracing = self.track_memory and not tracemalloc.is_tracing()
        if started_tracing:
            tracemalloc.start()

        start_time = time.perf_counter()
        error: Optional[BaseException] = None
        result = None
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            error = e
        execution_time = time.perf_counter() - start_time

        memory_usage = 0.0
        if self.track_memory and tracemalloc.is_tracing():
            _, peak = tracemalloc.get_traced_memory()
            memory_usage = peak / 1024 / 1024
            if started_tracing:
                tracemalloc.stop()

        performance_result = PerformanceResult(
            function_name=function_name,
            execution_time=execution_time,
            memory_usage=memory_usage,
            success=error is None,
            error_message="" if error is None else str(error),
        )
        self.performance_results.append(performance_result)

        if self.verbose:
            mark = "✅" if error is None else "❌"
            print(f"   ⏱️ {function_name}: {execution_time:.4f}s, 💾 {memory_usage:.2f}MB {mark}")

        if error is not None:
            raise error
        return result, performance_result

    def get_performance_summary(self) -> Dict[str, Any]:
        """ملخص الأداء العام"""
        if not self.performance_results:
            return {}
        times = [r.execution_time for r in self.performance_results]
        summary = {
            "total": len(times),
            "failed": sum(1 for r in self.performance_results if not r.success),
            "total_seconds": sum(times),
            "mean_seconds": statistics.mean(times),
            "slowest": max(self.performance_results, key=lambda r: r.execution_time).function_name,
            "per_suite": {r.function_name: r.as_dict() for r in self.performance_results},
        }
        if self.track_memory:
            summary["peak_mb"] = max(r.memory_usage for r in self.performance_results)
        return summary

    def generate_performance_report(self) -> str:
        """إنشاء تقرير أداء مختصر"""
        summary = self.get_performance_summary()
        if not summary:
            return "📊 لا توجد نتائج أداء"
        lines = [
            "📊 تقرير الأداء",
            "=" * 40,
            f"   📊 المجموعات: {summary['total']} (فشل {summary['failed']})",
            f"   ⏱️ الزمن الكلي: {summary['total_seconds']:.4f}s",
            f"   🐌 الأبطأ: {summary['slowest']}",
        ]
        for name, data in summary["per_suite"].items():
            mark = "✅" if data["success"] else "❌"
            lines.append(f"   {mark} {name}: {data['seconds']:.4f}s, {data['peak_mb']:.2f}MB")
        return "\n".join(lines)


def test_performance_analyzer():
    """اختبار محلل الأداء"""
    from drinfeld_polynomial import build_drinfeld

    analyzer = SuitePerformanceAnalyzer(verbose=True)
    analyzer.measure_performance(build_drinfeld, 3, 3, 0.3, label="drinfeld_3_3")
    analyzer.measure_performance(build_drinfeld, 4, 4, 0.5, label="drinfeld_4_4")
    print(analyzer.generate_performance_report())


def main():
    """الدالة الرئيسية"""
    test_performance_analyzer()


if __name__ == "__main__":
    main()
