#!/usr/bin/env python3
"""
واجهة سطر الأوامر - Command Line Interface
أدوات التحقق من نموذج بوتس الشيرالي

🖥️ الأوامر: drinfeld | spectrum | elements | rotations | verify
📄 تقارير JSON أو CSV، رسم اختياري للطيف، تفريغ المصفوفات
🚦 رموز الخروج: 0 نجاح، 1 فحص فاشل، 2 إعدادات غير صالحة
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from root_of_unity_numerics import CalculationPrecision, ChiralPottsError, ConfigurationError
from chiral_potts_curve import ModelConfig
from comprehensive_verification_system import (
    SUBCOMMAND_SUITES, ChiralPottsVerificationSystem, RunReport,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2


def parse_complex(text: str) -> complex:
    """"re,im" or a plain number."""
    try:
        if "," in text:
            re_part, im_part = text.split(",", 1)
            return complex(float(re_part), float(im_part))
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r} (use \"re,im\")")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chiral-potts-verify",
        description="أدوات التحقق من نموذج بوتس الشيرالي - superintegrable chiral Potts sector checks")
    commands = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--N", type=int, required=True, help="عدد الحالات N")
    common.add_argument("--L", type=int, required=True, help="طول السلسلة L (مضاعف لـ N)")
    common.add_argument("--Q", type=int, default=0, help="قطاع الشحنة")
    common.add_argument("--kprime", type=parse_complex, default=complex(0.3), help="المعامل k′")
    common.add_argument("--lambda-p", type=parse_complex, default=complex(1.0), help="λ_p as re,im")
    common.add_argument("--samples", type=int, default=5, help="عدد عينات q")
    common.add_argument("--seed", type=int, default=0, help="البذرة")
    common.add_argument("--precision", choices=[p.value for p in CalculationPrecision], default="high",
                        help="مجموعة التسامحات")
    common.add_argument("--tol-root", type=float, default=None)
    common.add_argument("--tol-linalg", type=float, default=None)
    common.add_argument("--tol-spec", type=float, default=None)
    common.add_argument("--size-cap", type=int, default=100000)
    common.add_argument("--workers", type=int, default=1, help="عدد خيوط العينات")
    common.add_argument("--out", type=Path, default=None, help="مسار التقرير")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--plot", type=Path, default=None, help="رسم الطيف (PNG)")
    common.add_argument("--dump-dir", type=Path, default=None, help="تفريغ 𝒯 والمتجهات الذاتية")
    common.add_argument("--timing", action="store_true", help="تسجيل الأزمنة في التقرير")
    common.add_argument("--quiet", "-q", action="store_true", help="بدون رسائل حالة")

    helps = {
        "drinfeld": "كثيرة حدود درينفيلد وجذورها والدوال المولدة",
        "spectrum": "مطابقة القيم الذاتية 𝒢² مع طيف 𝒯̂𝒯",
        "elements": "عناصر المصفوفة المغلقة الشكل والنسب",
        "rotations": "هويات مؤثرات الدوران 2×2",
        "verify": "جميع المجموعات",
    }
    for name in SUBCOMMAND_SUITES:
        commands.add_parser(name, parents=[common], help=helps[name])
    return parser


def config_from_args(args: argparse.Namespace) -> ModelConfig:
    return ModelConfig.from_precision(
        args.N, args.L, CalculationPrecision(args.precision),
        Q=args.Q, kprime=args.kprime, lambda_p=args.lambda_p,
        samples=args.samples, seed=args.seed, workers=args.workers, size_cap=args.size_cap,
        tol_root=args.tol_root, tol_linalg=args.tol_linalg, tol_spec=args.tol_spec,
    )


def write_dumps(config: ModelConfig, directory: Path, verbose: bool = True) -> List[Path]:
    """𝒯_Q of the first q sample and, for Q = 0 and r ≤ 3, its X eigenvectors."""
    from drinfeld_polynomial import build_drinfeld
    from chiral_potts_curve import sample_q_points
    from transfer_matrices import build_T, dump_matrix_csv, enumerate_basis
    from ground_state_sector import (
        dump_eigenvectors_csv, frame_with_vectors, intertwine_full_check, spectrum_match,
    )

    directory.mkdir(parents=True, exist_ok=True)
    dd = build_drinfeld(config.N, config.L, config.kprime, config.lambda_p, tol_root=config.tol_root)
    q = sample_q_points(config, dd.p, count=1)[0]
    basis = enumerate_basis(config.N, config.L, config.size_cap)
    T = build_T(config.Q, dd.p, q, basis)
    stem = f"T_N{config.N}_L{config.L}_Q{config.Q}"
    written = [directory / f"{stem}.csv"]
    written.append(dump_matrix_csv(T, written[0], config.kprime))
    if config.Q == 0 and dd.r <= 3:
        frame = spectrum_match(q, dd, basis, dd.p, config.tol_spec, T=T)
        frame = frame_with_vectors(frame, intertwine_full_check(q, dd, basis, dd.p, T=T), basis)
        written.append(dump_eigenvectors_csv(frame, basis, directory / f"eigenvectors_N{config.N}_L{config.L}.csv"))
    if verbose:
        for path in written:
            print(f"   💾 {path}")
    return written


def emit_report(report: RunReport, args: argparse.Namespace) -> List[Path]:
    if args.out is None:
        if args.format == "json":
            print(report.to_json())
        return []
    args.out.parent.mkdir(parents=True, exist_ok=True)
    if args.format == "csv":
        return report.write_csv(args.out)
    return [report.write_json(args.out)]


def main(argv: Optional[List[str]] = None) -> int:
    """الدالة الرئيسية"""
    parser = build_parser()
    args = parser.parse_args(argv)
    verbose = not args.quiet

    try:
        config = config_from_args(args)
    except ConfigurationError as e:
        print(f"❌ إعدادات غير صالحة: {e}", file=sys.stderr)
        return EXIT_CONFIG

    system = ChiralPottsVerificationSystem(config, verbose=verbose, timing=args.timing)
    report = system.run(SUBCOMMAND_SUITES[args.command])

    if args.command == "drinfeld" and report.drinfeld and verbose:
        print(f"🌟 Λ = {list(report.drinfeld['lambdas'])}")
        for m, z in enumerate(report.drinfeld["roots"]):
            print(f"   z_{m + 1} = {complex(z):.12g}")

    for path in emit_report(report, args):
        if verbose:
            print(f"📄 {path}")
    if args.plot is not None:
        if system.plot_spectrum(args.plot) is not None and verbose:
            print(f"📈 {args.plot}")
    if args.dump_dir is not None:
        try:
            write_dumps(config, args.dump_dir, verbose)
        except ChiralPottsError as e:
            print(f"⚠️ تعذر التفريغ: {e}", file=sys.stderr)

    if verbose:
        mark = "✅" if report.exit_code == EXIT_OK else "❌"
        print(f"{mark} exit code {report.exit_code}")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
