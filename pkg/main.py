"""
Ideal Invariants Toolkit
========================
Exact computations on homogeneous polynomial ideals: initial and generic
initial ideals, stability classes of monomial ideals, graded Betti numbers,
annihilator numbers, reduction numbers and Pommaret bases.

Usage:
    python main.py classify  data/cubic.ideal
    python main.py betti     data/cubic.ideal --subject ideal
    python main.py reduction data/reduction.ideal --forms "x2, x3-x1"
    python main.py report    data/cubic.ideal --json
"""

import argparse
import logging
import os
import sys
import time
from datetime import datetime
from typing import Dict, List, Optional

# Add project root to path
PROJECT_ROOT = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, PROJECT_ROOT)

import config

from src.annihilator import (
    AnnihilatorAnalyzer,
    annihilator_numbers,
    correspondence_check,
    corollary4_check,
)
from src.betti import (
    IDEAL,
    QUOTIENT,
    BettiAnalyzer,
    betti_koszul,
    betti_of_graded,
    betti_oracle,
    compare_tables,
    derived_invariants,
    extremal_betti,
)
from src.exceptions import DomainError, HypothesisViolation, IdealToolkitError
from src.groebner import buchberger, gin_sample
from src.ideal_parser import IdealFile, IdealFileReader
from src.monideal import IdealClassifier, MonomialIdeal, hilbert_series, is_borel_type
from src.pommaret import PommaretAnalyzer, diverged, pommaret_basis_of_groebner
from src.reduction import ReductionAnalyzer
from src.report_generator import ReportGenerator
from src.ringcore import TermOrder, format_monomial
from src.visualizations import AlgebraVisualizer

logger = logging.getLogger(__name__)


class Console:
    """Text-mode progress output; silent when the run emits JSON."""

    def __init__(self, quiet: bool):
        self.quiet = quiet
        self.transcript: List[str] = []

    def line(self, text: str = "") -> None:
        if not self.quiet:
            print(text)
            self.transcript.append(text)

    def step(self, k: int, total: int, text: str) -> None:
        self.line(f"[{k}/{total}] {text}...")

    def ok(self, text: str) -> None:
        self.line(f"✅ {text}\n")

    def fail(self, text: str) -> None:
        self.line(f"❌ {text}\n")


class Run:
    """State shared by one command invocation."""

    def __init__(self, args: argparse.Namespace, ideal_file: IdealFile):
        self.args = args
        self.ideal_file = ideal_file
        self.ring = ideal_file.ring
        self.gens = list(ideal_file.gens)
        self.names = list(self.ring.variables)
        self.console = Console(args.json)
        self.reporter = ReportGenerator(args.output_dir)
        self.seed: Optional[int] = None
        self.skipped: List[str] = []
        self.tables: Dict[str, object] = {}

    @property
    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.gens)

    def monomial_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ring.nvars, [g.support[0] for g in self.gens])

    def initial(self) -> MonomialIdeal:
        if self.is_monomial:
            return self.monomial_ideal()
        return buchberger(self.gens, TermOrder.REVLEX).initial_ideal()


def print_header(args: argparse.Namespace):
    """Print application header."""
    print("\n" + "=" * 70)
    print("📐 IDEAL INVARIANTS TOOLKIT")
    print(f"   Command: {args.command}")
    print("=" * 70)
    print(f"   Started: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
    print(f"   Input: {args.file}")
    print("=" * 70 + "\n")


# =============================================================================
# COMMANDS
# =============================================================================
def run_classify(run: Run) -> Dict:
    """Classification of the ideal itself when monomial, else of its revlex initial ideal."""
    subject = 'ideal' if run.is_monomial else 'initial_ideal'
    report = IdealClassifier(run.initial(), run.names).get_classification_report()
    report['subject'] = subject
    if run.ring.field.characteristic:
        report['note'] = 'stability results assume an infinite field; computed over GF(p) as given'
    run.console.line(f"Classification of the {subject.replace('_', ' ')}:")
    run.console.line(run.reporter.render_classification(report, run.names))
    return {'classification': report}


def run_initial(run: Run) -> Dict:
    order = run.ring.order
    basis = buchberger(run.gens, order)
    initial = basis.initial_ideal()
    run.console.line(f"in_{order.value}(I) = {initial.format(run.names)}")
    run.console.line(f"Groebner basis: {len(basis)} elements")
    for g in basis.generators:
        run.console.line(f"  {g.to_string(order)}")
    return {'initial_ideal': {
        'order': order.value,
        'generators': [format_monomial(mu, run.names) for mu in initial.gens],
        'groebner_basis': [g.to_string(order) for g in basis.generators],
    }}


def run_gin(run: Run) -> Dict:
    args = run.args
    sample = gin_sample(run.gens, run.ring.order, args.trials, args.seed)
    run.seed = sample.seed
    table = betti_koszul(sample.ideal, subject=IDEAL, coefficient_field=run.ring.field)
    run.tables['gin_betti'] = table
    run.console.line(f"gin(I) = {sample.ideal.format(run.names)}")
    run.console.line(f"agreement: {sample.agreement}/{sample.trials} trials (seed {sample.seed}); probabilistic")
    run.console.line(run.reporter.render_betti_diagram(table))
    return {'gin': {
        'generators': [format_monomial(mu, run.names) for mu in sample.ideal.gens],
        'agreement': sample.agreement,
        'trials': sample.trials,
        'frequency': sample.frequency,
        'probabilistic': True,
        'candidates': [{'ideal': ideal.format(run.names), 'count': count} for ideal, count in sample.candidates],
        'betti': table.to_dict(),
    }}


def run_betti(run: Run) -> Dict:
    args = run.args
    if args.method == 'oracle':
        if not run.is_monomial:
            raise DomainError("the oracle method needs a monomial ideal")
        table = betti_oracle(run.monomial_ideal(), args.subject, run.ring.field)
    else:
        table = betti_of_graded(run.gens, args.jmax, args.subject)
    run.tables['betti'] = table
    run.console.line(run.reporter.render_betti_diagram(table))
    section = {'table': table.to_dict(), 'method': args.method}
    if table.truncated:
        run.console.line(f"(truncated at internal degree {table.j_max})")
        return {'betti': section}
    invariants = derived_invariants(table)
    extremal = extremal_betti(table)
    section['invariants'] = invariants.to_dict()
    section['extremal'] = extremal.to_dict()
    section['euler_identity'] = table.euler_numerator() == hilbert_series(run.initial()).numerator
    run.console.line(f"\npd = {invariants.pd}, depth = {invariants.depth}, reg(I) = {invariants.reg_ideal}, "
                     f"dim = {invariants.dim}, Cohen-Macaulay = {invariants.is_cohen_macaulay}")
    run.console.line("extremal: " + _format_extremal(extremal.to_dict()['entries'], 'beta'))
    return {'betti': section}


def run_ann(run: Run) -> Dict:
    analyzer = AnnihilatorAnalyzer(run.gens)
    run.tables['annihilators'] = analyzer.table
    report = analyzer.get_annihilator_report()
    run.console.line(run.reporter.render_annihilator_table(analyzer.table))
    if report['filter_regular']:
        run.console.line("\nx_n, ..., x_1 is filter regular")
        run.console.line("extremal: " + _format_extremal(report['extremal']['entries'], 'alpha'))
    else:
        run.console.line(f"\nA_{report['first_infinite_row']} has infinite length")
    return {'annihilators': report}


def _require_borel_initial(run: Run) -> MonomialIdeal:
    initial = run.initial()
    verdict = is_borel_type(initial)
    if not verdict:
        raise HypothesisViolation(
            f"in(I) = {initial.format(run.names)} is not of Borel type", witness=verdict.to_dict()
        )
    return initial


def run_extremal(run: Run) -> Dict:
    """Extremal Betti numbers of I and in(I) and their annihilator counterparts."""
    initial = _require_borel_initial(run)
    annihilators = annihilator_numbers(run.gens)
    of_ideal = betti_of_graded(run.gens, subject=QUOTIENT)
    of_initial = betti_koszul(initial, subject=QUOTIENT, coefficient_field=run.ring.field)
    correspondence = correspondence_check(run.gens, of_ideal, annihilators)
    run.tables.update(betti=of_ideal, annihilators=annihilators)
    extremal_ideal = extremal_betti(of_ideal.as_ideal())
    extremal_initial = extremal_betti(of_initial.as_ideal())
    preserved = extremal_ideal.entries == extremal_initial.entries
    if not preserved:
        logger.error("extremal Betti numbers of I and in(I) differ: %s vs %s",
                     extremal_ideal.entries, extremal_initial.entries)
    run.console.line("Extremal Betti numbers of I:     "
                     + _format_extremal(extremal_ideal.to_dict()['entries'], 'beta'))
    run.console.line("Extremal Betti numbers of in(I): "
                     + _format_extremal(extremal_initial.to_dict()['entries'], 'beta'))
    alpha = correspondence['extremal_annihilator']['entries']
    run.console.line("Extremal annihilator numbers:    " + _format_extremal(alpha, 'alpha'))
    run.console.line(f"positions match: {correspondence['positions_match']}, "
                     f"values match: {correspondence['values_match']}, "
                     f"Betti bound holds: {correspondence['bound_holds']}")
    return {'extremal': {
        'ideal': extremal_ideal.to_dict(),
        'initial_ideal': extremal_initial.to_dict(),
        'preserved': preserved,
        'correspondence': correspondence,
    }}


def _format_extremal(entries: List[Dict], symbol: str) -> str:
    return ', '.join(f"{symbol}_{{{e['i']},{e['j']}}} = {e['value']}" for e in entries) or 'none'


def run_reduction(run: Run) -> Dict:
    args = run.args
    analyzer = ReductionAnalyzer(run.gens)
    forms = None
    if args.forms is not None:
        forms = IdealFileReader().parse_forms(args.forms, run.ring)
    budget = args.search
    if budget is not None:
        run.seed = args.seed if args.seed is not None else config.REDUCTION_SEARCH_SEED
    report = analyzer.get_reduction_report(forms, budget, run.seed)
    run.console.line(f"dim R/I = {report['dimension']}")
    if 'given' in report:
        given = report['given']
        run.console.line(f"r_J for J = ({', '.join(given['forms'])}): {given['r']}")
    canonical = report['canonical']
    if 'error' in canonical:
        run.skipped.append('canonical reduction')
        run.console.line(f"canonical reduction skipped: {canonical['error']}")
    else:
        run.console.line(f"r_J for J = ({', '.join(canonical['forms'])}): {canonical['r']}")
    run.console.line(f"lower bound: {report['lower_bound']}")
    if 'search' in report:
        search = report['search']
        run.console.line(f"search: best r = {search['best_r']} with ({', '.join(search['best_forms'])}), "
                         f"interval {search['interval']}, {search['candidates_tried']} candidates")
    return {'reduction': report}


def run_pommaret(run: Run) -> Dict:
    cap = run.args.cap
    if run.is_monomial:
        report = PommaretAnalyzer(run.monomial_ideal(), cap, run.names).get_pommaret_report()
    else:
        result = pommaret_basis_of_groebner(buchberger(run.gens, TermOrder.REVLEX), cap)
        report = result.to_dict(run.names) if diverged(result) else result.to_dict()
    if report['terminated']:
        elements = report.get('elements') or report['leading']['elements']
        multiplicative = report.get('multiplicative') or report['leading']['multiplicative']
        run.console.line(f"Pommaret basis ({len(elements)} elements):")
        for element in elements:
            run.console.line(f"  {element:<20} multiplicative: {', '.join(multiplicative[element])}")
    else:
        run.console.line(f"completion diverged: next candidate {report['next_candidate']} "
                         f"exceeds degree cap {report['cap']}")
    return {'pommaret': report}


def run_report(run: Run) -> Dict:
    """Everything: classification, tables, theorem checks, reductions, Pommaret basis."""
    console = run.console
    total = 7
    sections: Dict = {}

    console.step(1, total, "Computing the revlex initial ideal")
    sections.update(run_initial(run))
    initial = run.initial()
    sections['classification'] = IdealClassifier(initial, run.names).get_classification_report()
    console.line(run.reporter.render_classification(sections['classification'], run.names))
    console.ok("Initial ideal classified")

    console.step(2, total, "Computing graded Betti numbers")
    analyzer = BettiAnalyzer(run.gens)
    of_ideal = analyzer.ideal_table(IDEAL)
    of_initial = analyzer.initial_table(IDEAL)
    run.tables.update(betti=of_ideal, initial_betti=of_initial)
    console.line("I:")
    console.line(run.reporter.render_betti_diagram(of_ideal))
    console.line("in(I):")
    console.line(run.reporter.render_betti_diagram(of_initial))
    sections['betti'] = analyzer.get_betti_report()
    console.ok("Betti diagrams complete")

    console.step(3, total, "Computing annihilator numbers")
    annihilators = annihilator_numbers(run.gens)
    run.tables['annihilators'] = annihilators
    console.line(run.reporter.render_annihilator_table(annihilators))
    sections['annihilators'] = corollary4_check(run.gens)
    if sections['annihilators']['status'] == 'hypothesis_violation':
        run.skipped.append('annihilator comparison')
        console.fail(f"not filter regular: {sections['annihilators']['witness']}")
    else:
        console.ok(f"Tables of I and in(I): {sections['annihilators']['status']}")

    console.step(4, total, "Checking extremal Betti numbers")
    try:
        sections.update(run_extremal(run))
        console.ok("Extremal Betti numbers checked")
    except HypothesisViolation as exc:
        run.skipped.append('extremal')
        sections['extremal'] = {'skipped': str(exc), 'witness': exc.witness}
        console.fail(f"Skipped: {exc}")

    console.step(5, total, "Computing reduction numbers")
    run.args.forms = None
    if run.args.search is None:
        run.args.search = config.REDUCTION_SEARCH_BUDGET
    sections.update(run_reduction(run))
    console.ok("Reduction numbers complete")

    console.step(6, total, "Completing the Pommaret basis of in(I)")
    sections['pommaret'] = PommaretAnalyzer(initial, run.args.cap, run.names).get_pommaret_report()
    console.ok("Terminated" if sections['pommaret']['terminated'] else "Completion diverged (in(I) not quasi-stable)")

    console.step(7, total, "Sampling the generic initial ideal")
    if run.args.with_gin and run.ring.field.is_rational:
        sections.update(run_gin(run))
        sections['comparison'] = {'ideal_vs_gin': compare_tables(of_ideal, run.tables['gin_betti'])}
        console.ok("Gin sampled")
    else:
        console.ok("Skipped (pass --with-gin in characteristic 0)")
    return sections


COMMANDS = {
    'classify': run_classify,
    'initial': run_initial,
    'gin': run_gin,
    'betti': run_betti,
    'ann': run_ann,
    'extremal': run_extremal,
    'reduction': run_reduction,
    'pommaret': run_pommaret,
    'report': run_report,
}


# =============================================================================
# OUTPUT
# =============================================================================
def export_outputs(run: Run, report: Dict) -> List[str]:
    paths = [run.reporter.export_report_json(report)]
    if run.console.transcript:
        paths.append(run.reporter.export_text('\n'.join(run.console.transcript)))
    for name, table in run.tables.items():
        if name == 'annihilators':
            paths.append(run.reporter.export_annihilator_csv(table))
        else:
            paths.append(run.reporter.export_betti_csv(table, f"{config.BETTI_TABLE_PREFIX}_{name}"))
    return paths


def save_plots(run: Run, directory: str) -> List[str]:
    os.makedirs(directory, exist_ok=True)
    visualizer = AlgebraVisualizer()
    timestamp = datetime.now().strftime(config.DATE_FORMAT)
    saved = []
    for name, table in run.tables.items():
        path = os.path.join(directory, f"{name}_{timestamp}.png")
        if name == 'annihilators':
            figure = visualizer.plot_annihilator_table(table, save_path=path)
        else:
            figure = visualizer.plot_betti_diagram(table, save_path=path)
        saved.append(path)
        visualizer.close(figure)
    if 'betti' in run.tables and 'annihilators' in run.tables and run.tables['annihilators'].all_finite():
        path = os.path.join(directory, f"specular_{timestamp}.png")
        visualizer.close(visualizer.plot_specular_diagrams(run.tables['betti'], run.tables['annihilators'],
                                                           save_path=path))
        saved.append(path)
    if run.args.command == 'report':
        curves, up_to = _hilbert_curves(run)
        path = os.path.join(directory, f"hilbert_{timestamp}.png")
        visualizer.close(visualizer.plot_hilbert_function(curves, up_to, save_path=path))
        saved.append(path)
    return saved


def _hilbert_curves(run: Run):
    """
    Hilbert functions of R/I and R/(I, x_{n-d+1}, ..., x_n).

    Under revlex in(I, x_{n-d+1}, ..., x_n) = (in(I), x_{n-d+1}, ..., x_n).
    """
    initial = run.initial()
    n = initial.n
    series = hilbert_series(initial)
    d = series.dimension()
    curves = {'R/I': series}
    if d:
        tail = MonomialIdeal.from_variables(n, range(n - d, n))
        curves[f"R/(I, {', '.join(run.names[n - d:])})"] = hilbert_series(initial + tail)
    up_to = max(series.hilbert_polynomial_cutoff(), initial.max_degree()) + config.ANNIHILATOR_EXTRA_DEGREES
    return curves, up_to


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('file', help='ideal file (ring:, char:, I: lines)')
    common.add_argument('--json', action='store_true', help='print a JSON report instead of text')
    common.add_argument('--char', type=int, default=None, help='override the characteristic of the file')
    common.add_argument('--order', default=config.DEFAULT_TERM_ORDER, help='term order: revlex, lex or deglex')
    common.add_argument('--verbose', '-v', action='store_true', help='debug logging')
    common.add_argument('--export', action='store_true', help=f'write JSON/CSV files to {config.REPORTS_DIR}/')
    common.add_argument('--output-dir', default=None, help='directory for --export files')
    common.add_argument('--plots', metavar='DIR', default=None, help='save heatmaps of computed tables')

    parser = argparse.ArgumentParser(description='Invariants of homogeneous polynomial ideals.')
    sub = parser.add_subparsers(dest='command', required=True)
    sub.add_parser('classify', parents=[common], help='stability classes and associated primes')
    sub.add_parser('initial', parents=[common], help='initial ideal and Groebner basis')

    gin = sub.add_parser('gin', parents=[common], help='sampled generic initial ideal')
    gin.add_argument('--trials', type=int, default=config.GIN_DEFAULT_TRIALS)
    gin.add_argument('--seed', type=int, default=config.GIN_DEFAULT_SEED)

    betti = sub.add_parser('betti', parents=[common], help='graded Betti numbers')
    betti.add_argument('--subject', choices=[IDEAL, QUOTIENT], default=IDEAL)
    betti.add_argument('--method', choices=['koszul', 'oracle'], default='koszul')
    betti.add_argument('--jmax', type=int, default=None, help='highest internal degree computed')

    sub.add_parser('ann', parents=[common], help='annihilator numbers along x_n, ..., x_1')
    sub.add_parser('extremal', parents=[common], help='extremal Betti and annihilator numbers')

    reduction = sub.add_parser('reduction', parents=[common], help='reduction numbers')
    reduction.add_argument('--forms', default=None, help='comma-separated linear forms')
    reduction.add_argument('--search', type=int, default=None, metavar='N', help='search budget')
    reduction.add_argument('--seed', type=int, default=None)

    pommaret = sub.add_parser('pommaret', parents=[common], help='Pommaret completion')
    pommaret.add_argument('--cap', type=int, default=None, help='degree cap for completion')

    report = sub.add_parser('report', parents=[common], help='run every analysis')
    report.add_argument('--with-gin', action='store_true', help='include a sampled gin')
    report.add_argument('--trials', type=int, default=config.GIN_DEFAULT_TRIALS)
    report.add_argument('--seed', type=int, default=config.GIN_DEFAULT_SEED)
    report.add_argument('--search', type=int, default=None, metavar='N')
    report.add_argument('--cap', type=int, default=None)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else config.LOG_LEVEL,
                        format=config.LOG_FORMAT, datefmt=config.LOG_DATE_FORMAT)
    reporter = ReportGenerator(args.output_dir)
    if not args.json:
        print_header(args)

    started = time.perf_counter()
    try:
        order = TermOrder.parse(args.order)
        ideal_file = IdealFileReader(args.char, order).read(args.file)
        run = Run(args, ideal_file)
        sections = COMMANDS[args.command](run)
    except HypothesisViolation as exc:
        _report_error(args, reporter, exc, getattr(exc, 'witness', None))
        return config.EXIT_HYPOTHESIS
    except (IdealToolkitError, OSError) as exc:
        _report_error(args, reporter, exc)
        return config.EXIT_ERROR

    elapsed = time.perf_counter() - started
    if run.skipped:
        sections['skipped'] = run.skipped
    report = reporter.build_report(sections, seed=run.seed, timing_seconds=elapsed, source=args.file)
    if args.json:
        print(reporter.to_json(report))
    try:
        if args.export:
            for path in export_outputs(run, report):
                run.console.line(f"   📄 {path}")
        if args.plots:
            for path in save_plots(run, args.plots):
                run.console.line(f"   📊 {path}")
    except OSError as exc:
        _report_error(args, reporter, exc)
        return config.EXIT_ERROR

    if run.skipped:
        run.console.line(f"\n❌ Hypotheses failed, sections skipped: {', '.join(run.skipped)}")
        return config.EXIT_HYPOTHESIS
    run.console.line("\n" + "=" * 70)
    run.console.line(f"✅ DONE in {elapsed:.2f}s")
    run.console.line("=" * 70)
    return config.EXIT_OK


def _report_error(args, reporter: ReportGenerator, exc: Exception, witness=None) -> None:
    if args.json:
        print(reporter.to_json({
            'schema_version': config.REPORT_SCHEMA_VERSION,
            'error': {'type': type(exc).__name__, 'message': str(exc), 'witness': witness},
        }))
    else:
        print(f"❌ {type(exc).__name__}: {exc}")
        if witness is not None:
            print(f"   witness: {witness}")


if __name__ == "__main__":
    sys.exit(main())
