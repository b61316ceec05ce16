"""
Report Generator Module
=======================
Text diagrams, JSON reports and timestamped file export.
"""

import json
import math
from datetime import datetime
from fractions import Fraction
from typing import Dict, Optional, Sequence
import os
import sys

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
import config

from src.annihilator import AnnihilatorTable
from src.betti import BettiTable
from src.ringcore import PrimeFieldElement, format_monomial


def _canonical(value):
    """Plain JSON types: rationals as 'p/q', -inf as a string, sets sorted."""
    if isinstance(value, dict):
        return {str(k): _canonical(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_canonical(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_canonical(v) for v in value)
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, PrimeFieldElement):
        return value.value
    if isinstance(value, (float, np.floating)):
        if math.isinf(value):
            return '-inf' if value < 0 else 'inf'
        return float(value)
    if hasattr(value, 'to_dict'):
        return _canonical(value.to_dict())
    return value


class ReportGenerator:
    """Rendering and export of ideal invariant reports."""

    def __init__(self, output_dir: str = None):
        self.output_dir = output_dir or config.REPORTS_DIR
        self.width = config.BETTI_COLUMN_WIDTH

    def _ensure_output_dir(self):
        """Create output directory if it doesn't exist."""
        if not os.path.exists(self.output_dir):
            os.makedirs(self.output_dir)

    def _get_timestamp(self) -> str:
        """Get formatted timestamp for filenames."""
        return datetime.now().strftime(config.DATE_FORMAT)

    def _cell(self, value) -> str:
        return f"{value if value else '-':>{self.width}}"

    def _grid(self, columns: Sequence[int], rows: Sequence[int], lookup, totals: Sequence,
              extra: Sequence[str] = ()) -> str:
        rule = '-' * (self.width * (len(columns) + 1))
        lines = [' ' * (self.width - 1) + ''.join(f"{i:>{self.width}}" for i in columns), rule]
        for r in rows:
            lines.append(f"{r:>2}: " + ''.join(self._cell(lookup(i, r)) for i in columns))
        lines.extend(extra)
        lines.append(rule)
        lines.append('Tot:' + ''.join(f"{t:>{self.width}}" for t in totals))
        return '\n'.join(lines)

    # === DIAGRAMS ===
    def render_betti_diagram(self, table: BettiTable) -> str:
        """
        Betti diagram in CoCoA layout: columns i, rows j - i, '-' for zero.

        Example (ideal of the cubic example):

                    0    1    2
            --------------------
             3:     8    9    1
             4:     -    1    2
            --------------------
            Tot:    8   10    3
        """
        columns = table.columns
        totals = table.totals()
        return self._grid(columns, table.rows, table.diagram_get, [totals.get(i, 0) for i in columns])

    def render_annihilator_table(self, table: AnnihilatorTable) -> str:
        """Columns i = 0..n, rows degree j; infinite columns end with a '...' row."""
        columns = list(range(table.n + 1))
        finite = tuple(table.finite_flags) + (True,)
        totals = []
        for i in columns:
            totals.append(sum(table.row(i).values()) if finite[i] else 'inf')
        extra = []
        if not all(finite):
            extra.append('...:' + ''.join(f"{'' if finite[i] else '...':>{self.width}}" for i in columns))
        text = self._grid(columns, table.degrees, lambda i, j: table.get(i, j), totals, extra)
        if not all(finite):
            text += f"\n... : infinite length, shown through degree {table.cutoff}"
        return text

    def render_classification(self, report: Dict, names: Sequence[str] = None) -> str:
        """One line per flag with witnesses, then Ass(R/I) and the dimension."""
        lines = [f"Ideal: {report['ideal']}"]
        for flag, holds in report['flags'].items():
            line = f"  {flag:<16} {'yes' if holds else 'no'}"
            witness = report.get('witnesses', {}).get(flag)
            if witness and witness.get('witness') is not None:
                mu = tuple(witness['witness'])
                labels = names or [f"{config.DEFAULT_VARIABLE_PREFIX}{k + 1}" for k in range(len(mu))]
                line += f"   (index {witness['index']}, witness {format_monomial(mu, labels)})"
            lines.append(line)
        lines.append(f"  Ass(R/I): {', '.join(report['associated_primes'])}")
        lines.append(f"  dim R/I:  {report['dimension']}")
        return '\n'.join(lines)

    # === JSON ===
    def build_report(self, sections: Dict, seed: Optional[int] = None,
                     timing_seconds: Optional[float] = None, source: Optional[str] = None) -> Dict:
        report = {
            'schema_version': config.REPORT_SCHEMA_VERSION,
            'source': source,
            'seed': seed,
            'timing_seconds': round(timing_seconds, 6) if timing_seconds is not None else None,
        }
        report.update(sections)
        return _canonical(report)

    @staticmethod
    def to_json(report: Dict) -> str:
        return json.dumps(_canonical(report), sort_keys=True, indent=2)

    # === EXPORT ===
    def export_betti_csv(self, table: BettiTable, prefix: str = None) -> str:
        """Export the diagram view of a Betti table to CSV with timestamp."""
        self._ensure_output_dir()
        prefix = prefix or config.BETTI_TABLE_PREFIX
        filepath = os.path.join(self.output_dir, f"{prefix}_{self._get_timestamp()}.csv")
        table.to_frame().to_csv(filepath)
        return filepath

    def export_annihilator_csv(self, table: AnnihilatorTable, prefix: str = None) -> str:
        self._ensure_output_dir()
        prefix = prefix or config.ANNIHILATOR_TABLE_PREFIX
        filepath = os.path.join(self.output_dir, f"{prefix}_{self._get_timestamp()}.csv")
        table.to_frame().to_csv(filepath)
        return filepath

    def export_report_json(self, report: Dict, prefix: str = None) -> str:
        self._ensure_output_dir()
        prefix = prefix or config.FULL_REPORT_PREFIX
        filepath = os.path.join(self.output_dir, f"{prefix}_{self._get_timestamp()}.json")
        with open(filepath, 'w', encoding='utf-8') as f:
            f.write(self.to_json(report) + '\n')
        return filepath

    def export_text(self, text: str, prefix: str = None) -> str:
        """Export a rendered console report as a text file."""
        self._ensure_output_dir()
        prefix = prefix or config.FULL_REPORT_PREFIX
        filepath = os.path.join(self.output_dir, f"{prefix}_{self._get_timestamp()}.txt")
        with open(filepath, 'w', encoding='utf-8') as f:
            f.write(text + '\n')
        return filepath


# =============================================================================
# STANDALONE EXECUTION
# =============================================================================
if __name__ == "__main__":
    table = BettiTable({(0, 3): 8, (1, 4): 9, (2, 5): 1, (1, 5): 1, (2, 6): 2}, 3, 'ideal')
    print("=" * 60)
    print("BETTI DIAGRAM")
    print("=" * 60)
    print(ReportGenerator().render_betti_diagram(table))
