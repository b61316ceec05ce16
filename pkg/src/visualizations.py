"""
Visualizations Module
=====================
Heatmaps of Betti diagrams and annihilator tables, and Hilbert function plots,
using matplotlib and seaborn.
"""

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
from matplotlib.patches import Rectangle
import pandas as pd
import seaborn as sns
from typing import Dict, Optional, Sequence, Tuple
import sys
import os

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
import config

from src.annihilator import AnnihilatorTable, extremal_annihilators
from src.betti import BettiTable, extremal_betti
from src.monideal import HilbertSeries


class AlgebraVisualizer:
    """Heatmap views of graded invariants."""

    def __init__(self, figsize: Tuple[int, int] = (10, 6)):
        self.figsize = figsize
        self.dpi = config.FIGURE_DPI
        try:
            plt.style.use(config.CHART_STYLE)
        except OSError:
            plt.style.use('default')

    def _save(self, fig: plt.Figure, save_path: Optional[str]) -> None:
        plt.tight_layout()
        if save_path:
            fig.savefig(save_path, dpi=self.dpi, bbox_inches='tight')

    @staticmethod
    def close(fig: plt.Figure) -> None:
        plt.close(fig)

    def _heatmap(self, ax, frame: pd.DataFrame, marked: Sequence[Tuple[int, int]], title: str):
        annotations = frame.astype(object).where(frame != 0, '-')
        sns.heatmap(frame, annot=annotations, fmt='', cmap=config.HEATMAP_CMAP, cbar=False,
                    linewidths=0.5, linecolor='white', ax=ax)
        rows, columns = list(frame.index), list(frame.columns)
        for column, row in marked:
            if row in rows and column in columns:
                ax.add_patch(Rectangle((columns.index(column), rows.index(row)), 1, 1, fill=False,
                                       edgecolor=config.COLOR_PALETTE['extremal'], linewidth=2.5))
        ax.set_title(title, fontsize=12, fontweight='bold')

    def plot_betti_diagram(self, table: BettiTable, title: str = None,
                           save_path: Optional[str] = None) -> plt.Figure:
        """Betti diagram heatmap (rows j - i, columns i) with extremal entries outlined."""
        fig, ax = plt.subplots(figsize=self.figsize)
        marked = []
        if not table.truncated:
            marked = [(i, j - i) for i, j, _ in extremal_betti(table).entries]
        self._heatmap(ax, table.to_frame(), marked, title or f'Betti diagram ({table.subject})')
        self._save(fig, save_path)
        return fig

    def plot_annihilator_table(self, table: AnnihilatorTable, title: str = None,
                               save_path: Optional[str] = None) -> plt.Figure:
        """Annihilator numbers heatmap (rows degree j, columns i)."""
        fig, ax = plt.subplots(figsize=self.figsize)
        marked = []
        if table.all_finite():
            marked = [(i, j) for i, j, _ in extremal_annihilators(table).entries]
        self._heatmap(ax, table.to_frame(), marked, title or 'Annihilator numbers')
        if not table.all_finite():
            ax.set_xlabel(f"i (row {table.first_infinite_row()} infinite, cut at degree {table.cutoff})")
        self._save(fig, save_path)
        return fig

    def plot_specular_diagrams(self, betti: BettiTable, annihilators: AnnihilatorTable,
                               save_path: Optional[str] = None) -> plt.Figure:
        """
        Betti diagram of R/I beside its annihilator table.

        Extremal beta_{i,i+j}(R/I) sits at column i, row j; its partner
        alpha_{n-i,j} at column n - i, row j. Both are outlined.
        """
        fig, axes = plt.subplots(1, 2, figsize=(self.figsize[0] * 1.4, self.figsize[1]))
        quotient = betti.as_quotient()
        corners = [(i, j - i) for i, j, _ in extremal_betti(quotient).entries] if not quotient.truncated else []
        self._heatmap(axes[0], quotient.to_frame(), corners, 'Betti diagram of R/I')
        mirrored = [(annihilators.n - i, r) for i, r in corners]
        self._heatmap(axes[1], annihilators.to_frame(), mirrored, 'Annihilator numbers')
        self._save(fig, save_path)
        return fig

    def plot_hilbert_function(self, series: Dict[str, HilbertSeries], up_to: int = 10,
                              save_path: Optional[str] = None) -> plt.Figure:
        """Hilbert functions of several quotients on one chart."""
        fig, ax = plt.subplots(figsize=self.figsize)
        degrees = list(range(up_to + 1))
        palette = [config.COLOR_PALETTE['primary'], config.COLOR_PALETTE['extremal'],
                   config.COLOR_PALETTE['secondary']]
        for k, (label, hs) in enumerate(series.items()):
            ax.plot(degrees, hs.values(up_to), marker='o', linewidth=2,
                    color=palette[k % len(palette)], label=label)
        ax.set_title('Hilbert function', fontsize=14, fontweight='bold')
        ax.set_xlabel('Degree')
        ax.set_ylabel('dim (R/I)_d')
        ax.legend()
        self._save(fig, save_path)
        return fig


# =============================================================================
# STANDALONE EXECUTION
# =============================================================================
if __name__ == "__main__":
    from src.annihilator import annihilator_numbers
    from src.betti import betti_koszul
    from src.monideal import MonomialIdeal

    ideal = MonomialIdeal(2, [(2, 0), (1, 1), (0, 3)])
    visualizer = AlgebraVisualizer()
    visualizer.plot_specular_diagrams(betti_koszul(ideal), annihilator_numbers(ideal),
                                      save_path='specular_demo.png')
    print("Saved specular_demo.png")
