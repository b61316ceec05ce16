import matplotlib.pyplot as plt
import pytest

from src.annihilator import annihilator_numbers
from src.betti import betti_koszul
from src.monideal import MonomialIdeal, hilbert_series
from src.visualizations import AlgebraVisualizer


@pytest.fixture
def visualizer():
    return AlgebraVisualizer(figsize=(6, 4))


def _outlined(ax):
    return [p for p in ax.patches if not p.get_fill()]


class TestHeatmaps:
    def test_betti_diagram_outlines_extremal_entries(self, visualizer, small_ideal, tmp_path):
        path = tmp_path / 'betti.png'
        fig = visualizer.plot_betti_diagram(betti_koszul(small_ideal), save_path=str(path))
        assert path.exists()
        assert len(_outlined(fig.axes[0])) == 1
        visualizer.close(fig)

    def test_truncated_table_has_no_outline(self, visualizer, small_ideal):
        fig = visualizer.plot_betti_diagram(betti_koszul(small_ideal, j_max=3))
        assert _outlined(fig.axes[0]) == []
        visualizer.close(fig)

    def test_infinite_annihilator_rows_are_labelled(self, visualizer, quasi_stable_ideal):
        fig = visualizer.plot_annihilator_table(annihilator_numbers(quasi_stable_ideal))
        assert 'infinite' in fig.axes[0].get_xlabel()
        visualizer.close(fig)

    def test_specular_diagrams(self, visualizer, small_ideal):
        fig = visualizer.plot_specular_diagrams(betti_koszul(small_ideal), annihilator_numbers(small_ideal))
        betti_ax, alpha_ax = fig.axes[:2]
        assert len(_outlined(betti_ax)) == len(_outlined(alpha_ax)) == 1
        assert _outlined(alpha_ax)[0].get_xy() == (0, 2)
        visualizer.close(fig)


class TestHilbertFunction:
    def test_one_line_per_series(self, visualizer, small_ideal):
        series = {'R/I': hilbert_series(small_ideal), 'R': hilbert_series(MonomialIdeal.zero(2))}
        fig = visualizer.plot_hilbert_function(series, up_to=5)
        lines = fig.axes[0].get_lines()
        assert len(lines) == 2
        assert list(lines[0].get_ydata()) == [1, 2, 1, 0, 0, 0]
        plt.close('all')
