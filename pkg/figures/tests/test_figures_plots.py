import pytest

from cohesion_figures.plots import FigureSpec, plot_measure


def spec_for(sample_csv, tmp_path, measure, **overrides):
    return FigureSpec(
        inputs=(sample_csv,),
        measure=measure,
        out=str(tmp_path / f"{measure}.png"),
        **overrides,
    )


class TestFigureSpec:
    def test_unknown_measure_rejected(self, sample_csv, tmp_path):
        with pytest.raises(ValueError, match="unknown measure 'pagerank'"):
            spec_for(sample_csv, tmp_path, "pagerank")

    def test_no_inputs_rejected(self, tmp_path):
        with pytest.raises(ValueError, match="at least one input"):
            FigureSpec(inputs=(), measure="ei", out=str(tmp_path / "x.png"))

    def test_label_count_mismatch(self, sample_csv, tmp_path):
        with pytest.raises(ValueError, match="one label per input"):
            spec_for(sample_csv, tmp_path, "ei", labels=("a", "b"))


class TestPlotMeasure:
    def test_boxplot_written(self, sample_csv, tmp_path):
        out = plot_measure(spec_for(sample_csv, tmp_path, "ei"))
        data = open(out, "rb").read()
        assert data.startswith(b"\x89PNG")

    def test_bar_chart_written(self, sample_csv, tmp_path):
        out = plot_measure(spec_for(sample_csv, tmp_path, "gip"))
        assert open(out, "rb").read().startswith(b"\x89PNG")

    def test_q_hit_from_trailer(self, sample_csv, tmp_path):
        out = plot_measure(spec_for(sample_csv, tmp_path, "q_hit"))
        assert open(out, "rb").read().startswith(b"\x89PNG")

    def test_multiple_inputs_grouped(self, sample_csv, tmp_path):
        spec = FigureSpec(
            inputs=(sample_csv, sample_csv),
            measure="sit",
            out=str(tmp_path / "sit.png"),
            labels=("run-a", "run-b"),
            group_label="algorithm",
        )
        assert plot_measure(spec) == spec.out

    def test_rerender_identical_bytes(self, sample_csv, tmp_path):
        spec = spec_for(sample_csv, tmp_path, "ced")
        plot_measure(spec)
        first = open(spec.out, "rb").read()
        plot_measure(spec)
        assert open(spec.out, "rb").read() == first

    def test_empty_input_propagates_error(self, empty_csv, tmp_path):
        with pytest.raises(ValueError, match="no data rows"):
            plot_measure(spec_for(empty_csv, tmp_path, "ei"))

    def test_all_values_missing(self, tmp_path):
        path = tmp_path / "misses.csv"
        path.write_text(
            "query,combo,params,found,reason,ei\n"
            "1,0,k=2,false,query peeled,\n"
            "# q_hit = 0.0\n"
        )
        with pytest.raises(ValueError, match="no finite 'ei' values"):
            plot_measure(FigureSpec(inputs=(str(path),), measure="ei", out=str(tmp_path / "x.png")))
