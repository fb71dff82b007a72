import io
import json

import pytest

from cpplanar.generators import fixture
from cpplanar.graph import GeoGraph
from cpplanar.graphio import (FormatError, graph_from_dict, graph_to_dict,
                              load_graph, save_graph)


def roundtrip(g: GeoGraph) -> str:
    buf = io.StringIO()
    save_graph(g, buf)
    return buf.getvalue()


class TestRoundTrip:
    def test_identity_up_to_canonical_order(self):
        g = GeoGraph([(3, (1, 2)), (1, (0, 0)), (2, (5, -1))],
                     [(3, 1), (2, 3)])
        text = roundtrip(g)
        again = load_graph(io.StringIO(text))
        assert again == g
        assert roundtrip(again) == text  # byte-stable

    def test_order_insensitive_load(self):
        doc = {"edges": [[2, 0], [0, 1]],
               "vertices": [{"id": 2, "x": 3, "y": 3},
                            {"id": 0, "x": 0, "y": 0},
                            {"id": 1, "x": 1, "y": 0}]}
        g = graph_from_dict(doc)
        assert g.edges == [(0, 1), (0, 2)]

    def test_fixture_files_are_canonical(self, tmp_path):
        for name in ("fig3", "fig8_counterexample"):
            g = fixture(name)
            out = tmp_path / f"{name}.json"
            save_graph(g, str(out))
            from importlib import resources
            ref = resources.files("cpplanar").joinpath(
                f"data/fixtures/{name}.json")
            assert out.read_text() == ref.read_text()


class TestRejections:
    def test_self_loop(self):
        with pytest.raises(FormatError) as err:
            graph_from_dict({"vertices": [{"id": 0, "x": 0, "y": 0}],
                             "edges": [[0, 0]]})
        assert "self-loop" in str(err.value)

    def test_unknown_id(self):
        with pytest.raises(FormatError):
            graph_from_dict({"vertices": [{"id": 0, "x": 0, "y": 0}],
                             "edges": [[0, 7]]})

    def test_non_integer_coordinate(self):
        with pytest.raises(FormatError):
            graph_from_dict({"vertices": [{"id": 0, "x": 0.5, "y": 0}],
                             "edges": []})

    def test_coordinate_out_of_64bit_range(self):
        with pytest.raises(FormatError):
            graph_from_dict({"vertices": [{"id": 0, "x": 2 ** 63, "y": 0}],
                             "edges": []})

    def test_missing_field(self):
        with pytest.raises(FormatError):
            graph_from_dict({"vertices": []})

    def test_invalid_json(self):
        with pytest.raises(FormatError):
            load_graph(io.StringIO("{not json"))

    def test_edge_arity(self):
        with pytest.raises(FormatError):
            graph_from_dict({"vertices": [{"id": 0, "x": 0, "y": 0}],
                             "edges": [[0]]})


def test_dict_form_is_json_serialisable():
    doc = graph_to_dict(fixture("fig1b"))
    json.dumps(doc)
    assert {"vertices", "edges"} == set(doc)
