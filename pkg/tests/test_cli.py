import json

import pytest
from click.testing import CliRunner

from primegraph.cli import main
from primegraph.classify import fixture


@pytest.fixture()
def runner():
    return CliRunner()


def write_graph(tmp_path, g, name="graph.json"):
    path = tmp_path / name
    path.write_text(g.to_json())
    return str(path)


class TestClassifyCommand:
    def test_figure2_rejects_with_exit_1(self, runner, tmp_path):
        path = write_graph(tmp_path, fixture("figure2"))
        result = runner.invoke(
            main, ["classify", "--family", "psl27", "--graph", path, "--complement"]
        )
        assert result.exit_code == 1
        assert "no_constrained_coloring" in result.output

    def test_accept_exits_0(self, runner, tmp_path):
        path = write_graph(tmp_path, fixture("figure5"))
        result = runner.invoke(
            main, ["classify", "--family", "psl27", "--graph", path, "--complement"]
        )
        assert result.exit_code == 0
        assert "accept" in result.output

    def test_auto_lists_all(self, runner, tmp_path):
        path = write_graph(tmp_path, fixture("figure5"))
        result = runner.invoke(
            main, ["classify", "--family", "auto", "--graph", path, "--complement"]
        )
        assert result.exit_code == 0
        assert result.output.count("\n") == 9

    def test_bad_family_exits_2(self, runner, tmp_path):
        path = write_graph(tmp_path, fixture("figure5"))
        result = runner.invoke(
            main, ["classify", "--family", "m11", "--graph", path]
        )
        assert result.exit_code == 2

    def test_json_output(self, runner, tmp_path):
        path = write_graph(tmp_path, fixture("figure5"))
        result = runner.invoke(
            main,
            ["classify", "--family", "psl27", "--graph", path, "--complement", "--json"],
        )
        verdicts = json.loads(result.output)
        assert verdicts[0]["decision"] == "accept"


class TestConstructCommand:
    def test_writes_recipe_and_realizes(self, runner, tmp_path):
        path = write_graph(tmp_path, fixture("figure5"))
        out = tmp_path / "recipe.json"
        result = runner.invoke(
            main,
            [
                "construct", "--family", "psl27", "--graph", path, "--complement",
                "--realize", "--out", str(out),
            ],
        )
        assert result.exit_code == 0, result.output
        assert "order 840" in result.output and "matches" in result.output
        saved = json.loads(out.read_text())
        assert saved["recipe"]["kind"] == "product"

        # the written recipe feeds straight back into prime-graph
        result2 = runner.invoke(main, ["prime-graph", "--group", str(out)])
        assert result2.exit_code == 0
        assert "complement" in result2.output

    def test_reject_exits_1(self, runner, tmp_path):
        from primegraph.graphs import complement

        path = write_graph(tmp_path, complement(fixture("groetzsch")))
        result = runner.invoke(
            main, ["construct", "--family", "u33", "--graph", path]
        )
        assert result.exit_code == 1
        assert "chromatic_obstruction" in result.output


class TestPrimeGraphCommand:
    def test_builtin_both_spellings(self, runner):
        for name in ("PSL(2,7)", "psl27"):
            result = runner.invoke(main, ["prime-graph", "--group", name])
            assert result.exit_code == 0, result.output
            assert "order 168" in result.output
            assert "2-3" in result.output and "complement" in result.output

    def test_dot_flag(self, runner):
        result = runner.invoke(main, ["prime-graph", "--group", "SL(2,7)", "--dot"])
        assert result.exit_code == 0
        assert "graph {" in result.output and '"3" -- "7";' in result.output

    def test_group_json_file(self, runner, tmp_path):
        data = {"name": "C6", "degree": 6, "order": 6,
                "generators": [[1, 2, 3, 4, 5, 0]]}
        path = tmp_path / "c6.json"
        path.write_text(json.dumps(data))
        result = runner.invoke(main, ["prime-graph", "--group", str(path)])
        assert result.exit_code == 0
        assert "2-3" in result.output

    def test_unknown_builtin_exits_2(self, runner):
        result = runner.invoke(main, ["prime-graph", "--group", "M24"])
        assert result.exit_code == 2


class TestVerifyTablesCommand:
    def test_green_run(self, runner):
        result = runner.invoke(main, ["verify-tables"])
        assert result.exit_code == 0, result.output
        assert "FAIL" not in result.output
        assert result.output.count("[ok]") >= 5


class TestFixturesCommand:
    def test_emit_json(self, runner):
        result = runner.invoke(main, ["fixtures", "--name", "figure4"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["vertices"] == ["2", "3", "7"] and data["edges"] == [["3", "7"]]

    def test_emit_dot(self, runner):
        result = runner.invoke(main, ["fixtures", "--name", "groetzsch", "--dot"])
        assert result.exit_code == 0 and result.output.startswith("graph {")

    def test_whisker_parameterized(self, runner):
        result = runner.invoke(main, ["fixtures", "--name", "whisker:6"])
        data = json.loads(result.output)
        assert len(data["vertices"]) == 14

    def test_unknown_exits_2(self, runner):
        result = runner.invoke(main, ["fixtures", "--name", "figure3x"])
        assert result.exit_code == 2


class TestOracleCommand:
    def test_reports_chromatic_number_and_triangles(self, runner, tmp_path):
        path = write_graph(tmp_path, fixture("figure5"))
        result = runner.invoke(main, ["oracle", "--graph", path])
        assert result.exit_code == 0
        assert "chromatic number: 3" in result.output
        assert "{2, 3, 7}" in result.output

    def test_cap_exits_2(self, runner, tmp_path):
        from primegraph.graphs import Graph

        path = write_graph(tmp_path, Graph([f"v{i}" for i in range(11)]))
        result = runner.invoke(main, ["oracle", "--graph", path])
        assert result.exit_code == 2
