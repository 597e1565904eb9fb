import json

import pytest
from hypothesis import given

from localquiver import (
    Quiver,
    SemisimpleType,
    builtin_hereditary_order,
    builtin_numerical_semigroup,
    builtin_psl2z,
    decompose,
    local_quiver,
)
from localquiver.cli import run
from localquiver.serialize import (
    dumps,
    export_dot,
    local_from_dict,
    local_to_dict,
    quiver_from_dict,
    quiver_to_dict,
    setting_from_dict,
    setting_to_dict,
    type_from_data,
    type_to_list,
)

from .conftest import quivers


# -- serialization -----------------------------------------------------------


@given(quivers(max_k=5, max_arrows=3))
def test_quiver_round_trip(q):
    text = dumps(quiver_to_dict(q))
    again = quiver_from_dict(json.loads(text))
    assert again == q
    assert dumps(quiver_to_dict(again)) == text


def test_quiver_file_is_one_based():
    assert quiver_to_dict(Quiver.from_arrows(2, [(0, 1, 2)])) == {"vertices": 2, "arrows": [[1, 2, 2]]}
    assert quiver_from_dict({"vertices": 2, "arrows": [[2, 2, 1]]}).arrows == ((0, 0), (0, 1))


@pytest.mark.parametrize(
    "bad",
    [{}, {"vertices": 0}, {"vertices": 2, "arrows": [[1, 3, 1]]}, {"vertices": 1, "arrows": [[1, 1]]}],
)
def test_quiver_file_validation(bad):
    from localquiver import QuiverError

    with pytest.raises(QuiverError):
        quiver_from_dict(bad)


@pytest.mark.parametrize(
    "setting",
    [builtin_psl2z(), builtin_hereditary_order([[2, 1], [1, 1, 1]]), builtin_numerical_semigroup([2, 3])],
)
def test_setting_round_trip(setting):
    text = dumps(setting_to_dict(setting))
    again = setting_from_dict(json.loads(text))
    assert again == setting and again.name == setting.name
    assert dumps(setting_to_dict(again)) == text


def test_setting_without_augmentation_is_inferred():
    data = setting_to_dict(builtin_psl2z())
    del data["augmentation"]
    # psl2z generators do not pin down the weights of a and b separately
    from localquiver import DomainError

    with pytest.raises(DomainError):
        setting_from_dict(data)
    data = setting_to_dict(builtin_numerical_semigroup([2, 3]))
    del data["augmentation"]
    assert setting_from_dict(data).augmentation == (1,)


def test_type_and_local_round_trip():
    t = SemisimpleType((((1,), 2), ((1,), 1)))
    assert type_from_data(json.loads(dumps(type_to_list(t)))) == t
    assert type_from_data({"components": type_to_list(t)}) == t
    loc = local_quiver(Quiver.loops(2), t)
    text = dumps(local_to_dict(loc))
    assert local_from_dict(json.loads(text)) == loc
    assert dumps(local_to_dict(local_from_dict(json.loads(text)))) == text


def test_dot_export():
    dot = export_dot(Quiver.loops(1))
    assert dot.count("->") == 1 and "v1 -> v1;" in dot
    dot = export_dot(Quiver.cycle(3))
    assert dot.count("[label=") == 3
    assert ["v1 -> v2;", "v2 -> v3;", "v3 -> v1;"] == [
        line.strip() for line in dot.splitlines() if "->" in line
    ]
    dot = export_dot(builtin_psl2z().quiver, (1,) * 6)
    assert dot.count("[label=") == 6 and dot.count("->") == 12
    assert 'label="1\\n1"' in dot
    assert export_dot(Quiver.from_arrows(2, [(0, 1, 3)])).count("v1 -> v2;") == 3


# -- CLI ---------------------------------------------------------------------


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return write


def test_cli_simple(files, capsys):
    qf = files("q.json", {"vertices": 3, "arrows": [[1, 2, 1], [2, 3, 1], [3, 1, 1]]})
    assert run(["simple", "--quiver", qf, "--dimvec", "1,1,1"]) == 0
    assert "simple: true" in capsys.readouterr().out
    assert run(["simple", "--quiver", qf, "--dimvec", "2,2,2"]) == 0
    out = capsys.readouterr().out
    assert "simple: false" in out and "oriented cycle" in out
    assert run(["simple", "--quiver", qf, "--dimvec", "1,1,1", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["simple"] is True


def test_cli_invalid_input_exit_1(files, tmp_path, capsys):
    qf = files("q.json", {"vertices": 2, "arrows": []})
    assert run(["simple", "--quiver", qf, "--dimvec", "0,0"]) == 1
    assert run(["simple", "--quiver", str(tmp_path / "missing.json"), "--dimvec", "1"]) == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(["simple", "--quiver", str(bad), "--dimvec", "1"]) == 1
    assert run(["simple", "--quiver", qf]) == 1
    assert run(["nonsense"]) == 1
    err = capsys.readouterr().err
    assert "zero vector" in err


def test_cli_inconsistency_exit_2(files, capsys):
    qf = files("q.json", {"vertices": 1, "arrows": []})
    tf = files("t.json", [{"epsilon": [1], "mult": 1}, {"epsilon": [1], "mult": 1}])
    assert run(["local-quiver", "--quiver", qf, "--type", tf]) == 2
    assert "negative arrow count" in capsys.readouterr().err


def test_cli_local_quiver_psl2z(files, tmp_path, capsys):
    tf = files("t.json", [{"epsilon": [1, 0, 0, 0, 1, 0], "mult": 2}, {"epsilon": [0, 0, 1, 0, 1, 0], "mult": 1}])
    dot = tmp_path / "out.dot"
    assert run(["local-quiver", "--setting", "psl2z", "--type", tf, "--dot", str(dot), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["dimvec"] == [2, 1]
    assert payload["total_dimension"] == 2 * 2 + 2
    assert dot.read_text().startswith('digraph "Q_xi"')


def test_cli_builtin_psl2z_dot(tmp_path, capsys):
    dot = tmp_path / "qa.dot"
    assert run(["builtin", "psl2z", "--dot", str(dot)]) == 0
    assert dot.read_text().count("->") == 12
    assert "v11" in capsys.readouterr().out
    assert run(["builtin", "psl2z", "--json"]) == 0
    setting = setting_from_dict(json.loads(capsys.readouterr().out))
    assert setting == builtin_psl2z()


def test_cli_builtin_parameters(files, capsys):
    assert run(["builtin", "hereditary-order", "--partitions", "2,1/1,1,1", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["alpha"] == [2, 1, 1, 1, 1]
    assert run(["builtin", "hereditary-order"]) == 1
    qf = files("q.json", {"vertices": 1, "arrows": [[1, 1, 1]]})
    assert run(["builtin", "path-algebra", "--quiver", qf, "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["alpha"] == [1]


def test_cli_semigroup_commands(capsys):
    assert run(["decompose", "--setting", "numerical-semigroup", "--generators", "2,3", "--target", "7", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["decompositions"] == [[2, 1]]
    assert run(["is-simp", "--setting", "psl2z", "--target", "1,1,1,1,0", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["simp"] is True and out["witness"] == [1, 0, 0, 0, 1, 0]
    assert run(["westbury", "--vector", "1,1,2,0,0"]) == 0
    assert "westbury: false" in capsys.readouterr().out
    assert run(["westbury", "--vector", "1,1,1,0,0"]) == 1


def test_cli_setting_file(files, capsys):
    sf = files("s.json", setting_to_dict(builtin_psl2z()))
    assert run(["decompose", "--setting", sf, "--target", "1,1,1,1,0", "--json"]) == 0
    expected = decompose(builtin_psl2z(), (1, 1, 1, 1, 0))
    assert json.loads(capsys.readouterr().out)["decompositions"] == [list(d) for d in expected]


def test_cli_describe_b(capsys):
    assert run(["describe-b", "--setting", "curve", "--max-path-len", "2", "--json"]) == 0
    (block,) = json.loads(capsys.readouterr().out)["blocks"]
    assert block["path_counts"] == [1, 1, 1] and block["reachable"]


def test_cli_ext_and_enumerate(files, capsys):
    qf = files("q.json", {"vertices": 1, "arrows": [[1, 1, 2]]})
    assert run(["ext", "--quiver", qf, "--e", "1", "--f", "1", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["ext"] == 1
    cyc = files("c.json", {"vertices": 2, "arrows": [[1, 2, 1], [2, 1, 1]]})
    assert run(["enumerate-simples", "--quiver", cyc, "--bound", "4", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["simples"] == [[0, 1], [1, 0], [1, 1]]


def test_cli_oracle(files, capsys):
    qf = files("q.json", {"vertices": 1, "arrows": [[1, 1, 1]]})
    assert run(["oracle", "is-simple", "--quiver", qf, "--dimvec", "2", "--trials", "3", "--seed", "1"]) == 0
    assert "probabilistic" in capsys.readouterr().out
    assert run(["oracle", "is-simple", "--quiver", qf, "--dimvec", "1", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["certain"] is True
    assert run(["oracle", "ext", "--quiver", qf, "--e", "1", "--f", "1", "--json", "--prime", "1048583"]) == 0
    res = json.loads(capsys.readouterr().out)
    assert (res["hom"], res["ext"]) == (0, 0)
    assert run(["oracle", "ext", "--quiver", qf, "--e", "1", "--f", "1", "--prime", "15"]) == 1
