"""Командная строка: форматы вывода, коды выхода, воспроизводимость."""

from __future__ import annotations

import json
import random

import pytest

from kac_crystals.commands.parsing import UsageError
from kac_crystals.core.types import JobConfig
from kac_crystals.crystals.graph import CrystalGraph
from kac_crystals.interfaces.cli import (
    EXIT_DOMAIN_ERROR,
    EXIT_OK,
    EXIT_USAGE_ERROR,
    dispatch,
    run,
)


@pytest.fixture
def invoke(settings, capsys):
    def call(*argv: str) -> tuple[int, str, str]:
        code = run(list(argv), settings=settings)
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return call


def test_crystal_json_round_trip(invoke):
    code, out, _ = invoke("crystal", "--cartan", "A1", "--hw", "3", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["success"] is True
    assert doc["command"] == "crystal"
    assert doc["job"]["hw"] == "3"
    assert len(doc["result"]["nodes"]) == 4
    graph = CrystalGraph.from_json(doc["result"])
    assert len(graph) == 4
    assert json.loads(json.dumps(graph.to_json())) == doc["result"]


def test_crystal_output_is_deterministic(invoke):
    first = invoke("crystal", "--cartan", "B2", "--hw", "1,1", "--format", "json")
    second = invoke("crystal", "--cartan", "B2", "--hw", "1,1", "--format", "json")
    assert first == second
    assert len(json.loads(first[1])["result"]["nodes"]) == 16


def test_crystal_dot_and_text(invoke):
    code, out, _ = invoke("crystal", "--cartan", "A2", "--hw", "1,0", "--format", "dot")
    assert code == EXIT_OK
    assert out.lstrip().startswith("digraph")
    code, out, _ = invoke("crystal", "--cartan", "A2", "--hw", "1,0", "--format", "text")
    assert code == EXIT_OK
    assert "n0 -0-> n1" in out


def test_signature_worked_example(invoke):
    code, out, _ = invoke(
        "signature", "--cartan", "A1", "--hw", "3,3,3", "--label=-1,1,1", "--i", "0",
        "--format", "json",
    )
    assert code == EXIT_OK
    result = json.loads(out)["result"]
    assert result["grouped"] == "(++−)(+−−)(+−−)"
    assert result["crossed_positions"] == [3, 4, 6, 7]
    assert result["reduced"] == "++−−−"
    assert (result["h_plus"], result["h_minus"]) == (2, 3)
    assert (result["e_factor"], result["f_factor"]) == (1, 2)
    assert result["h_minus_from"] == [3, 3, 2]


def test_signature_text(invoke):
    code, out, _ = invoke(
        "signature", "--cartan", "A1", "--hw", "3,3,3", "--label=-1,1,1", "--i", "0",
    )
    assert code == EXIT_OK
    assert "зачёркнуты позиции: 3,4,6,7" in out


def test_tensor_op(invoke):
    code, out, _ = invoke(
        "tensor-op", "--cartan", "A1", "--hw", "3,3,3", "--label=-1,1,1", "--i", "0",
        "--op", "e", "--format", "json",
    )
    assert code == EXIT_OK
    result = json.loads(out)["result"]
    assert result["changed_factor"] == 1
    assert result["result"][0]["weight"] == [1]


def test_decompose(invoke):
    code, out, _ = invoke("decompose", "--cartan", "A1", "--hw", "1,1,1", "--format", "json")
    assert code == EXIT_OK
    result = json.loads(out)["result"]
    assert result["size"] == 8
    counts = {tuple(m["hw"]): m["count"] for m in result["multiplicities"]}
    assert counts == {(3,): 1, (1,): 2}


def test_condense_seven_parts(invoke):
    code, out, _ = invoke(
        "condense", "--partition", "7,5,1^5", "--p", "3", "--r", "0", "--format", "json",
    )
    assert code == EXIT_OK
    result = json.loads(out)["result"]
    assert result["marked_boxes"] == [[9, 0], [7, 1], [5, 2], [2, 2], [1, 4], [1, 7], [0, 9]]
    assert result["m"] == [2, 3, 2, 0, 1, 1]
    assert result["nontrivial_factors"] == ["⋀^2𝕂^3", "⋀^2𝕂^3", "𝕂^3", "𝕂^3"]
    assert result["dimension"] == result["class_size"] == 81


def test_parabolic(invoke):
    code, out, _ = invoke("parabolic", "--m", "3", "--blocks", "2,2,1,1", "--format", "json")
    assert code == EXIT_OK
    result = json.loads(out)["result"]
    assert result["count"] == result["expected_count"] == result["tensor_size"] == 81
    assert result["bijective"] is True


def test_parabolic_rank_one_is_domain_error(invoke):
    code, _, err = invoke("parabolic", "--m", "1", "--blocks", "1")
    assert code == EXIT_DOMAIN_ERROR
    assert "error: BlockTooLarge:" in err


@pytest.mark.parametrize(
    "argv, ordering",
    [
        (["--mode", "dominance", "--cartan", "A1", "--left", "2", "--right", "0"], "greater"),
        (["--mode", "dominance", "--cartan", "A2", "--left", "1,0", "--right", "0,1"],
         "incomparable"),
        (["--mode", "exponents", "--word", "0,1", "--left", "1.0", "--right", "0.2"], "greater"),
    ],
)
def test_compare(invoke, argv, ordering):
    code, out, _ = invoke("compare", *argv, "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["result"]["ordering"] == ordering


def test_domain_error_exit_code(invoke):
    code, out, err = invoke("crystal", "--cartan", "Q7", "--hw", "1", "--format", "json")
    assert code == EXIT_DOMAIN_ERROR
    doc = json.loads(out)
    assert doc["success"] is False
    assert doc["error"]["code"] == "UnknownCartanName"
    assert "error: UnknownCartanName:" in err


def test_not_gcm_is_domain_error(invoke):
    code, _, err = invoke("crystal", "--cartan", "[[2,1],[-1,2]]", "--hw", "0,0")
    assert code == EXIT_DOMAIN_ERROR
    assert "NotGCM" in err


@pytest.mark.parametrize(
    "argv, flag",
    [
        (["crystal", "--cartan", "A2"], "--hw"),
        (["crystal", "--cartan", "A2", "--hw", "1,x"], "--hw"),
        (["crystal", "--cartan", "A2", "--hw", "1,0;0,1"], "--hw"),
        (["signature", "--cartan", "A1", "--hw", "3", "--label", "1"], "--i"),
        (["decompose", "--cartan", "A1", "--hw", "1", "--format", "dot"], "--format"),
        (["condense", "--partition", "2,3", "--p", "3", "--r", "0"], "--partition"),
        (["compare", "--mode", "exponents", "--left", "1", "--right", "2"], "--word"),
    ],
)
def test_usage_errors(invoke, argv, flag):
    code, _, err = invoke(*argv)
    assert code == EXIT_USAGE_ERROR
    assert f"error: {flag}" in err


def test_argparse_errors_are_usage_errors(invoke):
    assert invoke("no-such-command")[0] == EXIT_USAGE_ERROR
    assert invoke("crystal", "--depth", "deep")[0] == EXIT_USAGE_ERROR
    assert invoke("crystal", "--cartan", "A1", "--hw", "1", "--depth=-1")[0] == EXIT_USAGE_ERROR


def test_output_file(invoke, tmp_path):
    target = tmp_path / "out" / "crystal.json"
    code, out, _ = invoke(
        "crystal", "--cartan", "A1", "--hw", "2", "--format", "json", "--output", str(target),
    )
    assert code == EXIT_OK
    assert out == ""
    assert len(json.loads(target.read_text(encoding="utf-8"))["result"]["nodes"]) == 3


def test_random_invocations_never_crash(invoke):
    rng = random.Random(2024)
    cartans = ["A1", "A2", "B2", "A1~", "Q7", "[[2,-1],[-1,2]]", "[[2,", "[[2]]"]
    hws = ["1", "2,2", "0,1", "1,0;0,1", "x", "1,1,1", "-1", ""]
    commands = ["crystal", "decompose", "verify"]
    for _ in range(30):
        argv = [rng.choice(commands), "--cartan", rng.choice(cartans), f"--hw={rng.choice(hws)}"]
        argv += ["--format", rng.choice(["json", "text", "dot"])]
        assert invoke(*argv)[0] in (EXIT_OK, EXIT_DOMAIN_ERROR, EXIT_USAGE_ERROR), argv


def test_dispatch_directly(settings):
    job = JobConfig(command="decompose", cartan="A2", hw="1,0;0,1", format="json")
    code, result = dispatch(job, settings)
    assert code == EXIT_OK
    assert result.payload["size"] == 9

    code, result = dispatch(job.model_copy(update={"cartan": "A1~"}), settings)
    assert code == EXIT_DOMAIN_ERROR
    assert result.error_code == "TruncatedRange"

    with pytest.raises(UsageError):
        dispatch(JobConfig(command="nope"), settings)
    with pytest.raises(UsageError):
        dispatch(job.model_copy(update={"format": "dot"}), settings)
