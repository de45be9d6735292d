"""Smoke tests for the flagcat extension module and the CLI JSON surface."""

import json
import math
import os
import subprocess

import jsonschema
import pytest

import flagcat as fc

CLI = os.environ.get("FLAGCAT_CLI")
SCHEMAS = os.environ.get("FLAGCAT_SCHEMAS")


def run_cli(*args):
    assert CLI, "FLAGCAT_CLI must point at the command-line binary"
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


def load_schema(name):
    assert SCHEMAS, "FLAGCAT_SCHEMAS must point at the schemas directory"
    with open(os.path.join(SCHEMAS, name)) as fh:
        return json.load(fh)


def test_partition_kernel():
    assert fc.specht_dim([2, 1]) == 2
    assert fc.specht_dim([3, 2]) == 5
    assert fc.enumerate_syt([3, 2]) == 5
    assert len(fc.partitions_of(6)) == 11
    assert fc.add_one_box([2, 1]) == [[3, 1], [2, 2], [2, 1, 1]]
    assert fc.is_hs1([2], [2, 1]) and not fc.is_hs1([2], [1, 1])
    assert fc.schur_dim_finite([2, 1], 2) == 2
    assert fc.schur_dim_finite([1, 1, 1], 2) == 0
    # exact big integers survive the crossing
    staircase = list(range(10, 0, -1))
    big = fc.specht_dim(staircase)
    assert isinstance(big, int) and big > 2**100
    assert big == fc.specht_dim(fc.conjugate(staircase))


def test_hom_counts():
    assert fc.count_u_morphisms([2, 0], [1, 1]) == 2
    assert fc.count_u_morphisms([1, 1, 1], [0, 1, 2]) == 4
    assert fc.count_u_morphisms([1, 1], [2, 0]) == 0
    assert len(fc.enumerate_u_morphisms([2, 0], [1, 1])) == 2
    assert fc.hom_g_dim([1, 2], [1, 2]) == 2
    assert fc.dominance_geq([2, 0], [1, 1])
    assert fc.tau([2, 0, 1]) == [1, 0, 2]
    assert fc.cover_relations_below([2, 0, 0]) == [[1, 1, 0]]


def test_characters_and_lr():
    assert fc.mn_character([2, 1], [1, 1, 1]) == 2
    assert fc.mn_character([2, 1], [3]) == -1
    assert fc.mn_character([2, 1], [3]) == fc.character_oracle([2, 1], [3])
    assert fc.class_size([2, 1]) == 3
    assert fc.lr_coefficient([1, 1], [1], [2, 1]) == 1
    assert fc.lr_coefficient([2, 1], [2, 1], [3, 2, 1]) == 2
    dec = fc.decompose_bimodule([2, 0], [1, 1])
    assert dec[("2;", "1;1")] == 1 and dec[("1,1;", "1;1")] == 1


def test_module_category():
    jh = fc.jh("I[1;1]", 2)
    assert jh == {"1;1": 1, "2;": 1, "1,1;": 1}
    assert fc.jh("P[1;1]", 2) == {"1;1": 1, ";2": 1, ";1,1": 1}
    assert fc.jh("T(1,1)", 2) == {"1;1": 1, ";2": 1, ";1,1": 1}
    assert fc.day_tensor_simples([[1], []], [[], [1]]) == {"1;1": 1}
    assert fc.ext1_dim([[1], [1]], [[2], []]) == 1
    assert fc.ext1_dim([[1], [1]], [[1], [1]]) == 0
    assert fc.ext1_dim([[1], [1]], [[2], []]) == fc.ext1_branching_oracle([[1], [1]], [[2], []])
    quiver = fc.ext_quiver(2, 2)
    assert len(quiver["nodes"]) == 8
    assert ("1;1", "2;") in quiver["edges"]
    assert fc.ext_quiver(1, 5)["edges"] == []
    assert fc.dual("P(2,0)", 2) == "J(2,0)"
    assert fc.tau_push("P(2,0)", 2) == "Q(0,2)"
    assert fc.to_umod("T(2,0)", 2) == "I(0,2)"
    assert fc.from_umod("I(0,2)", 2) == "T(2,0)"


def test_repg_bridge():
    assert fc.socle_T([3, 0]) == {"3;": 1, "2,1;": 2, "1,1,1;": 1}
    jh_t = fc.jh_T([1, 1])
    assert jh_t == {"1;1": 1, ";2": 1, ";1,1": 1}
    assert fc.eval_flag([[1], [1]], [1, 1]) == 1
    assert fc.eval_flag_injective([[1], [1]], [1, 1]) == 2
    assert fc.eval_flag([[1, 1], []], [1, 3]) == 0


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        fc.partitions_of(40)
    with pytest.raises(ValueError):
        fc.jh("X[1;1]", 2)
    with pytest.raises(ValueError):
        fc.count_u_morphisms([1, 1], [1, 1, 1])


def test_verify_suite_runs():
    records = fc.verify_suite("characters", max_n=2)
    assert records and all(r["pass"] for r in records)


@pytest.mark.skipif(not CLI or not SCHEMAS, reason="CLI or schemas not configured")
def test_cli_json_validates_against_schemas():
    envelope_schema = load_schema("result_envelope.schema.json")
    groth_schema = load_schema("groth_class.schema.json")
    quiver_schema = load_schema("quiver.schema.json")

    env = json.loads(run_cli("jh", "--n", "2", "I[1;1]"))
    jsonschema.validate(env, envelope_schema)
    jsonschema.validate(env["result"], groth_schema)
    assert env["result"] == {"1;1": 1, "2;": 1, "1,1;": 1}
    assert env["engine_version"] == fc.__version__

    env = json.loads(run_cli("tensor", "--n", "2", "M[1;-]", "M[-;1]"))
    jsonschema.validate(env["result"], groth_schema)
    assert env["result"] == {"1;1": 1}

    env = json.loads(run_cli("quiver", "--n", "2", "--max-degree", "2"))
    jsonschema.validate(env, envelope_schema)
    jsonschema.validate(env["result"], quiver_schema)
    assert env["result"]["node_count"] == 8

    dot = run_cli("quiver", "--n", "2", "--max-degree", "2", "--format", "dot")
    assert dot.startswith("digraph ext_quiver {") and dot.rstrip().endswith("}")
    assert '"1;1" -> "2;-"' in dot


@pytest.mark.skipif(not CLI, reason="CLI not configured")
def test_cli_determinism_modulo_elapsed():
    def canon(raw):
        env = json.loads(raw)
        env.pop("elapsed_ms")
        return json.dumps(env, sort_keys=True)

    first = run_cli("decompose-principal", "--n", "2", "--kind", "projective", "--a", "3,0")
    second = run_cli("decompose-principal", "--n", "2", "--kind", "projective", "--a", "3,0")
    assert canon(first) == canon(second)
    assert json.loads(first)["result"] == {"3;": 1, "2,1;": 2, "1,1,1;": 1}


@pytest.mark.skipif(not CLI, reason="CLI not configured")
def test_cli_cache_round_trip(tmp_path):
    env = dict(os.environ, FLAGCAT_CACHE_DIR=str(tmp_path))

    def run(*args):
        proc = subprocess.run([CLI, *args], capture_output=True, text=True, env=env)
        assert proc.returncode == 0, proc.stderr
        return json.loads(proc.stdout)

    cold = run("hom-dim", "--n", "2", "--a", "2,0", "--b", "1,1", "--cache")
    warm = run("hom-dim", "--n", "2", "--a", "2,0", "--b", "1,1", "--cache")
    plain = run("hom-dim", "--n", "2", "--a", "2,0", "--b", "1,1")
    assert cold["cache_hit"] is False and warm["cache_hit"] is True
    assert cold["result"] == warm["result"] == plain["result"]


def test_partition_number_reference():
    # p(m) for m = 0..10, a classical sequence
    expect = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert [len(fc.partitions_of(m)) for m in range(11)] == expect
    assert math.factorial(4) == sum(fc.specht_dim(p) ** 2 for p in fc.partitions_of(4))
