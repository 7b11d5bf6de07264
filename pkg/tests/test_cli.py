import json
import subprocess
import sys

import pytest

from outerepg.cli import run

from helpers import DATA

STRIP9 = str(DATA / "strip9.txt")


def out(res):
    return json.loads(res.stdout)


@pytest.fixture
def files(tmp_path):
    def make(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return make


def gen(tmp_path, *argv):
    p = str(tmp_path / "g.txt")
    assert run(["gen", *argv, "-o", p]).exit_code == 0
    return p


def test_classify_strip9():
    res = run(["classify", STRIP9])
    assert res.exit_code == 0
    assert out(res) == {"family": "maximal-outerplanar", "b": 0, "bm": 0}


def test_classify_families(tmp_path):
    s3 = gen(tmp_path, "--family", "nsun", "--n", "3")
    doc = out(run(["classify", s3]))
    assert (doc["b"], doc["bm"], doc["obstruction"]["kind"]) == (1, 2, "S3")
    m2 = gen(tmp_path, "--family", "m2")
    doc = out(run(["classify", m2]))
    assert doc["family"] == "cactus" and doc["obstruction"]["kind"] == "M2"
    c6 = gen(tmp_path, "--family", "rand-outerplanar", "--n", "9", "--seed", "5")
    assert out(run(["classify", c6, "--family", "outerplanar"]))["family"] == "outerplanar"
    assert run(["classify", m2, "--family", "maximal-outerplanar"]).exit_code == 3


def test_build_and_verify_nsun(tmp_path):
    g = gen(tmp_path, "--family", "nsun", "--n", "7")
    rep = str(tmp_path / "rep.json")
    assert run(["build", g, "--class", "b2m", "-o", rep]).exit_code == 0
    res = run(["verify", g, rep, "--max-bends", "2", "--monotonic"])
    assert res.exit_code == 0 and out(res)["pass"] is True
    res = run(["verify", g, rep, "--max-bends", "1"])
    assert res.exit_code == 1 and out(res)["pass"] is False


@pytest.mark.parametrize(
    "family, cls, k, mono",
    [
        (["--family", "rand-maxout", "--n", "12", "--seed", "1"], "min", None, False),
        (["--family", "rand-cactus", "--n", "20", "--seed", "2"], "b1m", 1, True),
        (["--family", "rand-outerplanar", "--n", "30", "--seed", "3"], "b2m", 2, True),
        (["--family", "rand-maxout", "--n", "12", "--seed", "1"], "min-monotonic", None, True),
        (["--family", "path", "--n", "6"], "b0", 0, False),
    ],
)
def test_build_round_trip(tmp_path, family, cls, k, mono):
    g = gen(tmp_path, *family)
    rep = str(tmp_path / "rep.json")
    res = run(["build", g, "--class", cls, "-o", rep])
    assert res.exit_code == 0
    summary = out(res)
    k = summary["maxBends"] if k is None else k
    argv = ["verify", g, rep, "--max-bends", str(k)] + (["--monotonic"] if mono else [])
    assert run(argv).exit_code == 0


def test_build_refuses_wrong_class(tmp_path):
    g = gen(tmp_path, "--family", "cycle", "--n", "5")
    res = run(["build", g, "--class", "b0"])
    assert res.exit_code == 1 and out(res)["built"] is False


def test_oracle_c4(tmp_path):
    g = gen(tmp_path, "--family", "cycle", "--n", "4")
    res = run(["oracle", "b0", g])
    assert res.exit_code == 1 and out(res)["status"] == "NONE_WITHIN_BOUND"
    res = run(["oracle", "b1m", g])
    assert res.exit_code == 0 and out(res)["status"] == "FOUND"
    assert out(run(["oracle", "exact", g])) == {"b": 1, "bm": 1}


def test_render(tmp_path):
    rep = str(tmp_path / "rep.json")
    run(["build", STRIP9, "--class", "b0", "-o", rep])
    res = run(["render", rep, "--format", "ascii"])
    assert res.exit_code == 0 and "9 = 9" in res.stdout
    svg = str(tmp_path / "f.svg")
    assert out(run(["render", rep, "--format", "svg", "-o", svg]))["output"] == svg
    png = str(tmp_path / "f.png")
    assert run(["render", rep, "--format", "png", "-o", png]).exit_code == 0
    assert (tmp_path / "f.png").read_bytes()[:4] == b"\x89PNG"


def test_gen_to_stdout_is_an_edge_list():
    res = run(["gen", "--family", "m3"])
    assert res.stdout.splitlines()[0] == "6 6"


@pytest.mark.parametrize(
    "argv",
    [["bogus"], ["classify"], ["build", STRIP9], ["gen", "--family", "nsun"], ["classify", STRIP9, "--wat"]],
)
def test_usage_errors(argv):
    assert run(argv).exit_code == 2


def test_input_errors(files):
    assert run(["classify", "/nonexistent/graph.txt"]).exit_code == 3
    assert run(["classify", files("loop.txt", "2 1\n1 1\n")]).exit_code == 3
    k4 = files("k4.txt", "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")
    assert run(["classify", k4]).exit_code == 3
    assert run(["verify", STRIP9, files("bad.json", "{not json")]).exit_code == 3
    assert run(["verify", STRIP9, files("bad2.json", '{"paths":{"1":[[0,0],[1,1]]}}')]).exit_code == 3


def test_entry_point_module():
    res = subprocess.run([sys.executable, "-m", "outerepg", "classify", STRIP9], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["family"] == "maximal-outerplanar"
