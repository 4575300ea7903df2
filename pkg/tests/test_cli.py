import json
import random
import subprocess
import sys

import pytest

from compshuffle import serialize
from compshuffle.cli import main
from compshuffle.dpa import VElem
from compshuffle.dpa.relations import random_velem
from compshuffle.qtring import QtScalar, q, t
from compshuffle.shapes import partitions
from compshuffle.shuffle import n_alpha
from compshuffle.symfn import SymFunc


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


# -- serialization ------------------------------------------------------------------


def test_serialize_examples():
    assert serialize.serialize(q + 1) == "q + 1"
    assert json.loads(serialize.dumps(SymFunc.elem("s", (1,)))) == {
        "basis": "s",
        "maxdeg": 1,
        "terms": [{"shape": [1], "coeff": "1"}],
    }
    F = VElem.monomial((1,), SymFunc.elem("s", (1,)))
    obj = json.loads(serialize.dumps(F))
    assert obj["level"] == 1 and obj["terms"][0]["y"] == [1]
    assert obj["terms"][0]["sym"]["terms"] == [{"shape": [1], "coeff": "1"}]


def test_json_round_trips():
    rng = random.Random(0)
    for basis in "mehps":
        for _ in range(5):
            coeffs = {rng.choice(partitions(rng.randint(0, 4))): (q - t) / (1 + q * rng.randint(1, 3)) for _ in range(3)}
            F = SymFunc(coeffs, basis)
            assert serialize.symfunc_from_json(json.loads(serialize.dumps(F, basis))) == F
    for k in range(4):
        V = random_velem(rng, k, 4)
        assert serialize.velem_from_json(json.loads(serialize.dumps(V))) == V
    c = (q**2 * t - 1) / (q - 1)
    assert serialize.scalar_from_json(json.loads(serialize.dumps(c))) == c
    N = n_alpha((3, 1))
    assert serialize.velem_from_json(serialize.to_json(N)) == N


def test_parse_symfunc():
    F = serialize.parse_symfunc("s[3] + (1+q)*s[2,1] + q*s[1,1,1]")
    assert F.basis == "s" and F.coefficient((2, 1)) == 1 + q
    G = serialize.parse_symfunc("h[1]^2 - h[2]", "e")
    assert G == SymFunc.elem("e", (2,))
    assert serialize.parse_symfunc("3") == SymFunc.scalar(3)
    for bad in ["s[a]", "x[1]", "s[1] / s[1]", ""]:
        with pytest.raises(ValueError):
            serialize.parse_symfunc(bad)


# -- commands ---------------------------------------------------------------------


def test_chi_command(capsys):
    rc, out, _ = run(capsys, "chi", "--path", "NNEENE", "--json")
    assert rc == 0
    obj = json.loads(out)
    assert obj["basis"] == "s"
    assert {tuple(x["shape"]): x["coeff"] for x in obj["terms"]} == {(3,): "1", (2, 1): "q + 1", (1, 1, 1): "q"}
    rc, out, _ = run(capsys, "chi", "--path", "NNEENE", "--weight", "zero")
    assert out.strip() == "s[2,1] + q*s[1,1,1]"
    rc, out, _ = run(capsys, "chi", "--weight", "mu=2", "--basis", "s")
    assert rc == 0 and "s[2]" in out
    rc, out, _ = run(capsys, "chi", "--path", "E", "--start", "1")
    assert out.strip() == "1"


def test_zeta_command(capsys):
    rc, out, _ = run(capsys, "zeta", "--path", "NENNNENNEEEENNEE", "--json")
    obj = json.loads(out)
    assert obj["sigma"] == [1, 2, 4, 6, 7, 8, 3, 5]
    assert obj["bounce_seq"] == [0, 0, 0, 1, 1, 2, 2, 3]
    assert obj["t"] == [17, 16, 11, 9]
    assert obj["touch_prime"] == [1, 5, 2]
    assert obj["pi_prime"] == "NNNEENENENNEEENE"


def test_stats_command(capsys):
    rc, out, _ = run(capsys, "stats", "--path", "NENNNENNEEEENNEE", "--json")
    obj = json.loads(out)
    assert (obj["area"], obj["dinv"], obj["touch"]) == (9, 8, [1, 5, 2])
    rc, out, _ = run(capsys, "stats", "--n", "3", "--json")
    assert len(json.loads(out)) == 5


def test_algebra_commands(capsys):
    rc, out, _ = run(capsys, "macdonald", "--mu", "2,1")
    assert out.strip() == "s[3] + (q + t)*s[2,1] + q*t*s[1,1,1]"
    rc, out, _ = run(capsys, "nabla", "--expr=-h[1]")
    assert out.strip() == "s[1]"
    rc, out, _ = run(capsys, "nalpha", "--alpha", "3,1")
    assert out.strip() == "(-q*t^2*s[1])*y1 + q*t^3*y1^2"
    outs = set()
    for method in ("op", "brute", "nabla"):
        rc, out, _ = run(capsys, "dalpha", "--alpha", "1,2", "--method", method)
        outs.add(out)
    assert outs == {"t*s[2,1] + q*t*s[1,1,1]\n"}
    rc, out, _ = run(capsys, "ninv", "--expr", "1", "--y", "1")
    assert out.strip() == "-q*t*y1"


def test_verify_commands(capsys):
    rc, out, _ = run(capsys, "verify", "shuffle", "--n", "2")
    assert rc == 0 and out.strip().splitlines()[-1] == "PASS"
    rc, out, _ = run(capsys, "verify", "shuffle", "--n", "2", "--json")
    assert json.loads(out)["status"] == "pass"
    rc, out, _ = run(capsys, "verify", "relations", "--k-max", "2", "--degree", "2", "--trials", "2")
    assert rc == 0 and out.strip().endswith("PASS")
    rc, out, _ = run(capsys, "verify", "relations", "--k-max", "1", "--degree", "1", "--exhaustive", "--json")
    obj = json.loads(out)
    assert obj["summary"]["status"] == "pass"
    assert set(obj["results"][0]) == {"relation", "level", "degree", "status", "checked"}
    rc, out, _ = run(capsys, "verify", "bijection", "--n", "5")
    assert rc == 0 and out.strip().endswith("PASS")
    rc, out, _ = run(capsys, "verify", "charfn", "--n", "3")
    assert rc == 0 and out.strip().endswith("PASS")


def test_errors(capsys, monkeypatch):
    rc, out, err = run(capsys, "chi", "--path", "EN")
    assert rc == 2 and out == "" and "error" in err
    rc, _, err = run(capsys, "dalpha", "--alpha", "2,x")
    assert rc == 2 and err
    monkeypatch.setenv("SHUFFLE_MAX_DEGREE", "3")
    rc, _, err = run(capsys, "dalpha", "--alpha", "2,2")
    assert rc == 2 and "SHUFFLE_MAX_DEGREE" in err
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code != 0


def test_determinism(capsys):
    outs = {run(capsys, "verify", "shuffle", "--n", "3", "--json")[1] for _ in range(2)}
    assert len(outs) == 1


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "compshuffle", "chi", "--path", "NNEENE"], capture_output=True, text=True, check=True
    )
    assert proc.stdout.strip() == "s[3] + (q + 1)*s[2,1] + q*s[1,1,1]"
    help_text = subprocess.run([sys.executable, "-m", "compshuffle", "--help"], capture_output=True, text=True).stdout
    for sub in ["chi", "zeta", "stats", "macdonald", "nabla", "nalpha", "dalpha", "ninv", "verify"]:
        assert sub in help_text
