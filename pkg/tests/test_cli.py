import io
import subprocess
import sys
from collections import Counter

import pytest

from dqslab import families as F
from dqslab.cli_io import cache as C
from dqslab.cli_io.cli import run_cli
from dqslab.cli_io.graph6 import encode_graph6
from dqslab.cli_io.textforms import TextFormError, parse_family_spec, parse_params, resolve_graph
from dqslab.enumerate import generate, canonical_form
from dqslab.graph_core import is_isomorphic


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), out, err)
    return code, out.getvalue().splitlines(), err.getvalue()


def test_text_forms():
    assert parse_family_spec("lollipop(11,6)") == F.FamilySpec("lollipop", (11, 6))
    assert resolve_graph("K4") == F.complete(4)
    assert resolve_graph("C6+2K2") == F.disjoint_union([F.cycle(6), F.copies(F.complete(2), 2)])
    assert resolve_graph("2*P3") == F.copies(F.path(3), 2)
    assert resolve_graph("g6:A_") == F.complete(2)
    assert resolve_graph("Cs") == F.star(4)
    assert is_isomorphic(resolve_graph("line_graph(star(4))"), F.complete(3))
    assert resolve_graph("join(E1,C5)") == F.wheel(5)
    p = parse_params("T=star(5),r=2")
    assert p == {"T": F.star(5), "r": 2}
    with pytest.raises(TextFormError):
        parse_params("G")
    with pytest.raises(TextFormError):
        resolve_graph("cycle(4")


def test_family_command():
    code, lines, _ = cli("family", "lollipop(11,6)")
    assert code == 0
    assert f"graph6={encode_graph6(F.lollipop(11, 6))}" in lines
    assert "n=11 m=11" in lines


def test_hunt_star():
    code, lines, _ = cli("hunt", encode_graph6(F.star(4)), "--matrix", "Q", "--jobs", "1")
    assert code == 1
    mates = [ln for ln in lines if ln.startswith("mate=")]
    assert len(mates) == 1
    assert canonical_form(resolve_graph(mates[0][5:])) == canonical_form(F.disjoint_union([F.complete(3), F.empty(1)]))


def test_hunt_determined():
    code, lines, _ = cli("hunt", "P5", "--jobs", "1")
    assert code == 0 and "verdict=determined-in-scope" in lines


def test_verify_command():
    code, lines, _ = cli("verify", "--theorem", "thm3.4", "--params", "G=K4,r=1", "--jobs", "1")
    assert code == 0 and lines[-1] == "result=pass"
    code, lines, err = cli("verify", "--theorem", "thm3.2", "--params", "G=C6,r=1", "--jobs", "1")
    assert code == 2 and "hypothesis" in err


def test_spectrum_and_invariants():
    code, lines, _ = cli("spectrum", "K3+K1", "--matrix", "Q")
    assert code == 0
    assert "poly=0,-4,9,-6,1" in lines and "spectrum=[4]^1 [1]^2 [0]^1" in lines
    code, lines, _ = cli("invariants", "C5")
    assert code == 0 and "detQ=4" in lines and "tau=5" in lines


def test_registry_command():
    assert cli("registry", "C8")[0] == 0
    assert cli("registry", "star(4)")[0] == 1


def test_usage_errors():
    assert cli()[0] == 2
    assert cli("spectrum", "K3", "--matrix", "X")[0] == 2
    assert cli("family", "nonsense(3)")[0] == 2
    assert cli("enumerate", "11")[0] == 2
    assert cli("hunt", "P11", "--jobs", "1")[0] == 2
    assert cli("verify")[0] == 2


def test_deterministic_output():
    a = cli("hunt", "C6+2K2", "--jobs", "1")
    b = cli("hunt", "C6+2K2", "--jobs", "1")
    assert a == b


def test_enumerate_stdout():
    code, lines, _ = cli("enumerate", "5", "--edges", "4")
    assert code == 0
    assert lines == [encode_graph6(g) for g in generate(5, 4)]


def test_cache_round_trip(tmp_path):
    path = tmp_path / "n6.tsv"
    code, lines, _ = cli("enumerate", "6", "--out", str(path), "--jobs", "1")
    assert code == 0 and "count=156" in lines
    meta, recs = C.read_cache(path)
    assert meta["count"] == "156"
    want = Counter(C.CacheRecord.of(g) for g in generate(6))
    assert Counter(recs) == want
    assert C.validate(recs) == []
    assert cli("cache-check", str(path), "--sample", "20")[0] == 0


def test_cache_detects_tampering(tmp_path):
    path = tmp_path / "n4.tsv"
    C.write_cache(path, generate(4), 4)
    lines = path.read_text().splitlines()
    f = lines[3].split("\t")
    f[1] = "0,0,0,0,1"
    lines[3] = "\t".join(f)
    path.write_text("\n".join(lines) + "\n")
    assert cli("cache-check", str(path))[0] == 1


def test_hunt_reads_cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv(C.CACHE_ENV, str(tmp_path))
    assert cli("enumerate", "4", "--edges", "3", "--cache", "--jobs", "1")[0] == 0
    assert (tmp_path / "n4_m3.tsv").exists()
    code, lines, _ = cli("hunt", "star(4)", "--jobs", "1")
    assert code == 1 and any(ln.startswith("scope=supplied") for ln in lines)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "dqslab", "family", "friendship(2)"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "n=5 m=6" in res.stdout
