import json
import subprocess
import sys

import pytest

from permclasses.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_classes(capsys):
    assert run(["classes", "prod(S(4),S(4))"], capsys)[:2] == (0, "25\n")


def test_pn(capsys):
    assert run(["pn", "12"], capsys)[:2] == (0, "77\n")


def test_parse_error_caret(capsys):
    code, out, err = run(["classes", "S(4"], capsys)
    assert code == 2 and out == ""
    assert "column 4" in err
    assert err.splitlines()[-2:] == ["S(4", "   ^"]


def test_order_json(capsys):
    code, out, _ = run(["order", "M11", "--json"], capsys)
    assert code == 0 and json.loads(out) == {"spec": "M11", "degree": 11, "order": "7920"}


def test_blocks(capsys):
    assert run(["blocks", "D(8)"], capsys)[:2] == (0, "{1,3}{2,4}\n")
    assert run(["blocks", "M12"], capsys)[:2] == (0, "primitive\n")
    assert run(["blocks", "gens{degree=4;(1,2)}"], capsys)[0] == 2


def test_pn_bounds(capsys):
    code, out, _ = run(["pn-bounds", "50", "--json"], capsys)
    assert code == 0 and json.loads(out)["holds"] is True
    assert run(["pn-bounds", "0"], capsys)[0] == 2


def test_bound_chain(capsys):
    assert run(["bound", "chain", "--indices", "2,12"], capsys)[:2] == (0, "315392\n")
    assert run(["bound", "chain", "--indices", "2,1"], capsys)[0] == 2


def test_bound_main(capsys):
    code, out, _ = run(["bound", "main", "--k", "5", "--n", "4"], capsys)
    assert code == 0 and "lhs=125 relation=\"<=\" rhs=125 holds=true tight=true" in out
    assert run(["bound", "main", "--k", "6", "--n", "4"], capsys)[0] == 1
    assert run(["bound", "main", "--k", "6", "--n", "3"], capsys)[0] == 2


def test_limit_exit(capsys):
    code, _, err = run(["classes", "M12", "--limit", "1000"], capsys)
    assert code == 3 and "exceeds" in err


def test_verify_claims(capsys):
    code, out, _ = run(["verify", "claims", "--json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["summary"]["pass"] == 14


def test_verify_claims_fail_and_strict(tmp_path, capsys):
    bad = tmp_path / "bad.manifest"
    bad.write_text("ClassCount | a12 | A(12) | 44 | off by one\n")
    assert run(["verify", "claims", "--manifest", str(bad)], capsys)[0] == 1
    big = tmp_path / "big.manifest"
    big.write_text("ClassCount | big | M12 | 15\n")
    assert run(["verify", "claims", "--manifest", str(big), "--limit", "100"], capsys)[0] == 0
    assert run(["verify", "claims", "--manifest", str(big), "--limit", "100", "--strict"], capsys)[0] == 3
    empty = tmp_path / "empty.manifest"
    empty.write_text("")
    assert run(["verify", "claims", "--manifest", str(empty)], capsys)[0] == 0


def test_verify_claims_manifest_errors(tmp_path, capsys):
    broken = tmp_path / "broken.manifest"
    broken.write_text("ClassCount | x\n")
    assert run(["verify", "claims", "--manifest", str(broken)], capsys)[0] == 2
    assert run(["verify", "claims", "--manifest", str(tmp_path / "missing")], capsys)[0] == 2


def test_verify_claims_table(capsys):
    code, out, _ = run(["verify", "claims", "--table"], capsys)
    assert code == 0 and out.splitlines()[-1].startswith("overall=Pass records=14")


def test_verify_sweep_small(capsys):
    code, out, _ = run(["verify", "sweep", "--max-degree", "6"], capsys)
    assert code == 0 and out.splitlines()[-1].startswith("overall=Pass")
    assert run(["verify", "sweep", "--max-degree", "30"], capsys)[0] == 2


def test_usage_errors():
    with pytest.raises(SystemExit) as info:
        main(["pn", "twelve"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_module_entry_point():
    done = subprocess.run([sys.executable, "-m", "permclasses.cli", "pn", "12"], capture_output=True, text=True)
    assert (done.returncode, done.stdout) == (0, "77\n")
