import json

import pytest

import main
from config.settings import get_settings
from services.codes import octacode, preparata

settings = get_settings()


def run(argv, capsys):
    status = main.main(argv)
    return status, capsys.readouterr()


def test_code_kerdock_prints_both_forms(capsys):
    status, out = run(["code", "--family", "kerdock", "--m", "3"], capsys)
    assert status == 0
    assert "type: 4^4 2^0" in out.out
    assert "generator (trace form):" in out.out
    assert "generator (cyclic form):" in out.out
    assert "g: 3121" in out.out


def test_code_qrm_repetition(capsys):
    status, out = run(["code", "--family", "qrm", "--m", "3", "--r", "0"], capsys)
    assert status == 0
    generator = out.out.split("generator:\n", 1)[1].splitlines()
    assert generator[0] == "11111111"


def test_code_goethals(capsys):
    status, out = run(["code", "--family", "goethals", "--m", "3"], capsys)
    assert status == 0
    assert "type: 4^1 2^3" in out.out


def test_encode_zero_and_malformed(tmp_path, capsys):
    source = tmp_path / "info.txt"
    source.write_text("0000\n12x4\n1230\n")
    status, out = run(["encode", "--family", "kerdock", "--m", "3", "--in", str(source)], capsys)
    lines = out.out.splitlines()
    assert lines[0] == f"# z4codes {settings.version}"
    assert lines[1] == f"# command=encode family=kerdock m=3 seed={settings.default_seed}"
    assert lines[2] == "00000000"
    assert lines[3].startswith("# line 2:")
    assert len(lines[4]) == 8
    assert status == 1


def test_decode_injected_octacode_error(tmp_path, capsys):
    c = octacode().codewords()[77].copy()
    received = c.copy()
    received[4] = (received[4] + 1) % 4
    source = tmp_path / "received.txt"
    source.write_text("".join(map(str, received)) + "\n")
    status, out = run(["decode", "--family", "octacode", "--in", str(source)], capsys)
    record = json.loads(out.out.splitlines()[1])
    assert status == 0
    assert record["status"] == "corrected"
    assert record["codeword"] == "".join(map(str, c))
    assert record["errorPositions"] == [4]
    assert record["errorValues"] == [1]


def test_decode_soft_pairs(tmp_path, capsys):
    source = tmp_path / "soft.txt"
    source.write_text(" ".join(["1.0,0.1"] * 8) + "\n")
    status, out = run(["decode", "--family", "kerdock", "--m", "3", "--in", str(source)], capsys)
    header, record = [json.loads(line) for line in out.out.splitlines()]
    assert header["header"]["version"] == settings.version
    assert (header["header"]["family"], header["header"]["m"]) == ("kerdock", 3)
    assert status == 0
    assert record["status"] == "no-error"
    assert record["codeword"] == "00000000"


def test_decode_preparata_clean_and_malformed(tmp_path, capsys):
    word = "".join(map(str, preparata(3).codewords()[3]))
    source = tmp_path / "hard.txt"
    source.write_text(f"{word}\n0123\n")
    status, out = run(["decode", "--family", "preparata", "--m", "3", "--in", str(source)], capsys)
    header, first, second = [json.loads(line) for line in out.out.splitlines()]
    assert header["header"] == {
        "tool": "z4codes",
        "version": settings.version,
        "command": "decode",
        "family": "preparata",
        "m": 3,
        "seed": settings.default_seed,
    }
    assert first["status"] == "no-error"
    assert second == {"line": 2, "status": "malformed", "message": second["message"]}
    assert status == 1


def test_verify_rings_suite(tmp_path, capsys):
    target = tmp_path / "report.json"
    status, _ = run(["verify", "--suite", "rings", "--seed", "5", "--out", str(target)], capsys)
    report = json.loads(target.read_text())
    assert status == 0
    assert (report["seed"], report["suite"], report["version"]) == (5, "rings", settings.version)
    assert report["passed"] is True
    assert all(check["pass"] for check in report["checks"])


def test_simulate_is_byte_identical(capsys):
    argv = ["simulate", "--family", "kerdock", "--m", "3", "--snr", "0,3", "--trials", "30", "--seed", "9"]
    _, first = run(argv, capsys)
    _, second = run(argv, capsys)
    assert first.out == second.out
    assert first.out.startswith("# z4codes")
    assert "# command=simulate family=kerdock m=3 trials=30 seed=9\n" in first.out


def test_transform_writes_spectra(tmp_path, capsys):
    source = tmp_path / "words.txt"
    source.write_text("1000000\n21000000\n123\n")
    status, out = run(["transform", "--m", "3", "--in", str(source)], capsys)
    lines = out.out.splitlines()
    assert lines[0] == f"# z4codes {settings.version}"
    assert json.loads(lines[2]) == ["100"] * 7
    assert json.loads(lines[3]) == ["100"] * 7
    assert lines[4].startswith("# line 3:")
    assert status == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--suite", ""],
        ["code", "--family", "kerdock"],
        ["code", "--family", "zrm", "--m", "3"],
        ["simulate", "--family", "kerdock", "--m", "3"],
        ["code", "--family", "dg", "--m", "5", "--r", "4"],
        ["decode", "--family", "goethals", "--m", "3"],
        ["transform"],
    ],
)
def test_usage_errors(argv, capsys):
    status, out = run(argv, capsys)
    assert status == 2
    assert out.err


def test_unknown_command_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main.main(["frobnicate"])
    assert exc.value.code == 2
