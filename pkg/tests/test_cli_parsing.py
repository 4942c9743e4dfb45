import json

import pytest

from app import main
from config import FLAGS
from services.tower import build
from topology.errors import ComplexFileError
from utils.parsing import (
    parse_complex,
    parse_tower,
    read_any,
    serialize_complex,
    serialize_tower,
    sniff_kind,
)

HEXAGON_FILE = """\
# the cs 6-cycle
scx 1
dim 1
vertices 6
sigma antipodal

-3 1
1 2
2 3
-1 3
-2 -1
-3 -2
"""


def facet_lines(text):
    return [line for line in text.splitlines() if line and (line[0].isdigit() or line[0] == "-")]


def test_parse_complex_with_comments(hexagon):
    parsed = parse_complex(HEXAGON_FILE)
    assert parsed.antipodal
    assert parsed.complex == hexagon
    assert parse_complex(serialize_complex(hexagon, antipodal=True)) == parsed


def test_serialize_complex_layout(hexagon):
    text = serialize_complex(hexagon)
    assert text.splitlines()[:3] == ["scx 1", "dim 1", "vertices 6"]
    assert "sigma" not in text
    assert len(facet_lines(text)) == 6


@pytest.mark.parametrize(
    "text",
    [
        "",
        "scx 2\ndim 1\nvertices 2\n1 2\n",
        "scx 1\ndim 2\nvertices 2\n1 2\n",
        "scx 1\ndim 1\nvertices 3\n1 2\n",
        "scx 1\ndim 1\nvertices 2\n1 x\n",
        "scx 1\ndim 1\nvertices 2\n1 2\n1 2\n",
        "scx 1\ndim 1\nvertices 3\n1 2\n2 2\n",
        "scx 1\ndim 1\nvertices 2\nsigma swap\n1 2\n",
        "scx 1\ndim 1\nvertices 2\n1 2\nextra\n",
        "scx 1\ndim one\nvertices 2\n1 2\n",
    ],
)
def test_malformed_complex_files(text):
    with pytest.raises(ComplexFileError):
        parse_complex(text)


def test_tower_round_trip():
    tower = build(3)
    text = serialize_tower(tower)
    assert sniff_kind(text) == "tower"
    assert parse_tower(text) == tower


def test_malformed_tower_files():
    text = serialize_tower(build(2))
    with pytest.raises(ComplexFileError):
        parse_tower(text.replace("level 1", "level 5"))
    with pytest.raises(ComplexFileError):
        parse_tower(text.replace("levels 3", "levels 4"))
    with pytest.raises(ComplexFileError):
        sniff_kind("hello\n")


def test_read_any(tmp_path, hexagon):
    complex_path = tmp_path / "hex.scx"
    complex_path.write_text(HEXAGON_FILE)
    parsed, tower = read_any(str(complex_path))
    assert parsed.complex == hexagon and tower is None

    tower_path = tmp_path / "t.scxt"
    tower_path.write_text(serialize_tower(build(2)))
    parsed, tower = read_any(str(tower_path))
    assert parsed.antipodal
    assert tower.dim == 2 and parsed.complex == tower.top

    with pytest.raises(ComplexFileError):
        read_any(str(tmp_path / "missing.scx"))


def test_build_command(tmp_path, capsys):
    out = tmp_path / "rp2.scx"
    assert main(["build", "--dim", "2", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("scx 1\ndim 2\nvertices 6\n")
    assert len(facet_lines(text)) == 10
    stdout = capsys.readouterr().out
    assert "f=(6,15,10)" in stdout
    assert "reference=match" in stdout


def test_build_rejects_dimension_out_of_range(tmp_path):
    assert main(["build", "--dim", str(FLAGS.MAX_BUILD_DIM + 1), "--out", str(tmp_path / "x.scx")]) == 2
    assert main(["build", "--dim", "-1", "--out", str(tmp_path / "x.scx")]) == 2


def test_build_output_is_stable(tmp_path):
    first, second = tmp_path / "a.scx", tmp_path / "b.scx"
    assert main(["build", "--dim", "3", "--out", str(first)]) == 0
    assert main(["build", "--dim", "3", "--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_label_order_build_agrees_below_five(tmp_path):
    guided, plain = tmp_path / "a.scx", tmp_path / "b.scx"
    assert main(["build", "--dim", "3", "--out", str(guided)]) == 0
    assert main(["build", "--dim", "3", "--label-order", "--out", str(plain)]) == 0
    assert guided.read_bytes() == plain.read_bytes()


def test_verify_command(tmp_path, capsys):
    out = tmp_path / "rp2.scx"
    main(["build", "--dim", "2", "--out", str(out)])
    capsys.readouterr()
    assert main(["verify", str(out)]) == 0
    stdout = capsys.readouterr().out
    assert "hz=Z,Z/2,0" in stdout
    assert "hgf2=(1,1,1)" in stdout
    assert "status=pass" in stdout


def test_verify_detects_missing_facet(tmp_path, capsys):
    out = tmp_path / "rp2.scx"
    main(["build", "--dim", "2", "--out", str(out)])
    lines = out.read_text().splitlines()
    broken = tmp_path / "broken.scx"
    broken.write_text("\n".join(lines[:-1]) + "\n")
    capsys.readouterr()
    assert main(["verify", str(broken), "--checks", "pm,hgf2"]) == 1
    assert "status=fail" in capsys.readouterr().out


def test_verify_rejects_garbage(tmp_path):
    garbage = tmp_path / "garbage.scx"
    garbage.write_text("not a complex\n")
    assert main(["verify", str(garbage)]) == 2
    hexagon_path = tmp_path / "hex.scx"
    hexagon_path.write_text(HEXAGON_FILE)
    assert main(["verify", str(hexagon_path), "--checks", "bogus"]) == 2


def test_verify_tower_file(tmp_path, capsys):
    rp, tower = tmp_path / "rp3.scx", tmp_path / "s3.scxt"
    assert main(["build", "--dim", "3", "--out", str(rp), "--tower", str(tower)]) == 0
    capsys.readouterr()
    assert main(["verify", str(tower), "--checks", "cs,4cycle,pm,cert"]) == 0
    stdout = capsys.readouterr().out
    assert "cs4cycle=none" in stdout
    assert "cert=4/4" in stdout
    assert main(["tower", str(tower)]) == 0


def test_compare_command(capsys):
    assert main(["compare", "--dim", "5"]) == 0
    assert "d=5  bound=22  ours=32  kuhnel=63" in capsys.readouterr().out
    assert main(["compare", "--dim", "2", "--upto", "4"]) == 0
    assert "out of stated range" in capsys.readouterr().out
    assert main(["compare", "--dim", "4", "--upto", "3"]) == 2


def test_kuhnel_command(tmp_path, capsys):
    out = tmp_path / "k2.scx"
    assert main(["kuhnel", "--dim", "2", "--out", str(out)]) == 0
    assert "vertices 7" in out.read_text()
    assert "f=(7," in capsys.readouterr().out


def test_run_record_written(tmp_path, monkeypatch):
    record_path = tmp_path / "runs.jsonl"
    monkeypatch.setattr(FLAGS, "LOGGING_ENABLED", True)
    monkeypatch.setattr(FLAGS, "RUN_LOG_PATH", str(record_path))
    assert main(["compare", "--dim", "3"]) == 0
    record = json.loads(record_path.read_text().splitlines()[-1])
    assert record["command"] == "compare"
    assert record["summary"]["dims"] == [3, 3]
