"""
Plain-text facet lists.

ComplexFile:
    scx 1
    dim <d>
    vertices <n>
    sigma antipodal          (optional: declares σ(k) = -k)
    <one facet per line, ascending signed integers>

TowerFile:
    scx-tower 1
    levels <k>
    then per level i: "level i", an embedded ComplexFile for S_i,
    "ball_B i" and "ball_D i" followed by facet lines, and "apex i <v>".

Lines starting with "#" and blank lines are ignored.
"""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from topology.complex import SimplicialComplex
from topology.errors import ComplexFileError, TopologyError
from services.tower import Certificate, Tower, TowerLevel

COMPLEX_HEADER = "scx 1"
TOWER_HEADER = "scx-tower 1"


@dataclass(frozen=True)
class ComplexFile:
    complex: SimplicialComplex
    antipodal: bool = False


def _content_lines(text: str) -> List[Tuple[int, str]]:
    out = []
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((n, line))
    return out


def _is_facet_line(line: str) -> bool:
    return line[0].isdigit() or line[0] == "-"


def _facet(n: int, line: str) -> Tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in line.split())
    except ValueError:
        raise ComplexFileError(f"line {n}: not a facet: {line!r}")


def _keyword(n: int, line: str, name: str, arity: int) -> List[str]:
    parts = line.split()
    if parts[0] != name or len(parts) != arity + 1:
        raise ComplexFileError(f"line {n}: expected '{name}' with {arity} argument(s), got {line!r}")
    return parts[1:]


def _int(n: int, token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ComplexFileError(f"line {n}: expected an integer, got {token!r}")


def _build(facets: List[Tuple[int, ...]], where: str) -> SimplicialComplex:
    try:
        delta = SimplicialComplex.from_facets(facets)
    except TopologyError as e:
        raise ComplexFileError(f"{where}: {e}")
    if len(delta.facets) != len(facets):
        raise ComplexFileError(f"{where}: facet list has duplicates or dominated faces")
    return delta


def _parse_block(lines: List[Tuple[int, str]], pos: int) -> Tuple[ComplexFile, int]:
    """Parse one ComplexFile starting at lines[pos]; returns it and the next position."""
    if pos >= len(lines) or lines[pos][1] != COMPLEX_HEADER:
        where = lines[pos][0] if pos < len(lines) else "end of file"
        raise ComplexFileError(f"line {where}: expected header {COMPLEX_HEADER!r}")
    if pos + 2 >= len(lines):
        raise ComplexFileError("truncated complex header")
    n, line = lines[pos + 1]
    dim = _int(n, _keyword(n, line, "dim", 1)[0])
    n, line = lines[pos + 2]
    nverts = _int(n, _keyword(n, line, "vertices", 1)[0])
    pos += 3
    antipodal = False
    if pos < len(lines) and lines[pos][1].startswith("sigma"):
        n, line = lines[pos]
        if _keyword(n, line, "sigma", 1)[0] != "antipodal":
            raise ComplexFileError(f"line {n}: only 'sigma antipodal' is supported")
        antipodal = True
        pos += 1
    facets = []
    first = lines[pos][0] if pos < len(lines) else 0
    while pos < len(lines) and _is_facet_line(lines[pos][1]):
        facets.append(_facet(*lines[pos]))
        pos += 1
    delta = _build(facets, f"complex starting near line {first}")
    if delta.dim != dim:
        raise ComplexFileError(f"declared dim {dim}, facets give {delta.dim}")
    if len(delta.vertex_set()) != nverts:
        raise ComplexFileError(f"declared {nverts} vertices, facets use {len(delta.vertex_set())}")
    return ComplexFile(delta, antipodal), pos


def parse_complex(text: str) -> ComplexFile:
    lines = _content_lines(text)
    parsed, pos = _parse_block(lines, 0)
    if pos != len(lines):
        n, line = lines[pos]
        raise ComplexFileError(f"line {n}: unexpected content {line!r}")
    return parsed


def serialize_complex(delta: SimplicialComplex, antipodal: bool = False) -> str:
    out = [COMPLEX_HEADER, f"dim {delta.dim}", f"vertices {len(delta.vertex_set())}"]
    if antipodal:
        out.append("sigma antipodal")
    out.extend(_facet_lines(delta))
    return "\n".join(out) + "\n"


def _facet_lines(delta: SimplicialComplex) -> Iterable[str]:
    return (" ".join(str(v) for v in f) for f in delta.facets)


def sniff_kind(text: str) -> str:
    """'complex' or 'tower', from the first content line."""
    lines = _content_lines(text)
    if not lines:
        raise ComplexFileError("empty file")
    head = lines[0][1]
    if head == COMPLEX_HEADER:
        return "complex"
    if head == TOWER_HEADER:
        return "tower"
    raise ComplexFileError(f"unknown header {head!r}")


def serialize_tower(tower: Tower) -> str:
    out = [TOWER_HEADER, f"levels {len(tower.levels)}"]
    for i, level in enumerate(tower.levels):
        cert = level.certificate
        out.append(f"level {i}")
        out.append(serialize_complex(level.sphere, antipodal=True).rstrip("\n"))
        out.append(f"ball_B {i}")
        out.extend(_facet_lines(cert.ball_B))
        out.append(f"ball_D {i}")
        out.extend(_facet_lines(cert.ball_D))
        out.append(f"apex {i} {cert.apex_v}")
    return "\n".join(out) + "\n"


def _facet_section(lines: List[Tuple[int, str]], pos: int, name: str, level: int) -> Tuple[SimplicialComplex, int]:
    if pos >= len(lines):
        raise ComplexFileError(f"missing '{name} {level}'")
    n, line = lines[pos]
    if _int(n, _keyword(n, line, name, 1)[0]) != level:
        raise ComplexFileError(f"line {n}: expected '{name} {level}'")
    pos += 1
    facets = []
    while pos < len(lines) and _is_facet_line(lines[pos][1]):
        facets.append(_facet(*lines[pos]))
        pos += 1
    return _build(facets, f"{name} {level}"), pos


def parse_tower(text: str) -> Tower:
    lines = _content_lines(text)
    if not lines or lines[0][1] != TOWER_HEADER:
        raise ComplexFileError(f"expected header {TOWER_HEADER!r}")
    if len(lines) < 2:
        raise ComplexFileError("truncated tower header")
    n, line = lines[1]
    count = _int(n, _keyword(n, line, "levels", 1)[0])
    pos = 2
    levels: List[TowerLevel] = []
    below = SimplicialComplex.empty()
    for i in range(count):
        if pos >= len(lines):
            raise ComplexFileError(f"missing 'level {i}'")
        n, line = lines[pos]
        if _int(n, _keyword(n, line, "level", 1)[0]) != i:
            raise ComplexFileError(f"line {n}: levels must be contiguous from 0, expected level {i}")
        sphere_file, pos = _parse_block(lines, pos + 1)
        ball_b, pos = _facet_section(lines, pos, "ball_B", i)
        ball_d, pos = _facet_section(lines, pos, "ball_D", i)
        if pos >= len(lines):
            raise ComplexFileError(f"missing 'apex {i}'")
        n, line = lines[pos]
        lvl, apex = (_int(n, tok) for tok in _keyword(n, line, "apex", 2))
        if lvl != i:
            raise ComplexFileError(f"line {n}: expected 'apex {i} <vertex>'")
        pos += 1
        levels.append(TowerLevel(sphere_file.complex, Certificate(ball_b, ball_d, apex, below)))
        below = sphere_file.complex
    if pos != len(lines):
        n, line = lines[pos]
        raise ComplexFileError(f"line {n}: unexpected content {line!r}")
    return Tower(tuple(levels))


def read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise ComplexFileError(f"cannot read {path}: {e}")


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def read_complex(path: str) -> ComplexFile:
    return parse_complex(read_text(path))


def write_complex(path: str, delta: SimplicialComplex, antipodal: bool = False) -> None:
    write_text(path, serialize_complex(delta, antipodal))


def read_tower(path: str) -> Tower:
    return parse_tower(read_text(path))


def write_tower(path: str, tower: Tower) -> None:
    write_text(path, serialize_tower(tower))


def read_any(path: str) -> Tuple[Optional[ComplexFile], Optional[Tower]]:
    """A TowerFile yields its top sphere plus the tower itself."""
    text = read_text(path)
    if sniff_kind(text) == "tower":
        tower = parse_tower(text)
        if not tower.levels:
            raise ComplexFileError("tower file has no levels")
        return ComplexFile(tower.top, antipodal=True), tower
    return parse_complex(text), None


__all__ = [
    "ComplexFile",
    "parse_complex",
    "parse_tower",
    "read_any",
    "read_complex",
    "read_tower",
    "serialize_complex",
    "serialize_tower",
    "sniff_kind",
    "write_complex",
    "write_tower",
]
