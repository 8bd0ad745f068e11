"""Reading and writing ``.mcode`` files.

Format::

    # comment lines start with '#'
    nmaj=20
    01001101010001011101
    ...

One stored generator per line, leftmost character is gamma_1.  Fermion
parity is implicit and must not be listed.
"""

from __future__ import annotations

from pathlib import Path

from .code import MajoranaCode, validate
from .f2core import MajoranaOperator


class McodeParseError(ValueError):
    pass


def loads(text: str, source: str = "<string>", check: bool = True) -> MajoranaCode:
    nmaj = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        where = f"{source}:{lineno}"
        if nmaj is None:
            key, sep, value = line.partition("=")
            if not sep or key.strip() != "nmaj":
                raise McodeParseError(f"{where}: expected header 'nmaj=<N>', got {line!r}")
            try:
                nmaj = int(value)
            except ValueError:
                raise McodeParseError(f"{where}: bad nmaj value {value!r}") from None
            if nmaj <= 0 or nmaj % 2:
                raise McodeParseError(f"{where}: nmaj must be positive and even, got {nmaj}")
            continue
        if len(line) != nmaj or set(line) - {"0", "1"}:
            raise McodeParseError(f"{where}: expected {nmaj} characters of 0/1, got {line!r}")
        gens.append(MajoranaOperator.from_string(line))
    if nmaj is None:
        raise McodeParseError(f"{source}: missing 'nmaj=<N>' header")
    code = MajoranaCode(nmaj, tuple(gens))
    if check:
        report = validate(code)
        if not report.ok:
            raise McodeParseError(f"{source}: invalid code: " + "; ".join(report.violations))
    return code


def load(path: str | Path, check: bool = True) -> MajoranaCode:
    path = Path(path)
    return loads(path.read_text(), source=str(path), check=check)


def dumps(code: MajoranaCode, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    lines.append(f"nmaj={code.nmaj}")
    lines += code.to_strings()
    return "\n".join(lines) + "\n"


def dump(code: MajoranaCode, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(dumps(code, comment))
