"""Text formats for group specs, elements and classification pairs.

Spec file::

    rank 2
    torsion 2          (optional)
    form
    0 1
    -1 0

Group element: ``(a1,...,ar;t1,...,tk)``, the ``;`` block omitted without
torsion.  Algebra element: ``3/2*[1,0] - 1*[0,1]``; ``0`` is the zero
element and a bare ``[1,0]`` means ``1*[1,0]``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import AlgebraElement
from .exceptions import ParseError
from .group import GroupElement, GroupSpec, validate_spec
from .ideal import FULL, ZERO, Backend, IdealPair, truncated


def format_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _coords(x: GroupElement) -> str:
    s = ",".join(str(a) for a in x.free)
    if x.torsion:
        s += ";" + ",".join(str(t) for t in x.torsion)
    return s


def format_group_element(x: GroupElement) -> str:
    return f"({_coords(x)})"


def format_element(x: AlgebraElement) -> str:
    out = []
    for g, c in x.items():
        term = f"{format_rational(abs(c))}*[{_coords(g)}]"
        if not out:
            out.append(term if c > 0 else "-" + term)
        else:
            out.append(("+ " if c > 0 else "- ") + term)
    return " ".join(out) if out else "0"


def format_coset(c: tuple[int, ...]) -> str:
    return "(" + ",".join(str(a) for a in c) + ")"


def format_spec(spec: GroupSpec) -> str:
    lines = [f"rank {spec.free_rank}"]
    if spec.torsion_orders:
        lines.append("torsion " + " ".join(str(d) for d in spec.torsion_orders))
    lines.append("form")
    lines.extend(" ".join(str(a) for a in row) for row in spec.form)
    return "\n".join(lines) + "\n"


def format_pair(p: IdealPair) -> str:
    lines = []
    for label, part, empty in (("V0", p.v0, "EMPTY"), ("V", p.v, "ZERO")):
        if part is FULL or part is ZERO:
            lines.append(f"{label}: {part}")
        elif not part:
            lines.append(f"{label}: {empty}")
        else:
            lines.append(f"{label}:")
            lines.extend(f"  {format_element(e)}" for e in part)
    lines.append(f"backend: {p.backend}")
    return "\n".join(lines) + "\n"


# --- parsing -------------------------------------------------------------------


def _int(tok: str, line: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", line, col) from None


def _tokens(text: str):
    for m in re.finditer(r"\S+", text):
        yield m.group(), m.start() + 1


def parse_spec(text: str) -> GroupSpec:
    lines = [(i + 1, ln.split("#", 1)[0]) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln.strip()]
    pos = 0

    def take():
        nonlocal pos
        if pos >= len(lines):
            last = lines[-1][0] + 1 if lines else 1
            raise ParseError("unexpected end of input", last, 1)
        item = lines[pos]
        pos += 1
        return item

    lineno, ln = take()
    toks = list(_tokens(ln))
    if toks[0][0] != "rank" or len(toks) != 2:
        raise ParseError("expected 'rank <r>'", lineno, toks[0][1])
    rank = _int(toks[1][0], lineno, toks[1][1])
    if rank < 0:
        raise ParseError("rank must be nonnegative", lineno, toks[1][1])
    torsion: list[int] = []
    lineno, ln = take()
    toks = list(_tokens(ln))
    if toks[0][0] == "torsion":
        torsion = [_int(t, lineno, c) for t, c in toks[1:]]
        lineno, ln = take()
        toks = list(_tokens(ln))
    if toks[0][0] != "form" or len(toks) != 1:
        raise ParseError("expected 'form'", lineno, toks[0][1])
    rows = []
    for _ in range(rank):
        lineno, ln = take()
        toks = list(_tokens(ln))
        if len(toks) != rank:
            raise ParseError(f"expected {rank} entries, got {len(toks)}", lineno, 1)
        rows.append(tuple(_int(t, lineno, c) for t, c in toks))
    if pos < len(lines):
        lineno, ln = lines[pos]
        raise ParseError("unexpected trailing content", lineno, 1)
    return validate_spec(GroupSpec(rank, tuple(torsion), tuple(rows)))


def _parse_coords(spec: GroupSpec, body: str, col: int) -> GroupElement:
    free_s, _, tors_s = body.partition(";")
    try:
        free = [int(a) for a in free_s.split(",")] if free_s.strip() else []
        tors = [int(a) for a in tors_s.split(",")] if tors_s.strip() else []
    except ValueError:
        raise ParseError(f"bad coordinates {body!r}", 1, col) from None
    if len(free) != spec.free_rank:
        raise ParseError(f"expected {spec.free_rank} free coordinates, got {len(free)}", 1, col)
    if len(tors) != len(spec.torsion_orders):
        raise ParseError(f"expected {len(spec.torsion_orders)} torsion coordinates, got {len(tors)}", 1, col)
    return spec.element(free, tors)


def parse_group_element(spec: GroupSpec, text: str) -> GroupElement:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError("group elements are written (a1,...,ar;t1,...,tk)", 1, 1)
    return _parse_coords(spec, s[1:-1], 2)


_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coef>[+-]?\d+(?:/\d+)?)\s*\*\s*)?\[(?P<coords>[^\]]*)\]\s*"
)


def parse_element(spec: GroupSpec, text: str) -> AlgebraElement:
    if text.strip() == "0":
        return AlgebraElement()
    pos = 0
    terms = []
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TERM.match(text, pos)
        if not m or (terms and not m.group("sign")):
            raise ParseError(f"cannot parse term at {text[pos:]!r}", 1, pos + 1)
        try:
            coef = Fraction(m.group("coef") or 1)
        except ZeroDivisionError:
            raise ParseError("zero denominator", 1, m.start("coef") + 1) from None
        if m.group("sign") == "-":
            coef = -coef
        x = _parse_coords(spec, m.group("coords"), m.start("coords") + 1)
        terms.append((x, coef))
        pos = m.end()
    if not terms:
        raise ParseError("empty element", 1, 1)
    return AlgebraElement(terms)


def parse_pair(spec: GroupSpec, text: str) -> IdealPair:
    """Inverse of :func:`format_pair`; no normalization is applied."""
    parts = {"V0": [], "V": []}
    markers = {}
    backend = None
    current = None
    for lineno, ln in enumerate(text.splitlines(), start=1):
        if not ln.strip():
            continue
        if ln.startswith((" ", "\t")):
            if current is None or current in markers:
                raise ParseError("element line outside a V0/V block", lineno, 1)
            try:
                parts[current].append(parse_element(spec, ln.strip()))
            except ParseError as e:
                raise ParseError(e.message, lineno, e.column) from None
            continue
        key, sep, rest = ln.partition(":")
        key, rest = key.strip(), rest.strip()
        if not sep or key not in ("V0", "V", "backend"):
            raise ParseError(f"unexpected line {ln!r}", lineno, 1)
        if key == "backend":
            backend = _parse_backend(rest, lineno)
            continue
        current = key
        if rest:
            allowed = {"V0": {"FULL": FULL, "EMPTY": ()}, "V": {"FULL": FULL, "ZERO": ZERO}}[key]
            if rest not in allowed:
                raise ParseError(f"unknown marker {rest!r}", lineno, ln.index(rest) + 1)
            markers[key] = allowed[rest]
    if backend is None:
        raise ParseError("missing backend line", len(text.splitlines()) + 1, 1)
    v0 = markers.get("V0", tuple(parts["V0"]))
    v = markers.get("V", tuple(parts["V"]) or ZERO)
    return IdealPair(v0, v, backend)


def _parse_backend(text: str, lineno: int) -> Backend:
    m = re.fullmatch(r"Truncated\((\d+)\)", text)
    if m:
        return truncated(int(m.group(1)))
    if text in ("ExactFiniteKernel", "LaurentRankOne"):
        return Backend(text)
    raise ParseError(f"unknown backend {text!r}", lineno, 1)

