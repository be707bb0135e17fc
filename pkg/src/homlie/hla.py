"""The ``.hla`` text format for Hom-Lie algebras, Hom-associative algebras
and actions.

Example::

    hla 1
    # [e1,e2] = e2 with alpha = diag(1, 2)
    field Q
    kind lie
    dim 2
    bracket 1 2 : 0 1
    alpha 1 : 1 0
    alpha 2 : 0 2

Indices are 1-based in the file and 0-based in memory.  Omitted entries
are zero.  In ``Qsqrt d`` fields a scalar is ``a``, ``bw`` or ``a+bw`` with
rational ``a``, ``b`` and ``w*w = d``.  When a line carries more tokens than
scalars, each bare ``w`` is joined to the token before it, so
``alpha 1 : 1/2 w 0 1/2 w`` reads as ``1/2w 0 1/2w``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import HomLieAlgebra
from .errors import ParseError
from .fields import Field, field_from_spec, field_spec
from .linalg import Matrix, zero_vector

VERSION = 1
ENTRY_WORDS = {"lie": "bracket", "assoc": "prod", "action": "act"}


@dataclass
class HlaDocument:
    """Parsed file contents; ``entries`` maps ``(word, indices)`` (0-based) to a coefficient tuple."""

    field: Field
    kind: str
    dims: tuple
    entries: dict = dc_field(default_factory=dict)
    comments: list = dc_field(default_factory=list)
    version: int = VERSION

    @property
    def dim(self) -> int:
        return self.dims[0]

    def alpha_matrix(self) -> Matrix:
        n = self.dims[-1] if self.kind == "action" else self.dim
        cols = [self.entries.get(("alpha", (i,)), zero_vector(self.field, n)) for i in range(n)]
        return Matrix.from_columns(self.field, cols, n)

    def to_lie(self, name: str = "") -> HomLieAlgebra:
        if self.kind != "lie":
            raise ValueError(f"document describes {self.kind!r}, not a Hom-Lie algebra")
        br = {idx: v for (w, idx), v in self.entries.items() if w == "bracket"}
        return HomLieAlgebra.from_brackets(self.field, self.dim, br, self.alpha_matrix(), name)

    def to_assoc(self, name: str = ""):
        from .cyclic import HomAssocAlgebra

        if self.kind != "assoc":
            raise ValueError(f"document describes {self.kind!r}, not a Hom-associative algebra")
        pr = {idx: v for (w, idx), v in self.entries.items() if w == "prod"}
        return HomAssocAlgebra.from_products(self.field, self.dim, pr, self.alpha_matrix(), name)

    def action_values(self) -> list:
        """``value[i][j] = ^{x_i} m_j`` as coordinate tuples."""
        if self.kind != "action":
            raise ValueError(f"document describes {self.kind!r}, not an action")
        nl, nm = self.dims
        z = zero_vector(self.field, nm)
        return [[self.entries.get(("act", (i, j)), z) for j in range(nm)] for i in range(nl)]

    def to_action(self, actor: HomLieAlgebra, actee: HomLieAlgebra):
        from .actions import HomAction
        from .errors import DimensionMismatch

        if (actor.dim, actee.dim) != tuple(self.dims):
            raise DimensionMismatch(f"action file has dims {self.dims}, algebras have {(actor.dim, actee.dim)}")
        if actor.field != self.field or actee.field != self.field:
            raise DimensionMismatch("action file is over a different field")
        return HomAction(actor, actee, self.action_values())


# ---------------------------------------------------------------------------
# parsing


def _tokens(line: str):
    """Whitespace tokens with 1-based columns."""
    out = []
    col = 0
    n = len(line)
    while col < n:
        while col < n and line[col].isspace():
            col += 1
        if col >= n:
            break
        start = col
        while col < n and not line[col].isspace():
            col += 1
        out.append((line[start:col], start + 1))
    return out


def _glue_w(toks):
    """Join each bare ``w`` to the scalar before it (``1/2 w`` -> ``1/2w``)."""
    out = []
    for t, c in toks:
        if t == "w" and out and not out[-1][0].endswith("w"):
            prev, pc = out.pop()
            out.append((prev + "w", pc))
        else:
            out.append((t, c))
    return out


def _int(tok, lineno, what):
    t, c = tok
    try:
        v = int(t)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {t!r}", lineno, c) from None
    return v


def _index(tok, lineno, bound):
    v = _int(tok, lineno, "index")
    if not 1 <= v <= bound:
        raise ParseError(f"index {v} out of range 1..{bound}", lineno, tok[1])
    return v - 1


def _scalars(field, toks, lineno, count):
    if len(toks) > count and field.key[0] == "Qsqrt":
        toks = _glue_w(toks)
    if len(toks) != count:
        col = toks[count][1] if len(toks) > count else (toks[-1][1] if toks else 1)
        raise ParseError(f"expected {count} scalars, found {len(toks)}", lineno, col)
    out = []
    for t, c in toks:
        try:
            out.append(field.parse(t))
        except (ParseError, ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad scalar {t!r}: {getattr(e, 'message', e)}", lineno, c) from None
    return tuple(out)


def parse_hla(text: str) -> HlaDocument:
    """Parse ``.hla`` text into a document; every error carries line and column."""
    lines = text.splitlines()
    header = {}
    entries = {}
    comments = []
    seen_version = False
    for lineno, raw in enumerate(lines, start=1):
        body, hash_, comment = raw.partition("#")
        if hash_:
            comments.append(comment.strip())
        toks = _tokens(body)
        if not toks:
            continue
        word, col = toks[0]
        if not seen_version:
            if word != "hla" or len(toks) != 2:
                raise ParseError("first line must be 'hla 1'", lineno, col)
            if toks[1][0] != str(VERSION):
                raise ParseError(f"unsupported format version {toks[1][0]!r}", lineno, toks[1][1])
            seen_version = True
            continue
        if word in ("field", "kind", "dim", "dims"):
            if word in header:
                raise ParseError(f"duplicate {word!r} line", lineno, col)
            header[word] = (toks, lineno)
            continue
        if word in ("bracket", "prod", "act", "alpha"):
            entries.setdefault(word, []).append((toks, lineno))
            continue
        raise ParseError(f"unknown keyword {word!r}", lineno, col)
    if not seen_version:
        raise ParseError("empty document: missing 'hla 1'", 1, 1)
    for need in ("field", "kind"):
        if need not in header:
            raise ParseError(f"missing {need!r} line", len(lines) or 1, 1)
    ftoks, fl = header["field"]
    try:
        if len(ftoks) == 2 and ftoks[1][0] == "Q":
            field = field_from_spec("Q")
        elif len(ftoks) == 3 and ftoks[1][0] in ("F", "Qsqrt"):
            field = field_from_spec(ftoks[1][0], _int(ftoks[2], fl, "field parameter"))
        else:
            raise ParseError("field must be 'Q', 'F <p>' or 'Qsqrt <d>'", fl, ftoks[1][1] if len(ftoks) > 1 else 1)
    except ValueError as e:
        raise ParseError(str(e), fl, ftoks[-1][1]) from None
    ktoks, kl = header["kind"]
    if len(ktoks) != 2 or ktoks[1][0] not in ENTRY_WORDS:
        raise ParseError("kind must be lie, assoc or action", kl, ktoks[-1][1])
    kind = ktoks[1][0]
    if kind == "action":
        if "dims" not in header or "dim" in header:
            raise ParseError("an action declares 'dims <nL> <nM>'", header.get("dim", header.get("kind"))[1], 1)
        dtoks, dl = header["dims"]
        if len(dtoks) != 3:
            raise ParseError("'dims' takes two integers", dl, dtoks[0][1])
        dims = (_int(dtoks[1], dl, "dimension"), _int(dtoks[2], dl, "dimension"))
    else:
        if "dim" not in header or "dims" in header:
            line = header["dims"][1] if "dims" in header else kl
            raise ParseError("an algebra declares 'dim <n>'", line, 1)
        dtoks, dl = header["dim"]
        if len(dtoks) != 2:
            raise ParseError("'dim' takes one integer", dl, dtoks[0][1])
        dims = (_int(dtoks[1], dl, "dimension"),)
    if any(d < 0 for d in dims):
        raise ParseError("dimensions must be non-negative", dl, 1)
    word = ENTRY_WORDS[kind]
    for other in ("bracket", "prod", "act"):
        if other != word and other in entries:
            toks, ln = entries[other][0]
            raise ParseError(f"{other!r} lines are not allowed in a {kind} file", ln, toks[0][1])
    if kind == "action" and "alpha" in entries:
        toks, ln = entries["alpha"][0]
        raise ParseError("alpha lines are not allowed in an action file", ln, toks[0][1])
    out = {}
    n = dims[0]
    for toks, ln in entries.get(word, []):
        if len(toks) < 4 or toks[3][0] != ":":
            raise ParseError(f"expected '{word} <i> <j> : c1 ... cn'", ln, toks[min(3, len(toks) - 1)][1])
        if kind == "action":
            i, j = _index(toks[1], ln, dims[0]), _index(toks[2], ln, dims[1])
            width = dims[1]
        else:
            i, j = _index(toks[1], ln, n), _index(toks[2], ln, n)
            width = n
            if kind == "lie" and not i < j:
                raise ParseError("bracket lines need i < j (the mirror is implied)", ln, toks[2][1])
        key = (word, (i, j))
        if key in out:
            raise ParseError(f"duplicate entry {word} {i + 1} {j + 1}", ln, toks[0][1])
        out[key] = _scalars(field, toks[4:], ln, width)
    for toks, ln in entries.get("alpha", []):
        if len(toks) < 3 or toks[2][0] != ":":
            raise ParseError("expected 'alpha <i> : c1 ... cn'", ln, toks[min(2, len(toks) - 1)][1])
        i = _index(toks[1], ln, n)
        key = ("alpha", (i,))
        if key in out:
            raise ParseError(f"duplicate entry alpha {i + 1}", ln, toks[0][1])
        out[key] = _scalars(field, toks[3:], ln, n)
    return HlaDocument(field, kind, dims, out, comments)


# ---------------------------------------------------------------------------
# emitting


def _format(F, c) -> str:
    s = F.format(c)
    # keep a unit multiple of w a single unambiguous token
    return {"w": "1w", "-w": "-1w"}.get(s, s)


def _order(key):
    word, idx = key
    return (1 if word == "alpha" else 0, idx)


def emit_hla(doc: HlaDocument) -> str:
    """Canonical text: header, comments, entries sorted, alpha columns last."""
    F = doc.field
    lines = [f"hla {doc.version}"]
    lines += [f"# {c}" if c else "#" for c in doc.comments]
    lines.append(f"field {field_spec(F)}")
    lines.append(f"kind {doc.kind}")
    if doc.kind == "action":
        lines.append(f"dims {doc.dims[0]} {doc.dims[1]}")
    else:
        lines.append(f"dim {doc.dims[0]}")
    for key in sorted(doc.entries, key=_order):
        word, idx = key
        coeffs = " ".join(_format(F, c) for c in doc.entries[key])
        where = " ".join(str(i + 1) for i in idx)
        lines.append(f"{word} {where} : {coeffs}")
    return "\n".join(lines) + "\n"


def document_from_lie(L: HomLieAlgebra, comments=()) -> HlaDocument:
    entries = {}
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            if any(L.table[i][j]):
                entries[("bracket", (i, j))] = tuple(L.table[i][j])
    for i in range(L.dim):
        col = L.alpha.column(i)
        if any(col):
            entries[("alpha", (i,))] = tuple(col)
    return HlaDocument(L.field, "lie", (L.dim,), entries, list(comments))


def document_from_assoc(A, comments=()) -> HlaDocument:
    entries = {}
    for i in range(A.dim):
        for j in range(A.dim):
            if any(A.table[i][j]):
                entries[("prod", (i, j))] = tuple(A.table[i][j])
    for i in range(A.dim):
        col = A.alpha.column(i)
        if any(col):
            entries[("alpha", (i,))] = tuple(col)
    return HlaDocument(A.field, "assoc", (A.dim,), entries, list(comments))


def document_from_action(act, comments=()) -> HlaDocument:
    entries = {}
    for i in range(act.actor.dim):
        for j in range(act.actee.dim):
            v = act.value[i][j]
            if any(v):
                entries[("act", (i, j))] = tuple(v)
    return HlaDocument(act.field, "action", (act.actor.dim, act.actee.dim), entries, list(comments))


def load_hla(path) -> HlaDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_hla(fh.read())
