"""The bundled example files, loadable by name (``corpus.load("so3")``)."""

from __future__ import annotations

from importlib import resources

from .hla import HlaDocument, parse_hla


def names(kind: str | None = None) -> list:
    """Sorted names of the bundled files, optionally only those of one kind."""
    out = []
    for entry in resources.files("homlie").joinpath("data").iterdir():
        if entry.name.endswith(".hla"):
            name = entry.name[:-4]
            if kind is None or document(name).kind == kind:
                out.append(name)
    return sorted(out)


def text(name: str) -> str:
    return resources.files("homlie").joinpath("data", f"{name}.hla").read_text(encoding="utf-8")


def path(name: str):
    """A filesystem path to a bundled file (the package is installed unzipped)."""
    return str(resources.files("homlie").joinpath("data", f"{name}.hla"))


def document(name: str) -> HlaDocument:
    return parse_hla(text(name))


def load(name: str):
    """The domain object a bundled file describes (actions come back as documents)."""
    doc = document(name)
    if doc.kind == "lie":
        return doc.to_lie(name)
    if doc.kind == "assoc":
        return doc.to_assoc(name)
    return doc
