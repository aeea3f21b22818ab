"""Shipped example diagrams in the `.tgl` format."""

from importlib import resources

from ..diagram import TangleDiagram, parse_tangle


def names() -> list[str]:
    out = []
    for entry in resources.files(__package__).iterdir():
        if entry.name.endswith(".tgl"):
            out.append(entry.name[:-4])
    return sorted(out)


def source(name: str) -> str:
    return resources.files(__package__).joinpath(f"{name}.tgl").read_text()


def load(name: str) -> TangleDiagram:
    return parse_tangle(source(name))
