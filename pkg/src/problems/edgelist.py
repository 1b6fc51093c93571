"""
Edge-list text format.

    # lccvqe edge list
    # kind=gnp p=0.5 seed=0
    10 23
    0 1
    0 4
    ...

Lines starting with ``#`` are comments. The ``kind=...`` comment carries the
generator metadata; the first non-comment line is ``n m`` followed by m lines
``u v``.
"""
from pathlib import Path
from typing import Dict, Union

from ..errors import ParseError
from .graph import GraphMeta, MaxCutInstance

PathLike = Union[str, Path]


def format_edgelist(g: MaxCutInstance) -> str:
    lines = ["# lccvqe edge list", f"# {g.meta.describe()}", f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def write_edgelist(g: MaxCutInstance, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_edgelist(g))
    return path


def _parse_meta(tokens: Dict[str, str], line_no: int) -> GraphMeta:
    kind = tokens.get("kind", "custom")
    try:
        seed = int(tokens["seed"]) if "seed" in tokens else None
        if kind == "gnp":
            return GraphMeta(kind="gnp", seed=seed, p=float(tokens["p"]))
        if kind == "regular":
            return GraphMeta(kind="regular", seed=seed, d=int(tokens["d"]))
    except (KeyError, ValueError) as e:
        raise ParseError(f"Malformed generator metadata: {e}", line=line_no) from e
    return GraphMeta()


def parse_edgelist(text: str) -> MaxCutInstance:
    meta = GraphMeta()
    header = None
    edges = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            if body.startswith("kind="):
                tokens = dict(tok.split("=", 1) for tok in body.split() if "=" in tok)
                meta = _parse_meta(tokens, line_no)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"Expected two integers, got '{line}'", line=line_no)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError as e:
            raise ParseError(f"Expected two integers, got '{line}'", line=line_no) from e
        if header is None:
            header = (a, b)
        else:
            edges.append((a, b))

    if header is None:
        raise ParseError("Missing 'n m' header line", line=1)
    n, m = header
    if len(edges) != m:
        raise ParseError(f"Header announces {m} edges but {len(edges)} were listed")
    try:
        return MaxCutInstance.from_edges(n, edges, meta)
    except ValueError as e:
        raise ParseError(f"Invalid instance: {e}") from e


def read_edgelist(path: PathLike) -> MaxCutInstance:
    return parse_edgelist(Path(path).read_text())
