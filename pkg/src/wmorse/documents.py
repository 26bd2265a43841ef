"""File formats for the command line: JSON documents and FASTA.

A complex document is a JSON object with a "simplices" array of
{"vertices": [...], "weight": n} records (every face listed explicitly)
and an optional "vertex_names" table keyed by stringified vertex ids.

A Morse document is a JSON object with a "values" array of
{"vertices": [...], "value": v} records covering every simplex of the
complex it accompanies. Values may be integers, "p/q" strings, or
decimal strings; bare JSON decimals are also fine because the literal
text is handed to Fraction before any float is built.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Mapping

from .complexes import WeightedComplex, simplex, validate_complex
from .errors import DocumentError
from .morse import MorseFunction, validate_morse


def _load_json(path: str, exact_decimals: bool = False):
    kwargs = {"parse_float": Fraction} if exact_decimals else {}
    try:
        with open(path) as fh:
            return json.load(fh, **kwargs)
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e.strerror or e}")
    except json.JSONDecodeError as e:
        raise DocumentError(f"{path}: {e.msg}", line=e.lineno)


def _vertex_list(record, where: str):
    if not isinstance(record, dict) or "vertices" not in record:
        raise DocumentError(f"{where}: expected an object with a 'vertices' list")
    vs = record["vertices"]
    if not isinstance(vs, list) or not vs:
        raise DocumentError(f"{where}: 'vertices' must be a nonempty list")
    for v in vs:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise DocumentError(f"{where}: vertex ids must be non-negative integers")
    return vs


def load_complex_document(
    path: str, constant_weight: int | None = None
) -> tuple[WeightedComplex, dict[int, str] | None]:
    """Read a complex document.

    With constant_weight set, the records are treated as generating
    faces: the face closure is taken and every simplex gets that weight,
    so maximal-faces-only input is enough.
    """
    doc = _load_json(path)
    if not isinstance(doc, dict) or "simplices" not in doc:
        raise DocumentError(f"{path}: expected an object with a 'simplices' array")
    records = doc["simplices"]
    if not isinstance(records, list):
        raise DocumentError(f"{path}: 'simplices' must be an array")
    if not records:
        raise DocumentError(f"{path}: empty complex")

    names = None
    if "vertex_names" in doc:
        raw = doc["vertex_names"]
        if not isinstance(raw, dict):
            raise DocumentError(f"{path}: 'vertex_names' must be an object")
        try:
            names = {int(k): str(v) for k, v in raw.items()}
        except ValueError:
            raise DocumentError(f"{path}: 'vertex_names' keys must be integers")

    if constant_weight is not None:
        generators = [
            simplex(_vertex_list(r, f"{path}: simplices[{i}]"))
            for i, r in enumerate(records)
        ]
        from .complexes import SimplicialComplex, closure

        complex = SimplicialComplex(closure(generators))
        K = WeightedComplex(complex, {s: constant_weight for s in complex.simplices})
        return K, names

    entries = []
    for i, r in enumerate(records):
        where = f"{path}: simplices[{i}]"
        vs = _vertex_list(r, where)
        if "weight" not in r:
            raise DocumentError(f"{where}: missing 'weight'")
        w = r["weight"]
        if isinstance(w, bool) or not isinstance(w, int):
            raise DocumentError(f"{where}: 'weight' must be an integer")
        entries.append((vs, w))
    return validate_complex(entries), names


def complex_document(K: WeightedComplex, names: Mapping[int, str] | None = None) -> dict:
    """The JSON-ready form of a weighted complex."""
    doc = {
        "simplices": [
            {"vertices": list(s), "weight": w} for s, w in K.items()
        ]
    }
    if names:
        doc["vertex_names"] = {str(i): names[i] for i in sorted(names)}
    return doc


def dump_complex_document(path: str, K: WeightedComplex, names=None) -> None:
    with open(path, "w") as fh:
        json.dump(complex_document(K, names), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_morse_document(path: str, K: WeightedComplex) -> MorseFunction:
    """Read and validate a Morse document against a complex."""
    doc = _load_json(path, exact_decimals=True)
    if not isinstance(doc, dict) or "values" not in doc:
        raise DocumentError(f"{path}: expected an object with a 'values' array")
    records = doc["values"]
    if not isinstance(records, list):
        raise DocumentError(f"{path}: 'values' must be an array")
    table = {}
    for i, r in enumerate(records):
        where = f"{path}: values[{i}]"
        vs = _vertex_list(r, where)
        if "value" not in r:
            raise DocumentError(f"{where}: missing 'value'")
        v = r["value"]
        if not isinstance(v, (int, str, Fraction)) or isinstance(v, bool):
            raise DocumentError(f"{where}: 'value' must be an integer or a string")
        try:
            value = Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"{where}: cannot parse {v!r} as a rational")
        s = simplex(vs)
        if s in table:
            raise DocumentError(f"{where}: simplex {list(s)} listed twice")
        table[s] = value
    uncovered = [s for s in K if s not in table]
    if uncovered:
        shown = ", ".join(str(list(s)) for s in uncovered[:5])
        raise DocumentError(f"{path}: no Morse value for {shown}")
    return validate_morse(K, table)


def parse_rational(text: str) -> Fraction:
    """Exact rational from command line text ("3", "1.5", "7/2")."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"cannot parse {text!r} as a rational")


def parse_weights_spec(spec: str) -> dict[str, int]:
    """Parse "A=1,C=2,G=3,T=4" into a letter weight table."""
    out = {}
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise DocumentError(f"bad weight entry {part!r}, expected SYMBOL=INTEGER")
        sym, _, value = part.partition("=")
        sym = sym.strip()
        try:
            out[sym] = int(value.strip())
        except ValueError:
            raise DocumentError(f"bad weight for {sym!r}: {value.strip()!r}")
    if not out:
        raise DocumentError("empty weight specification")
    return out


def read_fasta(path: str) -> list[tuple[str, str]]:
    """Parse FASTA records as (identifier, sequence) pairs."""
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e.strerror or e}")
    records = []
    ident = None
    parts: list[str] = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith(">"):
            if ident is not None:
                records.append((ident, "".join(parts)))
            ident = line[1:].split()[0] if len(line) > 1 else ""
            parts = []
        else:
            if ident is None:
                raise DocumentError(f"{path}: sequence data before any '>' header")
            parts.append(line)
    if ident is not None:
        records.append((ident, "".join(parts)))
    if not records:
        raise DocumentError(f"{path}: no FASTA records")
    return records
