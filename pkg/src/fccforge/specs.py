"""JSON documents for codes and encodings.

A code spec is one of::

    {"name": ..., "field": {"p": 2, "m": 1}, "kind": "linear", "generator": [[...], ...]}
    {"name": ..., "field": {"p": 2, "m": 1}, "kind": "explicit", "codewords": [[...], ...]}
    {"family": "hamming", "m": 3}

Family shorthands resolve to constructions when a code spec is built, so
downstream code only ever sees a :class:`~fccforge.codes.Code`.  On the
command line ``hamming:3``, ``golay``, ``rs:5:4:2`` etc. are accepted too.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import codes
from .codes import Code
from .fcc import FccEncoding, FunctionSpec, table_function
from .gf import GF, field_of_order
from .linalg import all_vectors

# family -> (required integer parameters, optional parameters)
FAMILIES = {
    "hamming": (("m",), ()),
    "extended_hamming": (("m",), ()),
    "golay": ((), ()),
    "extended_golay": ((), ()),
    "rm1": (("m",), ()),
    "repetition": (("n",), ("field",)),
    "even_weight": (("n",), ()),
    "reed_solomon": (("n", "k", "field"), ("points",)),
}

SHORTHANDS = {
    "hamming": "hamming", "ext-hamming": "extended_hamming", "extended_hamming": "extended_hamming",
    "golay": "golay", "ext-golay": "extended_golay", "extended_golay": "extended_golay",
    "rm1": "rm1", "rep": "repetition", "repetition": "repetition",
    "even": "even_weight", "even_weight": "even_weight", "rs": "reed_solomon", "reed_solomon": "reed_solomon",
}


def _field_doc(F: GF) -> dict:
    return F.to_dict()


@dataclass(frozen=True)
class CodeSpec:
    """A parsed code-spec document that serialises back to the same JSON."""

    doc: dict

    @classmethod
    def from_dict(cls, doc: dict) -> "CodeSpec":
        if not isinstance(doc, dict):
            raise ValueError("code spec must be a JSON object")
        present = [key for key in ("generator", "codewords", "family") if key in doc]
        if len(present) != 1:
            raise ValueError("code spec needs exactly one of generator, codewords, family")
        if "family" in doc:
            fam = doc["family"]
            if fam not in FAMILIES:
                raise ValueError(f"unknown family {fam!r}")
            required, optional = FAMILIES[fam]
            for key in required:
                if key not in doc:
                    raise ValueError(f"family {fam} needs {key!r}")
            extra = set(doc) - {"family", "name", *required, *optional}
            if extra:
                raise ValueError(f"unexpected keys for family {fam}: {sorted(extra)}")
        else:
            kind = "linear" if "generator" in doc else "explicit"
            if doc.get("kind", kind) != kind:
                raise ValueError(f"kind {doc.get('kind')!r} does not match the {present[0]} field")
            if "field" not in doc:
                raise ValueError("code spec needs a field")
            extra = set(doc) - {"name", "field", "kind", present[0]}
            if extra:
                raise ValueError(f"unexpected keys: {sorted(extra)}")
        return cls(json.loads(json.dumps(doc)))

    def to_dict(self) -> dict:
        return json.loads(json.dumps(self.doc))

    def build(self) -> Code:
        doc = self.doc
        name = doc.get("name")
        if "family" in doc:
            C = _build_family(doc)
            if name is not None:
                C.name = name
            return C
        F = GF.from_dict(doc["field"])
        if "generator" in doc:
            return codes.from_generator(F, doc["generator"], name=name)
        return codes.from_list(F, doc["codewords"], name=name)


def _field_from(value) -> GF:
    if isinstance(value, dict):
        return GF.from_dict(value)
    return field_of_order(int(value))


def _build_family(doc: dict) -> Code:
    fam = doc["family"]
    if fam == "hamming":
        return codes.hamming_code(doc["m"])
    if fam == "extended_hamming":
        return codes.extended_hamming_code(doc["m"])
    if fam == "golay":
        return codes.binary_golay()
    if fam == "extended_golay":
        return codes.extended_golay()
    if fam == "rm1":
        return codes.reed_muller1(doc["m"])
    if fam == "repetition":
        return codes.repetition(doc["n"], _field_from(doc.get("field", 2)))
    if fam == "even_weight":
        return codes.even_weight(doc["n"])
    return codes.reed_solomon(_field_from(doc["field"]), doc["n"], doc["k"], doc.get("points"))


def code_to_spec(C: Code) -> CodeSpec:
    """Explicit or linear document for an already-built code."""
    doc = {}
    if C.name is not None:
        doc["name"] = C.name
    doc["field"] = _field_doc(C.field)
    if C.is_linear:
        doc["kind"] = "linear"
        doc["generator"] = C.generator.tolist()
    else:
        doc["kind"] = "explicit"
        doc["codewords"] = C.words.tolist()
    return CodeSpec(doc)


def parse_shorthand(text: str) -> CodeSpec:
    """``hamming:3``, ``rep:2``, ``golay``, ``rm1:4``, ``even:4``, ``rs:q:n:k``."""
    head, *args = text.split(":")
    fam = SHORTHANDS.get(head)
    if fam is None:
        raise ValueError(f"unknown code shorthand {text!r}")
    nums = [int(a) for a in args]
    required, _ = FAMILIES[fam]
    if fam == "reed_solomon":
        if len(nums) != 3:
            raise ValueError("use rs:q:n:k")
        return CodeSpec.from_dict({"family": fam, "field": nums[0], "n": nums[1], "k": nums[2]})
    if fam == "repetition" and len(nums) == 2:
        return CodeSpec.from_dict({"family": fam, "n": nums[0], "field": nums[1]})
    if len(nums) != len(required):
        raise ValueError(f"{head} takes {len(required)} parameter(s)")
    return CodeSpec.from_dict({"family": fam, **dict(zip(required, nums))})


def load_code_spec(source: str) -> tuple[CodeSpec, bytes]:
    """Read a spec from a JSON file, or parse a shorthand; returns the raw bytes for digests."""
    path = Path(source)
    if path.suffix == ".json" or path.exists():
        raw = path.read_bytes()
        return CodeSpec.from_dict(json.loads(raw)), raw
    spec = parse_shorthand(source)
    return spec, json.dumps(spec.doc, sort_keys=True).encode()


# -- encodings -----------------------------------------------------------------------------

def function_from_dict(doc: dict, q: int, k: int) -> FunctionSpec:
    kind = doc["kind"]
    if kind == "table":
        table = {}
        for key, label in doc["table"].items():
            msg = [int(x) for x in key.split(",")] if "," in key else [int(ch) for ch in key]
            table[tuple(msg)] = label
        return table_function(q, k, table)
    param = doc.get("params", {}).get("value")
    return FunctionSpec(q, k, kind, param)


def parse_function(text: str, q: int, k: int) -> FunctionSpec:
    """``parity``, ``weight-mod:3``, ``coordinate:2``, ``identity``, ``constant``."""
    head, *args = text.split(":")
    kind = head.replace("-", "_")
    param = int(args[0]) if args else None
    return FunctionSpec(q, k, kind, param)


def encoding_to_dict(E: FccEncoding) -> dict:
    C = E.as_code()
    return {
        "code": {"field": _field_doc(E.field), "kind": "explicit", "codewords": C.words.tolist()},
        "function": E.function.to_dict(),
        "map": [[m.tolist(), i] for i, m in enumerate(E.messages)],
    }


def encoding_from_dict(doc: dict) -> FccEncoding:
    spec = CodeSpec.from_dict(doc["code"])
    C = spec.build()
    pairs = doc["map"]
    if not pairs:
        raise ValueError("encoding map is empty")
    k = len(pairs[0][0])
    q = C.q
    expected = all_vectors(q, k).tolist()
    by_msg = {tuple(int(s) for s in m): int(i) for m, i in pairs}
    if len(by_msg) != len(pairs) or len(set(by_msg.values())) != len(pairs):
        raise ValueError("encoding map must be a bijection")
    try:
        order = [by_msg[tuple(m)] for m in expected]
    except KeyError as exc:
        raise ValueError(f"encoding map misses message {exc.args[0]}") from None
    f = function_from_dict(doc["function"], q, k)
    return FccEncoding(C.field, np.asarray(C.words)[order], f, k)
