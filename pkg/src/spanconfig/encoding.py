"""Text and JSON wire forms for the package's data types.

Sets are written as runs of digits when every element is below 10 (``13|3|23``)
and comma separated otherwise (``1,10|3``).  Rationals are written as
``str(Fraction)``, i.e. ``"p/q"`` or ``"p"`` when integral.
"""

from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .combinat import Composition, OrderedSetPartition, SetSequence
from .linalg import BlockMatrix, MixedReductionResult, RatMatrix
from .polyalg.poly import Poly


class ParseError(ValueError):
    pass


def _set_text(s: Sequence[int]) -> str:
    if all(x < 10 for x in s):
        return "".join(map(str, s))
    return ",".join(map(str, s))


def _parse_set(tok: str) -> tuple[int, ...]:
    tok = tok.strip()
    if not tok:
        raise ParseError("empty set")
    if "," in tok:
        return tuple(int(x) for x in tok.split(","))
    if not tok.isdigit():
        raise ParseError(f"bad set {tok!r}")
    return tuple(int(c) for c in tok)


def _split_k(text: str) -> tuple[str, int | None]:
    m = re.fullmatch(r"\s*(.*?)\s*(?:@\s*k\s*=\s*(\d+))?\s*", text)
    if not m:
        raise ParseError(f"cannot parse {text!r}")
    return m.group(1), int(m.group(2)) if m.group(2) else None


def format_composition(alpha: Composition) -> str:
    return ",".join(map(str, alpha.parts)) + f"@k={alpha.k}"


def parse_parts(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise ParseError(f"bad composition {text!r}") from None
    if not parts:
        raise ParseError("empty composition")
    return parts


def parse_composition(text: str, k: int | None = None) -> Composition:
    body, kk = _split_k(text)
    k = kk if kk is not None else k
    if k is None:
        raise ParseError(f"no k given for {text!r}")
    return Composition(parse_parts(body), k)


def format_set_sequence(s: SetSequence) -> str:
    return "|".join(_set_text(x) for x in s.sets) + f"@k={s.k}"


def parse_set_sequence(text: str, k: int | None = None) -> SetSequence:
    body, kk = _split_k(text)
    k = kk if kk is not None else k
    if k is None:
        raise ParseError(f"no k given for {text!r}")
    return SetSequence.from_sets([_parse_set(t) for t in body.split("|")], k)


def format_partition(sigma: OrderedSetPartition) -> str:
    return "|".join(_set_text(b) for b in sigma.blocks)


def parse_partition(text: str) -> OrderedSetPartition:
    return OrderedSetPartition(tuple(_parse_set(t) for t in text.split("|")))


def format_word(w: Sequence[int]) -> str:
    return "(" + ",".join(map(str, w)) + ")"


def parse_word(text: str) -> tuple[int, ...]:
    t = text.strip()
    if t.startswith("(") and t.endswith(")"):
        t = t[1:-1]
    if not t.strip():
        return ()
    try:
        return tuple(int(x) for x in t.split(","))
    except ValueError:
        raise ParseError(f"bad word {text!r}") from None


def format_rat(x: Fraction) -> str:
    return str(Fraction(x))


def parse_rat(x: Any) -> Fraction:
    if isinstance(x, bool):
        raise ParseError("booleans are not numbers")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError:
            raise ParseError(f"bad rational {x!r}") from None
    raise ParseError(f"rationals are strings 'p/q' or integers, got {x!r}")


def matrix_to_json(a: RatMatrix) -> list[list[str]]:
    return [[format_rat(x) for x in row] for row in a.rows]


def matrix_from_json(rows: Any) -> RatMatrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError("a matrix is a nonempty array of rows")
    return RatMatrix([[parse_rat(x) for x in r] for r in rows])


def matrix_to_csv(a: RatMatrix) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(matrix_to_json(a))
    return buf.getvalue()


def matrix_from_csv(text: str) -> RatMatrix:
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    return matrix_from_json(rows)


def block_matrix_to_json(a: BlockMatrix) -> dict:
    return {"alpha": list(a.alpha.parts), "k": a.alpha.k, "matrix": matrix_to_json(a.matrix)}


def block_matrix_from_json(obj: Any, alpha: Sequence[int] | None = None, k: int | None = None) -> BlockMatrix:
    """Accepts ``{"alpha", "k", "matrix"}`` or a bare array of rows; flags fill gaps."""
    if isinstance(obj, dict):
        rows = obj.get("matrix")
        alpha = alpha if alpha is not None else obj.get("alpha")
        k = k if k is not None else obj.get("k")
    else:
        rows = obj
    m = matrix_from_json(rows)
    if alpha is None:
        raise ParseError("alpha is missing")
    k = k if k is not None else m.nrows
    return BlockMatrix(m, Composition(tuple(alpha), k))


def mixed_result_to_json(r: MixedReductionResult) -> dict:
    return {
        "seq": format_set_sequence(r.seq),
        "covering": r.covering,
        "alpha": list(r.seq.type().parts),
        "k": r.seq.k,
        "u": matrix_to_json(r.u),
        "b": matrix_to_json(r.b),
        "g": matrix_to_json(r.g),
    }


def mixed_result_from_json(obj: dict) -> MixedReductionResult:
    return MixedReductionResult(
        parse_set_sequence(obj["seq"]),
        matrix_from_json(obj["u"]),
        matrix_from_json(obj["b"]),
        matrix_from_json(obj["g"]),
    )


def poly_to_json(f: Poly) -> list[dict]:
    return [{"coeff": format_rat(c), "exps": list(m)} for m, c in f.sorted_terms()]


def poly_from_json(obj: Iterable[dict], n: int | None = None) -> Poly:
    obj = list(obj)
    if n is None:
        if not obj:
            raise ParseError("cannot infer the variable count of an empty polynomial")
        n = len(obj[0]["exps"])
    return Poly({tuple(t["exps"]): parse_rat(t["coeff"]) for t in obj}, n)


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
