"""``spanconfig`` command line.

Exit status: 0 on success, 1 when a verification check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import combinat as cb
from . import encoding as enc
from . import linalg as la
from .cohomology import enumerate_cells, permutation_character, poly_text, rank_consistency
from .polyalg import (
    claimed_groebner,
    demazure,
    groebner_basis,
    hilbert_series,
    invariant_hilbert,
    quotient_standard_monomials,
    verify_claimed_groebner,
)

DEFAULT_SEED = 0xC0FFEE
DEFAULT_MAX_N = 8


class UsageError(Exception):
    pass


@dataclass
class JobSpec:
    command: str
    alpha: cb.Composition | None = None
    input: str | None = None
    emit: str | None = None
    fmt: str = "text"
    seed: int = DEFAULT_SEED
    max_n: int = DEFAULT_MAX_N
    extra: dict = field(default_factory=dict)


@dataclass
class Report:
    status: int
    text: str


def _need_alpha(job: JobSpec) -> cb.Composition:
    if job.alpha is None:
        raise UsageError("--alpha and --k are required")
    if job.alpha.n > job.max_n:
        raise UsageError(f"--alpha has |alpha| = {job.alpha.n}, above the bound {job.max_n} (see --max-n)")
    return job.alpha


def _lines(items) -> str:
    return "".join(f"{x}\n" for x in items)


def _out(job: JobSpec, obj, text_lines) -> Report:
    if job.fmt == "json":
        return Report(0, enc.dumps(obj))
    return Report(0, _lines(text_lines))


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def cmd_enumerate_op(job: JobSpec) -> Report:
    alpha = _need_alpha(job)
    parts = [enc.format_partition(s) for s in cb.enumerate_op(alpha)]
    return _out(job, {"alpha": enc.format_composition(alpha), "count": len(parts), "partitions": parts}, parts)


def cmd_code(job: JobSpec) -> Report:
    src = job.extra.get("partition")
    if not src:
        raise UsageError("--partition is required")
    w = enc.format_word(cb.coinversion_code(enc.parse_partition(src)))
    return _out(job, {"partition": src, "code": w}, [w])


def cmd_iota(job: JobSpec) -> Report:
    word = job.extra.get("word")
    k = job.extra.get("k")
    if word is None or k is None:
        raise UsageError("--word and --k are required")
    sigma = cb.iota_insert(enc.parse_word(word), k)
    p = enc.format_partition(sigma)
    return _out(job, {"word": word, "k": k, "partition": p}, [p])


def cmd_nonskip(job: JobSpec) -> Report:
    alpha = _need_alpha(job)
    words = [enc.format_word(m) for m in cb.enumerate_nonskip(alpha)]
    return _out(job, {"alpha": enc.format_composition(alpha), "count": len(words), "monomials": words}, words)


def cmd_demazure(job: JobSpec) -> Report:
    word = job.extra.get("word")
    if word is None:
        raise UsageError("--word is required")
    f = demazure(enc.parse_word(word))
    return _out(job, {"gamma": word, "poly": enc.poly_to_json(f)}, [f.text()])


def cmd_groebner(job: JobSpec) -> Report:
    alpha = _need_alpha(job)
    emit = job.emit or "basis"
    head = {"alpha": enc.format_composition(alpha)}
    if emit == "basis":
        gb = groebner_basis(alpha)
        return _out(job, {**head, "basis": [enc.poly_to_json(g) for g in gb.basis]}, [g.text() for g in gb.basis])
    if emit == "claimed":
        fs = claimed_groebner(alpha)
        rep = verify_claimed_groebner(alpha)
        obj = {**head, "claimed": [enc.poly_to_json(f) for f in fs], "verified": bool(rep),
               "members": rep.members, "integral": rep.integral, "monic": rep.monic,
               "same_initial_ideal": rep.same_initial_ideal}
        r = _out(job, obj, [f.text() for f in fs] + [f"verified: {bool(rep)}"])
        r.status = 0 if rep else 1
        return r
    if emit == "standard-monomials":
        ms = [enc.format_word(m) for m in quotient_standard_monomials(alpha)]
        return _out(job, {**head, "count": len(ms), "monomials": ms}, ms)
    if emit == "hilbert":
        h = hilbert_series(quotient_standard_monomials(alpha))
        return _out(job, {**head, "hilbert": h}, [poly_text(h)])
    if emit == "invariant-hilbert":
        h = invariant_hilbert(alpha)
        return _out(job, {**head, "invariant_hilbert": h}, [poly_text(h)])
    raise UsageError(f"--emit {emit!r}: choose basis, claimed, standard-monomials, hilbert or invariant-hilbert")


def _read_input(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"--input: {exc}") from None
    if path.endswith(".csv"):
        return enc.matrix_to_json(enc.matrix_from_csv(text))
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--input: not JSON ({exc})") from None


def cmd_mixed_reduce(job: JobSpec) -> Report:
    if not job.input:
        raise UsageError("--input is required")
    obj = _read_input(job.input)
    alpha = job.alpha
    a = enc.block_matrix_from_json(obj, alpha.parts if alpha else None, alpha.k if alpha else None)
    if a.alpha.n > job.max_n:
        raise UsageError(f"|alpha| = {a.alpha.n} above the bound {job.max_n}")
    r = la.mixed_reduce(a)
    if job.fmt == "text":
        return Report(0, _lines([f"seq {enc.format_set_sequence(r.seq)}", f"covering {str(r.covering).lower()}"]))
    if job.fmt == "csv":
        return Report(0, enc.matrix_to_csv(r.b))
    return Report(0, enc.dumps(enc.mixed_result_to_json(r)))


def cmd_paving(job: JobSpec) -> Report:
    alpha = _need_alpha(job)
    rep = enumerate_cells(alpha)
    emit = job.emit or "cells"
    if emit == "poincare":
        obj = {"alpha": enc.format_composition(alpha), "poincare_gr": list(rep.poincare_gr), "poincare_x": list(rep.poincare_x)}
        return _out(job, obj, [poly_text(rep.poincare_x)])
    if emit == "betti":
        obj = {"alpha": enc.format_composition(alpha), "betti": list(rep.betti)}
        return _out(job, obj, [" ".join(map(str, rep.betti))])
    rows = [
        [enc.format_set_sequence(c.seq), str(c.covering).lower(), c.dim, c.codim, c.stars_pm, c.stars_u]
        for c in rep.cells
    ]
    header = ["seq", "covering", "dim", "codim", "stars_pm", "stars_u"]
    if emit == "csv" or job.fmt == "csv":
        return Report(0, _csv([header] + rows))
    if emit == "cells":
        if job.fmt == "json":
            return Report(0, enc.dumps({"alpha": enc.format_composition(alpha), "cells": [dict(zip(header, r)) for r in rows]}))
        return Report(0, _lines(" ".join(map(str, r)) for r in rows))
    raise UsageError(f"--emit {emit!r}: choose cells, poincare, betti or csv")


def cmd_character(job: JobSpec) -> Report:
    alpha = _need_alpha(job)
    perm = job.extra.get("perm")
    if not perm:
        raise UsageError("--perm is required")
    v = permutation_character(alpha, enc.parse_word(perm))
    return _out(job, {"alpha": enc.format_composition(alpha), "perm": perm, "value": v}, [v])


def _property_checks(seed: int, count: int) -> list[tuple[str, bool, str]]:
    rng = random.Random(seed)
    shapes = [(k, parts) for k in range(1, 6) for n in range(1, 9) for parts in cb.compositions(n, k)]
    bad = 0
    for _ in range(count):
        k, parts = rng.choice(shapes)
        alpha = cb.Composition(parts, k)
        a = la.random_block_matrix(rng, alpha)
        r = la.mixed_reduce(a)
        ok = (
            r.product() == a.matrix
            and la.fits_pattern(r.b, r.seq)
            and la.unipotent_pattern(r.seq).conforms(r.u)
            and r.covering == (la.rank(a.matrix) == k)
        )
        bad += not ok
    out = [(f"factorization identity on {count} random inputs (seed {seed})", bad == 0, f"{bad} failures")]
    small = [cb.Composition(p, k) for k in range(1, 4) for n in range(1, 5) for p in cb.compositions(n, k)]
    fails = [a.parts for a in small if not rank_consistency(a)]
    out.append(("cell count, orbit count and invariant Hilbert series agree (n <= 4, k <= 3)", not fails, f"failing: {fails}"))
    return out


def cmd_verify(job: JobSpec) -> Report:
    results = []
    if job.extra.get("paper_examples"):
        from .worked_examples import run_all
        results += run_all()
    if job.extra.get("properties"):
        results += _property_checks(job.seed, job.extra.get("count") or 100)
    if not results:
        raise UsageError("choose --paper-examples and/or --properties")
    failed = sum(not ok for _, ok, _ in results)
    if job.fmt == "json":
        text = enc.dumps({"checks": [{"name": n, "pass": ok, "detail": d} for n, ok, d in results], "failed": failed})
    else:
        text = _lines(f"{'PASS' if ok else 'FAIL'} {n}" + ("" if ok else f" -- {d}") for n, ok, d in results)
        text += f"{len(results) - failed}/{len(results)} checks passed\n"
    return Report(1 if failed else 0, text)


COMMANDS = {
    "enumerate-op": cmd_enumerate_op,
    "code": cmd_code,
    "iota": cmd_iota,
    "nonskip": cmd_nonskip,
    "demazure": cmd_demazure,
    "groebner": cmd_groebner,
    "mixed-reduce": cmd_mixed_reduce,
    "paving": cmd_paving,
    "character": cmd_character,
    "verify": cmd_verify,
}


def run(job: JobSpec) -> Report:
    try:
        return COMMANDS[job.command](job)
    except UsageError as exc:
        return Report(2, f"error: {exc}\n")
    except (ValueError, IndexError, KeyError) as exc:
        return Report(2, f"error: {exc}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", help="composition, e.g. 2,1,2 (or 2,1,2@k=3)")
    common.add_argument("--k", type=int)
    common.add_argument("--input")
    common.add_argument("--emit")
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--max-n", type=int)

    p = argparse.ArgumentParser(prog="spanconfig", description="Exact cells, rings and combinatorics of the spaces X_{alpha,k} of k-spanning tuples of subspaces.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "code":
            sp.add_argument("--partition", help="ordered set partition, e.g. 34|1|2")
        if name in ("iota", "demazure"):
            sp.add_argument("--word", help="word, e.g. (2,0,3,1)")
        if name == "character":
            sp.add_argument("--perm", help="permutation of 1..r in one-line notation, e.g. 2,1")
        if name == "verify":
            sp.add_argument("--paper-examples", action="store_true", help="replay the published worked examples")
            sp.add_argument("--properties", action="store_true", help="seeded randomized checks")
            sp.add_argument("--count", type=int, help="random inputs for --properties (default 100)")
    return p


def parse_job(argv: Sequence[str] | None = None) -> JobSpec:
    ns = build_parser().parse_args(argv)
    max_n = ns.max_n
    if max_n is None:
        env = os.environ.get("SPANCONFIG_MAX_N")
        max_n = int(env) if env else DEFAULT_MAX_N
    alpha = None
    if ns.alpha is not None:
        alpha = enc.parse_composition(ns.alpha, ns.k)
    extra = {k: v for k, v in vars(ns).items() if k in ("partition", "word", "perm", "paper_examples", "properties", "count")}
    extra["k"] = ns.k
    return JobSpec(ns.command, alpha, ns.input, ns.emit, ns.format, ns.seed, max_n, extra)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        job = parse_job(argv)
    except (enc.ParseError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    rep = run(job)
    (sys.stdout if rep.status != 2 else sys.stderr).write(rep.text)
    return rep.status


if __name__ == "__main__":
    sys.exit(main())
