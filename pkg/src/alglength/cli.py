"""Command-line front end.

Exit codes: 0 success / positive verdict, 2 well-formed input with a
negative verdict, 1 malformed input or guard violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import documents as docs
from .algebra import assoc_family, zero_mult
from .feasibility import (
    FEASIBLE,
    b_of_n,
    feasibility_report,
    gaps,
)
from .length import (
    NotGeneratingError,
    algebra_length,
    char_seq,
    format_word,
    graded_basis,
    span_chain,
)
from .linalg import GF, QQ
from .maxlen import find_long_basis, long_basis_algebra, verify_long_basis
from .protoseq import (
    check_witness,
    count_witnesses,
    enumerate_sequences,
    realizable_lengths,
    structural_problems,
    validate,
)
from .realizer import canonical_generators, realize, realize_and_certify

OK, NEGATIVE, USAGE = 0, 2, 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _emit(args, payload: dict, text: str) -> None:
    sys.stdout.write(docs.dumps(payload) if args.json else text.rstrip("\n") + "\n")


def _field(args):
    return QQ if args.rational else GF(args.p)


def _guard(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise UsageError(f"{what} {value} exceeds the guard {limit}; raise the flag to opt in")


def _alg_and_gens(args):
    A = docs.load_algebra(args.algebra)
    return A, docs.load_generators(args.generators, A)


def cmd_charseq(args) -> int:
    A, S = _alg_and_gens(args)
    try:
        m = char_seq(A, S)
    except NotGeneratingError as exc:
        _emit(args, {"generated": False, "dims": list(span_chain(A, S).dims)}, str(exc))
        return NEGATIVE
    _emit(args, {"char_seq": list(m), "length": m[-1]}, " ".join(map(str, m)))
    return OK


def cmd_length(args) -> int:
    A, S = _alg_and_gens(args)
    chain = span_chain(A, S)
    if not chain.generated:
        _emit(args, {"generated": False, "dims": list(chain.dims)},
              "set does not generate the algebra")
        return NEGATIVE
    _emit(args, {"length": chain.length, "dims": list(chain.dims)}, str(chain.length))
    return OK


def cmd_alg_length(args) -> int:
    A = docs.load_algebra(args.algebra)
    if not A.field.is_finite:
        raise UsageError("algebra length is only computable over a finite field")
    _guard(A.dim, args.oracle_max_dim, "dimension")
    l = algebra_length(A, jobs=args.jobs)
    _emit(args, {"algebra_length": l, "dim": A.dim}, str(l))
    return OK


def cmd_validate_seq(args) -> int:
    m, given = docs.load_sequence(args.sequence)
    problems = structural_problems(m)
    w = given if given is not None else validate(m)
    if w is None:
        payload = {"m": list(m), "proto_characteristic": False, "problems": problems}
        text = "not proto-characteristic" + "".join(f"\n  {p}" for p in problems)
        _emit(args, payload, text)
        return NEGATIVE
    payload = {"m": list(m), "proto_characteristic": True,
               "witness": [list(t) for t in w.table()]}
    if args.witness_count:
        payload["witness_count"] = count_witnesses(m)
    lines = ["proto-characteristic", "k  t1  t2"]
    lines += [f"{k}  {a}  {b}" for k, a, b in w.table()]
    _emit(args, payload, "\n".join(lines))
    return OK


def cmd_enumerate(args) -> int:
    _guard(args.n, args.max_dim, "n")
    seqs = sorted(enumerate_sequences(args.n, jobs=args.jobs))
    payload = {"n": args.n, "count": len(seqs), "sequences": [list(s) for s in seqs]}
    if args.witness_count:
        payload["witness_counts"] = [count_witnesses(s) for s in seqs]
    _emit(args, payload, "\n".join(" ".join(map(str, s)) for s in seqs))
    return OK


def cmd_realizable(args) -> int:
    _guard(args.n, args.max_dim, "n")
    values = sorted(realizable_lengths(args.n))
    runs = gaps(args.n)
    b = b_of_n(args.n)
    payload = {"n": args.n, "values": values, "B": b, "gaps": [list(r) for r in runs]}
    lines = [f"n = {args.n}", "values: " + " ".join(map(str, values)), f"B({args.n}) = {b}"]
    lines.append("gaps:" if runs else "gaps: none")
    lines += [f"  [{lo}, {hi}]" for lo, hi in runs]
    _emit(args, payload, "\n".join(lines))
    return OK


def cmd_feasible(args) -> int:
    use_enum = args.n <= args.max_dim
    r = feasibility_report(args.l, args.n, use_enumeration=use_enum)
    payload = {"l": r.l, "n": r.n, "sufficient": r.sufficient,
               "top_half_verdict": r.top_half_verdict, "verdict": r.verdict,
               "reasons": list(r.reasons)}
    text = f"{r.verdict} (l={r.l}, n={r.n}; reasons: {', '.join(r.reasons) or 'none'})"
    _emit(args, payload, text)
    return OK if r.verdict == FEASIBLE else NEGATIVE


def cmd_realize(args) -> int:
    m, w = docs.load_sequence(args.sequence)
    if w is None:
        w = validate(m)
        if w is None:
            _emit(args, {"m": list(m), "proto_characteristic": False},
                  "not proto-characteristic")
            return NEGATIVE
    field = _field(args)
    A = realize(m, w, field)
    doc = docs.dumps(docs.algebra_to_json(A))
    if args.out:
        Path(args.out).write_text(doc)
    else:
        sys.stdout.write(doc)
    if not args.certify:
        return OK
    if not field.is_finite:
        raise UsageError("certification needs a finite field")
    _guard(len(m), args.oracle_max_dim, "dimension")
    cert = realize_and_certify(m, w, field, max_dim=args.oracle_max_dim, jobs=args.jobs)
    report = {"certified": cert.certified, "char_seq": list(cert.char_seq),
              "algebra_length": cert.algebra_length, "expected_length": m[-1]}
    stream = sys.stdout if args.out else sys.stderr
    stream.write(docs.dumps(report) if args.json or not args.out else
                 f"certified: {cert.certified} (algebra length {cert.algebra_length})\n")
    return OK if cert.certified else NEGATIVE


def cmd_graded_basis(args) -> int:
    A, S = _alg_and_gens(args)
    try:
        G = graded_basis(A, S)
    except NotGeneratingError as exc:
        _emit(args, {"generated": False}, str(exc))
        return NEGATIVE
    words = [format_word(w) for w in G.words]
    payload = {
        "char_seq": list(G.lengths),
        "words": words,
        "vectors": [[docs._scalar_out(A.field, c) for c in v] for v in G.vectors],
        "t_table": [list(t) for t in G.t_table()],
    }
    lines = [f"e{i} = {w}   (length {m})" for i, (w, m) in enumerate(zip(words, G.lengths))]
    lines += ["k  t1  t2"] + [f"{k}  {a}  {b}" for k, a, b in G.t_table()]
    _emit(args, payload, "\n".join(lines))
    return OK


def cmd_maxlen(args) -> int:
    A = docs.load_algebra(args.algebra)
    if args.verify:
        vectors = docs.generators_from_json(docs.load_json(args.verify), A)
        ok = verify_long_basis(A, vectors)
        _emit(args, {"long_basis": ok}, "valid long basis" if ok else "not a long basis")
        return OK if ok else NEGATIVE
    if not A.field.is_finite:
        raise UsageError("long-basis search needs a finite field; use --verify")
    if A.dim < 3:
        raise UsageError("long bases need dimension at least 3")
    B = find_long_basis(A)
    if B is None:
        _emit(args, {"long_basis": None}, "none")
        return NEGATIVE
    vecs = [[docs._scalar_out(A.field, c) for c in v] for v in B.vectors]
    _emit(args, {"long_basis": vecs, "max_length": 2 ** (A.dim - 2)},
          "\n".join(f"e{i} = {v}" for i, v in enumerate(vecs)))
    return OK


def cmd_family(args) -> int:
    field = _field(args)
    kind, params = args.kind, args.params
    try:
        if kind == "assoc":
            n, l = params
            A = assoc_family(n, l, field)
        elif kind == "zero":
            (n,) = params
            A = zero_mult(n, field)
        else:
            (n,) = params
            A = long_basis_algebra(n, field)
    except ValueError as exc:
        raise UsageError(f"bad parameters for family {kind}: {exc}") from None
    _guard(A.dim, args.max_dim, "dimension")
    sys.stdout.write(docs.dumps(docs.algebra_to_json(A)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    common.add_argument("--max-dim", type=int, default=10, help="enumeration guard")
    common.add_argument("--oracle-max-dim", type=int, default=5,
                        help="guard for the subspace-sweep length oracle")
    fieldopts = _Parser(add_help=False)
    fieldopts.add_argument("--p", type=int, default=2, help="prime modulus (default 2)")
    fieldopts.add_argument("--rational", action="store_true", help="work over Q")

    parser = _Parser(prog="alglength", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, *, parents=(common,), help=None):
        p = sub.add_parser(name, parents=list(parents), help=help)
        p.set_defaults(func=func)
        return p

    for name, func, help in [
        ("charseq", cmd_charseq, "characteristic sequence of a generating set"),
        ("length", cmd_length, "length of a generating set"),
        ("graded-basis", cmd_graded_basis, "graded word basis and product table"),
    ]:
        p = add(name, func, help=help)
        p.add_argument("algebra", help="*.alg.json file")
        p.add_argument("generators", help="JSON file of vectors or e.g. 'e1,e2+e3'")

    p = add("alg-length", cmd_alg_length, help="algebra length by subspace sweep")
    p.add_argument("algebra")
    p = add("validate-seq", cmd_validate_seq, help="check a sequence and find a witness")
    p.add_argument("sequence", help="*.seq.json file, JSON array or '0,1,2,4'")
    p.add_argument("--witness-count", action="store_true")
    p = add("enumerate-seqs", cmd_enumerate, help="all proto-characteristic sequences")
    p.add_argument("n", type=int)
    p.add_argument("--witness-count", action="store_true")
    p = add("realizable", cmd_realizable, help="realizable lengths, B(n) and gaps")
    p.add_argument("n", type=int)
    p = add("feasible", cmd_feasible, help="feasibility report for a length value")
    p.add_argument("l", type=int)
    p.add_argument("n", type=int)
    p = add("realize", cmd_realize, parents=(common, fieldopts),
            help="algebra realizing a sequence")
    p.add_argument("sequence")
    p.add_argument("--certify", action="store_true")
    p.add_argument("--out", help="write the algebra document here")
    p = add("maxlen", cmd_maxlen, help="search for a long basis")
    p.add_argument("algebra")
    p.add_argument("--verify", help="JSON file with a candidate basis to check")
    p = add("family", cmd_family, parents=(common, fieldopts), help="named example algebras")
    p.add_argument("kind", choices=["assoc", "zero", "long"])
    p.add_argument("params", type=int, nargs="+")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, docs.DocumentError, ValueError) as exc:
        print(f"alglength: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
