"""Command-line front end.

Exit codes: 0 verified/holds/found, 1 refuted/fails, 2 unknown or budget
exhausted, 3 usage or input error.  JSON output is deterministic: identical
invocations print identical bytes (timings only appear with --timing).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import claims, fmon, kernel, lattice, rees
from .equational import (
    Derivation,
    SearchBudget,
    deduce,
    parse_identity_file,
    verify_derivation,
)
from .families import (
    Permutation,
    VarietySpec,
    a_prime_word,
    a_word,
    basis_identities,
    step1_words,
    step2_construction,
    step3_words,
    variety_generators,
)
from .words import (
    Letter,
    Word,
    alphabet,
    canonical_rename,
    delete_letters,
    factors,
    multiple_letters,
    occurrences,
    restrict_to,
    simple_letters,
)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit_json(obj):
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _parse_letters(text: str):
    return [Letter.parse(tok) for tok in text.split()]


def _verdict_exit(status: str) -> int:
    return {"holds": EXIT_OK, "fails": EXIT_REFUTED, "unknown": EXIT_UNKNOWN}[status]


# ---------------------------------------------------------------- word


def cmd_word(args) -> int:
    if args.word_cmd == "info":
        w = Word.parse(args.word)
        info = {
            "word": str(w),
            "length": len(w),
            "alphabet": [str(x) for x in sorted(alphabet(w))],
            "simple": [str(x) for x in sorted(simple_letters(w))],
            "multiple": [str(x) for x in sorted(multiple_letters(w))],
            "occurrences": {str(x): occurrences(w, x) for x in sorted(alphabet(w))},
        }
        if args.json:
            _emit_json(info)
        else:
            for key, val in info.items():
                print(f"{key}: {val}")
        return EXIT_OK
    if args.word_cmd == "canon":
        print(canonical_rename(Word.parse(args.word)))
        return EXIT_OK
    if args.word_cmd == "factors":
        words = [Word.parse(t) for t in args.words]
        out = sorted(factors(words), key=lambda w: w.key)
        if args.json:
            _emit_json([str(w) for w in out])
        else:
            for w in out:
                print(w)
        return EXIT_OK
    if args.word_cmd == "delete":
        w = Word.parse(args.word)
        print(delete_letters(w, _parse_letters(args.letters)))
        return EXIT_OK
    if args.word_cmd == "restrict":
        w = Word.parse(args.word)
        print(restrict_to(w, _parse_letters(args.letters)))
        return EXIT_OK
    raise AssertionError(args.word_cmd)


# ---------------------------------------------------------------- ident


def cmd_ident(args) -> int:
    sigma = parse_identity_file(_read(args.sigma))
    if args.ident_cmd == "deduce":
        u = Word.parse(getattr(args, "from"))
        v = Word.parse(args.to)
        cap = args.max_len if args.max_len else max(len(u), len(v)) + 3
        budget = SearchBudget(cap, args.max_steps, args.max_depth)
        outcome = deduce(u, v, sigma, budget)
        if outcome.found:
            if args.json:
                _emit_json(outcome.to_dict())
            else:
                print(outcome.chain[0])
                for word, step in zip(outcome.chain[1:], outcome.steps):
                    print(f"  -> {word}    [{step.identity}]")
            return EXIT_OK
        if args.json:
            _emit_json(outcome.to_dict())
        else:
            print(f"not found within budget: {outcome.reason} (visited {outcome.visited})")
        return EXIT_UNKNOWN
    if args.ident_cmd == "check":
        d = Derivation.from_dict(json.loads(_read(args.derivation)))
        ok = verify_derivation(d, sigma)
        print("valid" if ok else "invalid")
        return EXIT_OK if ok else EXIT_REFUTED
    raise AssertionError(args.ident_cmd)


# ---------------------------------------------------------------- rees


def _load_rees(path: str) -> rees.ReesMonoid:
    return rees.build(rees.parse_word_set_file(_read(path)))


def cmd_rees(args) -> int:
    M = _load_rees(args.wfile)
    if args.rees_cmd == "build":
        out = {
            "generators": [str(g) for g in M.generators],
            "size": M.size,
            "identity": rees.element_name(M.identity),
        }
        if args.json:
            _emit_json(out)
        else:
            for key, val in out.items():
                print(f"{key}: {val}")
        return EXIT_OK
    if args.rees_cmd == "elements":
        names = M.element_names()
        if args.json:
            _emit_json(names)
        else:
            for name in names:
                print(name)
        return EXIT_OK
    if args.rees_cmd == "check":
        idents = parse_identity_file(_read(args.idfile))
        rows = []
        worst = EXIT_OK
        for ident in idents:
            if args.naive:
                verdict = M.satisfies_naive(ident, budget=args.budget)
            else:
                verdict = M.satisfies(ident, budget=args.budget, jobs=args.jobs)
            rows.append({"identity": str(ident), **verdict.to_dict()})
            worst = max(worst, _verdict_exit(verdict.status))
        out = {"generators": [str(g) for g in M.generators], "verdicts": rows}
        if args.json:
            _emit_json(out)
        else:
            for row in rows:
                extra = f"  witness={row.get('witness')}" if "witness" in row else ""
                print(f"{row['status']:8} {row['identity']}{extra}")
        return worst
    raise AssertionError(args.rees_cmd)


# ---------------------------------------------------------------- fmon


def _load_fmon(args) -> fmon.FiniteMonoid:
    if getattr(args, "table", None):
        return fmon.FiniteMonoid.from_dict(json.loads(_read(args.table)))
    return fmon.from_rees(_load_rees(args.rees))


def cmd_fmon(args) -> int:
    if args.fmon_cmd == "product":
        A = fmon.FiniteMonoid.from_dict(json.loads(_read(args.table_a)))
        B = fmon.FiniteMonoid.from_dict(json.loads(_read(args.table_b)))
        P = fmon.direct_product(A, B, max_size=args.max_size)
        text = json.dumps(P.to_dict(), indent=2, ensure_ascii=False)
        if args.out:
            Path(args.out).write_text(text + "\n", encoding="utf-8")
        else:
            print(text)
        return EXIT_OK
    M = _load_fmon(args)
    if args.fmon_cmd == "check":
        idents = parse_identity_file(_read(args.idfile))
        rows = []
        worst = EXIT_OK
        for ident in idents:
            verdict = fmon.satisfies(M, ident, budget=args.budget, jobs=args.jobs)
            rows.append({"identity": str(ident), **verdict.to_dict()})
            worst = max(worst, _verdict_exit(verdict.status))
        if args.json:
            _emit_json({"size": M.size, "verdicts": rows})
        else:
            for row in rows:
                extra = f"  witness={row.get('witness')}" if "witness" in row else ""
                print(f"{row['status']:8} {row['identity']}{extra}")
        return worst
    if args.fmon_cmd == "theory":
        theory = fmon.truncated_theory(
            M, max_len=args.max_len, max_letters=args.letters, budget=args.budget
        )
        if args.json:
            _emit_json(
                {
                    "max_len": theory.max_len,
                    "max_letters": theory.max_letters,
                    "complete": theory.complete,
                    "identities": [str(i.canonical()) for i in theory.sorted_identities()],
                }
            )
        else:
            print(theory.to_lines())
        return EXIT_OK if theory.complete else EXIT_UNKNOWN
    if args.fmon_cmd == "isoterm":
        w = Word.parse(args.word)
        verdict = fmon.isoterm_check(
            M, w, args.bound, fresh_letters=args.fresh, budget=args.budget, probes=args.probes
        )
        if args.json:
            _emit_json({"word": str(w), **verdict.to_dict()})
        else:
            print(verdict.to_dict())
        return {
            "isoterm_up_to": EXIT_OK,
            "not_isoterm": EXIT_REFUTED,
            "unknown": EXIT_UNKNOWN,
        }[verdict.status]
    raise AssertionError(args.fmon_cmd)


# ---------------------------------------------------------------- family


def cmd_family(args) -> int:
    if args.family_cmd == "a-word":
        rho = Permutation.parse(args.perm)
        print(a_word(args.n, args.m, rho))
        print(a_prime_word(args.n, args.m, rho))
        return EXIT_OK
    if args.family_cmd == "basis":
        for ident in basis_identities(args.n_max, args.m_max):
            print(ident)
        return EXIT_OK
    if args.family_cmd == "variety":
        spec = VarietySpec.parse(args.spec)
        for g in variety_generators(spec):
            print(g)
        return EXIT_OK
    if args.family_cmd in ("step1", "step3"):
        u, v = step1_words() if args.family_cmd == "step1" else step3_words()
        print(u)
        print(v)
        return EXIT_OK
    if args.family_cmd == "step2":
        rho = (
            Permutation.parse(args.perm)
            if args.perm
            else Permutation.identity(args.n + args.m)
        )
        con = step2_construction(args.n, args.m, rho)
        out = {
            "case": con.case,
            "p": str(con.p),
            "r": str(con.r),
            "x_generators": [str(g) for g in con.x_generators],
            "u": str(con.u),
            "a": str(con.a),
            "a_prime": str(con.a_prime),
            "u_prime": str(con.u_prime),
        }
        if args.json:
            _emit_json(out)
        else:
            for key, val in out.items():
                print(f"{key}: {val}")
        return EXIT_OK
    raise AssertionError(args.family_cmd)


# ---------------------------------------------------------------- lattice


def _load_lattice(path: str) -> lattice.FiniteLattice:
    return lattice.parse_lattice_file(_read(path))


def cmd_lattice(args) -> int:
    if args.lattice_cmd == "builtin":
        L = lattice.builtin(args.name)
        print(L.to_text())
        print("modular:", " ".join(lattice.modular_elements(L)))
        return EXIT_OK
    L = _load_lattice(args.file)
    if args.lattice_cmd == "check":
        modular = lattice.is_modular_element(L, args.element)
        pent = lattice.find_pentagon_with_center(L, args.element)
        out = {"element": args.element, "modular": modular}
        if pent is not None:
            out["pentagon"] = pent.to_dict()
        if args.json:
            _emit_json(out)
        else:
            print(out)
        return EXIT_OK if modular else EXIT_REFUTED
    if args.lattice_cmd == "modular":
        out = {
            "elements": L.names,
            "modular": lattice.modular_elements(L),
        }
        if args.json:
            _emit_json(out)
        else:
            print("modular:", " ".join(out["modular"]))
        return EXIT_OK
    raise AssertionError(args.lattice_cmd)


# ---------------------------------------------------------------- claim


def cmd_claim(args) -> int:
    if args.claim == "list":
        for name in sorted(claims.CLAIMS):
            print(f"{name}: {claims.CLAIMS[name].statement}")
        return EXIT_OK
    params = {}
    for key in ("n", "m", "n_max", "m_max", "bound", "fresh", "budget", "jobs",
                "max_len", "max_letters", "max_steps"):
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    for key in ("perm", "variety", "target"):
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    try:
        report = claims.claim_verify(args.claim, **params)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except TypeError:
        print(f"error: claim {args.claim!r} does not accept those parameters", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(report.to_json(include_timing=args.timing))
    else:
        print(report.to_text())
    return report.exit_code


# ---------------------------------------------------------------- parser


def build_parser() -> Parser:
    p = Parser(prog="eqmon", description=__doc__)
    p.add_argument("--version", action="version", version="eqmon 0.1.0")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=Parser)

    w = sub.add_parser("word", help="word utilities")
    wsub = w.add_subparsers(dest="word_cmd", required=True, parser_class=Parser)
    wi = wsub.add_parser("info", help="alphabet, simple/multiple letters, occurrence counts")
    wi.add_argument("word")
    wi.add_argument("--json", action="store_true")
    wc = wsub.add_parser("canon", help="canonical renaming by first occurrence")
    wc.add_argument("word")
    wf = wsub.add_parser("factors", help="all contiguous factors of the given words")
    wf.add_argument("words", nargs="+")
    wf.add_argument("--json", action="store_true")
    wd = wsub.add_parser("delete", help="remove all occurrences of letters")
    wd.add_argument("word")
    wd.add_argument("--letters", required=True, help="letters to remove, space separated")
    wr = wsub.add_parser("restrict", help="keep only occurrences of letters")
    wr.add_argument("word")
    wr.add_argument("--letters", required=True, help="letters to keep, space separated")
    w.set_defaults(func=cmd_word)

    i = sub.add_parser("ident", help="deduction search and derivation checking")
    isub = i.add_subparsers(dest="ident_cmd", required=True, parser_class=Parser)
    idd = isub.add_parser("deduce", help="search for a rewrite chain between two words")
    idd.add_argument("--sigma", required=True, help="identity file (one per line)")
    idd.add_argument("--from", required=True, metavar="WORD")
    idd.add_argument("--to", required=True, metavar="WORD")
    idd.add_argument("--max-len", type=int, default=None)
    idd.add_argument("--max-steps", type=int, default=1_000_000)
    idd.add_argument("--max-depth", type=int, default=50)
    idd.add_argument("--json", action="store_true")
    idc = isub.add_parser("check", help="verify a serialized derivation against identities")
    idc.add_argument("--sigma", required=True)
    idc.add_argument("derivation", help="derivation JSON file")
    i.set_defaults(func=cmd_ident)

    r = sub.add_parser("rees", help="factor monoids of word sets")
    rsub = r.add_subparsers(dest="rees_cmd", required=True, parser_class=Parser)
    rb = rsub.add_parser("build", help="build and summarize the monoid")
    rb.add_argument("wfile", help="word set file (one word per line)")
    rb.add_argument("--json", action="store_true")
    re_ = rsub.add_parser("elements", help="list the elements")
    re_.add_argument("wfile")
    re_.add_argument("--json", action="store_true")
    rc = rsub.add_parser("check", help="decide identities in the monoid")
    rc.add_argument("wfile")
    rc.add_argument("idfile")
    rc.add_argument("--budget", type=int, default=10_000_000)
    rc.add_argument("--jobs", type=int, default=1)
    rc.add_argument("--naive", action="store_true", help="use the table enumeration engine")
    rc.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_rees)

    f = sub.add_parser("fmon", help="finite monoids as multiplication tables")
    fsub = f.add_subparsers(dest="fmon_cmd", required=True, parser_class=Parser)
    fc = fsub.add_parser("check", help="decide identities by full enumeration")
    src = fc.add_mutually_exclusive_group(required=True)
    src.add_argument("--table", help="table JSON file")
    src.add_argument("--rees", help="word set file")
    fc.add_argument("idfile")
    fc.add_argument("--budget", type=int, default=10_000_000)
    fc.add_argument("--jobs", type=int, default=1)
    fc.add_argument("--json", action="store_true")
    ft = fsub.add_parser("theory", help="all identities within size bounds")
    src = ft.add_mutually_exclusive_group(required=True)
    src.add_argument("--table")
    src.add_argument("--rees")
    ft.add_argument("--max-len", type=int, default=6)
    ft.add_argument("--letters", type=int, default=4)
    ft.add_argument("--budget", type=int, default=10_000_000)
    ft.add_argument("--json", action="store_true")
    fi = fsub.add_parser("isoterm", help="bound-relative isoterm check")
    src = fi.add_mutually_exclusive_group(required=True)
    src.add_argument("--table")
    src.add_argument("--rees")
    fi.add_argument("--word", required=True)
    fi.add_argument("--bound", type=int, required=True)
    fi.add_argument("--fresh", type=int, default=1)
    fi.add_argument("--budget", type=int, default=10_000_000)
    fi.add_argument("--probes", type=int, default=128)
    fi.add_argument("--json", action="store_true")
    fp = fsub.add_parser("product", help="componentwise product of two table monoids")
    fp.add_argument("table_a")
    fp.add_argument("table_b")
    fp.add_argument("-o", "--out", default=None)
    fp.add_argument("--max-size", type=int, default=2000)
    f.set_defaults(func=cmd_fmon)

    fa = sub.add_parser("family", help="built-in word and identity families")
    fasub = fa.add_subparsers(dest="family_cmd", required=True, parser_class=Parser)
    faw = fasub.add_parser("a-word", help="straddling and merged-square words")
    faw.add_argument("--n", type=int, required=True)
    faw.add_argument("--m", type=int, required=True)
    faw.add_argument("--perm", required=True, help='image sequence, e.g. "2 1"')
    fab = fasub.add_parser("basis", help="fixed identities plus the indexed family")
    fab.add_argument("--n-max", type=int, default=1)
    fab.add_argument("--m-max", type=int, default=1)
    fav = fasub.add_parser("variety", help="generator words of a variety spec")
    fav.add_argument("spec", help="empty | one | x | xy | chain:N | zigzag:N")
    fasub.add_parser("step1", help="the head anchor pair")
    fa2 = fasub.add_parser("step2", help="squared-letter construction")
    fa2.add_argument("--n", type=int, default=1)
    fa2.add_argument("--m", type=int, default=1)
    fa2.add_argument("--perm", default=None)
    fa2.add_argument("--json", action="store_true")
    fasub.add_parser("step3", help="the triple-x anchor pair")
    fa.set_defaults(func=cmd_family)

    la = sub.add_parser("lattice", help="finite lattices and modularity")
    lasub = la.add_subparsers(dest="lattice_cmd", required=True, parser_class=Parser)
    lac = lasub.add_parser("check", help="modularity of one element (formula + pentagon)")
    lac.add_argument("file")
    lac.add_argument("--element", required=True)
    lac.add_argument("--json", action="store_true")
    lam = lasub.add_parser("modular", help="classify all elements")
    lam.add_argument("file")
    lam.add_argument("--json", action="store_true")
    lab = lasub.add_parser("builtin", help="print a built-in lattice")
    lab.add_argument("name", choices=sorted(lattice.BUILTINS))
    la.set_defaults(func=cmd_lattice)

    c = sub.add_parser("claim", help="run a scripted verification claim")
    c.add_argument("claim", help="claim name, or 'list'")
    c.add_argument("--n", type=int, default=None)
    c.add_argument("--m", type=int, default=None)
    c.add_argument("--perm", default=None)
    c.add_argument("--variety", default=None)
    c.add_argument("--target", default=None)
    c.add_argument("--n-max", dest="n_max", type=int, default=None)
    c.add_argument("--m-max", dest="m_max", type=int, default=None)
    c.add_argument("--bound", type=int, default=None)
    c.add_argument("--fresh", type=int, default=None)
    c.add_argument("--budget", type=int, default=None)
    c.add_argument("--jobs", type=int, default=None)
    c.add_argument("--max-len", dest="max_len", type=int, default=None)
    c.add_argument("--max-letters", dest="max_letters", type=int, default=None)
    c.add_argument("--max-steps", dest="max_steps", type=int, default=None)
    c.add_argument("--json", action="store_true")
    c.add_argument("--timing", action="store_true", help="include wall time in JSON output")
    c.set_defaults(func=cmd_claim)

    k = sub.add_parser("kernel", help="show which enumeration backend is active")
    k.set_defaults(func=lambda args: (print(kernel.BACKEND), EXIT_OK)[1])

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
