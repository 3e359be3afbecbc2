"""Batch command-line frontend.

Every subcommand is a pure function of its arguments: identical invocations
produce byte-identical output.  JSON is the default format (sorted keys,
2-space indent); --format table gives aligned text.  Exit codes: 0 success,
2 invalid input, 3 oracle disagreement, 4 I/O failure.

Exact numbers (fractions, multivector coefficients) are emitted as strings
to keep the JSON exact; see schemas/ for the shipped schemas.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .automorphisms import LABELS, composition_table, group_structure
from .classify import (DISPLAY_ALIASES, classify, division_ring_oracle,
                       omega_square_sign)
from .cone import enumerate_cone
from .core import Signature
from .factorize import (IsoError, PAPER_CHAINS, karoubi_factorize,
                        split_semisimple, verify_tensor_iso)
from .ideals import (SearchError, idempotent_factor_count, left_ideal_basis,
                     paper_idempotents, primitive_idempotent)
from .states import (StateError, additive_spin, annihilate, fuse_detailed,
                     double, parse_state)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_ORACLE = 3
EXIT_IO = 4


class CliError(Exception):
    def __init__(self, message, code=EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _emit(args, payload, table_lines):
    if args.format == "table":
        print("\n".join(table_lines))
    else:
        print(json.dumps(payload, sort_keys=True, indent=2))
    return EXIT_OK


def _signature(p, q):
    try:
        return Signature(p, q)
    except (ValueError, TypeError) as e:
        raise CliError(str(e)) from None


def _mv_json(mv):
    out = []
    for k in sorted(mv.c, key=mv.alg.index.get):
        v = mv.c[k]
        if mv.alg.field == "C":
            out.append({"blade": mv.alg.key_name(k), "re": str(v.re),
                        "im": str(v.im)})
        else:
            out.append({"blade": mv.alg.key_name(k), "re": str(v), "im": "0"})
    return out


def _type_json(at):
    return {"mod8_class": at.mod8_class, "ring": str(at.ring),
            "matrix_rank": at.matrix_rank, "simple": at.simple,
            "display": str(at)}


def cmd_classify(args):
    sig = _signature(args.p, args.q)
    at = classify(sig)
    payload = {"signature": {"p": sig.p, "q": sig.q}, "type": _type_json(at)}
    lines = [f"{sig}: {at}  (p-q = {at.mod8_class} mod 8, "
             f"{'simple' if at.simple else 'semisimple'})"]
    alias = DISPLAY_ALIASES.get((sig.p, sig.q))
    if alias:
        payload["alias"] = alias
        lines.append(f"alias: {alias}")
    code = EXIT_OK
    if args.oracle:
        got = division_ring_oracle(sig)
        agrees = got is at.ring
        payload["oracle"] = {"ring": str(got), "agrees": agrees}
        lines.append(f"oracle: {got}  ({'agrees' if agrees else 'DISAGREES'})")
        if not agrees:
            code = EXIT_ORACLE
    _emit(args, payload, lines)
    return code


def cmd_idempotent(args):
    sig = _signature(args.p, args.q)
    f = primitive_idempotent(sig)
    ideal = left_ideal_basis(f)
    payload = {
        "signature": {"p": sig.p, "q": sig.q},
        "factor_count": idempotent_factor_count(sig),
        "factors": [str(t) for t in f.factors],
        "element": _mv_json(f.element),
        "display": str(f),
        "ideal_dimension": ideal.dimension,
    }
    lines = [f"f_{sig.p},{sig.q} = {f}",
             f"  = {f.element}",
             f"ideal dimension: {ideal.dimension}"]
    paper = _paper_form(sig)
    if paper is not None:
        payload["paper_form"] = {"factors": [str(t) for t in paper.factors],
                                 "display": str(paper)}
        lines.append(f"printed form: {paper}")
    _emit(args, payload, lines)
    return EXIT_OK


def _paper_form(sig):
    known = {(2, 0): "f20", (1, 1): "f11", (0, 2): "f02", (2, 4): "f24"}
    key = known.get((sig.p, sig.q))
    if key is None:
        return None
    return paper_idempotents()[key]


def cmd_factorize(args):
    sig = _signature(args.p, args.q)
    if sig.n % 2:
        split = split_semisimple(sig)
        payload = {
            "signature": {"p": sig.p, "q": sig.q},
            "odd": True,
            "split": {
                "factor": {"p": split.factor.p, "q": split.factor.q},
                "complexified": split.complexified,
                "lambda_plus": _mv_json(split.lambda_plus),
                "lambda_minus": _mv_json(split.lambda_minus),
            },
        }
        lines = [f"{sig} is odd-dimensional: splits as "
                 f"{split.factor} (+) {split.factor}"
                 + (" in the complexification" if split.complexified else ""),
                 f"lambda+ = {split.lambda_plus}",
                 f"lambda- = {split.lambda_minus}"]
        return _emit(args, payload, lines)
    chain = karoubi_factorize(sig)
    trace = [str(t) for t in chain.ring_trace]
    payload = {
        "signature": {"p": sig.p, "q": sig.q},
        "odd": False,
        "factors": [{"p": s.p, "q": s.q} for s in chain.factors],
        "ring_trace": trace,
        "ring": str(chain.folded_ring()),
        "verified": True,
    }
    pretty = " (x) ".join(f"Cl({s.p},{s.q})" for s in chain.factors) or "R"
    lines = [f"{sig} ~ {pretty}   [verified]",
             f"rings: {' (x) '.join(trace) or 'R'} -> {chain.folded_ring()}"]
    return _emit(args, payload, lines)


def cmd_iso_check(args):
    target = _signature(args.p, args.q)
    factors = []
    for spec_str in args.factors:
        try:
            a, b = spec_str.split(",")
            factors.append(_signature(int(a), int(b)))
        except (ValueError, TypeError):
            raise CliError(f"bad factor {spec_str!r}: expected p,q") from None
    try:
        w = verify_tensor_iso(target, factors)
    except IsoError as e:
        payload = {"verified": False, "reason": e.reason}
        _emit(args, payload, [f"NOT isomorphic: {e.reason}"])
        return EXIT_ORACLE
    payload = {
        "verified": True,
        "target": {"p": target.p, "q": target.q},
        "factors": [{"p": s.p, "q": s.q} for s in w.factors],
        "generator_images": [_mv_json(img) for img in w.images],
    }
    lines = [f"{target} ~ " + " (x) ".join(f"Cl({s.p},{s.q})" for s in w.factors),
             "generator images:"]
    for i, img in enumerate(w.images, 1):
        lines.append(f"  e{i} -> {img}")
    return _emit(args, payload, lines)


def cmd_cpt(args):
    sig = _signature(args.p, args.q)
    from .factorize import complexify
    alg = complexify(sig)
    table = composition_table(alg)
    gs = group_structure(alg)
    payload = {
        "signature": {"p": sig.p, "q": sig.q, "complexified": True},
        "labels": list(LABELS),
        "table": {f"{a}.{b}": table[(a, b)] for a in LABELS for b in LABELS},
        "group": {"order": gs.order, "abelian": gs.abelian,
                  "exponent": gs.exponent, "distinct_maps": gs.distinct_maps,
                  "structure": str(gs)},
    }
    width = max(len(l) for l in LABELS) + 1
    lines = [" " * width + "".join(l.ljust(width) for l in LABELS)]
    for a in LABELS:
        lines.append(a.ljust(width)
                     + "".join(table[(a, b)].ljust(width) for b in LABELS))
    lines.append(f"group: {gs}")
    return _emit(args, payload, lines)


def _state_json(sv):
    return sv.to_json()


def cmd_fuse(args):
    s1 = _parse(args.state1)
    s2 = _parse(args.state2)
    res = fuse_detailed(s1, s2)
    payload = {
        "operands": [_state_json(s1), _state_json(s2)],
        "state": _state_json(res.state),
        "label": res.label(),
        "spin_additive": str(res.spin_additive),
        "spin_vector_label": str(res.spin_vector),
        "spin_rule_mismatch": res.spin_rule_mismatch,
    }
    lines = [f"{s1} (x) {s2} = {res.label()}"]
    if res.spin_rule_mismatch:
        lines.append(f"note: additive spin {res.spin_additive} vs "
                     f"|l-l̇| label {res.spin_vector} (readings differ)")
    return _emit(args, payload, lines)


def cmd_double(args):
    s = _parse(args.state)
    try:
        out = double(s, args.sign)
    except StateError as e:
        raise CliError(str(e)) from None
    payload = {"operand": _state_json(s), "sign": args.sign,
               "state": _state_json(out), "label": str(out)}
    return _emit(args, payload, [f"double({s}, {args.sign}) = {out}"])


def cmd_annihilate(args):
    s = _parse(args.state1)
    sbar = _parse(args.state2)
    try:
        out = annihilate(s, sbar)
    except StateError as e:
        raise CliError(str(e)) from None
    spin = additive_spin(s, sbar)
    terms = []
    text = []
    for sv, mult in out:
        terms.append({"multiplicity": mult, "state": _state_json(sv),
                      "label": sv.label(spin=spin)})
        text.append((f"{mult}" if mult != 1 else "") + sv.label(spin=spin))
    payload = {"operands": [_state_json(s), _state_json(sbar)],
               "terms": terms, "total_multiplicity": out.total_multiplicity}
    return _emit(args, payload, [f"{s} (x) {sbar} -> " + " + ".join(text)])


def _parse(text):
    try:
        return parse_state(text)
    except (StateError, ValueError) as e:
        raise CliError(str(e)) from None


def cmd_spectrum(args):
    rows = enumerate_cone(args.max_m, m_e=Fraction(args.electron_mass))
    payload = {"max_m": args.max_m, "electron_mass": str(Fraction(args.electron_mass)),
               "rows": [{"k": r.label.k, "r": r.label.r,
                         "l": str(r.label.l), "ldot": str(r.label.ldot),
                         "spin": str(r.spin), "statistics": r.statistics,
                         "degree": r.degree, "mass": str(r.mass)}
                        for r in rows]}
    lines = [f"{'(l,ld)':>10} {'spin':>5} {'stat':>8} {'deg':>4} {'mass':>7}"]
    for r in rows:
        lines.append(f"{str(r.label):>10} {str(r.spin):>5} "
                     f"{r.statistics:>8} {r.degree:>4} {str(r.mass):>7}")
    return _emit(args, payload, lines)


def _atlas_entry(p, q):
    sig = Signature(p, q)
    at = classify(sig)
    oracle = division_ring_oracle(sig)
    f = primitive_idempotent(sig)
    entry = {
        "p": p, "q": q, "n": sig.n,
        "type": _type_json(at),
        "oracle_ring": str(oracle),
        "oracle_agrees": oracle is at.ring,
        "idempotent": {"factors": [str(t) for t in f.factors],
                       "factor_count": idempotent_factor_count(sig),
                       "ideal_dimension": left_ideal_basis(f).dimension},
    }
    if sig.n % 2 == 0:
        entry["omega_square"] = omega_square_sign(sig) if sig.n else 1
        chains = []
        seen = set()
        canonical = karoubi_factorize(sig)
        chains.append({"factors": [[s.p, s.q] for s in canonical.factors],
                       "ring_trace": [str(t) for t in canonical.ring_trace],
                       "ring": str(canonical.folded_ring()),
                       "verified": True, "source": "canonical"})
        seen.add(tuple((s.p, s.q) for s in canonical.factors))
        for fac, ring in PAPER_CHAINS.get((p, q), []):
            if fac in seen:
                continue
            seen.add(fac)
            verify_tensor_iso(sig, fac)  # raises on failure
            trace = [str(t) for t in
                     karoubi_ring_trace(fac)]
            chains.append({"factors": [list(f_) for f_ in fac],
                           "ring_trace": trace, "ring": ring,
                           "verified": True, "source": "printed"})
        entry["factor_chains"] = chains
    else:
        split = split_semisimple(sig)
        entry["split"] = {"factor": [split.factor.p, split.factor.q],
                          "complexified": split.complexified}
    return entry


def karoubi_ring_trace(factors):
    from .factorize import FACTOR_RINGS
    return [FACTOR_RINGS[Signature(*f)] for f in factors]


def cmd_atlas(args):
    if args.max_n > 10:
        raise CliError("atlas capped at max-n 10")
    sigs = sorted(((p, n - p) for n in range(args.max_n + 1)
                   for p in range(n + 1)), key=lambda s: (s[0] + s[1], s[0]))
    entries = [_atlas_entry(p, q) for p, q in sigs]
    payload = {"max_n": args.max_n, "count": len(entries),
               "signatures": entries}
    text = json.dumps(payload, sort_keys=True, indent=2)
    if args.out == "-":
        print(text)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    except OSError as e:
        print(f"atlas: cannot write {args.out}: {e}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {len(entries)} signatures to {args.out}")
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(
        prog="cliffordkit",
        description="Exact Clifford algebra kernel and state calculus")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        sp.add_argument("--format", choices=("json", "table"), default="json")
        return sp

    sp = add("classify", cmd_classify, "mod-8 type of Cl(p,q)")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("--oracle", action="store_true",
                    help="also run the division-ring oracle")

    sp = add("idempotent", cmd_idempotent, "canonical primitive idempotent")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)

    sp = add("factorize", cmd_factorize, "Karoubi chain or semisimple split")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)

    sp = add("iso-check", cmd_iso_check, "verify Cl(p,q) ~ tensor of factors")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("factors", nargs="+", metavar="P,Q",
                    help="factor signatures, e.g. 1,1 0,2")

    sp = add("cpt", cmd_cpt, "the eight discrete symmetries on C (x) Cl(p,q)")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)

    sp = add("fuse", cmd_fuse, "fuse two states")
    sp.add_argument("state1")
    sp.add_argument("state2")

    sp = add("double", cmd_double, "double (complexify) a state")
    sp.add_argument("state")
    sp.add_argument("sign", help="+ or -")

    sp = add("annihilate", cmd_annihilate, "contract a conjugate pair")
    sp.add_argument("state1")
    sp.add_argument("state2")

    sp = add("spectrum", cmd_spectrum, "enumerate the representation cone")
    sp.add_argument("--max-m", type=int, required=True, dest="max_m")
    sp.add_argument("--electron-mass", default="1", dest="electron_mass")

    sp = add("atlas", cmd_atlas, "sweep all signatures into a JSON atlas")
    sp.add_argument("--max-n", type=int, required=True, dest="max_n")
    sp.add_argument("--out", required=True, help="output path, or - for stdout")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except (SearchError, IsoError, StateError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
