"""Command-line interface.

    waringrank rank "x^2 + x*y + y^2"
    waringrank apolar "x^2*y^3 + x^3*y^2"
    waringrank hf "x*y^5"
    waringrank decompose "x^3 + x*y^2" --precision 128 --seed 0
    waringrank real "x^3*y^2 - x^2*y^3"
    waringrank binomial --r 2 --s 2 --alpha 2
    waringrank table --max-r 4 --max-s 4 --max-alpha 4 --verify

Exit codes: 0 success, 2 parse error, 3 domain error, 4 search/verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from . import __version__
from .apolarity import apolar_generators, hilbert_function
from .binomial import BinomialShape, binomial_rank, normalize_binomial, monomial_rank, table_row
from .decomposition import DEFAULT_PRECISION, DEFAULT_SEED, WaringDecomposition, decompose
from .errors import DomainError, VerificationError, WaringError
from .forms import BinaryForm
from .parser import format_rational, parse_form, render
from .realrank import real_binomial_class, real_rank
from .sylvester import RankCertificate, waring_rank

CSV_FIELDS = ["r", "s", "alpha", "delta", "q", "j", "rank"]


# -- serialization ----------------------------------------------------------

def form_to_dict(g: BinaryForm) -> dict:
    return {"degree": g.degree, "coeffs": [format_rational(c) for c in g.coeffs], "text": render(g)}


def certificate_to_dict(cert: RankCertificate) -> dict:
    w = cert.witness
    return {
        "degree": cert.degree,
        "rank": cert.rank,
        "method": cert.method.value,
        "g1": form_to_dict(w.g1) if w else None,
        "g2": form_to_dict(w.g2) if w else None,
        "g1_square_free": cert.g1_square_free,
    }


def _mp_str(x, bits: int) -> str:
    return x.context.nstr(x, int(bits * math.log10(2)) + 2)


def _complex_to_dict(z, bits: int) -> dict:
    ctx = z.context
    return {"re": _mp_str(ctx.re(z), bits), "im": _mp_str(ctx.im(z), bits)}


def decomposition_to_dict(F: BinaryForm, dec: WaringDecomposition) -> dict:
    p = dec.precision_bits
    return {
        "form": render(F),
        "degree": F.degree,
        "rank": len(dec),
        "precision_bits": p,
        "residual": _mp_str(dec.residual, p),
        "annihilator": form_to_dict(dec.annihilator),
        "terms": [
            {"c": _complex_to_dict(c, p), "a": _complex_to_dict(a, p), "b": _complex_to_dict(b, p)}
            for c, (a, b) in dec.terms
        ],
    }


def _complex_text(z, digits: int) -> str:
    ctx = z.context
    re_, im_ = ctx.re(z), ctx.im(z)
    if im_ == 0:
        return ctx.nstr(re_, digits)
    if re_ == 0:
        return f"{ctx.nstr(im_, digits)}j"
    sign = "-" if im_ < 0 else "+"
    return f"({ctx.nstr(re_, digits)} {sign} {ctx.nstr(abs(im_), digits)}j)"


def _linear_text(a, b, digits: int) -> str:
    parts = []
    for z, var in ((a, "x"), (b, "y")):
        if z == 0:
            continue
        ctx = z.context
        re_, im_ = ctx.re(z), ctx.im(z)
        if parts and (re_ == 0 or im_ == 0):
            lead = re_ if im_ == 0 else im_
            parts.append(f"{'-' if lead < 0 else '+'} {_complex_text(-z if lead < 0 else z, digits)}*{var}")
        else:
            parts.append(f"{'+ ' if parts else ''}{_complex_text(z, digits)}*{var}")
    return " ".join(parts)


# -- rank verification ------------------------------------------------------

def certified_rank(F: BinaryForm, verify: bool = True) -> tuple[RankCertificate, bool]:
    """Closed form for monomials and binomials (checked against Sylvester), Sylvester otherwise."""
    support = F.support()
    if len(support) == 1:
        cert = monomial_rank(support[0], F.degree - support[0])
    elif len(support) == 2:
        cert = binomial_rank(normalize_binomial(F))
    else:
        return waring_rank(F), False
    if not verify:
        return cert, False
    oracle = waring_rank(F)
    if oracle.rank != cert.rank:
        raise VerificationError(
            f"closed form gives {cert.rank} but Sylvester's algorithm gives {oracle.rank} for {render(F)}"
        )
    return RankCertificate(cert.degree, cert.rank, cert.method, oracle.witness, oracle.g1_square_free), True


# -- table ------------------------------------------------------------------

def table_cell(cell: tuple[int, int, int, bool]) -> dict:
    r, s, alpha, verify = cell
    shape = BinomialShape.from_exponents(r, s, alpha)
    row = {
        "r": r, "s": s, "alpha": alpha,
        "delta": shape.delta, "q": shape.q, "j": shape.j,
        "rank": binomial_rank(shape).rank,
    }
    if verify:
        row["verified"] = waring_rank(shape.expand()).rank == row["rank"]
    return row


def build_table(max_r: int, max_s: int, max_alpha: int, verify: bool = False, jobs: int = 1) -> list[dict]:
    """Rows in lexicographic (r, s, alpha) order; r > s cells are read with x and y exchanged."""
    cells = [(r, s, a, verify) for r, s, a in product(range(max_r + 1), range(max_s + 1), range(1, max_alpha + 1))]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(table_cell, cells, chunksize=16))
    return [table_cell(c) for c in cells]


def table_csv(rows: list[dict], verify: bool) -> str:
    fields = CSV_FIELDS + (["verified"] if verify else [])
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (str(row[k]).lower() if k == "verified" else row[k]) for k in fields})
    return buf.getvalue()


# -- commands ---------------------------------------------------------------

def cmd_rank(args) -> tuple[object, str]:
    F = parse_form(args.form)
    cert, verified = certified_rank(F, verify=not args.no_verify)
    data = certificate_to_dict(cert)
    data["form"] = render(F)
    data["verified"] = verified
    lines = [f"form:    {render(F)}", f"degree:  {cert.degree}", f"rank:    {cert.rank}",
             f"method:  {cert.method.value}"]
    if cert.witness is not None:
        sf = "square-free" if cert.g1_square_free else "not square-free"
        lines.append(f"g1:      {render(cert.witness.g1)}  (degree {cert.witness.d1}, {sf})")
        lines.append(f"g2:      {render(cert.witness.g2)}  (degree {cert.witness.d2})")
    if verified:
        lines.append("verified against Sylvester's algorithm")
    return data, "\n".join(lines)


def cmd_apolar(args):
    F = parse_form(args.form)
    pair = apolar_generators(F)
    data = {"form": render(F), "degree": F.degree, "g1": form_to_dict(pair.g1), "g2": form_to_dict(pair.g2)}
    text = "\n".join([
        f"form: {render(F)}",
        f"g1:   {render(pair.g1)}  (degree {pair.d1})",
        f"g2:   {render(pair.g2)}  (degree {pair.d2})",
    ])
    return data, text


def cmd_hf(args):
    F = parse_form(args.form)
    hf = hilbert_function(F)
    data = {"form": render(F), "degree": hf.degree, "values": list(hf.values)}
    return data, " ".join(str(v) for v in hf.values)


def cmd_decompose(args):
    F = parse_form(args.form)
    dec = decompose(F, precision_bits=args.precision, seed=args.seed)
    data = decomposition_to_dict(F, dec)
    digits = min(20, int(args.precision * math.log10(2)))
    lines = [f"form: {render(F)}", f"rank: {len(dec)}"]
    for c, (a, b) in dec.terms:
        lines.append(f"  {_complex_text(c, digits)} * ({_linear_text(a, b, digits)})^{F.degree}")
    lines.append(f"relative residual: {dec.residual.context.nstr(dec.residual, 5)}"
                 f"  ({args.precision}-bit precision)")
    return data, "\n".join(lines)


def cmd_real(args):
    F = parse_form(args.form)
    rep = real_rank(F)
    data = {"form": render(F), "degree": F.degree, "kind": rep.kind.value, "reason": rep.reason.value,
            "value": rep.value, "lower": rep.lower, "upper": rep.upper}
    if rep.value is not None:
        lines = [f"real rank: {rep.value}  ({rep.reason.value})"]
    else:
        lines = [f"real rank: between {rep.lower} and {rep.upper}  ({rep.reason.value})"]
    if len(F.support()) == 2:
        cls = real_binomial_class(normalize_binomial(F))
        data["binomial_class"] = {"class": cls.sign_class.value, "r": cls.r, "s": cls.s, "alpha": cls.alpha,
                                  "canonical": render(cls.canonical_form())}
        lines.append(f"binomial class: {cls.sign_class.value}, canonical form {render(cls.canonical_form())}")
    return data, "\n".join(lines)


def cmd_binomial(args):
    shape = BinomialShape.from_exponents(args.r, args.s, args.alpha)
    cert = binomial_rank(shape)
    data = {"r": shape.r, "s": shape.s, "alpha": shape.alpha, "swapped": shape.swapped,
            "delta": shape.delta, "q": shape.q, "j": shape.j,
            "row": table_row(shape.r, shape.s, shape.alpha), "rank": cert.rank,
            "method": cert.method.value, "degree": cert.degree}
    text = (f"r={shape.r} s={shape.s} alpha={shape.alpha} delta={shape.delta} q={shape.q} j={shape.j}\n"
            f"row: {data['row']}\nrank: {cert.rank}")
    return data, text


def cmd_table(args):
    for name in ("max_r", "max_s", "max_alpha"):
        if getattr(args, name) < (1 if name == "max_alpha" else 0):
            raise DomainError(f"--{name.replace('_', '-')} out of range")
    rows = build_table(args.max_r, args.max_s, args.max_alpha, verify=args.verify, jobs=args.jobs)
    text = table_csv(rows, args.verify)
    failed = [r for r in rows if r.get("verified") is False]
    return rows, text, failed


COMMANDS = {
    "rank": cmd_rank, "apolar": cmd_apolar, "hf": cmd_hf, "decompose": cmd_decompose,
    "real": cmd_real, "binomial": cmd_binomial, "table": cmd_table,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="print a JSON object")
    fmt.add_argument("--csv", action="store_true", help="print CSV (table only)")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(prog="waringrank", description="Waring rank of binary forms.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_form(name, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("form", help='binary form, e.g. "x^3*y^2 - x*y^4"')
        return p

    p = with_form("rank", "Waring rank with certificate")
    p.add_argument("--no-verify", action="store_true",
                   help="skip the Sylvester cross-check for monomials and binomials")
    with_form("apolar", "generators of the apolar ideal")
    with_form("hf", "Hilbert function of the apolar quotient")
    p = with_form("decompose", "explicit minimal Waring decomposition")
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION, metavar="BITS")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    with_form("real", "real Waring rank (exact or bounds)")

    p = sub.add_parser("binomial", parents=[common], help="closed-form rank of x^r y^s (y^alpha + x^alpha)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)

    p = sub.add_parser("table", parents=[common], help="grid of closed-form binomial ranks")
    p.add_argument("--max-r", type=int, required=True)
    p.add_argument("--max-s", type=int, required=True)
    p.add_argument("--max-alpha", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="check every cell with Sylvester's algorithm")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the grid")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "decompose" and args.precision < 16:
            raise DomainError("--precision must be at least 16 bits")
        result = COMMANDS[args.command](args)
    except WaringError as exc:
        print(json.dumps(exc.to_dict()), file=sys.stderr)
        return exc.exit_code
    failed = []
    if args.command == "table":
        data, text, failed = result
    else:
        data, text = result
    if args.json:
        text = json.dumps(data, indent=2)
    elif args.csv and args.command != "table":
        print(json.dumps({"error": "usage", "message": "--csv is only supported by 'table'"}), file=sys.stderr)
        return 2
    _emit(text, args.out)
    if failed:
        err = VerificationError(f"{len(failed)} table cells disagree with Sylvester's algorithm")
        print(json.dumps(err.to_dict()), file=sys.stderr)
        return err.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
