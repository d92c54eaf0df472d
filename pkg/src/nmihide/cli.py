"""Command line interface: embed, extract, recover, capacity, downscale, bench.

Failures print one ``error: CODE detail`` line on stderr. Exit statuses: 2
capacity exceeded, 3 corrupt stream, 4 bad image, 5 I/O.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import jungyoo, proposed
from .bench import run_bench, write_report
from .bits import BitString
from .errors import NmiHideError
from .image import downscale_half, read_pgm, write_pgm
from .interpolation import nmi_upscale
from .metrics import bpp, format_db, psnr

CODECS = {
    "proposed": (proposed.embed, proposed.extract, proposed.compute_capacity),
    "jungyoo": (jungyoo.jy_embed, jungyoo.jy_extract, jungyoo.jy_capacity),
}

EXIT_IO = 5


def _read_payload(path, raw: bool) -> BitString:
    data = Path(path).read_bytes()
    if raw:
        try:
            return BitString(data.decode("ascii"))
        except (UnicodeDecodeError, ValueError) as exc:
            raise OSError(f"raw payload must be an ASCII bit string: {exc}") from exc
    return BitString.from_bytes(data)


def cmd_embed(args) -> int:
    original = read_pgm(args.original)
    payload = _read_payload(args.payload, args.raw)
    embed_fn, _, _ = CODECS[args.scheme]
    result = embed_fn(original, payload, raw=args.raw)
    write_pgm(args.out, result.stego)
    cover = nmi_upscale(original)
    print(
        f"scheme={args.scheme} bits={result.bits_embedded} "
        f"payload_bits={result.payload_bits_embedded} "
        f"capacity={result.capacity.total_bits} "
        f"bpp={bpp(result.bits_embedded, result.stego):.4f} "
        f"psnr_vs_cover={format_db(psnr(cover, result.stego))}"
    )
    return 0


def cmd_extract(args) -> int:
    stego = read_pgm(args.stego)
    _, extract_fn, _ = CODECS[args.scheme]
    bits = extract_fn(stego, raw=args.raw)
    if args.raw:
        Path(args.out).write_text(str(bits) + "\n")
    else:
        if len(bits) % 8:
            print(f"warning: {len(bits)} payload bits is not a whole number of bytes; "
                  "last byte zero-padded", file=sys.stderr)
        Path(args.out).write_bytes(bits.to_bytes())
    print(f"scheme={args.scheme} payload_bits={len(bits)}")
    return 0


def cmd_recover(args) -> int:
    stego = read_pgm(args.stego)
    original = proposed.recover_original(stego)
    write_pgm(args.out, original)
    print(f"recovered {original.width}x{original.height}")
    return 0


def cmd_capacity(args) -> int:
    original = read_pgm(args.original)
    _, _, capacity_fn = CODECS[args.scheme]
    cap = capacity_fn(original)
    if args.per_pixel:
        for e in cap.entries:
            print(f"{e.i},{e.j},{e.n_bits},{e.min_val},{e.max_val}")
    pixels = cap.width * cap.height
    print(
        f"scheme={args.scheme} cover={cap.width}x{cap.height} total_bits={cap.total_bits} "
        f"payload_bits={cap.payload_capacity} bpp={cap.total_bits / pixels:.4f}"
    )
    return 0


def cmd_downscale(args) -> int:
    write_pgm(args.out, downscale_half(read_pgm(args.input)))
    return 0


def cmd_bench(args) -> int:
    payload = Path(args.payload).read_bytes() if args.payload else None
    report = run_bench(args.corpus, seed=args.seed, payload=payload, jobs=args.jobs)
    write_report(report, args.out, args.gain_out, timings=args.timings)
    for name, g in report.gains:
        print(f"{name}: gain_rate={g:.4f}")
    mean = report.mean_gain
    print(f"images={len(report.gains)} mean_gain_rate={'n/a' if mean is None else f'{mean:.4f}'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nmihide", description="Reversible data hiding in interpolated grayscale images.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def codec_flags(p):
        p.add_argument("--scheme", choices=sorted(CODECS), default="proposed")
        p.add_argument("--raw", action="store_true",
                       help="no 32-bit length header; payloads are ASCII bit strings")

    p = sub.add_parser("embed", help="upscale ORIGINAL and hide PAYLOAD in it")
    p.add_argument("original")
    p.add_argument("payload")
    p.add_argument("--out", required=True)
    codec_flags(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("extract", help="read the hidden payload from STEGO")
    p.add_argument("stego")
    p.add_argument("--out", required=True)
    codec_flags(p)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("recover", help="restore the original image from STEGO")
    p.add_argument("stego")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("capacity", help="report embeddable bits for ORIGINAL")
    p.add_argument("original")
    p.add_argument("--scheme", choices=sorted(CODECS), default="proposed")
    p.add_argument("--per-pixel", action="store_true", help="print i,j,n,min,max per site")
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("downscale", help="halve INPUT by even-coordinate subsampling")
    p.add_argument("input")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_downscale)

    p = sub.add_parser("bench", help="PSNR/BPP comparison over a directory of PGM images")
    p.add_argument("corpus")
    p.add_argument("--out", required=True, help="per-image, per-scheme CSV")
    p.add_argument("--gain-out", help="CSV of image,gain_rate")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--payload", help="embed this file (with length header) instead of "
                                     "filling capacity with random bits")
    p.add_argument("--timings", action="store_true",
                   help="fill elapsed_ms (makes the CSV nondeterministic)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except NmiHideError as exc:
        print(f"error: {exc.code} {exc}", file=sys.stderr)
        return exc.exit_status
    except OSError as exc:
        print(f"error: IO {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
