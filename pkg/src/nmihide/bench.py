"""Corpus benchmark comparing the proposed scheme against Jung-Yoo.

Every input image is halved by subsampling to form the original, then both
schemes embed into it. By default each scheme is filled to capacity with
header-less random bits. Both schemes draw from one per-image generator, so
they carry prefixes of the same message.
"""

from __future__ import annotations

import csv
import io
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .bits import BitString
from .errors import NmiHideError
from .image import GrayImage, crop, downscale_half, iter_pgm_paths, read_pgm
from .interpolation import nmi_upscale
from .jungyoo import jy_capacity, jy_embed
from .metrics import bpp, format_db, gain_rate, psnr
from .proposed import compute_capacity, embed

log = logging.getLogger(__name__)

SCHEMES = {
    "proposed": (compute_capacity, embed),
    "jungyoo": (jy_capacity, jy_embed),
}

CSV_FIELDS = ["image", "scheme", "width", "height", "bits", "bpp",
              "psnr_vs_input", "psnr_vs_cover", "elapsed_ms"]


@dataclass
class BenchRow:
    image_name: str
    scheme: str
    width: int = 0
    height: int = 0
    bits: int = 0
    bpp: float = 0.0
    psnr_vs_input: float = 0.0
    psnr_vs_cover: float = 0.0
    elapsed_ms: Optional[float] = None
    error: Optional[str] = None

    def as_csv(self, timings: bool) -> list[str]:
        if self.error is not None:
            return [self.image_name, "skipped", "", "", "", "", "", "", ""]
        return [
            self.image_name, self.scheme, str(self.width), str(self.height), str(self.bits),
            f"{self.bpp:.4f}", format_db(self.psnr_vs_input), format_db(self.psnr_vs_cover),
            f"{self.elapsed_ms:.1f}" if timings and self.elapsed_ms is not None else "",
        ]


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)
    gains: list[tuple[str, float]] = field(default_factory=list)

    @property
    def mean_gain(self) -> Optional[float]:
        if not self.gains:
            return None
        return sum(g for _, g in self.gains) / len(self.gains)

    def row(self, image_name: str, scheme: str) -> BenchRow:
        for r in self.rows:
            if r.image_name == image_name and r.scheme == scheme:
                return r
        raise KeyError((image_name, scheme))

    def to_csv(self, timings: bool = False) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in self.rows:
            w.writerow(r.as_csv(timings))
        return buf.getvalue()

    def gain_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["image", "gain_rate"])
        for name, g in self.gains:
            w.writerow([name, f"{g:.4f}"])
        return buf.getvalue()


def random_bits(rng: random.Random, n: int) -> BitString:
    if n == 0:
        return BitString()
    return BitString.from_int(rng.getrandbits(n), n)


def bench_image(name: str, img: GrayImage, seed: int = 0,
                payload: Optional[bytes] = None) -> list[BenchRow]:
    """One row per scheme for a single input image."""
    original = downscale_half(img)
    cover = nmi_upscale(original)
    reference = crop(img, cover.width, cover.height)
    capacities = {s: cap(original) for s, (cap, _) in SCHEMES.items()}

    if payload is None:
        # seeding with a str is stable across processes and Python builds
        rng = random.Random(f"{seed}:{name}")
        message = random_bits(rng, max(c.total_bits for c in capacities.values()))
    else:
        message = BitString.from_bytes(payload)

    rows = []
    for scheme, (_, embed_fn) in SCHEMES.items():
        try:
            t0 = time.perf_counter()
            if payload is None:
                result = embed_fn(original, message[:capacities[scheme].total_bits], raw=True)
            else:
                result = embed_fn(original, message)
            elapsed = (time.perf_counter() - t0) * 1000
        except NmiHideError as exc:
            log.warning("%s/%s skipped: %s %s", name, scheme, exc.code, exc)
            rows.append(BenchRow(name, scheme, error=f"{exc.code} {exc}"))
            continue
        stego = result.stego
        rows.append(BenchRow(
            image_name=name,
            scheme=scheme,
            width=stego.width,
            height=stego.height,
            bits=result.bits_embedded,
            bpp=bpp(result.bits_embedded, stego),
            psnr_vs_input=psnr(reference, stego),
            psnr_vs_cover=psnr(cover, stego),
            elapsed_ms=elapsed,
        ))
    return rows


def _bench_path(args) -> list[BenchRow]:
    path, seed, payload = args
    name = path.stem
    try:
        img = read_pgm(path)
        return bench_image(name, img, seed, payload)
    except (OSError, NmiHideError) as exc:
        code = getattr(exc, "code", "IO")
        log.warning("%s skipped: %s %s", path.name, code, exc)
        return [BenchRow(name, "skipped", error=f"{code} {exc}")]


def run_bench(corpus_dir, seed: int = 0, payload: Optional[bytes] = None,
              jobs: int = 1) -> BenchReport:
    paths = list(iter_pgm_paths(corpus_dir))
    tasks = [(p, seed, payload) for p in paths]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_bench_path, tasks))
    else:
        results = [_bench_path(t) for t in tasks]

    report = BenchReport()
    for rows in results:
        report.rows.extend(rows)
        ok = {r.scheme: r for r in rows if r.error is None}
        if "proposed" in ok and "jungyoo" in ok and ok["jungyoo"].bpp > 0:
            report.gains.append(
                (rows[0].image_name, gain_rate(ok["proposed"].bpp, ok["jungyoo"].bpp)))
    return report


def write_report(report: BenchReport, out_csv, gain_csv=None, timings: bool = False) -> None:
    Path(out_csv).write_text(report.to_csv(timings))
    if gain_csv is not None:
        Path(gain_csv).write_text(report.gain_csv())
