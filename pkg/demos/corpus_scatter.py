#!/usr/bin/env python3
"""Synthesize a tiny two-style WAV corpus and run the CLI pipeline over it.

"Pressed" songs are loud, compressed-sounding correlated noise; "airy"
songs are quiet and wide. The script shells through the same entry points
as the installed `gonio` command: extract to CSVs, then plot the per-song
scatter. Everything lands in demos/output/.
"""

import struct
from pathlib import Path

import numpy as np

from gonio.cli import main as gonio_main

OUT_DIR = Path(__file__).parent / "output"
RATE = 22050
SECONDS = 50  # enough for the full 500-frame window


def write_float32_wav(path: Path, left: np.ndarray, right: np.ndarray, rate: int) -> None:
    interleaved = np.empty(2 * len(left), dtype="<f4")
    interleaved[0::2] = left
    interleaved[1::2] = right
    payload = interleaved.tobytes()
    fmt = struct.pack("<HHIIHH", 3, 2, rate, rate * 8, 8, 32)
    body = b"WAVE" + b"fmt " + struct.pack("<I", len(fmt)) + fmt
    body += b"data" + struct.pack("<I", len(payload)) + payload
    path.write_bytes(b"RIFF" + struct.pack("<I", len(body)) + body)


def synth_song(rng: np.random.Generator, amp: float, rho: float) -> tuple[np.ndarray, np.ndarray]:
    n = RATE * SECONDS
    z1 = rng.uniform(-1.0, 1.0, n)
    z2 = rng.uniform(-1.0, 1.0, n)
    left = amp * z1
    right = np.clip(amp * (rho * z1 + np.sqrt(1.0 - rho * rho) * z2), -1.0, 1.0)
    return left, right


def main() -> None:
    corpus = OUT_DIR / "corpus"
    corpus.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(11)

    labels = ["source_id,class"]
    for k in range(6):
        left, right = synth_song(rng, amp=0.95, rho=0.9)
        write_float32_wav(corpus / f"pressed{k}.wav", left, right, RATE)
        labels.append(f"pressed{k},pressed")
    for k in range(6):
        left, right = synth_song(rng, amp=0.18, rho=0.2)
        write_float32_wav(corpus / f"airy{k}.wav", left, right, RATE)
        labels.append(f"airy{k},airy")
    labels_csv = OUT_DIR / "labels.csv"
    labels_csv.write_text("\n".join(labels) + "\n", encoding="utf-8")
    print(f"synthesized 12 songs in {corpus}")

    assert gonio_main(["extract", str(corpus), "--out", str(OUT_DIR)]) == 0
    assert (
        gonio_main(
            [
                "plot",
                "scatter",
                str(OUT_DIR / "songs.csv"),
                "--labels",
                str(labels_csv),
                "--out",
                str(OUT_DIR / "scatter.svg"),
            ]
        )
        == 0
    )
    print("done; open demos/output/scatter.svg")


if __name__ == "__main__":
    main()
