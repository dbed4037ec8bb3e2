#!/usr/bin/env python3
"""Render goniometer snapshots for a handful of characteristic stereo signals.

Each signal is one 2048-sample frame; the script prints the two features
and writes one SVG per signal into demos/output/.
"""

from pathlib import Path

import numpy as np

from gonio import StereoFrame, extract_features, plot_goniometer

OUT_DIR = Path(__file__).parent / "output"
FRAME_LEN = 2048


def build_signals() -> dict[str, tuple[np.ndarray, np.ndarray]]:
    rng = np.random.default_rng(1)
    t = np.linspace(0.0, 1.0, FRAME_LEN)
    ramp = 2.0 * t - 1.0
    sine = np.sin(2 * np.pi * 6 * t)
    noise_l = rng.uniform(-1.0, 1.0, FRAME_LEN)
    noise_r = rng.uniform(-1.0, 1.0, FRAME_LEN)

    return {
        "mono_ramp": (ramp, ramp),  # vertical line, correlation +1
        "anti_phase": (sine, -sine),  # horizontal line, correlation -1
        "hard_panned_left": (sine, np.zeros(FRAME_LEN)),  # line along the L axis
        "wide_noise": (noise_l, noise_r),  # the whole plane fills up
        "narrowed_noise": (noise_l, 0.8 * noise_l + 0.2 * noise_r),  # tight diagonal cloud
        "quiet_mix": (0.15 * noise_l, 0.15 * (0.5 * noise_l + 0.5 * noise_r)),
    }


def main() -> None:
    OUT_DIR.mkdir(exist_ok=True)
    for name, (left, right) in build_signals().items():
        frame = StereoFrame(left=left, right=right, index=0)
        feats = extract_features([frame])[0]
        svg_path = OUT_DIR / f"gonio_{name}.svg"
        svg_path.write_text(plot_goniometer(frame, feats), encoding="utf-8")
        flag = " (degenerate)" if feats.degenerate_correlation else ""
        print(
            f"{name:18s} phase scope {feats.phase_scope:6.4f}  "
            f"correlation {feats.channel_correlation:+.3f}{flag}  -> {svg_path.name}"
        )


if __name__ == "__main__":
    main()
