"""Regenerate the two bundled sample datasets under data/.

Both are synthetic stand-ins for UCR-style corpora so the benchmark and
the demos run offline: `waves` holds two classes of noisy sinusoids,
`walks` holds random walks labelled by drift sign.  Deterministic seeds
keep the files reproducible.
"""

from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parent.parent / "data"


def make_waves(rng, count=12, length=128):
    rows = []
    for k in range(count):
        label = 1 + k % 2
        t = np.linspace(0.0, 4.0 * np.pi, length)
        phase = rng.uniform(0.0, np.pi)
        freq = 1.0 if label == 1 else 1.5
        values = np.sin(freq * t + phase) + 0.15 * rng.standard_normal(length)
        rows.append((label, values))
    return rows


def make_walks(rng, count=12, length=150):
    rows = []
    for k in range(count):
        drift = 0.02 if k % 2 == 0 else -0.02
        steps = rng.standard_normal(length) * 0.4 + drift
        values = np.cumsum(steps)
        rows.append((1 if drift > 0 else 2, values))
    return rows


def write(path, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for label, values in rows:
            fields = "\t".join(f"{v:.6f}" for v in values)
            fh.write(f"{label}\t{fields}\n")
    print(f"wrote {path} ({len(rows)} series)")


def main():
    OUT.mkdir(exist_ok=True)
    write(OUT / "waves.tsv", make_waves(np.random.default_rng(2024)))
    write(OUT / "walks.tsv", make_walks(np.random.default_rng(2025)))


if __name__ == "__main__":
    main()
