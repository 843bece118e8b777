"""Regenerate the checked-in corpus manifests under corpus/."""

from pathlib import Path

from p5color.testkit import GenSpec, default_corpus, write_manifest

ROOT = Path(__file__).resolve().parent.parent / "corpus"

SCALING = [
    (f"split-n{n}-s{seed}", GenSpec("split", n, seed, {"clique": 3, "p": 0.1}))
    for n in (25, 50, 100)
    for seed in (1, 2, 3)
]


def main() -> None:
    ROOT.mkdir(exist_ok=True)
    header = "# id family n=<n> [params] seed=<seed>\n"
    (ROOT / "manifest.txt").write_text(header + write_manifest(default_corpus()))
    (ROOT / "scaling.txt").write_text(header + write_manifest(SCALING))
    print(f"wrote {ROOT / 'manifest.txt'} and {ROOT / 'scaling.txt'}")


if __name__ == "__main__":
    main()
