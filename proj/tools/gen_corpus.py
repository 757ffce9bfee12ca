#!/usr/bin/env python3
"""Deterministic synthetic Bangla POS corpus generator.

Emits data/corpus_bn.pos: 895 sentences of surface/TAG tokens. Surfaces
are pseudo-Bangla stems with nominal suffixes attached so the suffix
stripper in data/stem_rules_bn.txt recovers the stems; a sprinkling of
real function words exercises the stop-word filter. Frequencies follow
a Zipf-like mixture so the ranked vocabulary lands in the size band the
test suite expects.
"""

import random
import sys
from pathlib import Path

SENTENCES = 895
STEM_POOL = 1500
SEED = 20240612

# Onset syllables: consonant plus optional vowel sign, or an
# independent vowel for word-initial position.
CONSONANTS = "কখগচছজটঠডতথনপফবভমলশষসহ"
VOWEL_SIGNS = ["", "া", "ি", "ী", "ু", "ে", "ো"]
INDEPENDENT = ["অ", "আ", "ই", "উ", "এ", "ও"]
# Final letters chosen so no stem ends in a strippable suffix and no
# stem+suffix compound matches a longer rule across the boundary.
FINALS = "কখগচছজটঠনমলশষসহবপফভ"

NOUN_SUFFIXES = ["", "", "", "ের", "টা", "টি", "রা", "কে", "তে", "গুলো", "দের"]
NAME_SUFFIXES = ["", "", "", "ের"]

STOP_WORDS = [
    ("এবং", "CONJ"), ("ও", "CONJ"), ("কিন্তু", "CONJ"), ("বা", "CONJ"),
    ("না", "RB"), ("এই", "DET"), ("যে", "PRP"), ("সে", "PRP"),
    ("তার", "PRP"), ("আমি", "PRP"), ("আমরা", "PRP"), ("তিনি", "PRP"),
    ("থেকে", "PPR"), ("জন্য", "PPR"), ("সাথে", "PPR"), ("করে", "VFM"),
    ("হয়", "VFM"), ("ছিল", "VFM"), ("আছে", "VFM"), ("মধ্যে", "PPR"),
    ("পরে", "PPR"), ("খুব", "RB"), ("যদি", "CONJ"), ("তবে", "CONJ"),
    ("শুধু", "RB"), ("একটি", "DET"), ("কিছু", "DET"), ("সব", "DET"),
    ("অনেক", "JJ"),
]

SUFFIX_RULES = [
    "গুলোর", "গুলির", "গুলোকে", "গুলিকে", "গুলো", "গুলি", "খানা", "খানি",
    "দেরকে", "দের", "েরা", "রা", "টার", "টির", "টাকে", "টিকে", "টা", "টি",
    "কে", "তে", "ের", "য়ের", "তেই", "েই", "ে", "র",
]


def make_stems(rng):
    stems = []
    seen = set()
    while len(stems) < STEM_POOL:
        parts = [rng.choice(INDEPENDENT) if rng.random() < 0.25 else
                 rng.choice(CONSONANTS) + rng.choice(VOWEL_SIGNS)]
        for _ in range(rng.randint(0, 1)):
            parts.append(rng.choice(CONSONANTS) + rng.choice(VOWEL_SIGNS))
        parts.append(rng.choice(FINALS))
        stem = "".join(parts)
        if stem in seen or len(stem) < 3:
            continue
        if any(stem.endswith(rule) for rule in SUFFIX_RULES):
            continue
        seen.add(stem)
        stems.append(stem)
    return stems


def pos_of(index):
    bucket = index % 100
    if bucket < 55:
        return "NN"
    if bucket < 63:
        return "NNP"
    if bucket < 83:
        return "VFM"
    if bucket < 93:
        return "JJ"
    return "RB"


def main():
    rng = random.Random(SEED)
    stems = make_stems(rng)
    weights = [1.0 / (rank + 1.0) ** 1.05 for rank in range(STEM_POOL)]

    def draw_stem():
        # Mixture: a uniform floor keeps the vocabulary broad while the
        # Zipf head keeps frequencies realistic.
        if rng.random() < 0.3:
            return rng.randrange(STEM_POOL)
        return rng.choices(range(STEM_POOL), weights=weights, k=1)[0]

    lines = []
    used = set()
    for _ in range(SENTENCES):
        length = rng.randint(4, 13)
        tokens = []
        content = 0
        while content < 3 or len(tokens) < length:
            if tokens and rng.random() < 0.16:
                word, tag = rng.choice(STOP_WORDS)
                tokens.append(f"{word}/{tag}")
                continue
            idx = draw_stem()
            used.add(idx)
            stem = stems[idx]
            tag = pos_of(idx)
            if tag == "NN":
                surface = stem + rng.choice(NOUN_SUFFIXES)
            elif tag == "NNP":
                surface = stem + rng.choice(NAME_SUFFIXES)
            else:
                surface = stem
            tokens.append(f"{surface}/{tag}")
            content += 1
        lines.append(" ".join(tokens))

    nouns = {stems[i] for i in used if pos_of(i) in ("NN", "NNP")}
    print(f"sentences={len(lines)} distinct_stems={len(used)} "
          f"noun_stems={len(nouns)}", file=sys.stderr)
    if not 500 <= len(used) <= 5000:
        print("vocabulary outside [500, 5000]; adjust the mixture",
              file=sys.stderr)
        return 1

    out = Path(__file__).resolve().parent.parent / "data" / "corpus_bn.pos"
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
