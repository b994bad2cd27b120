"""Generates the bundled tiny fixture corpus under fixtures/tiny/.

The target language is synthetic: every English word has a fixed invented
spelling, and target sentences are word-for-word renderings with occasional
adjacent swaps. Run from crates/core: python3 tests/oracles/make_tiny_fixture.py
"""
import json
import random
from pathlib import Path

rng = random.Random(2026)
OUT = Path(__file__).resolve().parents[2] / "fixtures" / "tiny"

COMMON = ("the a and of to in is was he she they it with for on his her their "
          "this that from by all not be have".split())
BIBLE = ("lord god people king israel land son father house day word spoke "
         "came went city heaven earth blessed shall unto servant prophet temple "
         "sacrifice covenant brother mother daughter bread water wine field".split())
DOMAIN = ("patient doctor dose tablet fever pain infection blood pressure heart "
          "treatment hospital nurse symptom vaccine virus clinic test result "
          "medicine daily weeks children adults risk severe mild care health".split())

SYLL = "ka ri mo tu le sa pi no ve da zu go hi fe la mi ro".split()


def invent(seen):
    while True:
        w = "".join(rng.choice(SYLL) for _ in range(rng.randint(2, 3)))
        if w not in seen:
            seen.add(w)
            return w


spelled = set()
lexicon = {w: invent(spelled) for w in COMMON + BIBLE + DOMAIN}


def sentence(content, lo, hi):
    n = rng.randint(lo, hi)
    words = [rng.choice(content) if rng.random() < 0.55 else rng.choice(COMMON) for _ in range(n)]
    return words


def render(words):
    tgt = [lexicon[w] for w in words]
    if len(tgt) > 3 and rng.random() < 0.3:
        i = rng.randrange(len(tgt) - 1)
        tgt[i], tgt[i + 1] = tgt[i + 1], tgt[i]
    return tgt


def capitalize(words):
    line = " ".join(words)
    return line[:1].upper() + line[1:] + " ."


def write_pair(name, count, content, lo, hi):
    src, tgt = [], []
    for _ in range(count):
        words = sentence(content, lo, hi)
        src.append(capitalize(words))
        tgt.append(" ".join(render(words)) + " .")
    (OUT / f"{name}.en").write_text("\n".join(src) + "\n")
    (OUT / f"{name}.xx").write_text("\n".join(tgt) + "\n")


OUT.mkdir(parents=True, exist_ok=True)
write_pair("bible", 400, BIBLE, 5, 12)
write_pair("domain", 260, DOMAIN, 4, 10)

# The stub translation service knows most words, a few as two-word phrases,
# and leaves some untranslated so the build report lists skipped forms.
stub = []
for w in sorted(COMMON + DOMAIN + ["."]):
    if w in ("risk", "mild", "care"):
        continue
    if w == ".":
        stub.append((w, "."))
    elif w in ("vaccine", "hospital"):
        stub.append((w, lexicon[w] + " " + lexicon["house"]))
    else:
        stub.append((w, lexicon[w]))
(OUT / "stub_dictionary.tsv").write_text("".join(f"{s}\t{t}\n" for s, t in stub))

config = {
    "seed": 42,
    "source_lang": "en",
    "target_lang": "xx",
    "paths": {
        "bible_source": "bible.en",
        "bible_target": "bible.xx",
        "domain_source": "domain.en",
        "domain_target": "domain.xx",
        "stub_dictionary": "stub_dictionary.tsv",
    },
    "split": {"validation_fraction": 0.08, "test_count": 60, "train_cap": 200000},
    "align": {"em_iterations": 5, "min_pair_count": 2},
    "lexicon": {"n_lemmas": 40, "client": {"kind": "stub"}},
    "dali": {"oov_policy": "copy", "histogram_bins": 10},
    "leca": {"max_suggestions": 10, "separator": "<sep>"},
    "cpt": {"mask_ratio": 0.35, "span_lambda": 3.5, "replace_length": 1,
            "dict_replace_prob": 0.3, "mask_token": "<mask>"},
    "batching": {"batch_size": 16},
    "evaluation": {"chrf": {"char_order": 6, "beta": 2.0, "include_whitespace": False}},
    "tokenizer": "whitespace",
}
(OUT / "config.json").write_text(json.dumps(config, indent=2) + "\n")
