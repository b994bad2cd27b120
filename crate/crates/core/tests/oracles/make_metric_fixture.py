"""Builds the 50-pair metric fixture and scores it with sacreBLEU 2.x.

Run from the crate root:  python3 tests/oracles/make_metric_fixture.py
Writes tests/fixtures/metrics/{hyp.txt,ref.txt,expected.json}.
"""
import json
import random

import sacrebleu
from sacrebleu.metrics import BLEU, CHRF

REFS = [
    "the patient should take one tablet twice a day with food",
    "do not use this medicine if you are allergic to the active substance",
    "tell your doctor if you are pregnant or breast-feeding",
    "the most common side effects are headache and nausea",
    "keep this medicine out of the sight and reach of children",
    "the committee adopted the opinion by a large majority",
    "member states shall ensure that the rules are applied",
    "the european union supports small and medium-sized enterprises",
    "this report describes the results of the clinical studies",
    "the dose may be increased after two weeks of treatment",
    "store in the original package in order to protect from light",
    "the vaccine is given as an injection into the muscle",
    "in the beginning was the word",
    "blessed are the poor in spirit",
    "the opinion was adopted unanimously",
    "għandek tieħu pillola waħda kuljum",
    "il-kumitat adotta l-opinjoni",
    "dan il-mediċina għandha tinħażen f'post kiesaħ",
    "the authority granted a marketing authorisation valid throughout the union",
    "patients with kidney problems may need a lower dose",
    "yes",
    "thank you",
    "the council and the parliament reached an agreement on the budget",
    "the treatment should be started by a doctor experienced in cancer",
    "the effects of the medicine were studied in three main studies",
    "you should not drive or use machines",
    "the benefits are greater than its risks",
    "the commission will present a proposal next year",
    "employment and social affairs remain a priority",
    "the blood pressure was measured every hour",
    "blood tests",
    "the eye drops must be used within four weeks of opening",
    "the company that markets the medicine will provide training material",
    "the regulation enters into force on the day of its publication",
    "citizens have the right to access documents",
    "the study involved more than two thousand adults",
    "the medicine is available as capsules",
    "the doctor will decide how long you should be treated",
    "the funds must be used in a transparent way",
    "the agency recommended that the medicine be given approval",
    "the heart rate was lower in the treated group",
    "workers should be informed of the risks",
    "a new strategy for the internal market",
    "the symptoms improved within days",
    "the liver function should be monitored",
    "information on the safe use of the medicine",
    "the number of unemployed young people has increased",
    "the text is available in all official languages",
    "the injection site may become red and swollen",
    "the meeting was closed at noon",
]

SUBS = {
    "medicine": "drug", "doctor": "physician", "patient": "person", "the": "a",
    "should": "must", "treatment": "therapy", "opinion": "view", "dose": "amount",
    "studies": "trials", "union": "community", "għandek": "trid", "kuljum": "kull",
    "risks": "dangers", "adopted": "approved", "blood": "blod", "children": "kids",
}


def perturb(rng, ref, i):
    toks = ref.split()
    mode = i % 6
    if mode == 0:
        return ref
    if mode == 1:
        return " ".join(SUBS.get(t, t) if rng.random() < 0.6 else t for t in toks)
    if mode == 2 and len(toks) > 3:
        k = rng.randrange(1, len(toks) - 1)
        return " ".join(toks[:k] + toks[k + 1:])
    if mode == 3 and len(toks) > 4:
        a = rng.randrange(0, len(toks) - 2)
        toks[a], toks[a + 1] = toks[a + 1], toks[a]
        return " ".join(toks)
    if mode == 4:
        return " ".join(toks[: max(1, len(toks) // 2)])
    out = [SUBS.get(t, t) for t in toks]
    out.insert(rng.randrange(0, len(out) + 1), "also")
    return " ".join(out)


def main():
    rng = random.Random(42)
    hyps = [perturb(rng, r, i) for i, r in enumerate(REFS)]
    # a few hand-written edge cases
    hyps[20] = "yes"            # single token, exact match
    hyps[21] = "thanks"         # no match at all
    hyps[30] = "blood"          # one of two tokens
    hyps[13] = "the meek shall inherit the earth"
    assert len(hyps) == 50 and len(REFS) == 50

    with open("tests/fixtures/metrics/hyp.txt", "w") as f:
        f.write("\n".join(hyps) + "\n")
    with open("tests/fixtures/metrics/ref.txt", "w") as f:
        f.write("\n".join(REFS) + "\n")

    corpus_bleu = BLEU(tokenize="none", smooth_method="none").corpus_score(hyps, [REFS])
    sent_bleu = BLEU(tokenize="none", smooth_method="exp", effective_order=True)
    chrf_mean_f = CHRF(eps_smoothing=True)
    chrf_avg_pr = CHRF()

    expected = {
        "sacrebleu_version": sacrebleu.__version__,
        "corpus_bleu": {
            "score": corpus_bleu.score,
            "precisions": corpus_bleu.precisions,
            "bp": corpus_bleu.bp,
            "hyp_len": corpus_bleu.sys_len,
            "ref_len": corpus_bleu.ref_len,
        },
        "corpus_chrf_mean_f": chrf_mean_f.corpus_score(hyps, [REFS]).score,
        "corpus_chrf_averaged_pr": chrf_avg_pr.corpus_score(hyps, [REFS]).score,
        "sentence_bleu": [sent_bleu.sentence_score(h, [r]).score for h, r in zip(hyps, REFS)],
        "sentence_chrf_mean_f": [chrf_mean_f.sentence_score(h, [r]).score for h, r in zip(hyps, REFS)],
        "sentence_chrf_averaged_pr": [chrf_avg_pr.sentence_score(h, [r]).score for h, r in zip(hyps, REFS)],
    }
    with open("tests/fixtures/metrics/expected.json", "w") as f:
        json.dump(expected, f, indent=2)
        f.write("\n")


if __name__ == "__main__":
    main()
