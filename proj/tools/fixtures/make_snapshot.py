#!/usr/bin/env python3
"""Builds tests/fixtures/snapshot.jsonl and the companion fixtures from a generated corpus.

The released corpus cannot be fetched at build time, so the snapshot is a stand-in with the
published marginals: modifier-type counts, per-slot counts, label counts (with 217 records left
unlabelled), and the neutral counts for negation by slot and for universal modifiers on verbs.
Pairs come from `sicck generate`; labels follow the oracle wherever the quotas allow and are
otherwise filled from the remaining quota, so gold labels here are annotations, not oracle output.

usage: make_snapshot.py GENERATED.jsonl OUT_DIR
"""
import json
import random
import sys
from collections import Counter, defaultdict
from pathlib import Path

CELLS = {  # (modifier group, slot) -> records
    ("universal", "subject"): 64, ("universal", "verb"): 89, ("universal", "object"): 64,
    ("existential", "subject"): 152, ("existential", "object"): 151,
    ("negation", "subject"): 86, ("negation", "verb"): 41, ("negation", "object"): 40,
    ("adjective_adverb", "subject"): 258, ("adjective_adverb", "verb"): 90, ("adjective_adverb", "object"): 254,
}
NEUTRAL_IN_CELL = {
    ("negation", "subject"): 65, ("negation", "verb"): 31, ("negation", "object"): 22,
    ("universal", "verb"): 49,
}
LABELS = {"FE": 223, "RE": 27, "Alternation": 121, "Negation": 54, "Negation|Alternation": 260,
          "Independence": 393, "Equivalence": 7, "Cover": 1, "Cover|FE": 1}
LABEL_ORDER = list(LABELS)
NON_NEUTRAL = ["FE", "RE", "Alternation", "Negation", "Negation|Alternation"]
UNLABELED = 217
UNLABELED_CELLS = [("existential", "subject"), ("existential", "object"),
                   ("adjective_adverb", "subject"), ("adjective_adverb", "object")]

GROUP = {"universal": "universal", "existential": "existential", "negation": "negation",
         "adjective": "adjective_adverb", "adverb": "adjective_adverb"}


def round_robin(records, n):
    by_seed = defaultdict(list)
    for r in records:
        by_seed[r["seed_id"]].append(r)
    queues = [by_seed[s] for s in sorted(by_seed)]
    out = []
    while len(out) < n:
        progressed = False
        for q in queues:
            if q and len(out) < n:
                out.append(q.pop(0))
                progressed = True
        if not progressed:
            raise SystemExit(f"not enough candidates: wanted {n}, got {len(out)}")
    return out


def spread(items, n):
    """n items evenly spaced through the list."""
    m = len(items)
    return [items[i] for i in range(m) if (i + 1) * n // m > i * n // m]


def take(remaining, label):
    remaining[label] -= 1
    assert remaining[label] >= 0, label


def fallback(remaining, allowed):
    return max(allowed, key=lambda l: (remaining[l], -LABEL_ORDER.index(l)))


def main():
    src, out_dir = Path(sys.argv[1]), Path(sys.argv[2])
    generated = [json.loads(line) for line in src.read_text().splitlines() if line.strip()]
    for i, r in enumerate(generated):
        r["_order"] = i

    originals = [r for r in generated if not r["premise_modified"] and not r["hypothesis_modified"]]
    assert len(originals) == 15
    candidates = defaultdict(list)
    for r in generated:
        if r["modifier_type"] and len(r["slots"]) == 1:
            candidates[(GROUP[r["modifier_type"]], r["slots"][0])].append(r)
    chosen = {cell: round_robin(candidates[cell], n) for cell, n in CELLS.items()}

    remaining = Counter(LABELS)
    for r in originals:
        take(remaining, r["gold_label"])

    unlabeled = set()
    pool = [r["id"] for cell in UNLABELED_CELLS for r in chosen[cell]]
    unlabeled.update(spread(pool, UNLABELED))

    # constrained cells first, so their neutral counts hold exactly
    for cell, neutral in NEUTRAL_IN_CELL.items():
        recs = sorted(chosen[cell], key=lambda r: r["gold_label"] != "Independence")
        for i, r in enumerate(recs):
            if i < neutral:
                r["_label"] = "Independence"
            elif r["gold_label"] in NON_NEUTRAL and remaining[r["gold_label"]] > 0:
                r["_label"] = r["gold_label"]
            else:
                r["_label"] = fallback(remaining, NON_NEUTRAL)
            take(remaining, r["_label"])

    rest = [r for cell, recs in chosen.items() if cell not in NEUTRAL_IN_CELL for r in recs
            if r["id"] not in unlabeled]
    rest.sort(key=lambda r: r["_order"])
    for r in rest:
        if remaining[r["gold_label"]] > 0:
            r["_label"] = r["gold_label"]
            take(remaining, r["_label"])
    for r in rest:
        if "_label" not in r:
            r["_label"] = fallback(remaining, LABEL_ORDER)
            take(remaining, r["_label"])
    assert all(v == 0 for v in remaining.values()), remaining

    records = originals + [r for recs in chosen.values() for r in recs]
    records.sort(key=lambda r: r["_order"])
    lines = []
    for r in records:
        rec = {k: v for k, v in r.items() if not k.startswith("_")}
        if not (r in originals):
            rec["gold_label"] = None if r["id"] in unlabeled else r["_label"]
        lines.append(json.dumps(rec, ensure_ascii=False, separators=(",", ":")))
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "snapshot.jsonl").write_text("\n".join(lines) + "\n")
    snapshot = [json.loads(l) for l in lines]

    write_predictions(snapshot, out_dir)
    write_csv_sample(snapshot, out_dir)


def compress(label):
    return {"FE": "FE", "RE": "RE", "Negation": "Contradiction", "Alternation": "Contradiction",
            "Negation|Alternation": "Contradiction", "Cover": "Neutral", "Independence": "Neutral"}.get(label)


def prediction_for(four_way, rng=None):
    if four_way == "FE":
        return {"forward_label": "Entailment"}
    if four_way == "Contradiction":
        return {"forward_label": "Contradiction"}
    return {"forward_label": "Neutral", "reverse_label": "Entailment" if four_way == "RE" else "Neutral"}


def write_predictions(snapshot, out_dir):
    scored = [r for r in snapshot if r["gold_label"] and compress(r["gold_label"])]
    perfect = [{"id": r["id"], **prediction_for(compress(r["gold_label"]))} for r in scored]
    rng = random.Random(20230704)
    noisy = []
    for r in scored:
        gold = compress(r["gold_label"])
        guess = gold if rng.random() < 0.6 else rng.choice(["FE", "RE", "Contradiction", "Neutral"])
        p = {"id": r["id"], **prediction_for(guess)}
        if p["forward_label"] != "Neutral" and rng.random() < 0.5:
            p["reverse_label"] = rng.choice(["Entailment", "Contradiction", "Neutral"])
        noisy.append(p)
    for name, preds in (("predictions_perfect.jsonl", perfect), ("predictions_noisy.jsonl", noisy)):
        (out_dir / name).write_text("".join(json.dumps(p, separators=(",", ":")) + "\n" for p in preds))


def write_csv_sample(snapshot, out_dir):
    import csv
    import io
    picks = [r for r in snapshot if r["seed_id"] in (1, 12)][:24]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["Seed", "Premise", "Hypothesis", "SVO", "Modifier", "Modifier Type", "Label"])
    for r in picks:
        w.writerow([r["seed_id"], r["premise"], r["hypothesis"], "+".join(r["slots"]),
                    r["modifier_surface"] or "", r["modifier_type"] or "", r["gold_label"] or ""])
    (out_dir / "released_sample.csv").write_text(buf.getvalue())


if __name__ == "__main__":
    main()
