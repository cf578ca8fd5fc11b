#!/usr/bin/env python3
"""Writes tests/fixtures/confusion_matrices.json: three gold x pred count matrices (classes FE, RE,
Contradiction, Neutral) with their metrics as exact fractions, worked out per class from the
textbook definitions. Classes without gold support are left out of the averages; a class that is
never predicted has precision 0; F1 is 0 when precision and recall are both 0."""
import json
import sys
from fractions import Fraction as F

MATRICES = {
    "three_classes_one_never_predicted": [[1, 0, 0, 1], [0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]],
    "all_four_classes": [[5, 1, 0, 2], [1, 3, 1, 0], [0, 2, 6, 1], [2, 0, 1, 7]],
    "absent_gold_class_still_predicted": [[4, 2, 0, 0], [0, 0, 0, 0], [1, 1, 3, 0], [0, 1, 0, 0]],
}


def metrics(m):
    n = len(m)
    per = []
    for c in range(n):
        support = sum(m[c])
        if support == 0:
            continue
        predicted = sum(m[o][c] for o in range(n))
        p = F(m[c][c], predicted) if predicted else F(0)
        r = F(m[c][c], support)
        f = 2 * p * r / (p + r) if p + r else F(0)
        per.append((p, r, f, support))
    k = len(per)
    total = sum(map(sum, m))
    macro = [sum(x[i] for x in per) / k for i in range(3)]
    weighted = [sum(x[i] * x[3] for x in per) / total for i in range(3)]
    acc = F(sum(m[c][c] for c in range(n)), total)
    as_str = lambda v: f"{v.numerator}/{v.denominator}"
    return {
        "accuracy": as_str(acc),
        "macro": {"precision": as_str(macro[0]), "recall": as_str(macro[1]), "f1": as_str(macro[2])},
        "weighted": {"precision": as_str(weighted[0]), "recall": as_str(weighted[1]), "f1": as_str(weighted[2])},
    }


out = [{"name": name, "matrix": m, **metrics(m)} for name, m in MATRICES.items()]
json.dump(out, open(sys.argv[1], "w"), indent=2)
print(open(sys.argv[1]).read())
