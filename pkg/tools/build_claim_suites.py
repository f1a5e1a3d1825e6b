"""Write the case-analysis suites.

The J4 entries are transcribed literally from the displayed E/N sets.  The
F_{4,2} entries are derived with ``find_excluding_window`` from the
partition rule (no E/N sets are displayed for that proof); each case lists
the class of every case vertex, with ``x_i`` denoting the core vertex of
class ``i``.  The 2/5 entries list the six three-pair cases around a
K_4^{3-} on a, b, c, d.
"""

import json
import sys
from pathlib import Path

from poscodeg.constructions import complete
from poscodeg.enumeration import Family
from poscodeg.patterns import find_excluding_window

OUT = Path(__file__).resolve().parents[1] / "src" / "poscodeg" / "fixtures"


def pat(labels, E, N=()):
    split = lambda s: [t.split("-") for t in s.split()]  # noqa: E731
    return {"labels": labels.split(), "required": split(E), "forbidden": split(N) if N else []}


X3 = "x1 x2 x3 a b c"
J4_ENTRIES = [
    ("(i) two of N(x1x2), N(x1x3) contain a,b,c",
     pat(X3, "x1-x2-x3 x1-x2-a x1-x2-b x1-x2-c x1-x3-a x1-x3-b x1-x3-c a-b-c")),
    ("(i) case 1: a,b in X3, c in X4, x3 not in {a,b}",
     pat(X3, "x1-x2-x3 x1-x2-a x1-x2-b x1-x2-c x1-x3-c a-b-c", "x1-x3-a x1-x3-b x2-x3-a x2-x3-b")),
    ("(i) case 2: a = x3, b in X3, c in X4",
     pat("x1 x2 x3 x4 b c",
         "x1-x2-x3 x1-x2-x4 x1-x3-x4 x2-x3-x4 x1-x2-b x1-x4-b x2-x4-b x1-x2-c x1-x3-c x2-x3-c x3-b-c")),
    ("(ii) case 1: a in X1, b in X4, c in X7, b != x4",
     pat("x2 x3 x4 a b c", "x2-x3-x4 x2-x3-a x2-x4-a x3-x4-a x2-x3-b x2-x4-c x3-x4-c a-b-c",
         "x4-b-x2 x4-b-x3 x4-b-a x4-b-c")),
    ("(ii) case 2: a in X5, b in X6, c in X7",
     pat(X3, "x1-x2-x3 x1-x2-b x1-x2-c x1-x3-a x1-x3-c x2-x3-a x2-x3-b a-b-c", "x1-x2-a x2-x3-c x1-x3-b")),
    ("(iii) case 1: a in X1, b in X2, c in X3",
     pat("x2 x3 x4 a b c", "x2-x3-x4 x2-x3-a x2-x4-a x3-x4-a x3-x4-b x2-x4-c",
         "a-b-c x2-x3-b x2-x4-b x2-x3-c x3-x4-c")),
    ("(iii) case 2: a in X1, b in X2, c in X6",
     pat("x2 x3 x4 a b c", "x2-x3-x4 x2-x3-a x2-x4-a x3-x4-a x3-x4-b x2-x3-c x3-x4-c",
         "a-b-c x2-x3-b x2-x4-b x2-x4-c")),
    ("(iii) case 3: a in X1, b in X5, c in X6",
     # the displayed E also lists x3x4b, which its N forbids; b in X5 and
     # {3,4,5} is a line, so x3x4b is a non-edge and is kept in N only
     pat("x2 x3 x4 a b c", "x2-x3-x4 x2-x3-a x2-x4-a x3-x4-a x2-x3-b x2-x4-b x2-x3-c x3-x4-c",
         "a-b-c x2-x4-c x3-x4-b")),
]

# (name, case vertices with classes, violating triple, violation is an edge, part (i) proven)
F42_CASES = [
    ("(i) a,b,c in X1", [("a", 1), ("b", 1), ("c", 1)], "abc", True, False),
    ("(i) a,b in X1, c in X2", [("a", 1), ("b", 1), ("c", 2)], "abc", True, False),
    ("(i) a,b in X1, c = x2", [("a", 1), ("b", 1), ("x2", 2)], ("a", "b", "x2"), True, False),
    ("(i) a,b in X1, c in X5", [("a", 1), ("b", 1), ("c", 5)], "abc", True, False),
    ("(i) a = x1, b,c in X1", [("x1", 1), ("b", 1), ("c", 1)], ("x1", "b", "c"), True, False),
    ("(i) a = x1, b in X1, c in X2", [("x1", 1), ("b", 1), ("c", 2)], ("x1", "b", "c"), True, False),
    ("(i) a = x1, b in X1, c in X5", [("x1", 1), ("b", 1), ("c", 5)], ("x1", "b", "c"), True, False),
    ("(i) a,b,c in X5", [("a", 5), ("b", 5), ("c", 5)], "abc", True, False),
    ("(i) a,b in X5, c in X1", [("a", 5), ("b", 5), ("c", 1)], "abc", True, False),
    ("(i) a,b in X5, c = x1", [("a", 5), ("b", 5), ("x1", 1)], ("a", "b", "x1"), True, False),
    ("(ii) a in X1, b in X2, c in X3", [("a", 1), ("b", 2), ("c", 3)], "abc", False, True),
    ("(ii) a = x1, b in X2, c in X3", [("x1", 1), ("b", 2), ("c", 3)], ("x1", "b", "c"), False, True),
    ("(ii) a in X1, b in X2, c in X5", [("a", 1), ("b", 2), ("c", 5)], "abc", False, True),
    ("(ii) a = x1, b in X2, c in X5", [("x1", 1), ("b", 2), ("c", 5)], ("x1", "b", "c"), False, True),
]

# three of the five pairs ab, ac, ad, bc, bd that e extends, and the graph located
PROP25_CASES = [
    ("(1) abe, ace, ade", "abe ace ade", "Jk:4"),
    ("(2) abe, ace, bce", "abe ace bce", "K4"),
    ("(3) abe, ace, bde", "abe ace bde", "F32pp1"),
    ("(4) ace, ade, bce", "ace ade bce", "F32pp1"),
    ("(5) abe, bce, bde", "abe bce bde", "F32pp1"),
    ("(6) ace, bce, bde", "ace bce bde", "F32pp2"),
]


def main():
    j4 = {
        "name": "J4 blow-up claims",
        "families": {"thirteen": {"file": "fano-complement-family.json"}},
        "entries": [{"name": n, "family": "thirteen", "pattern": p, "expect": "excluded"} for n, p in J4_ENTRIES],
    }
    (OUT / "j4-claims.json").write_text(json.dumps(j4, indent=1) + "\n")

    seven = Family.from_json(json.loads((OUT / "k5-family.json").read_text()))
    k5 = complete(5, 3)
    core = [0, 1, 2, 3]
    entries = []
    for name, case, viol, is_edge, proven in F42_CASES:
        case0 = [(v, c - 1) for v, c in case]
        p = find_excluding_window(seven, k5, core, case0, tuple(viol), is_edge, proven)
        if p is None:
            sys.exit(f"no excluding window for {name}")
        entries.append({
            "name": name, "family": "seven", "expect": "excluded",
            "pattern": {"labels": list(p.labels),
                        "required": [[p.labels[v] for v in e] for e in p.required],
                        "forbidden": [[p.labels[v] for v in e] for e in p.forbidden]},
        })
    f42 = {"name": "F42 blow-up claims", "families": {"seven": {"file": "k5-family.json"}}, "entries": entries}
    (OUT / "f42-claims.json").write_text(json.dumps(f42, indent=1) + "\n")

    base = "abc abd acd"
    p25 = {
        "name": "2/5 family cases",
        "families": {"forbidden": {"named": ["K4", "F32pp1", "F32pp2", "Jk:4"]}},
        "entries": [
            {"name": n, "family": "forbidden", "expect": {"locate": target},
             "pattern": {"labels": list("abcde"), "required": [list(t) for t in (base + " " + extra).split()]}}
            for n, extra, target in PROP25_CASES
        ],
    }
    (OUT / "prop25-cases.json").write_text(json.dumps(p25, indent=1) + "\n")


if __name__ == "__main__":
    main()
