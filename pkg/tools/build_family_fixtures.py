"""Write the blow-up family fixtures from hand-transcribed edge lists.

Each member carries a class assignment (1-based, per vertex) checked to
reproduce its drawn edges exactly; where the drawn annotation does not, the
lexicographically first assignment that does is stored instead and the
drawn one is kept under "drawn_classes".
"""

import itertools
import json
import sys
from pathlib import Path

from poscodeg.constructions import complete
from poscodeg.hypergraph import RGraph

OUT = Path(__file__).resolve().parents[1] / "src" / "poscodeg" / "fixtures"

# Fano lines in the class labelling used by the transcribed member lists
TRANSCRIBED_FANO_LINES = "125 567 237 345 246 147 136"

THIRTEEN = """012,013,014,015,023,024,025,123,124,135,145,235,245|1,2,3,4,4,7
012,013,014,015,023,024,035,045,123,124,135,145|1,2,3,4,4,3
012,013,014,015,023,024,025,123,134,135,234,235|1,2,3,4,7,7
012,013,014,015,023,024,035,045,123,125,134,145,234,235,245,345|1,2,3,4,7,6
012,013,014,015,023,024,025,123,124,125|1,2,3,4,4,4
012,013,014,015,023,024,025|1,2,3,7,7,7
012,013,014,015,023,024,035,045|1,2,3,7,7,6
012,013,014,023,024,125,135,145,235,245|1,2,3,7,7,1
012,013,023,124,125,134,135,234,235|1,2,3,3,1,1
012,013,014,015|1,2,3,3,3,3
012,013,014,025,035,045|1,2,3,3,3,2
012,013,024,034,125,135,245,345|1,2,3,3,2,1
|1,1,1,1,1,2"""

SEVEN = """012,013,014,015,023,024,025,034,035,123,124,125,134,135,234,235|1,2,3,4,5,5
012,013,014,015,023,024,025,123,124,125|1,2,3,4,4,4
012,013,014,015,023,024,035,045,123,124,135,145|1,2,3,3,4,4
012,013,024,034,125,135,245,345|1,1,2,2,3,3
012,013,014,015|1,2,3,3,3,3
012,013,014,025,035,045|1,2,2,3,3,3
|1,1,1,2,2,2"""


def parse(block):
    for line in block.splitlines():
        es, cl = line.split("|")
        yield [[int(c) for c in t] for t in es.split(",") if t], [int(c) for c in cl.split(",")]


def realised(base, classes, n):
    edges = []
    for t in itertools.combinations(range(n), 3):
        cs = [classes[v] - 1 for v in t]
        if len(set(cs)) == 3 and base.has_edge(cs):
            edges.append(t)
    return edges


def build(base, block, prefix, base_name):
    members = []
    for i, (edges, drawn) in enumerate(parse(block), 1):
        G = RGraph(3, 6, edges)
        rec = {"name": f"{prefix}{i}", "n": 6, "edges": [list(e) for e in G.edges]}
        if [list(e) for e in realised(base, drawn, 6)] == rec["edges"]:
            rec["classes"] = drawn
        else:
            fix = next(c for c in itertools.product(range(1, base.n + 1), repeat=6)
                       if [list(e) for e in realised(base, c, 6)] == rec["edges"])
            rec["classes"] = list(fix)
            rec["drawn_classes"] = drawn
            print(f"{prefix}{i}: drawn classes {drawn} replaced by {list(fix)}", file=sys.stderr)
        members.append(rec)
    return {"r": 3, "base": {"name": base_name, "n": base.n, "edges": [list(e) for e in base.edges]}, "members": members}


def main():
    fano = RGraph(3, 7, [[int(c) - 1 for c in t] for t in TRANSCRIBED_FANO_LINES.split()])
    fbar = fano.complement()
    (OUT / "fano-complement-family.json").write_text(json.dumps(build(fbar, THIRTEEN, "F_", "FanoComplement"), indent=1) + "\n")
    (OUT / "k5-family.json").write_text(json.dumps(build(complete(5, 3), SEVEN, "K_", "K5"), indent=1) + "\n")
    ab = {"r": 3, "members": [
        {"name": "A", "n": 5, "edges": [[0, 1, 2], [0, 1, 3], [0, 1, 4], [0, 2, 3], [0, 2, 4], [1, 2, 3], [1, 2, 4]]},
        {"name": "B", "n": 5, "edges": [[0, 1, 2], [0, 1, 3], [0, 1, 4], [0, 2, 3], [0, 2, 4], [1, 2, 3], [1, 3, 4], [2, 3, 4]]},
    ]}
    (OUT / "ab-graphs.json").write_text(json.dumps(ab, indent=1) + "\n")


if __name__ == "__main__":
    main()
