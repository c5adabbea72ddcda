"""
Pairwise scores from judge tallies
==================================

Each cell of an exit-vs-exit tournament is (W - L) / T, where every
instruction is judged in both presentation orders and each order is worth
half a point. The bundled tallies come from a published 13B-scale study;
ingesting them rebuilds its score matrices.
"""

from soft_forge.corpus import bundled_tallies_path
from soft_forge.tournament import Verdict, ingest_tallies, judge_pair_order_averaged, pairwise_score

print(pairwise_score(147.0, 23.0, 170))   # 0.729...

result = ingest_tallies(bundled_tallies_path("zeroshot_vs_zeroshot"), "sorted", "sft", total=170)
labels = [f"{tag}@{n}" for tag, n in result.cols]
print(" " * 12 + " ".join(f"{c:>8}" for c in labels))
for (tag, n), row in zip(result.rows, result.cells):
    print(f"{tag + '@' + str(n):>12}" + " ".join(f"{cell.score:8.3f}" for cell in row))



# a judge that always prefers the first response earns 0.5 W + 0.5 L per item, so it scores 0
class FirstWins:
    name = "first"

    def evaluate(self, instruction, first, second):
        return Verdict.WIN_A


print(judge_pair_order_averaged(FirstWins(), "any", "a", "b")[0])
