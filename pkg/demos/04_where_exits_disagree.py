"""
Where shallow exits disagree with the full model
================================================

For each exit and each generated position, the KL divergence (nats) from
the exit's next-token distribution to the full exit's, along the full
exit's own greedy continuation, averaged over held-out prompts.

Uses the desk checkpoints in runs/desk when present (see the acceptance
suite); otherwise a freshly initialized model.
"""

from pathlib import Path

from soft_forge import ExitRef, Metric, ModelConfig, SortedDecoder, load_checkpoint, positional_matrix
from soft_forge.corpus import bundled_corpus_path
from soft_forge.data import load_instruction_dataset
from soft_forge.desk import prompts_with_room

cache = Path(__file__).resolve().parents[1] / "runs" / "desk"
if (cache / "soft.srtd").exists():
    model = load_checkpoint(cache / "soft.srtd").model
else:
    model = SortedDecoder(ModelConfig(vocab_size=258, d_model=32, n_heads=2, n_blocks=8, ffn_hidden=64,
                                      max_seq_len=256), seed=0, init_std=0.2)

prompts = prompts_with_room(load_instruction_dataset(bundled_corpus_path("heldout")), 8, 16, 256)
full = ExitRef(model, model.config.n_blocks)
matrix = positional_matrix(full, [2, 4, 6, 8], full, prompts, 16, Metric.KL_NATS)

for n, row in zip(matrix.row_exits, matrix.values):
    print(f"exit {n}: mean {row.mean():.3f}  " + " ".join(f"{v:.2f}" for v in row[:8]))
