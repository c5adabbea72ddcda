"""
Sorted training versus full-depth training
==========================================

Train the same small model twice from the same seed and step budget: once
with the summed loss over every exit, once on the last exit only. Then
read the per-exit validation loss of both. About a minute on one core.
"""

import torch

from soft_forge import ExitSet, ModelConfig, SortedDecoder, TrainConfig, TrainMode, train
from soft_forge.corpus import bundled_corpus_path
from soft_forge.data import build_batches, encode_dataset, load_instruction_dataset
from soft_forge.training import evaluate_exits

torch.set_num_threads(1)

train_data = encode_dataset(load_instruction_dataset(bundled_corpus_path("train")))
val_data = encode_dataset(load_instruction_dataset(bundled_corpus_path("val")))

config = ModelConfig(vocab_size=258, d_model=64, n_heads=2, n_blocks=6, ffn_hidden=172, max_seq_len=256)
exits = ExitSet((2, 4, 6), 6)
val = build_batches(val_data, config.max_seq_len, 8)

losses = {}
for mode in (TrainMode.SOFT_SUM, TrainMode.SFT):
    cfg = TrainConfig(learning_rate=1e-3, batch_size=4, max_steps=300, seed=0, mode=mode)
    model, _ = train(SortedDecoder(config, seed=0), train_data, None, exits, cfg)
    losses[mode.value] = evaluate_exits(model, exits, val)

print("exit   sorted    full-depth")
for n in exits:
    print(f"{n:>4} {losses['soft'][n]:8.3f} {losses['sft'][n]:10.3f}")
# the full-depth model was never asked to make its shallow exits useful, and it shows
