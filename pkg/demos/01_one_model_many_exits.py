"""
One model, many exits
=====================

A sorted decoder is a single stack of blocks where every prefix of depth n
is a usable sub-model: run blocks 1..n, then the shared final norm and head.
"""

import torch

from soft_forge import ExitSet, GenerationRequest, ModelConfig, SortedDecoder, generate

# a small byte-level model with four exits
config = ModelConfig(vocab_size=258, d_model=32, n_heads=2, n_blocks=8, ffn_hidden=64, max_seq_len=256)
model = SortedDecoder(config, seed=0, init_std=0.2)
exits = ExitSet((2, 4, 6, 8), 8)

# every exit reads the same head, so the parameter count does not grow with the exit set
print("parameters:", sum(p.numel() for p in model.parameters()))

# untrained, so the text is noise, but each exit is a separate deterministic decoder
for n in exits:
    ids, text = generate(model, exits, GenerationRequest("Name a color.", n, 12))
    print(f"exit {n}: {text!r}")

# a shallow exit never touches deeper blocks: poison blocks 7 and 8 and exit 4 is unchanged
before = generate(model, exits, GenerationRequest("Name a color.", 4, 12))
with torch.no_grad():
    for name, p in model.named_parameters():
        if name.startswith(("blocks.6.", "blocks.7.")):
            p.fill_(float("nan"))
print("exit 4 unchanged after poisoning:", generate(model, exits, GenerationRequest("Name a color.", 4, 12)) == before)
