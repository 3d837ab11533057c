"""
Training and evaluating on the toy set
======================================

Generates the 20-image synthetic set, builds a split, trains a small student
with mock rationales and prints the metric table on the training images.
"""

import logging
import tempfile
from pathlib import Path

from mipd.config import RunConfig
from mipd.evaluation import evaluate
from mipd.toy import make_toy_dataset
from mipd.training import predict_dataset, train

logging.basicConfig(level=logging.WARNING)

# in-memory toy data: vocabulary, annotations (3 annotators each) and pixels
vocab, dataset, images = make_toy_dataset()
print(f"{len(dataset)} images, {len(vocab.verbs)} verbs, {len(vocab.nouns)} nouns")

# a small model trains in well under a minute
cfg = RunConfig()
cfg.model.dim, cfg.model.heads = 64, 4
cfg.optim.steps, cfg.optim.lr = 150, 1e-3
cfg.data.out = str(Path(tempfile.mkdtemp()) / "run")

# rationales default to the mock judge-refine loop when no cache is configured
result = train(cfg, dataset, vocab, images)
for row in result.log[:: len(result.log) // 5]:
    print({k: round(v, 3) if isinstance(v, float) else v for k, v in row.items()})

# inference needs only the student, its encoder and the text encoder
preds = predict_dataset(result.model.student, dataset, vocab, cfg, images)
report = evaluate(preds, dataset, vocab)
report.fingerprint = result.fingerprint
print(report.format_table("toy"))
print("checkpoint:", result.checkpoint)
