"""
Prompt ablations on the toy task
================================

Trains the same small model with each prompt switched off and compares the
loss breakdown after a fixed number of steps.
"""

import logging

from mipd.config import RunConfig
from mipd.toy import make_toy_dataset
from mipd.training import train

logging.basicConfig(level=logging.ERROR)
vocab, dataset, images = make_toy_dataset()


def run(**flags):
    cfg = RunConfig()
    cfg.model.dim, cfg.model.heads = 32, 4
    cfg.optim.steps = 100
    for key, value in flags.items():
        cfg.set(key, value)
    return train(cfg, dataset, vocab, images, save=False).log[-1]


variants = {
    "full": {},
    "no scene": {"prompt.use_scene": False},
    "no instance": {"prompt.use_instance": False},
    "no glimpse": {"prompt.use_glimpse": False},
    "no gaze": {"prompt.use_gaze": False},
    "pad style": {"prompt.style": "pad"},
    "no L_neg": {"loss.use_neg": False},
}
print(f"{'variant':12} {'l_sit':>8} {'l_dis':>8} {'l_neg':>8} {'l_box':>8} {'total':>8}")
for name, flags in variants.items():
    row = run(**flags)
    print(f"{name:12} " + " ".join(f"{row[k]:8.4f}" for k in ("l_sit", "l_dis", "l_neg", "l_box", "total")))
