"""
Visual prompts and rationale alignment
======================================

Shapes of the scene and instance prompts, and how the aligned teacher
features are built from them.
"""

import torch

from mipd.encoders import TextEmbedding
from mipd.nmpa import Alignment, align_glimpse, negative_loss
from mipd.numerics import CrossAttention
from mipd.prompts import InstancePrompt, ScenePrompt, attach_scene_prompt, border_cell_count, extract_box_grids

torch.manual_seed(0)
D, H, W = 8, 5, 6
x_t = torch.randn(D, H, W)

# a width-p frame around the teacher map: 2p(H'+W'-2p) cells on the (H+2p, W+2p) grid
for p in (1, 2):
    sp = ScenePrompt.for_teacher(D, (H, W), p)
    tokens = attach_scene_prompt(x_t, sp, "ours")
    print(f"p={p}: {sp.values.shape[1]} prompt cells (= {border_cell_count(H + 2 * p, W + 2 * p, p)}),"
          f" {tokens.shape[0]} tokens")

# pad style lays the frame onto the outer ring of the map itself
sp_pad = ScenePrompt.for_teacher(D, (H, W), 1, style="pad")
print("pad style:", sp_pad.values.shape[1], "cells,", attach_scene_prompt(x_t, sp_pad, "pad").shape[0], "tokens")

# instance prompts: one 3x3 grid per role slot, added to bilinear crops of the map
ip = InstancePrompt(D)
grids = extract_box_grids(x_t, [(0.0, 0.0, 0.5, 0.5), (0.2, 0.4, 1.0, 1.0)], ip)
print("instance grids:", tuple(grids.shape))

# glimpse alignment: keys are rationale tokens alone, or rationale plus the prompted map
sp = ScenePrompt.for_teacher(D, (H, W), 1, init_std=0.5)
attn = CrossAttention(D, heads=2)
rationale = torch.randn(4, D)
for keys in ("rationale", "joint"):
    sp.values.grad = None
    align_glimpse(x_t, sp, rationale, attn, keys=keys).sum().backward()
    print(f"keys={keys:9} scene prompt gradient norm {sp.values.grad.norm():.4f}")

# the full alignment module and the negative-guided term
align = Alignment(D, (H, W), heads=2)
emb = lambda n: TextEmbedding(torch.randn(n, D), torch.randn(D))
out = align(x_t, [(0.0, 0.0, 0.5, 0.5)], emb(4), emb(3))
print("x_glimpse", tuple(out.x_glimpse.shape), "x_gaze", tuple(out.x_gaze.shape))
print("l_neg (as printed):", negative_loss(out.x_glimpse, out.x_gaze, emb(4), emb(3)).item())
