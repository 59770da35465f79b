"""Walk the 25-layer recurrent detector: shapes, parameters, decode, NMS.

Weights here are random (no trained checkpoint ships with the library), so
the detections are meaningless; the point is the mechanics of the graph,
the recurrent state, and the box decoding.
"""

import numpy as np

from evdms import detector as det
from evdms import net
from evdms.seeding import derive_rng

weights = net.random_weights(derive_rng(seed=0, stream="weights"))
print(f"parameters: {net.parameter_count():,}")
print(f"MACs for one 32x32 forward: {net.count_macs((32, 32)):,}\n")

# Layer-by-layer output shapes on a 256x256 input.
rng = np.random.default_rng(3)
inp = rng.normal(0.0, 1.0, (1, 256, 256)).astype(np.float32)
state = net.reset_state((256, 256))
trace = []
coarse, fine, state = net.forward(weights, state, inp, trace)
kinds = {s.id: s.kind for s in net.LAYERS}
for lid, shape in trace:
    print(f"  layer {lid:>2} {kinds[lid]:<9} -> {shape}")
print(f"heads: coarse {coarse.shape}, fine {fine.shape}")

# Decode both heads into center-format boxes. Every grid cell proposes 3
# boxes per head: ((8*8) + (16*16)) * 3 = 960 at this input size.
anchors = det.DEFAULT_ANCHORS
dets = det.decode_head(coarse, anchors.coarse, stride=32.0) + \
    det.decode_head(fine, anchors.fine, stride=16.0)
print(f"\ndecoded {len(dets)} raw predictions")

kept = det.filter_objectness(dets, 0.6)
print(f"{len(kept)} above objectness 0.6")
final = det.nms(kept, iou_threshold=0.45)
print(f"{len(final)} after NMS; top 3 by score:")
for d in sorted(final, key=lambda d: -d.objectness)[:3]:
    cx, cy, w, h = d.box
    print(f"  {d.label:<5} obj {d.objectness:.3f} cls {d.class_prob:.3f} "
          f"box ({cx:6.1f}, {cy:6.1f}, {w:6.1f}, {h:6.1f})")

# The GRU at layer 14 carries state between windows: feeding the same input
# twice does not give the same output, feeding it from the same state does.
out_a, _, state_2 = net.forward(weights, state, inp)
out_b, _, _ = net.forward(weights, state_2, inp)
out_a_again, _, _ = net.forward(weights, state, inp)
print(f"\nsame input, advanced state: heads differ by "
      f"{np.abs(out_a - out_b).max():.4f}")
print(f"same input, same state: heads differ by "
      f"{np.abs(out_a - out_a_again).max():.4f} (bit-identical replay)")
