"""Generate an annotated synthetic event sequence from a single face image.

The still is moved along a random 6-DOF homographic trajectory (smoothstep
from identity to a random endpoint pose), every rendered frame is fed to the
event simulator, and landmark groups are tracked into per-frame boxes.
"""

from pathlib import Path

import numpy as np

from evdms import event_io
from evdms.fixtures import demo_face
from evdms.seeding import derive_rng
from evdms.synthgen import (
    SynthConfig,
    generate_sequence,
    kmeans_anchors,
    landmarks_to_boxes,
    sequence_annotations,
    write_annotations,
    zero_segment_augment,
)

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)
seed = 7

image, landmarks = demo_face((96, 96))
print(f"source image {image.shape[1]}x{image.shape[0]}, "
      f"{len(landmarks.points)} landmarks in groups {sorted(landmarks.groups)}")

padding = {"face": 0.05, "left_eye": 0.25, "right_eye": 0.25}
boxes = landmarks_to_boxes(landmarks, padding, image.shape[::-1])
for name, box in sorted(boxes.items()):
    print(f"  {name:<10} box (cx, cy, w, h) = ({box[0]:.1f}, {box[1]:.1f}, "
          f"{box[2]:.1f}, {box[3]:.1f})")

config = SynthConfig(duration_us=400_000, fps=250.0)
seq, stream = generate_sequence(image, landmarks, config, derive_rng(seed, "trajectory"))
print(f"\nrendered {len(seq.frames)} frames -> {len(stream)} events "
      f"on a {stream.resolution[0]}x{stream.resolution[1]} sensor")

# Frame annotations become (t_us, label, box) rows; eye groups share one label.
records = sequence_annotations(seq)
labels = sorted({r[1] for r in records})
print(f"{len(records)} annotation rows, labels {labels}")
write_annotations(out_dir / "face_annotations.txt", records)
event_io.write_events(out_dir / "face_events.evs1", stream)

# Anchor priors for the detector come from k-means over annotated box sizes
# (IoU distance, size-sorted output).
wh = [r[2][2:] for r in records]
anchors = kmeans_anchors(wh, k=4, rng=derive_rng(seed, "anchors"))
print("k-means anchors (w x h):",
      ", ".join(f"{w:.1f}x{h:.1f}" for w, h in anchors))

# Dropout augmentation: with some probability a run of consecutive input
# rasters is zeroed while the annotations stay put, mimicking sensor
# dead time during training.
rasters = [np.full((4, 4), i + 1.0) for i in range(20)]
dropped = zero_segment_augment(rasters, derive_rng(seed, "augment"),
                               probability=1.0, max_len=6)
zeroed = [i for i, r in enumerate(dropped) if not r.any()]
print(f"augment zeroed rasters {zeroed} of {len(rasters)}")
print(f"\nwrote face_events.evs1 and face_annotations.txt under {out_dir}")
