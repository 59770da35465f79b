"""Evaluation harness: detection AP/mAP and blink precision-recall."""

from evdms.detector import DEFAULT_ANCHORS, Detection
from evdms.metrics import (
    GroundTruthBox,
    average_precision,
    build_targets,
    detection_mse,
    format_report,
    match_blinks,
    precision_recall,
)
from evdms.blink import BlinkRecord

# --- detection metrics ------------------------------------------------------
# Two frames of ground truth, a mix of good, duplicate and missing detections.
gts = [
    GroundTruthBox(1000, "face", (100.0, 80.0, 60.0, 50.0)),
    GroundTruthBox(1000, "eye", (90.0, 70.0, 12.0, 8.0)),
    GroundTruthBox(2000, "face", (110.0, 80.0, 60.0, 50.0)),
    GroundTruthBox(2000, "eye", (100.0, 70.0, 12.0, 8.0)),
]
rows = [
    (1000, Detection((101.0, 81.0, 58.0, 50.0), 0.95, "face", 0.9)),  # hit
    (1000, Detection((104.0, 83.0, 60.0, 52.0), 0.70, "face", 0.8)),  # duplicate
    (1000, Detection((91.0, 70.0, 12.0, 8.0), 0.88, "eye", 0.9)),     # hit
    (2000, Detection((111.0, 79.0, 62.0, 48.0), 0.92, "face", 0.9)),  # hit
    (2000, Detection((40.0, 30.0, 12.0, 8.0), 0.60, "eye", 0.7)),     # stray
]
report = average_precision(rows, gts, iou_thresh=0.5)
table, kv = format_report(report)
print(table)

# Matching is per frame and greedy by score: the duplicate face at t=1000
# and the stray eye count as false positives, one eye goes undetected.
print(f"counts check: tp={report.tp} fp={report.fp} fn={report.fn}\n")

# --- blink metrics ----------------------------------------------------------
# Records are matched to annotated timestamps on midpoints within 100 ms.
annotated = [500_000, 1_500_000, 2_500_000, 3_500_000]
mk = lambda mid: BlinkRecord("both", mid - 60_000, mid + 60_000,
                             40_000, 30_000, 50_000, 0.9, 0.8)
records = [mk(520_000), mk(1_480_000), mk(2_510_000), mk(9_000_000)]
tp, fp, fn = match_blinks(records, annotated, tolerance_us=100_000)
precision, recall = precision_recall(tp, fp, fn)
print(f"blinks: tp={tp} fp={fp} fn={fn} -> "
      f"precision {precision:.1%}, recall {recall:.1%}")

# --- regression targets -----------------------------------------------------
# For training-style comparisons, ground truth can be rasterized into the
# same two-head tensor layout the network produces; MSE against a prediction
# then gives a scalar distance. A 192x96 input makes 6x3 / 12x6 grids.
anchors_per_head = (DEFAULT_ANCHORS.coarse, DEFAULT_ANCHORS.fine)
targets = build_targets(gts[:2], [(3, 6), (6, 12)], anchors_per_head, (192, 96))
heads = [t * 0.5 for t in targets]
mse = detection_mse(heads, gts[:2], anchors_per_head, (192, 96))
print(f"\ntarget tensors {targets[0].shape} / {targets[1].shape}, "
      f"half-amplitude prediction MSE {mse:.6f}")
print(f"exact prediction MSE {detection_mse(targets, gts[:2], anchors_per_head, (192, 96)):.6f}")
