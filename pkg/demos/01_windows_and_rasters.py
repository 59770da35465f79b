"""Slice an event stream into windows and rasterize them three ways."""

from pathlib import Path

import numpy as np

from evdms.events import EventStream, window_by_count, window_by_duration
from evdms import representation as rep

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

# A synthetic stream: a bright dot sweeping left to right across a 64x48
# sensor over 100 ms, one positive event per step plus some noise.
rng = np.random.default_rng(42)
n_sweep, n_noise = 600, 400
t_sweep = np.linspace(0, 100_000, n_sweep)
x_sweep = np.linspace(4, 60, n_sweep)
t_noise = rng.uniform(0, 100_000, n_noise)

t = np.concatenate([t_sweep, t_noise])
x = np.concatenate([x_sweep, rng.uniform(0, 64, n_noise)])
y = np.concatenate([np.full(n_sweep, 24.0), rng.uniform(0, 48, n_noise)])
p = np.concatenate([np.ones(n_sweep), rng.choice([-1, 1], n_noise)])

order = np.argsort(t, kind="stable")
stream = EventStream((64, 48),
                     t[order].astype(np.uint64),
                     x[order].astype(np.uint16),
                     y[order].astype(np.uint16),
                     p[order].astype(np.int8))
print(f"stream: {len(stream)} events over {stream.t[-1] - stream.t[0]} us")

# Two ways to slice: fixed duration (adaptive count) vs fixed count
# (adaptive duration).
by_time = window_by_duration(stream, 10_000)
by_count = window_by_count(stream, 250)
print(f"10 ms windows: {[len(w) for w in by_time]}")
print(f"250-event windows: {[(w.t_end - w.t_start) for w in by_count]} us spans")

window = by_time[3]

# 1. Plain polarity accumulation, clipped to +-10 per pixel.
frame = rep.accumulate(window, clip=10.0)
print(f"accumulate: shape {frame.values.shape}, "
      f"mass {frame.values.sum():+.0f}, extremes "
      f"[{frame.values.min():.0f}, {frame.values.max():.0f}]")

# 2. A 5-bin voxel grid; each event's polarity is split between the two
# nearest temporal bins, so the total mass is preserved.
grid = rep.voxel_grid(window, bins=5)
print(f"voxel grid: shape {grid.values.shape}, "
      f"mass {grid.values.sum():+.2f} (same as the raw polarity sum "
      f"{int(window.events.p.astype(np.int64).sum()):+d})")

# 3. A leaky surface carried across consecutive windows: values decay
# with tau = 30 ms between updates, so motion leaves a fading trail.
surface = rep.LeakySurface.zeros(stream.resolution, tau=30_000.0)
for w in by_time:
    surface = rep.leaky_update(surface, w)
print(f"leaky surface after {len(by_time)} windows: "
      f"peak {surface.values.max():.2f} at t={surface.t_last} us")

rep.write_evfr(out_dir / "sweep_voxel.evfr", grid.values)
rep.frame_to_pgm(out_dir / "sweep_accumulate.pgm", frame.values)
rep.frame_to_pgm(out_dir / "sweep_leaky.pgm", surface.values)
print(f"wrote {out_dir}/sweep_voxel.evfr plus two PGM previews")
