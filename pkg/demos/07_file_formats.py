"""Roundtrip tour of the on-disk formats.

Events travel as text CSV or packed EVS1, rasters as EVFR or PGM previews,
network weights as GRWT. Everything little-endian, everything readable back
bit-for-bit.
"""

import struct
from pathlib import Path

import numpy as np

from evdms import event_io, net
from evdms import representation as rep
from evdms.events import EventStream
from evdms.pgm import read_pgm, write_pgm
from evdms.seeding import derive_rng

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

rng = np.random.default_rng(1)
n = 1000
t = np.sort(rng.integers(0, 50_000, n)).astype(np.uint64)
stream = EventStream((32, 24), t,
                     rng.integers(0, 32, n).astype(np.uint16),
                     rng.integers(0, 24, n).astype(np.uint16),
                     rng.choice([-1, 1], n).astype(np.int8))

# CSV: human-readable, resolution in comment headers. EVS1: 21-byte packed
# records behind an 8-byte header.
event_io.write_events(out_dir / "demo.csv", stream)
event_io.write_events(out_dir / "demo.evs1", stream)
csv_size = (out_dir / "demo.csv").stat().st_size
bin_size = (out_dir / "demo.evs1").stat().st_size
print(f"{n} events: CSV {csv_size} bytes, EVS1 {bin_size} bytes "
      f"(fixed 16-byte records; CSV wins on tiny coordinates, loses at scale)")

back = event_io.read_events(out_dir / "demo.evs1")
same = (np.array_equal(back.t, stream.t) and np.array_equal(back.x, stream.x)
        and np.array_equal(back.y, stream.y) and np.array_equal(back.p, stream.p))
print(f"EVS1 roundtrip exact: {same}")

# EVFR: 4-byte magic, then bins/width/height as u32, then f32 planes.
grid = rng.normal(0.0, 1.0, (3, 24, 32)).astype(np.float32)
rep.write_evfr(out_dir / "demo.evfr", grid)
blob = (out_dir / "demo.evfr").read_bytes()
b, w, h = struct.unpack("<III", blob[4:16])
print(f"EVFR header: magic {blob[:4]}, {b} bins, {w}x{h}, "
      f"{len(blob) - 16} payload bytes")
print(f"EVFR roundtrip exact: {np.array_equal(rep.read_evfr(out_dir / 'demo.evfr'), grid)}")

# PGM: 8- or 16-bit grayscale, readable by stock image viewers.
img = (rng.random((24, 32)) * 65535).astype(np.uint16)
write_pgm(out_dir / "demo.pgm", img, maxval=65535)
back_img, maxval = read_pgm(out_dir / "demo.pgm")
print(f"16-bit PGM roundtrip exact: {np.array_equal(back_img, img)} (maxval {maxval})")

# GRWT: the full 12.2M-parameter network weight dump.
weights = net.random_weights(derive_rng(0, "weights"))
net.save_weights(out_dir / "demo.grwt", weights)
loaded = net.load_weights(out_dir / "demo.grwt")
k0 = np.array_equal(loaded.conv[0][0], weights.conv[0][0])
gates = all(np.array_equal(a, b) for a, b in
            zip(loaded.gru[14].arrays(), weights.gru[14].arrays()))
size_mb = (out_dir / "demo.grwt").stat().st_size / 1e6
print(f"GRWT: {size_mb:.1f} MB, conv kernels exact: {k0}, GRU gates exact: {gates}")
