#!/usr/bin/env python3
"""The spectrum is a function of the length set, not the input file.

Two complex-length-spectrum files that list the same geodesics in a
different order (or with repeated rows) must produce byte-identical screw
spectra: enumeration order, deduplication, and serialization are all
canonical.  Pitches that differ, on the other hand, separate immediately.
"""

import io
from importlib import resources

from screwgeo.geodesic import ScrewConfig
from screwgeo.spectrum import (EnumerationBudget, compare_spectra,
                               full_spectrum, load_clspectrum, metadata_dict,
                               write_spectrum_csv)

DATA = resources.files("screwgeo") / "data"
BUDGET = EnumerationBudget(cutoff=12.0)


def spectrum_bytes(path, cfg):
    cls_ = load_clspectrum(str(path))
    entries = full_spectrum(cls_, cfg, BUDGET)
    buf = io.StringIO()
    write_spectrum_csv(buf, entries, metadata_dict(cfg, BUDGET))
    return entries, buf.getvalue().encode()


cfg = ScrewConfig(0, 1.0)
a, raw_a = spectrum_bytes(DATA / "clspec_flat_sample.json", cfg)
b, raw_b = spectrum_bytes(DATA / "clspec_flat_sample_permuted.json", cfg)

print(f"original file       : {len(a)} entries, {len(raw_a)} bytes")
print(f"permuted + duplicated: {len(b)} entries, {len(raw_b)} bytes")
print(f"byte-identical output: {raw_a == raw_b}")
print(f"comparer: {compare_spectra(a, b).detail}")

print()
print("changing the pitch changes the spectrum:")
for lam in (2.0, 3.0):
    entries, _ = spectrum_bytes(DATA / "clspec_flat_sample.json",
                                ScrewConfig(0, lam))
    head = ", ".join(f"{e.length:.6f}" for e in entries[:4])
    print(f"  lam = {lam}: {len(entries)} entries, starting {head}, ...")

a2, _ = spectrum_bytes(DATA / "clspec_flat_sample.json", ScrewConfig(0, 2.0))
a3, _ = spectrum_bytes(DATA / "clspec_flat_sample.json", ScrewConfig(0, 3.0))
report = compare_spectra(a2, a3)
print(f"  comparer: {report.detail}")
