#!/usr/bin/env python3
"""Compare the spectral-mismatch factor Lambda with the zero-delay overlap |O(0)|^2.

For Gaussian amplitudes the two differ by a constant factor sqrt(2) for every
carrier and width; this table makes that visible across a range of detectors.

$ python scripts/mismatch_ratio.py
"""

import math

import numpy as np

from su3hom.spectral import GaussianSpectrum, gaussian_overlap, overlap_stats

source = GaussianSpectrum(0.0, 0.5)
print(f"source carrier {source.carrier}, width {source.width}")
print(f"{'det carrier':>11} {'det width':>9} {'Lambda':>12} {'|O(0)|^2':>12} {'ratio':>10}")
for carrier in (0.0, 0.5, 1.0, 3.0):
    for width in (0.05, 0.2, 0.5, 2.0):
        det = GaussianSpectrum(carrier, width)
        lam = overlap_stats(source, det).lam
        o2 = abs(gaussian_overlap(source, det, 0.0)) ** 2
        print(f"{carrier:11.2f} {width:9.2f} {lam:12.5g} {o2:12.5g} {o2 / lam:10.7f}")
print(f"sqrt(2) = {math.sqrt(2):.7f}")

taus = np.linspace(-20, 20, 9)
det = GaussianSpectrum(0.0, 0.5)
print("\nidentical spectra: |O(tau)|^2 against exp(-width^2 tau^2)")
for t in taus:
    o2 = abs(gaussian_overlap(source, det, t)) ** 2
    print(f"  tau {t:6.1f}  {o2:.6g}  {math.exp(-(source.width * t) ** 2):.6g}")
