#!/usr/bin/env python3
"""Two-photon coincidences behind a 50:50 beam splitter versus delay.

Prints P11(tau) for identical detectors (flat zero) and for detectors of
widths 0.1 and 1 (zero at tau = 0 only), with the quadrature oracle alongside.

$ python scripts/hom_dip.py
"""

import numpy as np

from su3hom.coincidence import rate_p11
from su3hom.oracle import quadrature_rate_p11
from su3hom.spectral import GaussianSpectrum, SpectralSetup
from su3hom.unitary import balanced_symmetric_bs

b = balanced_symmetric_bs()
src = GaussianSpectrum(0.0, 0.1)
cases = {
    "identical": SpectralSetup(src, (src, src)),
    "widths 0.1 / 1": SpectralSetup(src, (GaussianSpectrum(0.0, 0.1), GaussianSpectrum(0.0, 1.0))),
}
for label, setup in cases.items():
    print(label)
    for tau in np.linspace(-40, 40, 9):
        print(f"  tau {tau:6.1f}  P11 {rate_p11(b, setup, tau):.6g}  oracle {quadrature_rate_p11(b, setup, tau):.6g}")
