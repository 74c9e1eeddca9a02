"""Coincidence rates of single-photon pulses in SU(2) and SU(3) interferometers."""

from .coincidence import DelayPair, amplitude3, rate_p11, rate_p111, zero_delay_rate
from .matfun import determinant, immanant, permanent, weighted_sum
from .spectral import GaussianSpectrum, SpectralSetup, gaussian_overlap, overlap_stats
from .unitary import OmegaSU3, balanced_symmetric_bs, build_su3, su2_rotation

__version__ = "0.1.0"
