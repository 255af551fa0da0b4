from .ShiftedGrid import ShiftedGrid, GridInterval
from .LocalFourier import local_fourier, local_inverse, spec_delta, spectrum_layers, SpectrumSet
from .ThresholdLadder import ThresholdLadder, psi
from .Projection import projection, projection_sup_check
from .SamplingCheck import sampling_check, tukey_profile, SamplingResult
from .WavePacket import WavePacket, wavepacket_energy, annulus, check_scales, EnergyResult

__all__ = ["ShiftedGrid", "GridInterval", "local_fourier", "local_inverse", "spec_delta", "spectrum_layers",
           "SpectrumSet", "ThresholdLadder", "psi", "projection", "projection_sup_check", "sampling_check",
           "tukey_profile", "SamplingResult", "WavePacket", "wavepacket_energy", "annulus", "check_scales",
           "EnergyResult"]
