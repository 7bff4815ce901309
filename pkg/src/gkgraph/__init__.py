"""Element-order spectra and prime graphs of finite groups."""

__version__ = "0.1.0"
