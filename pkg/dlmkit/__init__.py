"""
dlmkit: exact distance Laplacian spectra, graph enumeration, and verification of the graphs
whose largest distance Laplacian eigenvalue has multiplicity n - 3.
"""

from dlmkit.core.graph import Graph
from dlmkit.core.graph6 import parse_graph6, to_graph6
from dlmkit.families import build, classified_family_members, closed_form_dl_spectrum
from dlmkit.linalg.roots import ExactSpectrum, RealRoot
from dlmkit.spectra import distance_laplacian, dl_spectrum, laplacian, laplacian_spectrum

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "parse_graph6",
    "to_graph6",
    "build",
    "classified_family_members",
    "closed_form_dl_spectrum",
    "ExactSpectrum",
    "RealRoot",
    "distance_laplacian",
    "dl_spectrum",
    "laplacian",
    "laplacian_spectrum",
]
