"""Enumeration, scans and the command line."""
from .enumerate import enumerate_embeddings
from .scan import ScanReport, scan_characterization, scan_conjecture

__all__ = ["ScanReport", "enumerate_embeddings", "scan_characterization", "scan_conjecture"]
