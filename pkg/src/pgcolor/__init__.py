"""Line spreads, packings and complete line colorings of PG(n,q)."""

__version__ = "0.1.0"
