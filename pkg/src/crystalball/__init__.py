"""crystalball: exact verification of a crystallographic reflection quotient,
its sporadic/Thompson triangle groups, and the Miyaoka-Yau intersection ledger.

All arithmetic is exact (rationals, cyclotomic integers); floating point
appears only inside certified interval enclosures and optional numeric
cross-checks.
"""

__version__ = "0.1.0"
