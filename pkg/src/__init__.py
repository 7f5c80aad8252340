"""
amoeba - Amoebas of sparse Laurent polynomials

Membership, pictures, complement components, spines and solidity scans
for polynomials in up to three variables.
"""

__version__ = "0.1.0"
