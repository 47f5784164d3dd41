"""
cmdef_lab - exact computational invariant theory
Groebner kernel, Frobenius invariants, Roberts' isomorphism and certified
depth / Cohen-Macaulay defect bounds for SL2 and G_a invariant rings
"""

__version__ = "1.0.0"
