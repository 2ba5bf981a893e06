"""
Brute-force truncated Fock-space oracle used to cross-check the analytic formulas.
"""
