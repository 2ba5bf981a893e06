"""
Bath-core: occupations, thermal ratio and characteristic thermalization rates.
"""
