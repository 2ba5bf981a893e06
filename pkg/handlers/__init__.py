"""
Handlers for CLI subcommands.
Organized by domain: rates, curves, optima and oracle verification.
"""
