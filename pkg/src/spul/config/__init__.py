"""
Configuration module for the SPUL toolkit.
Contains logging setup and solver settings built from command-line flags.
"""
