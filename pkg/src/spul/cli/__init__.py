"""
CLI module for the SPUL toolkit.
Contains the controller, command routing and the benchmark driver.
"""
