"""
Command handlers, one per subcommand.
"""
