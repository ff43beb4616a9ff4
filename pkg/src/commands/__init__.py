"""
Subcommands of the eca-lz command line; each module exposes register(subparsers).
"""
