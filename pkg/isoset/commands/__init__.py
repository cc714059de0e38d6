"""
CLI subcommands for isoset
"""
