"""
Report models for isoset
"""
