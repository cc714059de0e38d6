"""
Services package for isoset
"""
