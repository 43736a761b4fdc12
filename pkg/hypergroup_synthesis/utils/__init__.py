"""
Utility modules for the hypergroup synthesis toolkit.
"""
