"""
JobSuche-Py Test Suite
"""
