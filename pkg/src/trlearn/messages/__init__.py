"""
Message templates package for trlearn
Contains text templates loaded from files using importlib.resources
"""
