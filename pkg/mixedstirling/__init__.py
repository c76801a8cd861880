"""Mixed Stirling - exact counts of restricted, associated and mixed set partitions"""
__version__ = "1.0.0"
