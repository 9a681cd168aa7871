"""
spikyball - illumination of spiky balls and cap bodies
"""

__version__ = "0.1.0"
