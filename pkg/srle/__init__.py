"""Top-level package for Selective Run-Length Encoding."""

__author__ = """SRLE developers"""
__version__ = '0.1.0'
name = "srle"
