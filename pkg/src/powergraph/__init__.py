"""Power graphs of finite groups and their forbidden induced subgraphs."""
__version__ = "0.1.0"
