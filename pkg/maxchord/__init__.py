# package marker for maxchord; the command line lives in maxchord.cli
__version__ = "0.1.0"
