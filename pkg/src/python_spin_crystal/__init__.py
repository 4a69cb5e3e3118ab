try:
    from importlib.metadata import PackageNotFoundError, version
except ImportError:  # pragma: no cover
    from importlib_metadata import PackageNotFoundError, version  # type: ignore

try:
    __version__ = version("python_spin_crystal")
except PackageNotFoundError:
    # running from a source tree that was never installed
    __version__ = "0+unknown"

# __all__ defines the public API for the package.
# Each module also defines its own __all__.
__all__ = ["__version__"]
