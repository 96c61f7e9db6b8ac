"""Shared exception types."""


class SvomineError(Exception):
    """Base class for all package errors."""


class LoadError(SvomineError):
    """A data or model file could not be parsed; the message names the offending line."""


class ConfigError(SvomineError):
    """A configuration value is invalid (maps to CLI exit code 2)."""
