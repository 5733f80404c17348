"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Unsupported family, rank or space parameter."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed (corrupted table, broken closure, ...)."""
