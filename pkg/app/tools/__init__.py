from .registry import CheckRegistry, check_registry, load_check_modules

__all__ = ["check_registry", "load_check_modules", "CheckRegistry"]
