"""
Exception hierarchy shared by every apery_verify module.
"""


class AperyError(Exception):
    """Base class for all library errors"""


class UsageError(AperyError, ValueError):
    """Unknown identifiers, malformed parameters or an invalid run configuration"""


class DomainError(AperyError, ValueError):
    """Mathematical domain violation: poles, divergent series, vanishing denominators"""
