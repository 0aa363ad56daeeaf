class DomainError(ValueError):
    """A precondition on mathematical input failed.

    The message names the violated precondition and the offending value;
    the CLI maps these to exit code 1.
    """


class NotRestrictedError(DomainError):
    pass


class ConfigurationError(DomainError):
    pass
