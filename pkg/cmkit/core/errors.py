class CMKitError(Exception):
    """
    Base class of every error raised by cmkit.

    The class name doubles as the machine-readable code reported by the CLI.
    """

    exit_code = 1

    @property
    def code(self) -> str:
        return type(self).__name__


class InputError(CMKitError):
    """
    The caller handed us something we cannot work with.
    """

    exit_code = 1


class ResourceError(CMKitError):
    """
    A configured bound was exceeded.
    """

    exit_code = 2


class ComputationError(CMKitError):
    """
    An internal consistency trap fired. Seeing one of these means a bug or corrupted input data.
    """

    exit_code = 1


class InvalidPermutation(InputError):
    pass


class ElementNotInGroup(InputError):
    pass


class SubgroupMismatch(InputError):
    pass


class NotNormal(InputError):
    pass


class NotNormalInN(InputError):
    pass


class GroupMismatch(InputError):
    pass


class InvalidParameter(InputError):
    pass


class NotProperNontrivial(InputError):
    pass


class GenusZeroQuotient(InputError):
    pass


class InvalidSignature(InputError):
    pass


class InvalidVector(InputError):
    pass


class MalformedRequest(InputError):
    pass


class UnknownCommand(InputError):
    pass


class GroupTooLarge(ResourceError):
    pass


class NonIntegerGenus(ComputationError):
    pass


class NegativeGenus(ComputationError):
    pass


class NonIntegralResult(ComputationError):
    pass


class NonIntegralMultiplicity(ComputationError):
    pass


class InconsistentRamification(ComputationError):
    pass


class VectorNotFound(ComputationError):
    pass


class TableConstructionError(ComputationError):
    pass
