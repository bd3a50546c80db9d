"""Exception hierarchy.

Every domain error derives from :class:`TailleurError`; the CLI reports the
class name as the machine-readable error variant.
"""


class TailleurError(Exception):
    pass


# semigroups
class AssociativityViolation(TailleurError):
    def __init__(self, a, b, c):
        super().__init__(f"(a*b)*c != a*(b*c) for a={a!r}, b={b!r}, c={c!r}")
        self.triple = (a, b, c)


class ZeroNotAbsorbing(TailleurError):
    def __init__(self, a):
        super().__init__(f"zero does not absorb {a!r}")
        self.element = a


class InvalidTable(TailleurError):
    pass


class InvalidPoset(TailleurError):
    pass


class InvalidQuiver(TailleurError):
    pass


class Infinite(TailleurError):
    pass


# cochains
class Degree0WithoutObjects(TailleurError):
    pass


class CoefficientMismatch(TailleurError):
    pass


class SemigroupMismatch(TailleurError):
    pass


class IndexOutOfRange(TailleurError):
    pass


class NonpositiveTau(TailleurError):
    pass


class TooLarge(TailleurError):
    pass


class MalformedCochain(TailleurError):
    pass


# twists
class NotACocycle(TailleurError):
    pass


class MissingValue(TailleurError):
    pass


class IrrationalExponent(TailleurError):
    pass


class NotClosed(TailleurError):
    pass


class Cancelled(TailleurError):
    pass


# geometry
class NotComposable(TailleurError):
    pass


class SelfIntersecting(TailleurError):
    pass


class AntipodalUndefined(TailleurError):
    pass


class NonpositiveParameter(TailleurError):
    pass


class ZeroMomentum(TailleurError):
    pass


class InvalidPath(TailleurError):
    pass


# lattice walk
class DriftOutOfRange(TailleurError):
    pass


class DegenerateVariance(TailleurError):
    pass


class InvalidProbability(TailleurError):
    pass
