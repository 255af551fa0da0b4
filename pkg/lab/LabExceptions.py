from dataclasses import dataclass

class LabError(Exception):
    '''
    Base class for any error raised by the laboratory.
    Carries the process exit code the runner reports.
    '''
    exit_code = 1

#
# Argument Exceptions
#

class InvalidArgument(LabError, ValueError):
    '''
    Base class for any signal that an operation was
    called outside its stated domain.
    '''
    exit_code = 2

class SieveLimitError(InvalidArgument):
    '''
    Exception raised when a series is requested beyond
    the limit of the factor sieve it is built from.
    '''

class NotCoprimeError(InvalidArgument):
    '''
    Exception raised when a fraction a/q is not reduced.
    '''

class GridParameterError(InvalidArgument):
    '''
    Exception raised when shifted grid parameters do not
    produce a nested family.
    '''

class ScaleSpacingError(InvalidArgument):
    '''
    Exception raised when wave packet scales are not
    sparse enough.
    '''

class WindowCoverageError(InvalidArgument):
    '''
    Exception raised when a series window does not cover
    the indices an average reads.
    '''

#
# Capacity Exceptions
#

class CapacityError(LabError):
    '''
    Base class for any signal that a computation exceeds
    its configured size cap.
    '''
    exit_code = 1

@dataclass
class LcmDigitCapExceeded(CapacityError):
    '''
    Exception raised when the lcm of a slice has more
    decimal digits than permitted.
    '''
    digits: int
    cap: int

    def __str__(self):
        return f"lcm has {self.digits} digits, cap is {self.cap}"

@dataclass
class SupportCapExceeded(CapacityError):
    '''
    Exception raised when a sequence support is too long
    for the requested norm evaluation.
    '''
    support: int
    cap: int

    def __str__(self):
        return f"support {self.support} exceeds cap {self.cap}"

@dataclass
class TraceLengthExceeded(CapacityError):
    '''
    Exception raised when a trace is too long for the
    quadratic variation program.
    '''
    length: int
    cap: int

    def __str__(self):
        return f"trace length {self.length} exceeds cap {self.cap}"

@dataclass
class RationalOverflowError(CapacityError):
    '''
    Exception raised when exact rational arithmetic grows
    beyond the permitted bit size.
    '''
    bits: int
    cap: int

    def __str__(self):
        return f"rational of {self.bits} bits exceeds cap {self.cap}"
