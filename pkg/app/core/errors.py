from __future__ import annotations

from typing import Any, Dict


class SternError(Exception):
    """Base error. `error_type` is the slug used in CLI error payloads."""

    error_type = "error"
    exit_code = 1

    def payload(self) -> Dict[str, Any]:
        return {"status": "error", "error_type": self.error_type, "message": str(self)}


class BadModulus(SternError, ValueError):
    error_type = "bad_modulus"
    exit_code = 2


class NotDivisible(SternError, ArithmeticError):
    error_type = "not_divisible"


class ZeroPolynomial(SternError, ValueError):
    error_type = "zero_polynomial"


class UndefinedDegree(SternError, ValueError):
    error_type = "undefined_degree"


class EvenIndex(SternError, ValueError):
    error_type = "even_index"
    exit_code = 2


class BoundTooLarge(SternError, ValueError):
    error_type = "bound_too_large"
    exit_code = 3


class TooFewSolutions(SternError, ValueError):
    error_type = "too_few_solutions"
    exit_code = 2


class OutOfDomain(SternError, ValueError):
    error_type = "out_of_domain"
    exit_code = 2


class PreconditionViolated(SternError, ValueError):
    error_type = "precondition_violated"
    exit_code = 2


class CheckpointMismatch(SternError):
    error_type = "checkpoint_mismatch"
    exit_code = 2


class IndexParseError(SternError, ValueError):
    error_type = "parse_error"
    exit_code = 2


class UnknownIdentifier(SternError, KeyError):
    error_type = "unknown_id"
    exit_code = 2

    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return str(self.args[0]) if self.args else ""
