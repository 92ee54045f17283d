"""
Numeric backends for scalar and jet evaluation.

FLOAT maps onto the `math` module; MPMATH onto mpmath at the ambient working
precision (set with `mpmath.workdps`). Both raise ValueError outside the real
domain instead of returning complex numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable

import mpmath  # type: ignore

Fn = Callable[[Any], Any]


@dataclass(frozen=True)
class NumericBackend:
    name: str
    number: Fn
    exp: Fn
    log: Fn
    sin: Fn
    cos: Fn
    tan: Fn
    atan: Fn
    sqrt: Fn
    pow: Callable[[Any, Any], Any]
    pi: Callable[[], Any]
    e: Callable[[], Any]


def _mp_log(x: Any) -> Any:
    if x <= 0:
        raise ValueError("math domain error")
    return mpmath.log(x)


def _mp_sqrt(x: Any) -> Any:
    if x < 0:
        raise ValueError("math domain error")
    return mpmath.sqrt(x)


def _mp_pow(base: Any, exponent: Any) -> Any:
    if base < 0 and exponent != int(exponent):
        raise ValueError("math domain error")
    if base == 0 and exponent < 0:
        raise ValueError("math domain error")
    return mpmath.power(base, exponent)


FLOAT = NumericBackend(
    name="float",
    number=float,
    exp=math.exp,
    log=math.log,
    sin=math.sin,
    cos=math.cos,
    tan=math.tan,
    atan=math.atan,
    sqrt=math.sqrt,
    pow=math.pow,
    pi=lambda: math.pi,
    e=lambda: math.e,
)

MPMATH = NumericBackend(
    name="mpmath",
    number=mpmath.mpf,
    exp=mpmath.exp,
    log=_mp_log,
    sin=mpmath.sin,
    cos=mpmath.cos,
    tan=mpmath.tan,
    atan=mpmath.atan,
    sqrt=_mp_sqrt,
    pow=_mp_pow,
    pi=lambda: +mpmath.pi,
    e=lambda: +mpmath.e,
)
