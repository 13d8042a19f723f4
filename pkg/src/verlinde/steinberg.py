"""Trace-map fibers for SL(2).

For SL(2) the Steinberg map of fundamental characters is the trace.  Away
from trace +-2 each fiber is a single conjugacy class (a homogeneous
space); at +-2 it degenerates into a singular variety stratified by the
central element and unipotent classes.  Inputs are exact rationals so the
boundary cases are decided exactly, including the closed four-interval
cover of the real trace line used to glue the SL(2,R) picture.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Stratum:
    """One conjugacy class inside a trace fiber."""

    name: str
    kind: str  # "single-class" | "point-class" | "unipotent-class"
    model: str


@dataclass(frozen=True)
class FiberDescriptor:
    """Classification of one fiber of the trace map.

    ``strata`` is ordered with point classes first (they sit in the
    closure of the unipotent classes).  ``fiber_model`` carries the
    singular variety model at trace +-2, None elsewhere.
    """

    group: str  # "SL(2,R)" | "SL(2,C)"
    trace_value: str
    strata: tuple[Stratum, ...]
    fiber_model: str | None = None


def _format_complex(re: Fraction, im: Fraction) -> str:
    if im == 0:
        return str(re)
    return f"{re}{'+' if im > 0 else ''}{im}i"


def classify_fiber_sl2c(re, im=0) -> FiberDescriptor:
    """Classify the fiber of the trace over a rational complex number."""
    re = Fraction(re)
    im = Fraction(im)
    value = _format_complex(re, im)
    if im == 0 and re in (2, -2):
        eps = "" if re == 2 else "-"
        strata = (
            Stratum(name=f"{eps or '+'}identity", kind="point-class",
                    model=f"{{{eps}I2}}"),
            Stratum(name=f"{eps or '+'}unipotent", kind="unipotent-class",
                    model=f"{{g [[{eps}1, 1], [0, {eps}1]] g^-1}}"),
        )
        model = f"V((a{'-' if re == 2 else '+'}1)^2 + b c)"
        return FiberDescriptor(group="SL(2,C)", trace_value=value,
                               strata=strata, fiber_model=model)
    stratum = Stratum(name="semisimple", kind="single-class", model="SL(2,C)/A")
    return FiberDescriptor(group="SL(2,C)", trace_value=value, strata=(stratum,))


def classify_fiber_sl2r(r) -> FiberDescriptor:
    """Classify the fiber of the trace over a rational real number."""
    r = Fraction(r)
    value = str(r)
    if r in (2, -2):
        eps = "" if r == 2 else "-"
        strata = (
            Stratum(name=f"{eps or '+'}identity", kind="point-class",
                    model=f"{{{eps}I2}}"),
            Stratum(name=f"{eps or '+'}unipotent b>0", kind="unipotent-class",
                    model=f"{{g [[{eps}1, b], [0, {eps}1]] g^-1 : b > 0}}"),
            Stratum(name=f"{eps or '+'}unipotent b<0", kind="unipotent-class",
                    model=f"{{g [[{eps}1, b], [0, {eps}1]] g^-1 : b < 0}}"),
        )
        return FiberDescriptor(group="SL(2,R)", trace_value=value, strata=strata,
                               fiber_model="V(x^2 + y^2 - z^2)")
    if abs(r) > 2:
        stratum = Stratum(name="hyperbolic", kind="single-class", model="SL(2,R)/A")
    else:
        stratum = Stratum(name="elliptic", kind="single-class", model="SL(2,R)/SO(2)")
    return FiberDescriptor(group="SL(2,R)", trace_value=value, strata=(stratum,))


# closed cover of the trace line: F1..F4 over the four closed intervals
_COVER = (
    ("F1", None, Fraction(-3)),
    ("F2", Fraction(-3), Fraction(0)),
    ("F3", Fraction(0), Fraction(3)),
    ("F4", Fraction(3), None),
)


def cover_member_sl2r(r) -> set[str]:
    """Labels of the closed cover pieces whose trace interval contains r."""
    r = Fraction(r)
    out = set()
    for label, lo, hi in _COVER:
        if (lo is None or lo <= r) and (hi is None or r <= hi):
            out.add(label)
    return out
