"""Parser for module-spec strings such as ``shift:1:v0bar`` or ``conv:ppx:0:ppx:1``.

Grammar (prefix notation, ``:``-separated):

    spec  := "v0tilde" | "v0bar" | "zero" | ppx ":" labels
           | "shift:" element ":" spec | "conv:" spec ":" spec
           | "coinv:" spec | "push:" spec | "fourier:" spec
    ppx   := "ppx" | "ppx[" category "]"

``ppx`` without a category builds the tws projective.
"""

import re

from ..category import LabeledSet
from ..groups import GroupSpecError, parse_element, parse_labels
from .base import CATEGORIES, TWS, zero_module
from .constructions import coinvariants, convolve, pushforward_u, shift
from .fourier import fourier
from .projective import principal_projective
from .v0 import v0_bar, v0_tilde


class ModuleSpecError(ValueError):
    """Malformed or unsupported module spec."""


_PPX = re.compile(r"ppx(?:\[(\w+)\])?$")


def parse_module(spec, group):
    tokens = spec.strip().split(":")
    module, pos = _parse(tokens, 0, group, spec)
    if pos != len(tokens):
        raise ModuleSpecError("trailing tokens %r in module spec %r" % (":".join(tokens[pos:]), spec))
    return module


def _take(tokens, pos, spec, what):
    if pos >= len(tokens):
        raise ModuleSpecError("module spec %r ends where %s was expected" % (spec, what))
    return tokens[pos], pos + 1


def _parse(tokens, pos, group, spec):
    head, pos = _take(tokens, pos, spec, "a module")
    head = head.strip()
    try:
        if head == "v0tilde":
            return v0_tilde(group), pos
        if head == "v0bar":
            return v0_bar(group), pos
        if head == "zero":
            return zero_module(group), pos
        m = _PPX.match(head)
        if m:
            category = m.group(1) or TWS
            if category not in CATEGORIES:
                raise ModuleSpecError("unknown category %r in %r" % (category, head))
            text, pos = _take(tokens, pos, spec, "labels")
            labels = parse_labels(group, text)
            return principal_projective(LabeledSet(group, labels), category), pos
        if head == "shift":
            text, pos = _take(tokens, pos, spec, "a shift element")
            a = parse_element(group, text)
            inner, pos = _parse(tokens, pos, group, spec)
            return shift(inner, a), pos
        if head == "conv":
            left, pos = _parse(tokens, pos, group, spec)
            right, pos = _parse(tokens, pos, group, spec)
            return convolve(left, right), pos
        if head == "coinv":
            inner, pos = _parse(tokens, pos, group, spec)
            return coinvariants(inner), pos
        if head == "push":
            inner, pos = _parse(tokens, pos, group, spec)
            return pushforward_u(inner), pos
        if head == "fourier":
            inner, pos = _parse(tokens, pos, group, spec)
            return fourier(inner), pos
    except GroupSpecError as exc:
        raise ModuleSpecError(str(exc)) from None
    except ValueError as exc:
        if isinstance(exc, ModuleSpecError):
            raise
        raise ModuleSpecError("%s (in %r)" % (exc, spec)) from None
    raise ModuleSpecError("unknown module %r in spec %r" % (head, spec))

