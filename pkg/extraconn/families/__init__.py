"""
Named graph family registry for extraconn.

Each family provides a :class:`GraphFamily` subclass that documents its
parameters, validates them and builds the canonical member with a fixed
labelling.  Families are addressed by the ``name:params`` mini-grammar,
e.g. ``cycle:6``, ``complete_bipartite:2,3`` or bare ``petersen``.

Register a new family by subclassing GraphFamily and decorating it with
``@register_family`` (typically in a submodule imported by
:func:`_auto_discover`).
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass

from ..models import Graph


class GraphFamily(ABC):
    """Interface every graph family must implement."""

    # --- Identity -----------------------------------------------------------

    @property
    @abstractmethod
    def name(self) -> str:
        """Lowercase family name used in specs, e.g. ``'cycle'``."""

    @property
    def parameters(self) -> tuple[str, ...]:
        """Names of the integer parameters, in the order they follow the colon."""
        return ()

    @property
    def description(self) -> str:
        """One-line help text."""
        return ""

    # --- Construction -------------------------------------------------------

    def validate(self, params: tuple[int, ...]) -> None:
        """Raise ``ValueError`` unless *params* are valid for this family.

        The default only checks the arity; subclasses add range checks.
        """
        if len(params) != len(self.parameters):
            expected = ",".join(self.parameters) or "no parameters"
            raise ValueError(
                f"Family {self.name!r} takes {expected}, got {len(params)} value(s)"
            )

    @abstractmethod
    def build(self, params: tuple[int, ...]) -> Graph:
        """Build the family member for already-validated *params*."""

    def usage(self) -> str:
        """Usage template shown in ``--help``, e.g. ``'cycle:n'``."""
        if not self.parameters:
            return self.name
        return f"{self.name}:{','.join(self.parameters)}"


# ---------------------------------------------------------------------------
# FamilySpec
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer parameters."""

    name: str
    params: tuple[int, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``name`` or ``name:p1,p2``.

        Raises ``ValueError`` for an unknown family or non-integer parameter.
        """
        name, _, rest = text.strip().partition(":")
        name = name.strip().lower()
        if not name:
            raise ValueError(f"Empty family spec: {text!r}")
        get_family(name)
        params: tuple[int, ...] = ()
        if rest.strip():
            try:
                params = tuple(int(p) for p in rest.split(","))
            except ValueError:
                raise ValueError(f"Family parameters must be integers: {text!r}") from None
        spec = cls(name, params)
        get_family(name).validate(params)
        return spec

    def __str__(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}:{','.join(str(p) for p in self.params)}"


def gen_named(spec: FamilySpec | str) -> Graph:
    """Build the canonical member of a named family."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    family = get_family(spec.name)
    family.validate(spec.params)
    return family.build(spec.params)


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

_REGISTRY: dict[str, type[GraphFamily]] = {}


def register_family(cls: type[GraphFamily]) -> type[GraphFamily]:
    """Register a GraphFamily subclass by its ``name``.

    Can be used as a decorator::

        @register_family
        class Wheel(GraphFamily):
            ...
    """
    instance = cls()
    _REGISTRY[instance.name.lower()] = cls
    return cls


def get_family(name: str) -> GraphFamily:
    """Return an instance of the registered family for *name*.

    Raises ``ValueError`` if the family is unknown.
    """
    cls = _REGISTRY.get(name.lower())
    if cls is None:
        raise ValueError(f"Unknown family: {name!r}. Available: {', '.join(sorted(_REGISTRY))}")
    return cls()


def available_families() -> list[str]:
    """Return a sorted list of registered family names."""
    return sorted(_REGISTRY)


def family_help() -> str:
    """Multi-line usage summary for the CLI."""
    lines = []
    for name in available_families():
        family = get_family(name)
        lines.append(f"  {family.usage():<28} {family.description}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Auto-discover built-in families
# ---------------------------------------------------------------------------
def _auto_discover():
    """Import built-in family modules so they self-register."""
    from . import classic  # noqa: F401
    from . import network  # noqa: F401


_auto_discover()
