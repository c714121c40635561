import dataclasses
from typing import Any

from typing_extensions import Self, dataclass_transform


@dataclass_transform(
    frozen_default=True,
    kw_only_default=True,
)
class _StarSecTypeMetaClass(type):
    """Turns every subclass into a frozen, slotted, keyword-only dataclass."""

    def __new__(
        cls,
        name: str,
        bases: tuple[Any, ...],
        namespace: dict[str, Any],
    ) -> Any:
        class_ = super().__new__(cls, name, bases, namespace)
        # classes that manage their own slots (dataclass output included) pass through
        if "__slots__" in namespace:
            return class_
        return dataclasses.dataclass(slots=True, frozen=True, kw_only=True)(class_)


class StarSecType(metaclass=_StarSecTypeMetaClass):
    """Base type for all starsec value objects.

    Invariants are checked in ``__post_init__`` and derived defaults are
    filled with ``object.__setattr__``. ``replace`` builds a checked copy,
    so a changed field goes through the same validation as a new object.
    """

    def replace(self, **changes: Any) -> Self:
        return dataclasses.replace(self, **changes)
