"""
Core abstractions for the lab.
Defines the protocols the samplers and reports implement, and the event bus.
"""

from datetime import datetime
from typing import Any, Callable, Dict, Generic, List, Protocol, Tuple, TypeVar, TYPE_CHECKING, runtime_checkable

import numpy as np

if TYPE_CHECKING:
    from ..subgroup import Subgroup

T = TypeVar('T')


@runtime_checkable
class Serializable(Protocol):
    """Objects that can be written out as plain dictionaries."""
    def to_dict(self) -> Dict[str, Any]: ...


@runtime_checkable
class IDistribution(Protocol):
    """A random subgroup distribution on a free group of a given rank.

    ``param`` is the model parameter: the vertex count for graph-based
    distributions, the word-length bound for word-based ones.
    """
    @property
    def tag(self) -> str: ...

    def sample(self, rank: int, param: int, rng: np.random.Generator) -> 'Subgroup': ...

    def sample_pair(self, rank: int, param: int,
                    rng: np.random.Generator) -> Tuple['Subgroup', 'Subgroup']: ...


class Event(Generic[T]):
    """Base class for all events in the system."""
    def __init__(self, type_: str, data: T):
        self.type = type_
        self.data = data
        self.timestamp = datetime.now()


class EventBus:
    """Central event management system."""
    def __init__(self):
        self._handlers: Dict[str, List[Callable[[Event], None]]] = {}

    def subscribe(self, event_type: str, handler: Callable[[Event], None]) -> None:
        """Subscribe to an event type."""
        self._handlers.setdefault(event_type, []).append(handler)

    def unsubscribe(self, event_type: str, handler: Callable[[Event], None]) -> None:
        """Unsubscribe from an event type."""
        if event_type in self._handlers:
            self._handlers[event_type].remove(handler)

    def has_subscribers(self, event_type: str) -> bool:
        return bool(self._handlers.get(event_type))

    def publish(self, event: Event) -> None:
        """Publish an event to all subscribers."""
        for handler in list(self._handlers.get(event.type, ())):
            handler(event)
