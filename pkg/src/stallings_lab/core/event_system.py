"""
Event system implementation.
Provides the concrete lab events and the global event bus.
"""

from typing import Any, Callable, Dict, Optional

from .abstractions.base import Event, EventBus, Serializable


class SampleEvent(Event[Dict[str, Any]]):
    """A random subgroup was accepted by a sampler."""
    def __init__(self,
                 distribution: str,
                 attempts: int,
                 vertex_count: int):
        super().__init__("sample", {
            "distribution": distribution,
            "attempts": attempts,
            "vertex_count": vertex_count
        })


class ExperimentEvent(Event[Dict[str, Any]]):
    """One parameter point of an experiment finished."""
    def __init__(self,
                 distribution: str,
                 rank: int,
                 param: int,
                 row: Optional[Serializable] = None):
        super().__init__("experiment", {
            "distribution": distribution,
            "rank": rank,
            "param": param,
            "row": None if row is None else row.to_dict()
        })


# Global event bus instance
event_bus = EventBus()


def publish_event(event: Event) -> None:
    """Publish an event to the global event bus."""
    event_bus.publish(event)


def subscribe_to_event(event_type: str, handler: Callable[[Event], None]) -> None:
    """Subscribe to events of a specific type."""
    event_bus.subscribe(event_type, handler)


def unsubscribe_from_event(event_type: str, handler: Callable[[Event], None]) -> None:
    """Unsubscribe from events of a specific type."""
    event_bus.unsubscribe(event_type, handler)
