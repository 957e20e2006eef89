"""
Tests for the event bus and the lab events.
"""

import unittest
from datetime import datetime

from stallings_lab.core.abstractions.base import Event, EventBus, Serializable
from stallings_lab.core.event_system import (
    ExperimentEvent,
    SampleEvent,
    event_bus,
    publish_event,
    subscribe_to_event,
    unsubscribe_from_event,
)


class TestEvent(unittest.TestCase):
    """Test the Event class."""
    def test_event_creation(self):
        data = {"param": 3}
        event = Event("experiment", data)
        self.assertEqual(event.type, "experiment")
        self.assertEqual(event.data, data)
        self.assertIsInstance(event.timestamp, datetime)

    def test_sample_event(self):
        event = SampleEvent("graph", 4, 7)
        self.assertEqual(event.type, "sample")
        self.assertEqual(event.data, {"distribution": "graph", "attempts": 4, "vertex_count": 7})

    def test_experiment_event(self):
        event = ExperimentEvent("word-k4", 2, 9)
        self.assertEqual(event.type, "experiment")
        self.assertIsNone(event.data["row"])
        self.assertEqual((event.data["rank"], event.data["param"]), (2, 9))

    def test_experiment_event_carries_row(self):
        from stallings_lab.lab.experiment import ExperimentRow
        row = ExperimentRow("word-k4", 2, 9, 10, 12.5, 40.0, 3)
        self.assertIsInstance(row, Serializable)
        event = ExperimentEvent(row.distribution, 2, 9, row)
        self.assertEqual(event.data["row"]["pct_counterexample"], 12.5)
        self.assertEqual(event.data["row"], row.to_dict())


class TestEventBus(unittest.TestCase):
    """Test the EventBus class."""
    def setUp(self):
        self.bus = EventBus()
        self.received = []

    def test_subscribe_and_publish(self):
        self.bus.subscribe("sample", self.received.append)
        event = SampleEvent("graph", 1, 2)
        self.bus.publish(event)
        self.assertEqual(self.received, [event])

    def test_unsubscribe(self):
        self.bus.subscribe("sample", self.received.append)
        self.bus.unsubscribe("sample", self.received.append)
        self.bus.publish(SampleEvent("graph", 1, 2))
        self.assertEqual(self.received, [])
        self.assertFalse(self.bus.has_subscribers("sample"))

    def test_unsubscribe_unknown_type_is_ignored(self):
        self.bus.unsubscribe("nothing", self.received.append)

    def test_multiple_handlers_in_order(self):
        calls = []
        self.bus.subscribe("experiment", lambda e: calls.append(1))
        self.bus.subscribe("experiment", lambda e: calls.append(2))
        self.bus.publish(ExperimentEvent("graph", 2, 3))
        self.assertEqual(calls, [1, 2])

    def test_other_types_are_not_delivered(self):
        self.bus.subscribe("sample", self.received.append)
        self.bus.publish(ExperimentEvent("graph", 2, 3))
        self.assertEqual(self.received, [])

    def test_handler_may_unsubscribe_itself(self):
        def once(event):
            self.received.append(event)
            self.bus.unsubscribe("sample", once)

        self.bus.subscribe("sample", once)
        self.bus.publish(SampleEvent("graph", 1, 1))
        self.bus.publish(SampleEvent("graph", 1, 1))
        self.assertEqual(len(self.received), 1)


def test_global_bus_helpers():
    seen = []
    subscribe_to_event("sample", seen.append)
    assert event_bus.has_subscribers("sample")
    publish_event(SampleEvent("finite", 1, 3))
    unsubscribe_from_event("sample", seen.append)
    publish_event(SampleEvent("finite", 1, 3))
    assert [e.data["distribution"] for e in seen] == ["finite"]


def test_records_are_serializable():
    from stallings_lab.core.config import LabConfig
    from stallings_lab.lab.experiment import ExperimentRow
    from stallings_lab.lab.report import ConjectureReport

    records = (LabConfig(), ExperimentRow("graph", 2, 3, 1, 0.0, 0.0, 0),
               ConjectureReport(rk_H=1, rk_K=1, rk_meet=1, rk_join=1, shnc_sum=0))
    for record in records:
        assert isinstance(record, Serializable)
        assert isinstance(record.to_dict(), dict)
