# This file is part of ts_scoring.
#
# Developed for the Vera C. Rubin Observatory Telescope and Site Systems.
# This product includes software developed by the LSST Project
# (https://www.lsst.org).
# See the COPYRIGHT file at the top-level directory of this distribution
# for details of code ownership.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

__all__ = ["BaseStore", "MemoTable", "memoized"]

import functools
import logging
import threading
import typing
from abc import ABC, abstractmethod

from .utils import get_memo_limit

# Name of the logger used when a store is created without one.
DEFAULT_LOGGER_NAME = "lsst.ts.scoring"

_MISSING = object()


class MemoTable:
    """Thread safe cache of the results of one pure function.

    Parameters
    ----------
    name: `str`
        Name of the cached function, used in log messages.
    limit: `int` or `None`
        Maximum number of entries. None means unlimited.
    log: `logging.Logger`
        The logger of the owning store.
    """

    def __init__(self, name: str, limit: int | None, log: logging.Logger) -> None:
        self.name = name
        self.limit = limit
        self.log = log
        self._entries: dict[typing.Hashable, typing.Any] = {}
        self._lock = threading.RLock()
        self._full_reported = False

    def __len__(self) -> int:
        return len(self._entries)

    def lookup(self, key: typing.Hashable) -> typing.Any:
        """Return the cached value or the module sentinel ``_MISSING``."""
        with self._lock:
            return self._entries.get(key, _MISSING)

    def store_result(self, key: typing.Hashable, value: typing.Any) -> typing.Any:
        """Cache a value and return the value that is now authoritative.

        If another thread stored a result for the same key first, that
        result wins, so every caller sees one result per key.
        """
        with self._lock:
            if self.limit is not None and len(self._entries) >= self.limit:
                if not self._full_reported:
                    self.log.warning(
                        f"Memo table {self.name!r} is full at {self.limit} "
                        "entries; further results are not cached."
                    )
                    self._full_reported = True
                return self._entries.get(key, value)
            return self._entries.setdefault(key, value)


class BaseStore(ABC):
    """Hash-consing store of immutable game nodes.

    Every node is interned under a structural key, so two structurally equal
    nodes are the same Python object and compare by identity. Derived
    quantities are kept in named `MemoTable` instances.

    Parameters
    ----------
    log: `logging.Logger` or `None`
        Parent logger. A child logger named after the store class is used.
    """

    def __init__(self, log: logging.Logger | None = None) -> None:
        if log is None:
            log = logging.getLogger(DEFAULT_LOGGER_NAME)
        self.log = log.getChild(type(self).__name__)
        self.memo_limit = get_memo_limit()
        self._nodes: dict[typing.Hashable, typing.Any] = {}
        self._memo_tables: dict[str, MemoTable] = {}
        self._lock = threading.RLock()

    def __len__(self) -> int:
        return len(self._nodes)

    def intern(
        self, key: typing.Hashable, factory: typing.Callable[[int], typing.Any]
    ) -> typing.Any:
        """Return the node stored under a key, creating it if needed.

        Parameters
        ----------
        key: hashable
            The structural key of the node.
        factory: callable
            Called with the next free uid to build a new node.

        Returns
        -------
        node
            The unique node for the key.
        """
        with self._lock:
            node = self._nodes.get(key)
            if node is None:
                node = factory(len(self._nodes))
                self._nodes[key] = node
            return node

    def memo(self, name: str) -> MemoTable:
        """Return the memo table with the given name, creating it if needed."""
        with self._lock:
            table = self._memo_tables.get(name)
            if table is None:
                table = MemoTable(name, self.memo_limit, self.log)
                self._memo_tables[name] = table
            return table

    def memo_sizes(self) -> dict[str, int]:
        with self._lock:
            return {name: len(table) for name, table in self._memo_tables.items()}

    @abstractmethod
    def render(self, node: typing.Any) -> str:
        """Return the brace notation of a node."""
        raise NotImplementedError()


def _memo_key(value: typing.Any) -> typing.Hashable:
    uid = getattr(value, "uid", None)
    if uid is not None:
        return (type(value).__name__, uid)
    if isinstance(value, (set, frozenset)):
        return frozenset(_memo_key(item) for item in value)
    if isinstance(value, (list, tuple)):
        return tuple(_memo_key(item) for item in value)
    return value


def memoized(table_name: str) -> typing.Callable:
    """Decorator caching a pure function of a node in its store.

    The first positional argument must be an interned node; its store holds
    the memo table. The remaining arguments must be nodes or hashable.

    Parameters
    ----------
    table_name: `str`
        Name of the memo table.
    """

    def decorator(func: typing.Callable) -> typing.Callable:
        @functools.wraps(func)
        def wrapper(node: typing.Any, *args: typing.Any) -> typing.Any:
            table = node.store.memo(table_name)
            key = (node.uid, *(_memo_key(arg) for arg in args))
            value = table.lookup(key)
            if value is _MISSING:
                value = table.store_result(key, func(node, *args))
            return value

        return wrapper

    return decorator
