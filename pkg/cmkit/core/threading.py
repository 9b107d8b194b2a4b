import itertools
import logging
import threading
from typing import Callable, Iterable, Iterator, Optional, Sequence, Tuple

import cmkit.core.primitives as primitives
from cmkit.core.primitives import Sched

logger = logging.getLogger(__name__)


class Thread(threading.Thread):
    """
    Represents a worker thread belonging to a team.
    """

    def __init__(self, rank=None, team=None, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.rank = rank
        self.team: Team = team


class Team:

    """
    Represents a team of threads that all run the same target.
    """

    def __init__(self, size=None, target=None, args=(), kwargs=None):

        # The default team size is set by the CMKIT_NUM_THREADS environment variable.
        # If CMKIT_NUM_THREADS is not set, we use the number of available CPUs as the default size.
        if size is None:
            size = primitives.get_max_threads()

        self.size = max(1, size)
        self.lock = threading.Lock()
        self.globalvars = {}

        kwargs = dict(kwargs or {})
        self.threads = []
        for rank in range(self.size):
            # Each member gets its own rank injected so the target knows which share of the work is its own.
            member_kwargs = dict(kwargs, rank=rank, team=self)
            self.threads.append(Thread(rank, self, target=target, args=args, kwargs=member_kwargs))

    def start(self):
        for thread in self.threads:
            thread.start()

    def join(self):
        for thread in self.threads:
            thread.join()


def _chunks(it: Iterable, chunk: int) -> Iterator[Tuple]:
    it = iter(it)
    while True:
        batch = tuple(itertools.islice(it, chunk))
        if not batch:
            return
        yield batch


def generator_static(it: Iterable, rank: int, team: Team, chunk: int = 1):
    """
    Yields the iterations owned by the thread of the given rank.

    Chunks are dealt round-robin, so when every member of the team runs this generator each element is yielded exactly once.
    """
    for i, batch in enumerate(_chunks(it, chunk)):
        if i % team.size == rank:
            yield from batch


def generator_dynamic(it: Iterable, rank: int, team: Team, chunk: int = 1):
    """
    Yields chunks pulled from an iterator shared by the whole team.

    The first member to arrive installs the shared iterator.
    """
    with team.lock:
        if 'batched_it' not in team.globalvars:
            team.globalvars['batched_it'] = _chunks(it, chunk)
        batched_it = team.globalvars['batched_it']

    while True:
        try:
            with team.lock:
                batch = next(batched_it)
        except StopIteration:
            break
        else:
            yield from batch


generators = {
    Sched.static: generator_static,
    Sched.dynamic: generator_dynamic,
    Sched.guided: generator_dynamic,
    Sched.auto: generator_dynamic,
}


def parallel_map(func: Callable, items: Sequence, num_threads: Optional[int] = None, schedule=None) -> list:
    """
    Apply func to every item using a team of threads. Results come back in input order.

    An exception raised while processing an item is re-raised here once the team has joined.
    When several items fail, the one with the smallest index wins.
    """
    items = list(items)
    if num_threads is None:
        num_threads = primitives.get_max_threads()
    if schedule is None:
        schedule = primitives.get_schedule()

    size = min(max(1, num_threads), len(items)) if items else 1
    if size == 1:
        return [func(item) for item in items]

    kind, chunk = schedule
    distribute = generators[kind]

    results = [None] * len(items)
    failures = {}

    def work(rank, team):
        for index in distribute(range(len(items)), rank, team, chunk):
            try:
                results[index] = func(items[index])
            except BaseException as exc:
                failures[index] = exc

    logger.debug('parallel_map: %d items on %d threads (%s, chunk %d)', len(items), size, kind.name, chunk)
    team = Team(size=size, target=work)
    team.start()
    team.join()

    if failures:
        raise failures[min(failures)]
    return results
