import os
from enum import Enum


class Sched(Enum):
    static = 1
    dynamic = 2
    guided = 3
    auto = 4


def _env_int(name: str, default: int) -> int:
    if name not in os.environ:
        return default
    return int(os.environ[name])


class ControlVariables:

    """
    Process-wide knobs. Each one starts from its environment variable and can be changed at runtime.
    """

    num_procs_var = os.cpu_count() or 1

    _CMKIT_MAX_ORDER = 'CMKIT_MAX_ORDER'
    _max_order_var = _env_int(_CMKIT_MAX_ORDER, 100_000)

    @property
    def max_order_var(self):
        return ControlVariables._max_order_var

    @max_order_var.setter
    def max_order_var(self, value):
        ControlVariables._max_order_var = value

    _CMKIT_MAX_SUBGROUP_ORDER = 'CMKIT_MAX_SUBGROUP_ORDER'
    _max_subgroup_order_var = _env_int(_CMKIT_MAX_SUBGROUP_ORDER, 10_000)

    @property
    def max_subgroup_order_var(self):
        return ControlVariables._max_subgroup_order_var

    @max_subgroup_order_var.setter
    def max_subgroup_order_var(self, value):
        ControlVariables._max_subgroup_order_var = value

    # Above this order products are computed on the fly instead of looked up.
    _CMKIT_TABLE_ORDER = 'CMKIT_TABLE_ORDER'
    _table_order_var = _env_int(_CMKIT_TABLE_ORDER, 2048)

    @property
    def table_order_var(self):
        return ControlVariables._table_order_var

    @table_order_var.setter
    def table_order_var(self, value):
        ControlVariables._table_order_var = value

    _CMKIT_SEARCH_LIMIT = 'CMKIT_SEARCH_LIMIT'
    _search_limit_var = _env_int(_CMKIT_SEARCH_LIMIT, 1000)

    @property
    def search_limit_var(self):
        return ControlVariables._search_limit_var

    @search_limit_var.setter
    def search_limit_var(self, value):
        ControlVariables._search_limit_var = value

    _CMKIT_MAX_COLLECTION = 'CMKIT_MAX_COLLECTION'
    _max_collection_var = _env_int(_CMKIT_MAX_COLLECTION, 3)

    @property
    def max_collection_var(self):
        return ControlVariables._max_collection_var

    @max_collection_var.setter
    def max_collection_var(self, value):
        ControlVariables._max_collection_var = value

    _CMKIT_NUM_THREADS = 'CMKIT_NUM_THREADS'
    _nthreads_var = _env_int(_CMKIT_NUM_THREADS, num_procs_var)

    @property
    def nthreads_var(self):
        return ControlVariables._nthreads_var

    @nthreads_var.setter
    def nthreads_var(self, value):
        ControlVariables._nthreads_var = value

    _CMKIT_SCHEDULE = 'CMKIT_SCHEDULE'
    _run_sched_var = (Sched.static, 1) if _CMKIT_SCHEDULE not in os.environ else (Sched[os.environ[_CMKIT_SCHEDULE]], 1)

    @property
    def run_sched_var(self):
        return ControlVariables._run_sched_var

    @run_sched_var.setter
    def run_sched_var(self, value):
        ControlVariables._run_sched_var = value


icv = ControlVariables()


def get_num_procs():
    return icv.num_procs_var


def get_max_order():
    return icv.max_order_var


def set_max_order(n: int):
    icv.max_order_var = n


def get_max_subgroup_order():
    return icv.max_subgroup_order_var


def set_max_subgroup_order(n: int):
    icv.max_subgroup_order_var = n


def get_table_order():
    return icv.table_order_var


def set_table_order(n: int):
    icv.table_order_var = n


def get_search_limit():
    return icv.search_limit_var


def set_search_limit(n: int):
    icv.search_limit_var = n


def get_max_collection():
    return icv.max_collection_var


def set_max_collection(n: int):
    icv.max_collection_var = n


def get_max_threads():
    return icv.nthreads_var


def set_num_threads(n: int):
    icv.nthreads_var = n


def set_schedule(kind: Sched, chunk=1):
    icv.run_sched_var = (kind, chunk)


def get_schedule():
    return icv.run_sched_var
