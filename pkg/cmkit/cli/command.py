import argparse
from typing import Callable, Dict, Optional

from cmkit.core.characters import CharacterTable, character_table
from cmkit.cli.sources import GroupSource, load_group, load_vector
from cmkit.surfaces.surface import QuasiplatonicSurface


class AnalysisRequest:

    """
    One command applied to one group source.
    """

    def __init__(self, command: str, source: str, vector: Optional[str] = None, fmt: str = 'json',
                 search_limit: Optional[int] = None, streit: bool = True, relation: Optional[str] = None):
        self.command = command
        self.source = source
        self.vector = vector
        self.format = fmt
        self.search_limit = search_limit
        self.streit = streit
        self.relation = relation

    @classmethod
    def from_args(cls, args: argparse.Namespace, source: Optional[str] = None) -> 'AnalysisRequest':
        return cls(args.command if source is None else args.batch_command, source or args.source,
                   vector=getattr(args, 'vector', None), fmt=args.format, search_limit=args.search_limit,
                   streit=not getattr(args, 'no_streit', False), relation=getattr(args, 'relation', None))


class Context:

    """
    Lazily built objects shared by the steps of a command.
    """

    def __init__(self, request: AnalysisRequest):
        self.request = request
        self._source: Optional[GroupSource] = None
        self._surface: Optional[QuasiplatonicSurface] = None

    @property
    def source(self) -> GroupSource:
        if self._source is None:
            self._source = load_group(self.request.source)
        return self._source

    @property
    def group(self):
        return self.source.group

    @property
    def surface(self) -> QuasiplatonicSurface:
        if self._surface is None:
            self._surface = QuasiplatonicSurface(load_vector(self.source, self.request.vector))
        return self._surface

    @property
    def table(self) -> CharacterTable:
        return character_table(self.group)


class Command:

    """
    A subcommand of the cmkit CLI. ``run`` returns the JSON payload.
    """

    name: str
    help: str = ''

    def add_arguments(self, parser: argparse.ArgumentParser):
        pass

    def run(self, context: Context) -> Dict:
        raise NotImplementedError()

    def summary(self, payload: Dict) -> str:
        return ''


class Commands:

    # All the commands of the CLI. To add one, decorate its Command subclass with Commands.command.
    commands: Dict[str, Command] = {}

    @staticmethod
    def command(name: str) -> Callable:
        def decorator(cls):
            cls.name = name
            Commands.commands.update({name: cls()})
            return cls

        return decorator
