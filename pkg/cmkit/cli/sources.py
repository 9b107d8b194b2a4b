"""
Reading groups, generating vectors and isogeny relations from the command line.

A group source is either ``gm:<m>`` or the path of a JSON file
``{"degree": n, "generators": [[...], ...], "names": [...], "vector": [...]}`` with 0-based image
arrays; ``names`` and ``vector`` are optional. Elements are given as image arrays, as cycle
notation such as ``(0 1)(2 3)``, or as words over the generator names such as ``t^-1*b``.
"""

import json
import re
from pathlib import Path
from typing import List, Optional, Union

from sympy.combinatorics import Permutation

from cmkit.core.errors import MalformedRequest
from cmkit.core.groups import FiniteGroup, make_permutation
from cmkit.criteria.relations import IsogenyRelation
from cmkit.surfaces.gm_family import GmInstance, build_gm, canonical_vector
from cmkit.surfaces.surface import GeneratingVector

_GM = re.compile(r'^gm:(-?\d+)$')
_CYCLE = re.compile(r'\(([^()]*)\)')

Element = Union[str, List[int]]


class GroupSource:

    """
    A parsed group source: the group, the G_m instance behind it if any, and a vector from the file.
    """

    def __init__(self, name: str, group: FiniteGroup, instance: Optional[GmInstance] = None,
                 vector: Optional[List[Element]] = None):
        self.name = name
        self.group = group
        self.instance = instance
        self.vector = vector


def _read_json(text_or_path: str, what: str):
    path = Path(text_or_path)
    try:
        if not text_or_path.lstrip().startswith(('{', '[')):
            text_or_path = path.read_text(encoding='utf-8')
        return json.loads(text_or_path)
    except OSError as exc:
        raise MalformedRequest(f'cannot read the {what} file {path}: {exc.strerror}')
    except json.JSONDecodeError as exc:
        raise MalformedRequest(f'the {what} is not valid JSON: {exc.msg} at line {exc.lineno}')


def load_group(source: str) -> GroupSource:
    match = _GM.match(source.strip())
    if match:
        instance = build_gm(int(match.group(1)))
        return GroupSource(source, instance.group, instance)

    payload = _read_json(source, 'group')
    if not isinstance(payload, dict) or 'degree' not in payload or 'generators' not in payload:
        raise MalformedRequest('a group file needs the keys "degree" and "generators"')
    degree, gens = payload['degree'], payload['generators']
    if not isinstance(degree, int) or not isinstance(gens, list):
        raise MalformedRequest('"degree" must be an integer and "generators" a list of image arrays')

    names = payload.get('names') or [f'g{i}' for i in range(len(gens))]
    if len(names) != len(gens):
        raise MalformedRequest(f'{len(names)} names given for {len(gens)} generators')
    group = FiniteGroup.from_generators(degree, gens, generator_names=names)
    return GroupSource(source, group, vector=payload.get('vector'))


def parse_element(G: FiniteGroup, item: Element) -> Permutation:
    if isinstance(item, list):
        return make_permutation(item, G.degree)
    if not isinstance(item, str):
        raise MalformedRequest(f'cannot read {item!r} as a group element')

    text = item.strip()
    if text.startswith('('):
        if _CYCLE.sub('', text).strip():
            raise MalformedRequest(f'cannot read {item!r} as cycle notation')
        cycles = []
        for body in _CYCLE.findall(text):
            try:
                cycle = [int(x) for x in body.replace(',', ' ').split()]
            except ValueError:
                raise MalformedRequest(f'cannot read {item!r} as cycle notation')
            if any(not 0 <= x < G.degree for x in cycle) or len(set(cycle)) != len(cycle):
                raise MalformedRequest(f'{item!r} is not a permutation of 0..{G.degree - 1}')
            if len(cycle) > 1:
                cycles.append(cycle)
        return Permutation(cycles, size=G.degree)
    return G.evaluate_word(text)


def parse_vector(G: FiniteGroup, spec: Union[str, List[Element]]) -> GeneratingVector:
    """
    A vector from a list of elements, a JSON list, or comma-separated words.
    """
    if isinstance(spec, str):
        text = spec.strip()
        items = _read_json(text, 'vector') if text.startswith('[') else [w for w in text.split(',') if w.strip()]
    else:
        items = spec
    if not isinstance(items, list) or not items:
        raise MalformedRequest('a generating vector must be a non-empty list of elements')
    return GeneratingVector(G, [parse_element(G, item) for item in items])


def load_vector(source: GroupSource, spec: Optional[str] = None) -> GeneratingVector:
    if spec is not None:
        return parse_vector(source.group, spec)
    if source.vector is not None:
        return parse_vector(source.group, source.vector)
    if source.instance is not None:
        return canonical_vector(source.instance)
    raise MalformedRequest(f'no generating vector given for {source.name}')


def load_relation(G: FiniteGroup, spec: str) -> IsogenyRelation:
    """
    A relation ``{"n": 1, "factors": [{"subgroup_gens": [...], "multiplicity": 2}, ...]}``, alone or
    as the "relation" entry of an analyze report. A "provenance" key is ignored: relations read here
    are always judged on the per-irreducible identity.
    """
    payload = _read_json(spec, 'relation')
    if isinstance(payload, dict) and isinstance(payload.get('relation'), dict):
        payload = payload['relation']
    try:
        n = payload['n']
        factors = []
        for factor in payload['factors']:
            gens = [parse_element(G, g) for g in factor['subgroup_gens']]
            factors.append((G.subgroup(gens), factor['multiplicity']))
    except (KeyError, TypeError):
        raise MalformedRequest('a relation needs "n" and "factors" with "subgroup_gens" and "multiplicity"')
    if not isinstance(n, int) or not all(isinstance(k, int) for _, k in factors):
        raise MalformedRequest('relation exponents must be integers')
    return IsogenyRelation(n, factors)
