"""
Turning results into JSON payloads and human-readable tables.

JSON output is sorted and indented so that identical requests print identical bytes.
"""

import json
from typing import Dict, List, Optional, Sequence

from cmkit.core.characters import CharacterTable
from cmkit.core.groups import Subgroup, cycle_notation, is_normal
from cmkit.criteria.certificates import FactorCertificate
from cmkit.criteria.relations import IsogenyRelation, RelationCheck
from cmkit.criteria.verdict import CMVerdict
from cmkit.surfaces.surface import QuasiplatonicSurface, QuotientSurface, Signature


def signature_report(sig: Signature) -> Dict:
    return {'orbit_genus': sig.orbit_genus, 'periods': list(sig.periods)}


def subgroup_gens(H: Subgroup) -> List[str]:
    return [cycle_notation(g) for g in H.generators] or ['()']


def quotient_report(Y: QuotientSurface) -> Dict:
    H = Y.subgroup
    return {
        'subgroup_gens': subgroup_gens(H),
        'order': H.order,
        'index': H.index,
        'normal': is_normal(H.parent, H),
        'genus': Y.genus,
        'branch_data': [{'period': period, 'ramification': lengths} for period, lengths in Y.branch_data],
    }


def certificate_report(c: FactorCertificate) -> Dict:
    return {
        'subgroup_gens': subgroup_gens(c.subgroup),
        'multiplicity': c.multiplicity,
        'genus': c.genus,
        'route': c.route.name,
        'evidence': c.evidence,
    }


def relation_report(R: IsogenyRelation, check: Optional[RelationCheck] = None,
                    certificates: Optional[Sequence[Optional[FactorCertificate]]] = None) -> Dict:
    factors = []
    for n, (H, k) in enumerate(R.factors):
        if certificates is not None and certificates[n] is not None:
            factors.append(certificate_report(certificates[n]))
            continue
        factor = {'subgroup_gens': subgroup_gens(H), 'multiplicity': k, 'route': None}
        if check is not None:
            factor['genus'] = check.genera[n]
        factors.append(factor)

    payload = {'n': R.n, 'factors': factors}
    if R.provenance is not None:
        payload['provenance'] = R.provenance
    if check is not None:
        payload['holds'] = check.holds
        payload['basis'] = check.basis
    return payload


def verdict_report(v: CMVerdict) -> Dict:
    payload = {
        'status': v.status.name,
        'route': v.route.name if v.route else None,
        'streit_value': v.streit_value,
        'relation': None,
        'irreducible_report': [],
    }
    if v.relation is not None:
        payload['relation'] = relation_report(v.relation, v.check, v.certificates)
        payload['irreducible_report'] = v.check.report
    if v.attempts:
        payload['attempts'] = v.attempts
    if v.truncated:
        payload['truncated'] = True
    return payload


def surface_report(X: QuasiplatonicSurface) -> Dict:
    return {
        'group_order': X.group.order,
        'signature': signature_report(X.signature),
        'genus': X.genus,
        'quasiplatonic': X.is_quasiplatonic,
        'vector': [cycle_notation(g) for g in X.vector.entries],
    }


def table_report(T: CharacterTable) -> Dict:
    return {
        'group_order': T.group.order,
        'conductor': T.conductor,
        'prime': T.prime,
        'classes': [{'representative': cycle_notation(c.representative), 'size': c.size, 'order': c.order}
                    for c in T.classes],
        'irreducibles': [[str(v) for v in chi.values] for chi in T],
    }


def to_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _cell(value) -> str:
    if isinstance(value, list):
        return ' '.join(_cell(v) for v in value)
    if isinstance(value, dict):
        return ', '.join(f'{k}={_cell(v)}' for k, v in value.items())
    return '-' if value is None else str(value)


def format_table(rows: Sequence[Dict], columns: Sequence[str]) -> List[str]:
    cells = [[_cell(row.get(c)) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
    lines = ['  '.join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines.extend('  '.join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in cells)
    return lines


def to_table(payload: Dict) -> str:
    """
    Scalars as ``key: value`` lines, lists of records as aligned tables.
    """
    lines = []
    for key, value in payload.items():
        if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            columns = []
            for row in value:
                columns.extend(k for k in row if k not in columns and not isinstance(row[k], dict))
            lines.append(f'{key}:')
            lines.extend('  ' + line for line in format_table(value, columns))
        elif isinstance(value, dict):
            lines.append(f'{key}:')
            lines.extend('  ' + line for line in to_table(value).splitlines())
        else:
            lines.append(f'{key}: {_cell(value)}')
    return '\n'.join(lines)


def render(payload, fmt: str) -> str:
    if fmt == 'table':
        if isinstance(payload, list):
            return '\n'.join(format_table(payload, ['source', 'exit_code', 'summary']))
        return to_table(payload)
    return to_json(payload)
