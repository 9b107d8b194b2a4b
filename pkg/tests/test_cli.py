import json

import pytest

from cmkit.cli.entry import main
from cmkit.cli.sources import load_group, load_relation, parse_element, parse_vector
from cmkit.core.errors import ElementNotInGroup, MalformedRequest
from cmkit.core.groups import subgroup_classes


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze(capsys):
    code, out, _ = run(capsys, 'analyze', 'gm:6')
    assert code == 0
    report = json.loads(out)
    assert report['genus'] == 4
    assert report['group_order'] == 24
    assert report['signature'] == {'orbit_genus': 0, 'periods': [2, 6, 12]}
    assert report['quasiplatonic']
    assert report['status'] == 'CM_CERTIFIED'
    assert report['route'] == 'STREIT'
    assert report['streit_value'] == 0
    assert report['expected']['genus'] == 4
    assert report['known_relation']['holds']


def test_analyze_without_streit(capsys):
    code, out, _ = run(capsys, 'analyze', 'gm:8', '--no-streit')
    assert code == 0
    report = json.loads(out)
    assert report['status'] == 'CM_CERTIFIED'
    assert report['route'] == 'RELATION'
    assert report['relation']['holds']
    assert all(factor['route'] for factor in report['relation']['factors'])
    known = report['known_relation']
    assert [f['multiplicity'] for f in known['factors']] == [1, 2]
    assert known['holds']
    assert known['basis'] == 'isotypic'


def test_verify_an_analyze_report(capsys, tmp_path):
    code, out, _ = run(capsys, 'analyze', 'gm:8', '--no-streit')
    assert code == 0
    path = tmp_path / 'report.json'
    path.write_text(out, encoding='utf-8')

    code, out, _ = run(capsys, 'verify', 'gm:8', '--relation', str(path))
    assert code == 0
    report = json.loads(out)
    assert report['genus'] == 5
    assert report['relation']['holds']
    assert report['status'] == 'CM_CERTIFIED'


def test_verify_ignores_provenance(capsys):
    relation = {'n': 1, 'factors': [{'subgroup_gens': ['a'], 'multiplicity': 2}], 'provenance': 'cited'}
    code, out, _ = run(capsys, 'verify', 'gm:6', '--relation', json.dumps(relation))
    assert code == 0
    report = json.loads(out)
    assert not report['relation']['holds']
    assert report['status'] == 'INCONCLUSIVE'


def test_input_error(capsys):
    code, out, err = run(capsys, 'analyze', 'gm:7')
    assert code == 1
    assert out == ''
    assert json.loads(err.strip().splitlines()[-1])['error'] == 'InvalidParameter'


def test_resource_error(capsys):
    code, _, err = run(capsys, 'analyze', 'gm:6', '--max-order', '10')
    assert code == 2
    assert json.loads(err.strip().splitlines()[-1])['error'] == 'GroupTooLarge'


def test_unknown_command(capsys):
    code, out, err = run(capsys, 'frobnicate', 'gm:6')
    assert code == 1
    assert out == ''
    assert json.loads(err.strip().splitlines()[-1])['error'] == 'UnknownCommand'


@pytest.mark.parametrize('argv', [[], ['analyze'], ['analyze', 'gm:6', '--threads', 'many'],
                                  ['table', 'gm:6', '--format', 'xml'], ['streit', 'gm:6', '--bogus']])
def test_bad_arguments(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ''
    assert json.loads(err.strip().splitlines()[-1])['error'] == 'MalformedRequest'


def test_verify_needs_a_relation(capsys):
    code, _, err = run(capsys, 'verify', 'gm:6')
    assert code == 1
    assert json.loads(err.strip().splitlines()[-1])['error'] == 'MalformedRequest'


def test_batch_rejects_unknown_command(capsys):
    code, _, err = run(capsys, 'batch', 'nope', 'gm:6')
    assert code == 1
    assert json.loads(err.strip().splitlines()[-1])['error'] == 'UnknownCommand'


def test_batch_needs_sources(capsys):
    code, _, _ = run(capsys, 'batch', 'streit')
    assert code == 1


def test_batch_keeps_going(capsys):
    code, out, err = run(capsys, 'batch', 'streit', 'gm:6', 'gm:7', '--threads', '2')
    assert code == 1
    rows = json.loads(out)
    assert [row['source'] for row in rows] == ['gm:6', 'gm:7']
    assert rows[0]['exit_code'] == 0
    assert rows[0]['report']['streit_value'] == 0
    assert rows[1]['error'] == 'InvalidParameter'
    assert 'gm:7' in err


def test_batch_table(capsys):
    code, out, _ = run(capsys, 'batch', 'analyze', 'gm:6', '--format', 'table')
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ['source', 'exit_code', 'summary']
    assert 'status=CM_CERTIFIED' in lines[1]


def test_table_format(capsys):
    code, out, _ = run(capsys, 'table', 'gm:6', '--format', 'table')
    assert code == 0
    assert 'group_order: 24' in out.splitlines()


def test_table_json(capsys):
    code, out, _ = run(capsys, 'table', 'gm:6')
    assert code == 0
    report = json.loads(out)
    assert len(report['irreducibles']) == len(report['classes'])


def test_quotients(capsys):
    code, out, _ = run(capsys, 'quotients', 'gm:6')
    assert code == 0
    report = json.loads(out)
    assert len(report['quotients']) == len(subgroup_classes(load_group('gm:6').group))
    assert min(row['genus'] for row in report['quotients']) == 0
    assert max(row['genus'] for row in report['quotients']) == 4


def test_output_is_deterministic(capsys):
    first = run(capsys, 'analyze', 'gm:6')
    second = run(capsys, 'analyze', 'gm:6')
    assert first == second


def test_group_file(capsys, tmp_path):
    path = tmp_path / 'c6.json'
    path.write_text(json.dumps({'degree': 6, 'generators': [[1, 2, 3, 4, 5, 0]],
                                'vector': ['g0^3', 'g0^3', 'g0^2', 'g0^4']}), encoding='utf-8')
    code, out, _ = run(capsys, 'quotients', str(path))
    assert code == 0
    report = json.loads(out)
    assert report['genus'] == 2
    assert len(report['quotients']) == 4


def test_vector_option(capsys):
    code, out, _ = run(capsys, 'streit', 'gm:6', '--vector', 'b,t,t^-1*b^-1')
    assert code == 0
    assert json.loads(out)['genus'] == 4


def test_streit_status_needs_a_quasiplatonic_surface(capsys, tmp_path):
    path = tmp_path / 'klein.json'
    path.write_text(json.dumps({'degree': 4, 'generators': [[1, 0, 3, 2], [2, 3, 0, 1]],
                                'vector': ['g0', 'g0', 'g1', 'g1', 'g0*g1', 'g0*g1']}), encoding='utf-8')
    code, out, _ = run(capsys, 'streit', str(path))
    assert code == 0
    report = json.loads(out)
    assert report['genus'] == 3
    assert report['status'] == 'INCONCLUSIVE'


# Sources.

def test_parse_element():
    G = load_group('gm:6').group
    t = parse_element(G, 't')
    assert parse_element(G, list(t.array_form)) == t
    assert parse_element(G, 't^2*t^-1') == t
    assert parse_element(G, '()') == parse_element(G, 'e')
    with pytest.raises(ElementNotInGroup):
        parse_element(G, 'x')
    with pytest.raises(MalformedRequest):
        parse_element(G, '(0 1) junk')
    with pytest.raises(MalformedRequest):
        parse_element(G, 3)


def test_parse_vector():
    G = load_group('gm:6').group
    v = parse_vector(G, ' b , t , t^-1*b^-1 ')
    assert len(v) == 3
    with pytest.raises(MalformedRequest):
        parse_vector(G, '')


def test_malformed_sources(tmp_path):
    with pytest.raises(MalformedRequest):
        load_group('{"degree": 3')
    with pytest.raises(MalformedRequest):
        load_group('{"generators": [[1, 0]]}')
    with pytest.raises(MalformedRequest):
        load_group(str(tmp_path / 'missing.json'))
    G = load_group('gm:6').group
    with pytest.raises(MalformedRequest):
        load_relation(G, '{"n": 1}')
