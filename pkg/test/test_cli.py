"""Tests for the command-line front end."""
import io
import json

import pytest

from codedit.cli import (
    EXIT_FAILS, EXIT_GUARD, EXIT_OK, EXIT_USAGE, build_parser, main,
)


@pytest.fixture()
def write_file(tmp_path):
    """Writes a language file and returns its path as a string."""
    def write(name, *lines):
        path = tmp_path / name
        path.write_text('\n'.join(lines) + '\n', encoding='utf-8')
        return str(path)
    return write


def run(*argv):
    out = io.StringIO()
    status = main(list(argv), out=out)
    return status, out.getvalue()


def run_json(*argv):
    status, text = run(*argv, '--json')
    return status, json.loads(text)


class TestReports:
    """Tests for the report layout and exit statuses."""

    def test_json_report(self, write_file):
        path = write_file('z.lang', 'alphabet: a b', 'abb', 'baa')

        status, report = run_json('code', path)

        assert status == EXIT_OK
        assert report['schema'] == 1
        assert report['command'] == 'code'
        assert report['input']['file'] == path
        assert len(report['input']['sha256']) == 64
        assert report['result']['holds'] is True
        assert report['elapsed'] >= 0

    def test_failing_property_exits_one(self, write_file):
        path = write_file('amb.lang', 'alphabet: a b', 'a', 'ab', 'ba')

        status, text = run('code', path)

        assert status == EXIT_FAILS
        assert 'word: aba' in text

    def test_check_independence(self, write_file):
        path = write_file('z.lang', 'alphabet: a b', 'abb', 'baa')

        assert run('check', path, '--relation', 'delta:1')[0] == EXIT_OK
        assert run('check', path, '--relation', 'sigma:3')[0] == EXIT_FAILS

    def test_check_closedness(self, write_file):
        path = write_file('a2.lang', 'alphabet: a b', 'aa', 'ab', 'ba', 'bb')

        status, report = run_json(
            'check', path, '--relation', 'sigma:1', '--closed')

        assert status == EXIT_OK
        assert report['result']['property'] == 'closed'

    def test_measure_with_weights(self, write_file):
        path = write_file('a1.lang', 'alphabet: a b', 'a', 'b')

        status, report = run_json('measure', path, '--dist', '1/3,2/3')

        assert status == EXIT_OK
        assert report['result']['measure'] == '1'

    def test_orbit(self):
        status, report = run_json(
            'orbit', '0110', '--alphabet', '01', '--k', '2', '--expand')

        assert status == EXIT_OK
        assert report['input'] is None
        assert report['result']['cardinality'] == 8
        assert len(report['result']['words']) == 8

    def test_enumerate_closed(self):
        status, report = run_json(
            'enumerate-closed', '--alphabet', 'a,b', '--k', '2')

        assert status == EXIT_OK
        assert report['result']['count'] == 3
        assert report['result']['codes'][0]['code'] == 'a b'

    def test_er_complete_prints_dot(self, write_file):
        path = write_file('aa.lang', 'alphabet: a b', 'aa')

        status, text = run('er-complete', path)

        assert status == EXIT_OK
        assert 'word: bba' in text
        assert 'digraph "Y" {' in text

    def test_classify(self, write_file):
        parity = write_file(
            'even.lang', 'alphabet: 0 1',
            '0000', '0011', '0101', '0110', '1001', '1010', '1100', '1111',
        )
        single = write_file('a.lang', 'alphabet: a b', 'a')

        assert run('classify', parity, '--relation', 'sigma:2')[0] == EXIT_OK
        assert run(
            'classify', single, '--relation', 'sigma-upto:1')[0] == EXIT_FAILS


class TestErrors:

    def test_help(self):
        assert main(['--help'], out=io.StringIO()) == EXIT_OK

    def test_bad_relation(self, write_file):
        path = write_file('z.lang', 'alphabet: a b', 'abb')
        assert run('check', path, '--relation', 'rho:1')[0] == EXIT_USAGE

    def test_missing_file(self, tmp_path):
        assert run('code', str(tmp_path / 'missing.lang'))[0] == EXIT_USAGE

    def test_bad_file_names_the_line(self, write_file, capsys):
        path = write_file('bad.lang', 'alphabet: a b', 'abc')

        status, _ = run('code', path)

        assert status == EXIT_USAGE
        assert 'line 2' in capsys.readouterr().err

    def test_precondition_failure(self, write_file, capsys):
        path = write_file('z.lang', 'alphabet: a b', 'abb', 'baa')

        status, _ = run('no-closed', path, '--relation', 'sigma:1')

        assert status == EXIT_USAGE
        assert 'does not support' in capsys.readouterr().err

    def test_search_limit(self, capsys):
        status, _ = run(
            'enumerate-closed', '--alphabet', 'ab', '--k', '3',
            '--max-nodes', '5')

        assert status == EXIT_GUARD
        assert 'search nodes=5' in capsys.readouterr().err

    @pytest.mark.parametrize('value', ['0', '-1', 'many'])
    def test_limits_must_be_positive(self, value):
        with pytest.raises(SystemExit):
            build_parser().parse_args(
                ['enumerate-closed', '--alphabet', 'ab', '--k', value])
