import json

import pytest

import main
from config.settings import EXIT_CODES
from ratgen.solver2d import assemble_gf
from ratgen.writer import ratfunc_from_json
from tests.conftest import data_path, problem_path


def run(capsys, *pargs):
    code = main.run(list(pargs))
    return code, capsys.readouterr().out


def test_solve2d_goldens(capsys):
    code, out = run(capsys, 'solve2d', problem_path('example1.json'),
                    '--vars', 'z,w')
    assert code == 0
    assert out.strip() == '1/(z*w - w - 1)'

    code, out = run(capsys, 'solve2d', problem_path('example2.json'),
                    '--vars', 'z,w')
    assert code == 0
    assert out.strip() == '(z - 1)/(z^2*w - z*w - w - z + 1)'


def test_solve2d_latex(capsys):
    code, out = run(capsys, 'solve2d', problem_path('example1.json'),
                    '--format', 'latex')
    assert code == 0
    assert out.strip() == '\\frac{1}{z_{1}z_{2} - z_{2} - 1}'


def test_solve2d_json(capsys, example2):
    code, out = run(capsys, 'solve2d', problem_path('example2.json'),
                    '--format', 'json')
    assert code == 0
    assert ratfunc_from_json(out) == assemble_gf(example2)


def test_solve2d_verify(capsys):
    for name in ('example1.json', 'example2.json'):
        code, out = run(capsys, 'solve2d', problem_path(name), '--verify', '8')
        assert code == EXIT_CODES['ok']
        assert 'series: match' in out
        assert out.strip().splitlines()[-1] == 'verified on [0,8]²'


def test_solve2d_no_reduce(capsys):
    code, out = run(capsys, 'solve2d', problem_path('example2.json'),
                    '--no-reduce', '--verify', '6')
    assert code == 0
    assert 'verified on [0,6]²' in out


def test_corrupted_claim(capsys):
    code, out = run(capsys, 'solve2d', problem_path('example1.json'),
                    '--verify', '8',
                    '--claim', data_path('corrupted_claim.json'))
    assert code == EXIT_CODES['mismatch']
    assert out.splitlines()[0] == '2/(z1*z2 - z2 - 1)'
    assert 'verification failed on [0,8]²' in out

    # default size when only the claim is given
    code, out = run(capsys, 'solve2d', problem_path('example1.json'),
                    '--claim', data_path('corrupted_claim.json'))
    assert code == EXIT_CODES['mismatch']


@pytest.mark.parametrize('name, expected', [
    ('zero_corner.json', EXIT_CODES['invalid_input']),
    ('missing_line.json', EXIT_CODES['invalid_input']),
    ('inconsistent.json', EXIT_CODES['initial_data']),
    ('underdetermined.json', EXIT_CODES['initial_data']),
])
def test_solve2d_exit_codes(capsys, name, expected):
    code, out = run(capsys, 'solve2d', data_path(name))
    assert code == expected
    assert out == ''


def test_missing_file(capsys):
    code, _ = run(capsys, 'solve2d', data_path('no_such_file.json'))
    assert code == EXIT_CODES['invalid_input']


@pytest.mark.parametrize('init, expected', [
    ('0,1', 'z/(z^2 - z - 1)'),
    ('0,0', '0'),
])
def test_solve1d(capsys, init, expected):
    code, out = run(capsys, 'solve1d', '--coeffs=-1,-1,1', '--init', init)
    assert code == 0
    assert out.strip() == expected


def test_solve1d_expand(capsys):
    code, out = run(capsys, 'solve1d', '--coeffs=-1,-1,1', '--init', '0,1',
                    '--expand', '8', '--var', 't')
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == 't/(t^2 - t - 1)'
    assert lines[1] == '0, 1, 1, 2, 3, 5, 8, 13'


def test_solve1d_shifted(capsys):
    code, out = run(capsys, 'solve1d', '--coeffs=-1,1', '--init', '1',
                    '--start', '1')
    assert code == 0
    assert out.strip() == '1/(z^2 - z)'


@pytest.mark.parametrize('pargs', [
    ['solve1d', '--coeffs=-1,abc', '--init', '1'],
    ['solve1d', '--coeffs=-1,-1,1', '--init', '1'],
    ['solve1d', '--coeffs=1,0', '--init', '1'],
    ['solve2d', problem_path('example1.json'), '--vars', 'z'],
])
def test_bad_input(capsys, pargs):
    code, _ = run(capsys, *pargs)
    assert code == EXIT_CODES['invalid_input']


def test_gen_random(capsys, tmp_path):
    code, first = run(capsys, 'gen-random', '--seed', '7')
    assert code == 0
    _, second = run(capsys, 'gen-random', '--seed', '7')
    assert first == second

    path = tmp_path / 'random.json'
    path.write_text(first, encoding='utf-8')
    code, out = run(capsys, 'solve2d', str(path), '--verify', '10')
    assert code == 0
    assert 'verified on [0,10]²' in out


def test_gen_random_bounds(capsys):
    code, _ = run(capsys, 'gen-random', '--seed', '1', '--max-m', '9')
    assert code == EXIT_CODES['invalid_input']
    code, _ = run(capsys, 'gen-random', '--seed', '1', '--max-order', '0')
    assert code == EXIT_CODES['invalid_input']


@pytest.mark.parametrize('pargs', [
    ['--max-m', '4'],
    ['--max-m', '4', '--max-order', '4'],
    ['--max-m', '2', '--max-order', '1'],
])
def test_gen_random_m_above_order(capsys, pargs):
    code, out = run(capsys, 'gen-random', '--seed', '1', *pargs)
    assert code == EXIT_CODES['ok']
    doc = json.loads(out)
    assert all(1 <= v <= int(pargs[1]) for v in doc['equation']['m'])


@pytest.mark.parametrize('pargs', [
    ['solve2d', problem_path('example1.json'), '--verify', '-1'],
    ['solve2d', problem_path('example1.json'), '--verify=-3'],
    ['solve1d', '--coeffs=-1,-1,1', '--init', '0,1', '--expand=-2'],
    ['solve1d', '--coeffs=-1,1', '--init', '1', '--start=-1'],
    ['table', problem_path('example2.json'), '--size=-1'],
])
def test_negative_counts(capsys, pargs):
    code, out = run(capsys, *pargs)
    assert code == EXIT_CODES['invalid_input']
    assert out == ''


def test_table(capsys):
    for source in ('problem', 'gf'):
        code, out = run(capsys, 'table', problem_path('example2.json'),
                        '--size', '6', '--source', source)
        assert code == 0
        rows = [line.split() for line in out.strip().splitlines()]
        assert len(rows) == 7
        assert rows[-1] == ['1', '0', '1', '1', '2', '3', '5']


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
