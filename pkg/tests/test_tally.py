"""
Test the tally engine, file loading, report formats and the command line
"""
import json
import time
from fractions import Fraction

import numpy as np
import pytest

from main import main
from src.profile.ballots import parse_profile
from src.profile.llull_matrix import validate_gamma
from src.tally.formatters.formatter_factory import FormatterFactory
from src.tally.matrix_loader import format_matrix_tsv, parse_matrix
from src.tally.tally_engine import TallyEngine
from src.utils.errors import InputError, MatrixFormatError
from src.verify.generators import random_gamma_matrix
from tests.conftest import BLACKPOOL_ORDER, BLACKPOOL_RATES, BLACKPOOL_RATES_LINE

SPLIT_MATRIX = "\tA\tB\nA\t-\t0.6\nB\t0.6\t-\n"


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding='utf-8')
    return str(path)


# -- engine ----------------------------------------------------------------

def test_engine_report_on_blackpool(blackpool):
    report = TallyEngine().run(blackpool, scale=44)
    assert report.admissible_order.sequence == BLACKPOOL_ORDER
    assert report.rates.rates == BLACKPOOL_RATES
    assert report.scale == 44
    assert report.indirect_scores['31', '238'] == Fraction(25, 44)
    assert report.projected_margins.xi == report.admissible_order


def test_engine_check_passes_on_blackpool(blackpool):
    results = TallyEngine().check(blackpool)
    assert len(results) == 17
    assert all(r.status == 'PASS' for r in results), [str(r) for r in results if not r.passed]


def test_engine_rejects_matrix_outside_gamma():
    v = parse_matrix(SPLIT_MATRIX)
    with pytest.raises(InputError) as excinfo:
        TallyEngine().run(v)
    assert excinfo.value.pair == ('A', 'B')
    results = TallyEngine().check(v)
    assert results[0].status == 'FAIL'
    assert results[1].status == 'SKIP'


def test_engine_tallies_profile_with_absolute_scale(cyclic_profile):
    report = TallyEngine().run_profile(cyclic_profile)
    assert report.scale == 3
    assert report.rates.as_tuple() == (2, 2, 2)


@pytest.mark.parametrize('seed', range(10))
def test_engine_check_passes_on_random_matrices(seed):
    v = random_gamma_matrix(np.random.default_rng(seed), 6)
    assert all(r.passed for r in TallyEngine().check(v)), f"seed {seed}"


def test_hundred_candidates_finish_quickly():
    v = random_gamma_matrix(np.random.default_rng(11), 100, max_denominator=1000)
    start = time.perf_counter()
    report = TallyEngine().run(v)
    elapsed = time.perf_counter() - start
    assert report.rates.validate()[0]
    assert elapsed < 1


def test_blackpool_tally_is_fast(blackpool):
    engine = TallyEngine()
    timings = []
    for _ in range(5):
        start = time.perf_counter()
        engine.run(blackpool)
        timings.append(time.perf_counter() - start)
    assert min(timings) < 0.01


# -- loading ---------------------------------------------------------------

def test_parse_matrix_with_total_weight(data_dir, blackpool):
    text = (data_dir / 'blackpool.tsv').read_text(encoding='utf-8')
    assert parse_matrix(text, total_weight=Fraction(44)) == blackpool


def test_parse_matrix_error_names_line_and_pair():
    with pytest.raises(MatrixFormatError) as excinfo:
        parse_matrix("\tA\tB\nA\t-\t1/2\nB\tx\t-\n")
    assert excinfo.value.line == 3
    assert excinfo.value.pair == ('B', 'A')


def test_parse_matrix_error_line_counts_comments():
    with pytest.raises(MatrixFormatError) as excinfo:
        parse_matrix("# header comment\n\tA\tB\n\nA\t-\t1/2\nB\tx\t-\n")
    assert excinfo.value.line == 5
    assert excinfo.value.pair == ('B', 'A')


def test_parse_matrix_requires_matching_labels():
    with pytest.raises(MatrixFormatError):
        parse_matrix("\tA\tB\nB\t-\t1/2\nA\t1/2\t-\n")


def test_matrix_tsv_output_parses_back(blackpool):
    text = format_matrix_tsv(blackpool)
    assert text.splitlines()[1].split('\t')[:3] == ['3', '-', '23/44']
    assert parse_matrix(text) == blackpool


def test_formatter_factory():
    assert set(FormatterFactory.get_available_formats()) >= {'text', 'json'}
    with pytest.raises(ValueError):
        FormatterFactory.create('xml')
    with pytest.raises(TypeError):
        FormatterFactory.register_formatter('bogus', dict)


# -- command line ----------------------------------------------------------

def test_cli_detailed_blackpool(data_dir, capsys):
    code = main(['tally', '--matrix', str(data_dir / 'blackpool.tsv'), '--total-weight', '44', '--detailed'])
    out = capsys.readouterr().out
    assert code == 0
    assert "Admissible order: 122 4 264 3 31 238" in out
    assert f"Rates: {BLACKPOOL_RATES_LINE}" in out
    assert "Social order: 122 > 4 > 264 > 3 > 31 > 238" in out
    assert "25*" in out
    assert "Intermediate margins (absolute, total 44)" in out


def test_cli_output_is_deterministic(data_dir, capsys):
    args = ['tally', '--matrix', str(data_dir / 'blackpool.tsv'), '--total-weight', '44', '--detailed']
    main(args)
    first = capsys.readouterr().out
    main(args)
    assert capsys.readouterr().out == first


def test_cli_plain_rates_for_two_candidates(tmp_path, capsys):
    path = _write(tmp_path, 'two.txt', "candidates: A B\n1: A > B\n")
    assert main(['tally', '--ballots', path]) == 0
    assert capsys.readouterr().out == "A 1.0000\nB 2.0000\n"


def test_cli_reports_ties(data_dir, capsys):
    assert main(['tally', '--ballots', str(data_dir / 'cyclic.txt')]) == 0
    out = capsys.readouterr().out
    assert out == "A 2.0000\nB 2.0000\nC 2.0000\nTies: A = B = C\n"


def test_cli_json_cyclic(data_dir, capsys):
    assert main(['tally', '--ballots', str(data_dir / 'cyclic.txt'), '--format', 'json']) == 0
    document = json.loads(capsys.readouterr().out)
    for name in ('A', 'B', 'C'):
        assert document['rates'][name] == {'exact': '2/1', 'decimal': '2.0000'}
    assert document['preorder']['classes'] == [['A', 'B', 'C']]
    assert document['scale'] == '3/1'
    assert set(document) >= {'llull', 'indirect_scores', 'ranks', 'order', 'intermediate', 'projected'}


def test_cli_digits_flag(data_dir, capsys):
    assert main(['tally', '--matrix', str(data_dir / 'blackpool.tsv'), '--total-weight', '44',
                 '--digits', '2']) == 0
    assert capsys.readouterr().out.splitlines()[0] == "122 3.36"


def test_cli_sample_ballots(data_dir, capsys):
    assert main(['tally', '--ballots', str(data_dir / 'sample_ballots.txt')]) == 0
    lines = capsys.readouterr().out.splitlines()
    rated = [line.split()[0] for line in lines if not line.startswith('Ties:')]
    assert sorted(rated) == ['Alice', 'Bob', 'Carol', 'Dave', 'Eve']


def test_cli_rejects_counts_without_total_weight(data_dir, capsys):
    assert main(['tally', '--matrix', str(data_dir / 'blackpool.tsv')]) == 2
    assert "error: pair (3, 4)" in capsys.readouterr().err


def test_cli_parse_error_names_line(tmp_path, capsys):
    path = _write(tmp_path, 'bad.txt', "candidates: A B\n1: A > C\n")
    assert main(['tally', '--ballots', path]) == 2
    assert "line 2" in capsys.readouterr().err


def test_cli_unlisted_policy(tmp_path, capsys):
    path = _write(tmp_path, 'partial.txt', "candidates: A B C\n1: B\n")
    assert main(['tally', '--ballots', path]) == 2
    capsys.readouterr()
    assert main(['tally', '--ballots', path, '--unlisted', 'tied-last']) == 0
    assert capsys.readouterr().out.splitlines()[0] == "B 1.0000"


def test_cli_missing_file(tmp_path, capsys):
    assert main(['tally', '--ballots', str(tmp_path / 'absent.txt')]) == 2
    assert "error: cannot read" in capsys.readouterr().err


def test_cli_check_blackpool_all_pass(data_dir, capsys):
    assert main(['check', '--matrix', str(data_dir / 'blackpool.tsv'), '--total-weight', '44']) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert "17 checks: 17 passed, 0 failed, 0 skipped" in out


def test_cli_check_flags_completeness(tmp_path, capsys):
    path = _write(tmp_path, 'split.tsv', SPLIT_MATRIX)
    assert main(['check', '--matrix', path]) == 1
    out = capsys.readouterr().out
    assert out.startswith("FAIL  completeness")


def test_cli_check_random_matrix(capsys):
    assert main(['check', '--random', '5', '--seed', '3']) == 0
    assert "0 failed" in capsys.readouterr().out


def test_cli_generate_matrix_is_in_gamma(capsys):
    assert main(['generate', '--kind', 'matrix', '--candidates', '4', '--seed', '2']) == 0
    v = parse_matrix(capsys.readouterr().out)
    assert v.N == 4
    assert validate_gamma(v)[0]


@pytest.mark.parametrize('kind', ['profile', 'dominance', 'majority', 'clones'])
def test_cli_generate_profiles_parse(kind, capsys):
    assert main(['generate', '--kind', kind, '--candidates', '5', '--seed', '4']) == 0
    profile = parse_profile(capsys.readouterr().out)
    assert profile.candidates.N == 5


def test_cli_generate_is_seeded(capsys):
    main(['generate', '--seed', '9'])
    first = capsys.readouterr().out
    main(['generate', '--seed', '9'])
    assert capsys.readouterr().out == first


def test_cli_requires_one_input(capsys):
    with pytest.raises(SystemExit):
        main(['tally'])
    with pytest.raises(SystemExit):
        main(['tally', '--ballots', 'a', '--matrix', 'b'])
    capsys.readouterr()
