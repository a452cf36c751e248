from __future__ import annotations

import pytest

import config as config_module
from config import validate_config
from pipelines.common import load_run_settings, params_from_record, read_parameter_file
from utils.errors import ParameterError


def test_defaults_are_valid():
    assert validate_config() is True


@pytest.mark.parametrize(
    "name, value",
    [("FFT_PAD_FACTOR", 0), ("STATS_PERCENTILE", 60.0), ("DERIVATIVE_STEP", 0.0), ("LOG_LEVEL", "LOUD")],
)
def test_invalid_constants_are_reported(monkeypatch, name, value):
    monkeypatch.setattr(config_module, name, value)

    with pytest.raises(ValueError, match=name):
        validate_config()


def test_default_settings():
    settings = load_run_settings()

    assert settings.params.cavities == 255
    assert settings.params.omega_atom == 11.0
    assert settings.params.coupling == 1.3
    assert settings.t_total is None


def test_flags_override_parameter_file(tmp_path):
    path = tmp_path / 'run.env'
    path.write_text('omega_atom=12\ncoupling_j=0.9\nqubits=5\ndt=0.05\n', encoding='utf-8')

    settings = load_run_settings(path, coupling=0.7, omega_cavity=None)

    assert settings.params.omega_atom == 12.0
    assert settings.params.coupling == 0.7
    assert settings.params.omega_cavity == 10.0
    assert settings.params.cavities == 31
    assert settings.dt == 0.05


def test_cavities_flag_replaces_qubits_from_file(tmp_path):
    path = tmp_path / 'run.env'
    path.write_text('qubits=5\n', encoding='utf-8')

    assert load_run_settings(path, cavities=9).params.cavities == 9


def test_qubits_and_cavities_in_one_file(tmp_path):
    path = tmp_path / 'run.env'
    path.write_text('qubits=5\ncavities=7\n', encoding='utf-8')

    with pytest.raises(ParameterError, match='not both') as info:
        load_run_settings(path)
    assert info.value.field == 'cavities'


def test_unknown_key_in_parameter_file(tmp_path):
    path = tmp_path / 'run.env'
    path.write_text('omega=12\n', encoding='utf-8')

    with pytest.raises(ParameterError, match='omega'):
        read_parameter_file(path)


def test_non_numeric_value(tmp_path):
    path = tmp_path / 'run.env'
    path.write_text('coupling_j=strong\n', encoding='utf-8')

    with pytest.raises(ParameterError):
        load_run_settings(path)


def test_missing_parameter_file(tmp_path):
    with pytest.raises(ParameterError):
        read_parameter_file(tmp_path / 'absent.env')


@pytest.mark.parametrize(
    "overrides",
    [{"cavities": 8}, {"dt": 0.0}, {"t_max": -1.0}, {"t_total": 0.0}, {"coupling": -0.1}, {"qubits": 0}],
)
def test_invalid_settings(overrides):
    with pytest.raises(ParameterError):
        load_run_settings(**overrides)


def test_record_round_trip():
    settings = load_run_settings(qubits=4, t_total=50.0)
    record = {k: str(v) for k, v in settings.record().items()}
    params = params_from_record(record)

    assert params == settings.params
    assert record['t_total'] == '50.0'


def test_incomplete_record_gives_no_params():
    assert params_from_record({'omega_atom': '11'}) is None
