from __future__ import annotations

import json

import numpy as np
import pytest

from utils.errors import ParameterError
from utils.result_storage import ResultStorage, RunManifest, atomic_write_text, read_csv


def test_csv_with_parameter_header(tmp_path):
    storage = ResultStorage(tmp_path)
    path = storage.save_csv(
        'dynamics.csv',
        {'t': np.array([0.0, 0.5, 1.0]), 'pe': np.array([1.0, 0.75, 0.123456789012])},
        header={'omega_atom': 11.0, 'qubits': 8},
    )

    lines = path.read_text(encoding='utf-8').splitlines()
    assert lines[:3] == ['# omega_atom=11.0', '# qubits=8', 't,pe']

    columns, header = read_csv(path)
    assert header == {'omega_atom': '11.0', 'qubits': '8'}
    np.testing.assert_allclose(columns['pe'], [1.0, 0.75, 0.123456789012], rtol=1e-9)


def test_empty_table(tmp_path):
    path = ResultStorage(tmp_path).save_csv('empty.csv', {'t': np.array([]), 'delta_omega': np.array([])})
    columns, _ = read_csv(path)

    assert list(columns) == ['t', 'delta_omega']
    assert len(columns['t']) == 0


def test_read_csv_without_column_line(tmp_path):
    path = tmp_path / 'broken.csv'
    path.write_text('# qubits=8\n', encoding='utf-8')

    with pytest.raises(ParameterError):
        read_csv(path)


def test_json_keeps_unicode_and_numpy(tmp_path):
    path = ResultStorage(tmp_path).save_json('summary.json', {'φ': np.float64(4.43), 'n': np.arange(3)})
    text = path.read_text(encoding='utf-8')

    assert 'φ' in text
    assert json.loads(text) == {'φ': 4.43, 'n': [0, 1, 2]}


def test_manifest_lists_every_output(tmp_path):
    storage = ResultStorage(tmp_path / 'run')
    storage.save_csv('a.csv', {'x': np.arange(2.0)})
    storage.save_json('b.json', {'ok': True})
    path = storage.save_manifest(RunManifest(command='poles', parameters={'qubits': 8}))

    manifest = json.loads(path.read_text(encoding='utf-8'))
    assert path.name == 'poles_manifest.json'
    assert [p.split('/')[-1] for p in manifest['outputs']] == ['a.csv', 'b.json']
    assert manifest['parameters'] == {'qubits': 8}


def test_atomic_write_leaves_no_temporary_files(tmp_path):
    target = tmp_path / 'nested' / 'out.txt'
    atomic_write_text(target, 'first')
    atomic_write_text(target, 'second')

    assert target.read_text(encoding='utf-8') == 'second'
    assert [p.name for p in target.parent.iterdir()] == ['out.txt']
