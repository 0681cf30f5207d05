# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""Tests of the verification pipeline."""

import os

import pytest

from pyenm.errors import ConfigError
from pyenm.interfaces.verification import SUITES
from pyenm.pipelines.verification import VerificationPipeline


def test_pipeline_runs_suites_in_order(tmp_path):
    pipeline = VerificationPipeline(str(tmp_path), suites='spectrum,states', seed=7)
    rows, failures = pipeline.run(number_of_cores=1)
    assert failures == []
    expected = ([('spectrum', name) for name, _ in SUITES['spectrum']]
                + [('states', name) for name, _ in SUITES['states']])
    assert [(row[0], row[1]) for row in rows] == expected
    assert os.path.isdir(os.path.join(str(tmp_path), 'nipype', 'seed-7', 'verification_pipeline'))


def test_pipeline_workflow_graph(tmp_path):
    pipeline = VerificationPipeline(str(tmp_path), suites=['limits', 'qfi'], seed=1)
    pipeline.create_workflow()
    names = sorted(name.split('.')[-1] for name in pipeline.wf.list_node_names())
    assert names == ['merge_checks', 'suite_limits', 'suite_qfi', 'summary']


def test_pipeline_rejects_unknown_suite(tmp_path):
    with pytest.raises(ConfigError):
        VerificationPipeline(str(tmp_path), suites='states,plots')
    with pytest.raises(ConfigError):
        VerificationPipeline(str(tmp_path), suites=['states', 'plots'])


def test_pipeline_with_multiproc(tmp_path, monkeypatch):
    monkeypatch.setenv('ENM_THREADS', '2')
    pipeline = VerificationPipeline(str(tmp_path), suites='states,eternal_nm', seed=0)
    rows, failures = pipeline.run(number_of_cores=2)
    assert failures == []
    assert [row[0] for row in rows][0] == 'states'
    assert [row[0] for row in rows][-1] == 'eternal_nm'


def test_pipeline_reruns_in_existing_work_dir(tmp_path, monkeypatch):
    rows, failures = VerificationPipeline(str(tmp_path), suites='states', seed=3).run(number_of_cores=1)
    assert failures == []

    def broken(rng):
        return False, 'changed'

    monkeypatch.setitem(SUITES, 'states', SUITES['states'] + [('broken', broken)])
    rows, failures = VerificationPipeline(str(tmp_path), suites='states', seed=3).run(number_of_cores=1)
    assert failures == ['states/broken']
    assert list(rows[-1]) == ['states', 'broken', False, 'changed']
