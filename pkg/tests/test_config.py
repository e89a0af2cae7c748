# -*- coding: utf-8 -*-

import pytest

from anosov_suspension.constants import BumpShapeEnum, ConjugacyKindEnum
from anosov_suspension.exc import ConfigError
from anosov_suspension.paths import (
    path_demo_config,
    path_constant_config,
    path_conjugate_config,
    path_adversarial_config,
)
from anosov_suspension.config import RunConfig, FlowOptions, DEMO_CONFIG

SOURCE = """
[source]
matrix = 2 1 1 1
ceiling = constant
c0 = 1.0
"""


def config_error_key(text: str) -> str:
    with pytest.raises(ConfigError) as e:
        RunConfig.from_text(text)
    return e.value.key


class TestRunConfig:
    def test_demo(self):
        cfg = RunConfig.demo()
        assert cfg.source_map.matrix.to_list() == [[2, 1], [1, 1]]
        assert cfg.conjugacy.kind is ConjugacyKindEnum.linear
        assert cfg.target_map is None
        assert cfg.target_ceiling.c0 == 1.5
        pair = cfg.build_pair()
        assert pair.target.map.matrix.to_list() == [[3, -1], [1, 0]]
        assert cfg.smoothing.shape is BumpShapeEnum.plateau

    def test_bundled_configs(self):
        cfg = RunConfig.from_path(path_demo_config)
        assert cfg.run.seed == 20240917
        assert cfg.run.samples == 1000
        assert cfg.verification.tolerance == 1e-9

        cfg = RunConfig.from_path(path_constant_config)
        pair = cfg.build_pair()
        assert pair.source.ceiling.c0 == 1.0
        assert pair.target.ceiling.c0 == 2.0

        cfg = RunConfig.from_path(path_conjugate_config)
        assert cfg.conjugacy.offset == (0.25, 0.5)
        assert cfg.target_ceiling is None
        assert not cfg.build_pair().target.map.is_linear

        cfg = RunConfig.from_path(path_adversarial_config)
        assert cfg.smoothing.shape is BumpShapeEnum.exponential
        assert cfg.probe.fibers == 4
        assert cfg.probe.fiber_points == 51

    def test_identity_default(self):
        cfg = RunConfig.from_text(SOURCE)
        assert cfg.conjugacy.kind is ConjugacyKindEnum.identity
        assert cfg.target_ceiling is None
        pair = cfg.build_pair()
        assert pair.target.ceiling == pair.source.ceiling

    def test_errors(self):
        assert config_error_key(SOURCE + "foo = 1\n") == "source.foo"
        assert config_error_key(SOURCE + "[bogus]\nx = 1\n") == "bogus"
        assert config_error_key("[run]\nseed = 1\n") == "source"
        assert config_error_key("[source\nmatrix = 1") == "<file>"
        assert config_error_key(SOURCE.replace("2 1 1 1", "2 1 1")) == "source.matrix"
        assert config_error_key(SOURCE.replace("2 1 1 1", "1 1 0 1")) == "source.matrix"
        assert config_error_key(SOURCE.replace("2 1 1 1", "2 1 1 x")) == "source.matrix"
        assert config_error_key(SOURCE.replace("c0 = 1.0", "c0 = -1.0")) == "source.c0"
        assert config_error_key(SOURCE.replace("c0 = 1.0", "c0 = nan")) == "source.c0"
        assert config_error_key(SOURCE.replace("constant", "wavy")) == "source.ceiling"
        assert (
            config_error_key(SOURCE.replace("constant", "trig") + "terms = 0.6:1:0, 0.5:0:1\n")
            == "source.terms"
        )
        assert config_error_key(SOURCE + "terms = 0.1:1:0\n") == "source.terms"
        assert config_error_key(SOURCE + "[smoothing]\ndelta = 1.5\n") == "smoothing.delta"
        assert config_error_key(SOURCE + "[smoothing]\nshape = box\n") == "smoothing.shape"
        assert config_error_key(SOURCE + "[run]\nsamples = 0\n") == "run.samples"
        assert config_error_key(SOURCE + "[run]\nseed = abc\n") == "run.seed"
        assert config_error_key(SOURCE + "[conjugacy]\nkind = callable\n") == "conjugacy.kind"
        assert config_error_key(SOURCE + "[conjugacy]\nkind = linear\n") == "conjugacy.matrix"
        assert (
            config_error_key(SOURCE + "[conjugacy]\nkind = affine\nmatrix = 1 1 0 1\n")
            == "conjugacy.offset"
        )
        assert (
            config_error_key(SOURCE + "[target]\nceiling = pushforward\nc0 = 2.0\n")
            == "target.c0"
        )

    def test_conjugacy_mismatch(self):
        text = DEMO_CONFIG.replace("[target]", "[target]\nmatrix = 2 1 1 1")
        cfg = RunConfig.from_text(text)
        with pytest.raises(ConfigError) as e:
            cfg.build_pair()
        assert e.value.key == "target.matrix"

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            RunConfig.from_path(tmp_path / "missing.ini")

    def test_overrides(self):
        cfg = RunConfig.demo().with_overrides(
            seed=5,
            samples=None,
            shape="exponential",
            tolerance=1e-6,
        )
        assert cfg.run.seed == 5
        assert cfg.run.samples == 1000
        assert cfg.smoothing.shape is BumpShapeEnum.exponential
        assert cfg.verification.tolerance == 1e-6
        with pytest.raises(ConfigError) as e:
            cfg.with_overrides(bogus=1)
        assert e.value.key == "bogus"
        with pytest.raises(ConfigError) as e:
            cfg.with_overrides(workers=0)
        assert e.value.key == "run.workers"

    def test_to_text_round_trip(self):
        for path in (path_demo_config, path_conjugate_config, path_adversarial_config):
            cfg = RunConfig.from_path(path)
            assert RunConfig.from_text(cfg.to_text()) == cfg
        cfg = RunConfig.from_text(SOURCE + "[target]\nmatrix = 2 1 1 1\ntranslation = 0.5 0.0\n")
        assert RunConfig.from_text(cfg.to_text()) == cfg


def test_flow_times():
    assert FlowOptions().times() == [0.5 * i for i in range(11)]
    assert FlowOptions(t_stop=1.0, t_step=0.3).times() == [0.0, 0.3, 0.6, 0.3 * 3]
    assert FlowOptions(t_stop=0.0).times() == [0.0]


if __name__ == "__main__":
    from anosov_suspension.tests import run_cov_test

    run_cov_test(__file__, "anosov_suspension.config", preview=False)
