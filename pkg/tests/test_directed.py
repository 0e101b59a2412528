import random
import sys
from pathlib import Path

import pytest

from oracle import oracle_from_image
from rvtlm.core import CoreConfig, random_config
from rvtlm.harness.directed import DirectedTest, _check, _wrap, covered_ops, directed_suite, run_directed
from rvtlm.harness.directed_vectors import VECTORS
from rvtlm.isa import OPS

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "scripts"))
import freeze_directed_vectors  # noqa: E402

SUITE = directed_suite()
TOHOST = CoreConfig().tohost_addr


def test_suite_size():
    assert len(SUITE) >= 60
    assert len({t.name for t in SUITE}) == len(SUITE)


def test_every_instruction_exercised():
    assert covered_ops(SUITE) == set(OPS)


def test_frozen_vectors_match_reference_interpreter():
    fresh = freeze_directed_vectors.build()
    assert fresh == {k: [tuple(x) for x in v] for k, v in VECTORS.items()}


@pytest.mark.parametrize("test", SUITE, ids=lambda t: t.name)
def test_reference_interpreter_passes(test):
    p = test.assemble()
    assert oracle_from_image(p.image(), p.entry).run(TOHOST, 200_000) == 1


def test_default_config_cosim():
    bad = [(t.name, str(r.halt), [str(m) for m in r.mismatches[:1]]) for t, r in run_directed() if not r.passed]
    assert bad == []


@pytest.mark.parametrize("cfg_seed", [1, 2, 3])
def test_random_config_cosim(cfg_seed):
    cfg = random_config(random.Random(cfg_seed))
    bad = [(t.name, str(r.halt)) for t, r in run_directed(cfg) if not r.passed]
    assert bad == []


def test_failing_check_reports_its_number():
    body = "    li x3, 5\n" + _check(1, "x3", 5) + _check(2, "x3", 5) + _check(3, "x3", 6)
    t = DirectedTest("broken", ("addi",), _wrap(body))
    [(_, r)] = run_directed(tests=[t])
    assert r.halt.value == 2 * 3 + 1 and r.mismatches == [] and not r.passed
