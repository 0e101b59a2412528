import json
import struct
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracle import oracle_from_image
from rvtlm.core import CoreConfig, PredictorConfig
from rvtlm.harness.asm import AsmError, assemble
from rvtlm.harness.cli import cli_main
from rvtlm.harness.configfile import build_config, load_config_file, parse_override
from rvtlm.harness.generator import (DEFAULT_DATA_BASE, GenConstraints, generate_program, independent_alu_program,
                                     program_image, workload_words)
from rvtlm.harness.loaders import (LoadError, LoadedProgram, dump_hex, load_elf, load_elf_minimal, load_hex,
                                   load_program, parse_hex, words_to_hex)
from rvtlm.harness.runner import (ProgramSource, RunSpec, fuzz_spec, run_cosim, run_fuzz_campaign, run_perf_sweep,
                                  resolve_program, simulate)
from rvtlm.harness.trace import TraceFormatError, parse_trace_line, replay_trace
from rvtlm.isa import Kind, decode
from rvtlm.kernel import HaltKind
from rvtlm.stats import emit_report

DATA = Path(__file__).parent / "data"
BASE = 0x8000_0000
TOHOST = 0x80FF_F000
END = f"\nli x30, {TOHOST}\naddi x28, x0, 1\nsd x28, 0(x30)\n"


# ---------------------------------------------------------------- ELF

def test_minimal_elf_segment_bytes():
    mem, entry = load_elf_minimal(DATA / "minimal.elf")
    text = bytes.fromhex((DATA / "minimal.text.hex").read_text().strip())
    assert entry == 0x8000_0000
    assert mem.read_bytes(0x8000_0000, len(text)) == text


def test_minimal_elf_symbols_and_run():
    prog = load_elf(DATA / "minimal.elf")
    assert prog.tohost == 0x8000_1000
    r = simulate(RunSpec(program=prog))
    assert r.passed and r.report.retired == 6


def _patched(tmp_path, offset, data):
    raw = bytearray((DATA / "minimal.elf").read_bytes())
    raw[offset:offset + len(data)] = data
    p = tmp_path / "bad.elf"
    p.write_bytes(bytes(raw))
    return p


@pytest.mark.parametrize("offset,data,msg", [
    (0, b"\x7fELG", "magic"),
    (4, b"\x01", "64-bit"),
    (5, b"\x02", "little-endian"),
    (18, struct.pack("<H", 62), "RISC-V"),
    (56, struct.pack("<H", 0), "no loadable segments"),
])
def test_elf_rejections(tmp_path, offset, data, msg):
    with pytest.raises(LoadError, match=msg):
        load_elf(_patched(tmp_path, offset, data))


def test_truncated_file_rejected(tmp_path):
    p = tmp_path / "t.elf"
    p.write_bytes(b"\x7fELF")
    with pytest.raises(LoadError):
        load_elf(p)


# ---------------------------------------------------------------- hex

def test_hex_little_endian_placement():
    mem = parse_hex("80000000: 93 00 50 00\n")
    assert mem.read(0x8000_0000, 4) == 0x00500093


def test_hex_comment_only_is_empty():
    assert parse_hex("# nothing here\n\n   # still nothing\n").pages == {}


def test_hex_odd_digits_cites_line():
    with pytest.raises(LoadError, match=r":3: odd number of hex digits"):
        parse_hex("# c\n80000000: 13 00 00 00\n80000004: 1\n")


@pytest.mark.parametrize("text", ["80000000 13 00", "zz: 13", "80000000: gg"])
def test_hex_malformed(text):
    with pytest.raises(LoadError, match=":1:"):
        parse_hex(text)


def test_hex_round_trip(tmp_path):
    words = independent_alu_program(40)
    mem = program_image(words, BASE)
    p = tmp_path / "a.hex"
    p.write_text(dump_hex(mem))
    assert load_hex(p).same_contents(mem)
    assert parse_hex(words_to_hex(words, BASE)).same_contents(mem)


def test_load_program_detection(tmp_path):
    (tmp_path / "a.s").write_text("addi x1, x0, 1\n")
    (tmp_path / "a.hex").write_text("80000000: 93 00 10 00\n")
    asm = load_program(tmp_path / "a.s")
    hx = load_program(tmp_path / "a.hex")
    assert asm.entry == BASE and hx.entry is None
    assert asm.mem.same_contents(hx.mem)
    assert load_program(DATA / "minimal.elf").entry == BASE


# ---------------------------------------------------------------- assembler

def test_asm_labels_and_pseudos():
    p = assemble("""
        li x5, 0x123456789
        la x6, data
        j skip
        nop
    skip:
        mv x7, x5
    .org 0x80000100
    data:
        .dword 42
    """)
    code = p.words()[:-2]
    assert p.symbols["skip"] == BASE + 4 * (len(code) - 1)
    assert p.symbols["data"] == 0x8000_0100
    o = oracle_from_image(p.image(), p.entry)
    while o.pc != p.symbols["skip"] + 4:
        o.step()
    assert o.x[5] == o.x[7] == 0x123456789 and o.x[6] == p.symbols["data"]


@pytest.mark.parametrize("src,msg", [
    ("a:\na:\nnop", "duplicate label"),
    ("frob x1, x2", "unknown"),
    ("addi x1, x2", "operands"),
    ("addi x1, x2, 4096", "outside"),
    ("addi x99, x0, 1", "register"),
    ("beq x0, x0, nowhere", "undefined"),
])
def test_asm_errors(src, msg):
    with pytest.raises(AsmError, match=msg):
        assemble(src)


@settings(max_examples=300, deadline=None)
@given(st.integers(-(1 << 63), (1 << 63) - 1))
def test_li_materialises_any_constant(v):
    p = assemble(f"li x5, {v}")
    o = oracle_from_image(p.image(), p.entry)
    for _ in p.words():
        o.step()
    assert o.x[5] == v & ((1 << 64) - 1)


# ---------------------------------------------------------------- generator

def static_check(words, c: GenConstraints):
    """Independent structural checker: forward-only in-bounds control flow, memory ops inside the
    data region, reserved registers never written by the body. Returns a list of problems."""
    problems = []
    base_pc = c.base_pc
    n = len(words)
    data_base, size = c.data_region
    body = range(3, n - 4)
    for i in range(n):
        d = decode(words[i], base_pc + 4 * i)
        if i in body:
            if d.kind in (Kind.BRANCH, Kind.JAL):
                tgt = i + d.imm // 4
                if d.imm <= 0 or tgt > n - 4:
                    problems.append(f"{i}: bad control target {tgt}")
            if d.kind is Kind.JALR:
                problems.append(f"{i}: jalr")
            if d.writes_rd and d.rd in (28, 30, 31):
                problems.append(f"{i}: writes reserved x{d.rd}")
            if d.writes_rd and d.rd == 29:
                if not (d.op == "addi" and d.rs1 == 31 and 0 <= d.imm <= size - 8 and d.imm % 8 == 0):
                    problems.append(f"{i}: bad x29 update")
            if d.kind in (Kind.LOAD, Kind.STORE):
                if d.rs1 == 31:
                    if not (0 <= d.imm and d.imm + d.width <= size):
                        problems.append(f"{i}: offset outside region")
                elif not (d.rs1 == 29 and d.imm == 0):
                    problems.append(f"{i}: memory op via x{d.rs1}")
    return problems


def test_generator_length_and_validity():
    words = generate_program(GenConstraints(length=100), 42)
    assert len(words) == 100
    for i, w in enumerate(words):
        decode(w, BASE + 4 * i)


def test_generator_deterministic():
    c = GenConstraints(length=300)
    assert generate_program(c, 7) == generate_program(c, 7)
    assert generate_program(c, 7) != generate_program(c, 8)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**64 - 1), st.integers(7, 400))
def test_generated_programs_are_well_formed_and_terminate(seed, length):
    c = GenConstraints(length=length)
    words = generate_program(c, seed)
    assert static_check(words, c) == []
    o = oracle_from_image(program_image(words, BASE), BASE)
    assert o.run(TOHOST, max_steps=length + 1) == 1
    assert o.instret <= length


def test_static_checker_catches_backward_branch():
    c = GenConstraints(length=20)
    words = generate_program(c, 1)
    words[5] = assemble("beq x0, x0, -8").words()[0]
    assert static_check(words, c)


@pytest.mark.parametrize("kw", [
    dict(length=3),
    dict(data_region=(DEFAULT_DATA_BASE, 0)),
    dict(data_region=(DEFAULT_DATA_BASE + 1, 64)),
    dict(reg_pool=(30,)),
    dict(reg_pool=()),
    dict(op_mix={"alu": 0}),
    dict(op_mix={"bogus": 1}),
    dict(allow_jalr=True),
    dict(max_branch_skip=0),
    dict(tohost_addr=BASE + 8),
])
def test_unsatisfiable_constraints_rejected(kw):
    with pytest.raises(ValueError):
        generate_program(GenConstraints(**kw), 0)


def test_memory_free_mix_accepts_empty_region():
    c = GenConstraints(length=50, data_region=(DEFAULT_DATA_BASE, 0),
                       op_mix={"alu": 5, "alu_imm": 5, "branch": 1})
    assert len(generate_program(c, 3)) == 50


def test_workloads():
    for name in ("independent", "serial", "divmix", "loop"):
        r = simulate(RunSpec(program=LoadedProgram(program_image(workload_words(name, 50), BASE), BASE)))
        assert r.passed, name
    with pytest.raises(ValueError):
        workload_words("nope", 10)


# ---------------------------------------------------------------- runner

def test_runspec_validation():
    with pytest.raises(ValueError):
        RunSpec(max_cycles=0)
    with pytest.raises(ValueError):
        RunSpec(mode="fast")
    with pytest.raises(ValueError):
        RunSpec(seed=-1)
    with pytest.raises(ValueError):
        ProgramSource(format="elf")


def test_run_cosim_smoke():
    p = assemble("addi x1, x0, 5\nsd x1, 0(x0)" + END)
    report, mismatches, halt = run_cosim(RunSpec(program=LoadedProgram(p.image(), BASE)))
    assert mismatches == [] and halt.kind is HaltKind.TOHOST_WRITE and halt.value == 1
    assert report.retired > 0


def test_tohost_failure_code():
    p = assemble(f"li x30, {TOHOST}\naddi x28, x0, 7\nsd x28, 0(x30)")
    r = simulate(RunSpec(program=LoadedProgram(p.image(), BASE)))
    assert r.halt.value == 7 and not r.passed and r.mismatches == []


def test_max_cycles_halt():
    r = simulate(RunSpec(program=ProgramSource(constraints=GenConstraints(length=500)), max_cycles=20))
    assert r.halt.kind is HaltKind.MAX_CYCLES and r.exit_status == 1


def test_perf_mode_skips_comparison():
    spec = fuzz_spec(5, 300, config=CoreConfig()).replace(mode="perf", mutations=("drop_forwarding",))
    r = simulate(spec)
    assert r.mismatches == []
    assert simulate(spec.replace(mode="both")).mismatches


def test_end_to_end_determinism():
    spec = fuzz_spec(11, 500).replace(trace=True)
    a, b = simulate(spec), simulate(spec)
    assert emit_report(a.report, "json") == emit_report(b.report, "json")
    assert a.trace == b.trace and a.exit_status == b.exit_status


def test_sweep_sorted_and_isolated():
    prog = LoadedProgram(program_image(independent_alu_program(300), BASE), BASE)
    base = RunSpec(program=prog, mode="perf")
    fwd = run_perf_sweep(base, "issue_width", [1, 2, 4])
    rev = run_perf_sweep(base, "issue_width", [4, 1, 2])
    par = run_perf_sweep(base, "issue_width", [2, 4, 1], workers=2)
    assert [v for v, _ in fwd] == [1, 2, 4]
    dump = lambda t: [(v, emit_report(r, "json")) for v, r in t]  # noqa: E731
    assert dump(fwd) == dump(rev) == dump(par)
    ipcs = [r.ipc for _, r in fwd]
    assert ipcs[0] < ipcs[1] < ipcs[2]


def test_sweep_rejects_bad_axis():
    with pytest.raises(ValueError):
        run_perf_sweep(RunSpec(), "predictor", [1])
    with pytest.raises(ValueError):
        run_perf_sweep(RunSpec(), "issue_width", [0])


def test_small_fuzz_campaign():
    res = run_fuzz_campaign(range(12), 400)
    s = res.summary()
    assert s["runs"] == 12 and s["failed"] == 0 and s["mismatches"] == 0 and s["watchdog_halts"] == 0
    assert [r["seed"] for r in s["per_seed"]] == list(range(12))


def test_fuzz_with_mutation_fails():
    res = run_fuzz_campaign(range(4), 400, mutations=("ooo_commit",))
    assert not res.passed and res.mismatches > 0


# ---------------------------------------------------------------- trace replay

def _traced(seed=3, length=400):
    spec = fuzz_spec(seed, length).replace(trace=True)
    loaded = resolve_program(spec)
    return simulate(spec, loaded), loaded


def test_trace_replay_three_way_agreement():
    r, prog = _traced()
    rep = replay_trace(r.trace, prog.mem, BASE)
    assert rep.ok
    assert r.report.retired == len(r.trace) == rep.steps == rep.state.csr_minstret


def test_trace_replay_detects_tampering():
    r, prog = _traced()
    lines = list(r.trace)
    idx = next(i for i, line in enumerate(lines) if line.split("\t")[4] != "-")
    f = lines[idx].split("\t")
    reg, val = f[4].split("=")
    f[4] = f"{reg}=0x{(int(val, 16) ^ 1):016x}"
    lines[idx] = "\t".join(f)
    rep = replay_trace(lines, prog.mem, BASE)
    assert not rep.ok and rep.errors[0].startswith(f"line {idx + 1}: rd")


def test_trace_line_parsing():
    e = parse_trace_line("5\t0x0000000080000000\t0x00500093\taddi x1, x0, 5\tx1=0x0000000000000005\t-\t"
                         "0x0000000080000004")
    assert (e.cycle, e.pc, e.rd, e.store, e.next_pc) == (5, BASE, (1, 5), None, BASE + 4)
    with pytest.raises(TraceFormatError):
        parse_trace_line("1\t2\t3")
    with pytest.raises(TraceFormatError):
        parse_trace_line("x\t0x0\t0x0\tnop\t-\t-\t0x4")


# ---------------------------------------------------------------- config files

def test_config_file(tmp_path):
    p = tmp_path / "c.toml"
    p.write_text('[core]\nissue_width = 2\nrob_entries = 32\n[core.predictor]\nkind = "not_taken"\n'
                 '[run]\nseed = 9\nmax_cycles = 5000\n')
    core, run = load_config_file(p)
    cfg = build_config(core, [parse_override("rob_entries=64")])
    assert cfg.issue_width == 2 and cfg.rob_entries == 64 and cfg.predictor == PredictorConfig("not_taken")
    assert run == {"seed": 9, "max_cycles": 5000}


@pytest.mark.parametrize("text", ["[core]\nbogus = 1\n", "[cpu]\nx = 1\n", "[run]\nspeed = 1\n",
                                  "[core]\nissue_width = 0\n"])
def test_config_file_errors(tmp_path, text):
    p = tmp_path / "c.toml"
    p.write_text(text)
    with pytest.raises(ValueError):
        load_config_file(p)


def test_overrides():
    assert parse_override("issue_width=2") == ("issue_width", 2)
    assert parse_override("predictor.kind='not_taken'") == ("predictor", {"kind": "not_taken"})
    cfg = build_config({}, [parse_override("predictor.btb_entries=8")])
    assert cfg.predictor == PredictorConfig("bimodal", 1024, 8)
    with pytest.raises(ValueError):
        parse_override("issue_width")


# ---------------------------------------------------------------- CLI

@pytest.fixture
def hexprog(tmp_path):
    p = tmp_path / "t.hex"
    p.write_text(dump_hex(assemble("addi x1, x0, 5\naddi x2, x1, 1" + END).image()))
    return p


def test_cli_cosim_pass(hexprog, capsys):
    assert cli_main(["cosim", "--program", str(hexprog), "--seed", "1"]) == 0
    assert "TohostWrite(1)" in capsys.readouterr().out


def test_cli_cosim_json_report_and_trace(hexprog, tmp_path):
    rep, tr = tmp_path / "r.json", tmp_path / "t.trace"
    assert cli_main(["cosim", "--program", str(hexprog), "--format", "json", "--report", str(rep),
                     "--trace", str(tr)]) == 0
    d = json.loads(rep.read_text())
    assert d["retired"] == len(tr.read_text().splitlines())
    assert cli_main(["trace-replay", "--program", str(hexprog), "--trace", str(tr)]) == 0


def test_cli_mutation_exit_status(hexprog):
    assert cli_main(["cosim", "--program", str(hexprog), "--mutation", "drop_forwarding"]) == 1


def test_cli_unknown_flag(capsys):
    assert cli_main(["cosim", "--bogus"]) == 2
    assert "usage" in capsys.readouterr().err


def test_cli_missing_program_is_usage_error(capsys):
    assert cli_main(["cosim"]) == 2


def test_cli_bad_file_is_usage_error(tmp_path):
    p = tmp_path / "x.hex"
    p.write_text("80000000: 1\n")
    assert cli_main(["cosim", "--program", str(p)]) == 2


def test_cli_config_and_set(tmp_path, hexprog):
    c = tmp_path / "c.toml"
    c.write_text("[core]\nissue_width = 1\n")
    rep = tmp_path / "r.json"
    assert cli_main(["perf", "--program", str(hexprog), "--config", str(c), "-s", "commit_width=1",
                     "--format", "json", "--report", str(rep)]) == 0
    echo = json.loads(rep.read_text())["config_echo"]
    assert echo["issue_width"] == 1 and echo["commit_width"] == 1


def test_cli_sweep(capsys):
    assert cli_main(["sweep", "--workload", "independent", "--size", "200", "--axis", "issue_width",
                     "--values", "4,1,2", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert [r["value"] for r in rows] == [1, 2, 4]


def test_cli_fuzz(capsys):
    assert cli_main(["fuzz", "--runs", "5", "--len", "300", "--workers", "1", "--format", "json"]) == 0
    s = json.loads(capsys.readouterr().out)
    assert s["runs"] == 5 and s["mismatches"] == 0


def test_cli_decode(capsys):
    assert cli_main(["decode", "0x00500093", "00000013"]) == 0
    out = capsys.readouterr().out
    assert "addi x1, x0, 5" in out and "addi x0, x0, 0" in out
    assert cli_main(["decode", "ffffffff"]) == 1
    assert cli_main(["decode", "--file", str(DATA / "minimal.elf"), "--count", "2"]) == 0


def test_cli_gen_len(capsys):
    assert cli_main(["cosim", "--gen-len", "200", "--seed", "4"]) == 0
