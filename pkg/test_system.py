#!/usr/bin/env python3
"""
System tests for the poset code toolkit: the command line, configuration and golden files
Run with pytest, or directly: python test_system.py [--quick]
"""

import contextlib
import io
import json
import os
import sys
import tempfile
import traceback
from dataclasses import asdict
from datetime import datetime

import pytest

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")


def run_cli(*argv):
    """Run main() in-process, returning (exit code, stdout, stderr)"""
    from main import main

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def fixture_text(name):
    with open(os.path.join(FIXTURES, name), "r", encoding="utf-8") as f:
        return f.read()


@contextlib.contextmanager
def preserved_config():
    from config import config

    saved = asdict(config)
    try:
        yield config
    finally:
        for key, value in saved.items():
            setattr(config, key, value)


def test_imports():
    from channels import FAMILIES, build_channel
    from codes import construct_code, optimal_code_size, verify_code
    from config import config
    from interface.render import render_size
    from main import build_parser
    from oracle import brute_force_optimal, cross_validate
    from storage.code_files import read_code_file

    assert set(FAMILIES) == {"subset", "multiset", "zchannel", "subspace", "deletion", "shift"}
    assert config.validate()


def test_size_command():
    code, out, _ = run_cli("size", "--family", "subset", "--n", "4", "--t", "1")
    assert code == 0
    assert "size: 8" in out.splitlines()
    assert "closed_form: 8" in out.splitlines()
    assert "ranks: 0,2,4" in out.splitlines()


def test_size_command_dual_and_all():
    code, out, _ = run_cli("size", "--family", "subset", "--n", "4", "--t", "1", "--dual")
    assert code == 0 and "size: 8" in out.splitlines()
    assert "params: n=4,lo=0,hi=4,dual=1" in out.splitlines()

    code, out, _ = run_cli("size", "--family", "subspace", "--p", "2", "--n", "3", "--t", "all")
    assert code == 0 and "size: 7" in out.splitlines()


def test_size_command_marks_shift_bound():
    code, out, _ = run_cli("size", "--family", "shift", "--n", "4", "--w", "2", "--t", "1")
    assert code == 0
    assert "bound_only: true" in out
    assert "note: closed form is a lower bound for this channel" in out


def test_size_command_notes_the_middle_residue():
    code, out, _ = run_cli("size", "--family", "zchannel", "--a", "3", "--n", "3", "--t", "1")
    assert code == 0
    assert "size: 14" in out.splitlines()
    assert "note: the middle residue gives only 13" in out.splitlines()

    _, out, _ = run_cli("size", "--family", "zchannel", "--a", "3", "--n", "2", "--t", "1")
    assert "middle residue" not in out


def test_size_command_json():
    code, out, _ = run_cli("size", "--family", "zchannel", "--a", "3", "--n", "2", "--t", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["size"] == "5"
    assert data["family"] == "zchannel"
    assert data["params"] == {"a": 3, "n": 2, "lo": 0, "hi": 4}


def test_generate_to_stdout_matches_golden_files():
    cases = [
        (("--family", "subset", "--n", "4", "--t", "1"), "subset_n4_t1.code"),
        (("--family", "subset", "--n", "3", "--t", "2"), "subset_n3_t2.code"),
        (("--family", "deletion", "--a", "2", "--lo", "0", "--hi", "3", "--t", "1"), "deletion_a2_0_3_t1.code"),
        (("--family", "multiset", "--n", "2", "--lo", "0", "--hi", "0", "--t", "0"), "multiset_n2_0_0_t0.code"),
    ]
    for args, name in cases:
        code, out, err = run_cli("generate", *args)
        assert code == 0
        assert out == fixture_text(name), name
        assert err.strip().endswith(f"codewords: {len(out.splitlines()) - 3}")


def test_generate_then_verify():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "out", "z.code")
        code, out, _ = run_cli("generate", "--family", "zchannel", "--a", "3", "--n", "3", "--t", "1", "--dual", "--out", path)
        assert code == 0
        assert out.strip() == "codewords: 14"

        code, out, _ = run_cli("verify", "--in", path)
        assert code == 0
        assert out.strip() == "PASS"


def test_verify_golden_file():
    path = os.path.join(FIXTURES, "subset_n4_t1.code")
    code, out, _ = run_cli("verify", "--in", path)
    assert code == 0 and out.strip() == "PASS"

    # the same words cannot detect two errors
    code, out, _ = run_cli("verify", "--in", path, "--t", "2")
    assert code == 1
    assert out.startswith("FAIL")


def test_verify_reports_violating_pairs():
    code, out, _ = run_cli("verify", "--in", os.path.join(FIXTURES, "subset_n3_t1_bad.code"))
    assert code == 1
    assert out.splitlines() == ["FAIL: 1 violating pair(s)", "110 ~> 100"]

    code, out, _ = run_cli("verify", "--in", os.path.join(FIXTURES, "subset_n3_t1_bad.code"), "--format", "json")
    assert code == 1
    data = json.loads(out)
    assert data["passed"] is False
    assert data["violations"] == [["110", "100"]]


def test_verify_rejects_malformed_files():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "bad.code")
        with open(path, "w", encoding="utf-8") as f:
            f.write("#channel=subset\n#params=n=3,lo=0,hi=3\n#t=1\n1x0\n")
        code, _, err = run_cli("verify", "--in", path)
        assert code == 2
        assert "line 4" in err

        with open(path, "w", encoding="utf-8") as f:
            f.write("#channel=multiset\n#params=n=2,lo=0,hi=4\n#t=1\n0,1\n1,\u00b2\n")
        code, _, err = run_cli("verify", "--in", path)
        assert code == 2
        assert "line 5" in err

        code, _, _ = run_cli("verify", "--in", os.path.join(tmp, "missing.code"))
        assert code == 2

    code, _, _ = run_cli("verify")
    assert code == 2


def test_oracle_command():
    code, out, _ = run_cli("oracle", "--family", "shift", "--n", "4", "--w", "2", "--t", "all")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "optimum: 2"
    assert lines[1] == "witness_size: 2"
    assert len(lines) == 5


def test_oracle_guard_exit_code():
    code, _, err = run_cli("oracle", "--family", "subset", "--n", "6", "--t", "1")
    assert code == 3
    assert "64" in err

    code, out, _ = run_cli("oracle", "--family", "subset", "--n", "5", "--t", "1", "--guard", "32")
    assert code == 0
    assert out.splitlines()[0] == "optimum: 16"

    code, _, _ = run_cli("oracle", "--family", "subset", "--n", "4", "--guard", "0")
    assert code == 2


def test_enumeration_guard_exit_code():
    code, _, _ = run_cli("generate", "--family", "deletion", "--a", "2", "--lo", "0", "--hi", "20", "--t", "19")
    assert code == 3


def test_table_command():
    code, out, _ = run_cli("table", "--family", "subset", "--n", "4", "--t", "0..4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t\tgeneric\tclosed_form\toracle"
    rows = [line.split("\t") for line in lines[1:]]
    assert [row[1] for row in rows] == ["16", "8", "6", "6", "6"]
    assert all(row[1] == row[2] == row[3] for row in rows)


def test_binary_zchannel_table_matches_subset_table():
    _, subsets, _ = run_cli("table", "--family", "subset", "--n", "4")
    _, words, _ = run_cli("table", "--family", "zchannel", "--a", "2", "--n", "4")
    assert subsets == words


def test_table_skips_oracle_above_guard():
    code, out, _ = run_cli("table", "--family", "subset", "--n", "6", "--t", "1")
    assert code == 0
    assert out.splitlines()[1] == "1\t32\t32\t-"

    code, out, _ = run_cli("table", "--family", "subset", "--n", "3", "--t", "1", "--format", "json")
    assert json.loads(out) == [{"t": "1", "generic": "4", "closed_form": "4", "oracle": "4"}]


def test_usage_errors():
    assert run_cli("size", "--family", "subset")[0] == 2
    assert run_cli("size", "--family", "subspace", "--p", "4", "--n", "2")[0] == 2
    assert run_cli("size", "--family", "deletion", "--a", "2")[0] == 2
    assert run_cli("size", "--n", "3")[0] == 2
    assert run_cli("size", "--family", "subset", "--n", "3", "--t", "-1")[0] == 2
    assert run_cli("table", "--family", "subset", "--n", "3", "--t", "2..1")[0] == 2
    with pytest.raises(SystemExit) as info:
        run_cli("size", "--family", "torus", "--n", "3")
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        run_cli("compress")
    assert info.value.code == 2


def test_output_is_deterministic():
    for argv in (
        ("generate", "--family", "subspace", "--p", "2", "--n", "3", "--t", "1"),
        ("oracle", "--family", "deletion", "--a", "2", "--lo", "1", "--hi", "3", "--t", "1"),
        ("table", "--family", "multiset", "--n", "2", "--lo", "0", "--hi", "4"),
    ):
        assert run_cli(*argv) == run_cli(*argv)


def test_config_file_sets_guard():
    with preserved_config() as config, tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "config.json")
        with open(path, "w") as f:
            json.dump({"oracle_guard": 10, "output_format": "json"}, f)

        code, _, _ = run_cli("oracle", "--family", "subset", "--n", "4", "--config", path)
        assert code == 3
        assert config.oracle_guard == 10

        code, out, _ = run_cli("size", "--family", "subset", "--n", "4", "--t", "1")
        assert json.loads(out)["size"] == "8"


def test_invalid_config_file_is_a_usage_error():
    with preserved_config(), tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "config.json")
        with open(path, "w") as f:
            json.dump({"output_format": "yaml"}, f)
        code, _, err = run_cli("size", "--family", "subset", "--n", "4", "--config", path)
        assert code == 2
        assert "output_format" in err


def test_save_and_show_config():
    from config import load_config, save_config

    with preserved_config() as config, tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "saved.json")
        config.oracle_guard = 25
        assert save_config(path)
        config.oracle_guard = 40
        load_config(path)
        assert config.oracle_guard == 25

        code, out, _ = run_cli("size", "--family", "subset", "--n", "2", "--show-config")
        assert code == 0
        assert "CURRENT CONFIGURATION" in out
        assert "oracle_guard: 25" in out


def test_config_rejects_bad_values():
    with preserved_config() as config:
        config.oracle_guard = 0
        with pytest.raises(ValueError):
            config.validate()


TEST_MODULES = [
    ("Counting", "test_counting"),
    ("Posets", "test_posets"),
    ("Channels", "test_channels"),
    ("Codes", "test_codes"),
    ("Oracle", "test_oracle"),
    ("Command Line", "test_system"),
]


def run_module(module_name):
    """Run every test_* function of a module, printing one line per test"""
    module = __import__(module_name)
    passed, failed = 0, 0
    for name in sorted(n for n in dir(module) if n.startswith("test_")):
        func = getattr(module, name)
        if not callable(func):
            continue
        try:
            func()
            passed += 1
        except Exception as e:
            failed += 1
            print(f"   ❌ {name}: {e!r}")
            traceback.print_exc(limit=2)
    return passed, failed


def run_full_test():
    """Run complete system test"""
    print("🚀 Poset Codes - Full Test Suite")
    print("=" * 60)
    print(f"Test started at: {datetime.now()}")
    print("=" * 60)

    results = []
    for label, module_name in TEST_MODULES:
        print(f"\n🔍 Testing {label}...")
        try:
            passed, failed = run_module(module_name)
        except Exception as e:
            print(f"   ❌ {label} failed with exception: {e}")
            passed, failed = 0, 1
        print(f"   {passed} passed, {failed} failed")
        results.append((label, passed, failed))

    print("\n" + "=" * 60)
    print("📊 TEST RESULTS SUMMARY")
    print("=" * 60)

    total_failed = 0
    for label, passed, failed in results:
        status = "✅ PASS" if failed == 0 else "❌ FAIL"
        print(f"   {status} - {label} ({passed} passed, {failed} failed)")
        total_failed += failed

    print("-" * 60)
    if total_failed == 0:
        print("🎉 ALL TESTS PASSED!")
    else:
        print(f"❌ {total_failed} test(s) failed. Check the messages above.")

    return total_failed == 0


def quick_test():
    """Run quick essential tests only"""
    print("⚡ Quick Test - Essential Components Only")
    print("-" * 40)

    essential_tests = [
        ("Imports", test_imports),
        ("Size", test_size_command),
        ("Generate", test_generate_to_stdout_matches_golden_files),
        ("Verify", test_verify_reports_violating_pairs),
        ("Table", test_table_command),
    ]

    for test_name, test_func in essential_tests:
        print(f"\n{test_name}:")
        try:
            test_func()
            print(f"✅ {test_name} working")
        except Exception as e:
            print(f"❌ {test_name} failed: {e!r}")
            return False

    print("\n✅ Quick test passed! Core components are working.")
    return True


if __name__ == "__main__":
    if len(sys.argv) > 1 and sys.argv[1] == "--quick":
        success = quick_test()
    else:
        success = run_full_test()

    sys.exit(0 if success else 1)
