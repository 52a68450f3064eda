import re


def pytest_terminal_summary(terminalreporter):
    results = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            m = re.search(r"test_acceptance\.py::test_ac(\d+)_(\w+)", nodeid)
            if not m or (rep.when != "call" and outcome == "passed"):
                continue
            key = (int(m.group(1)), m.group(2))
            ok, total = results.get(key, (True, 0))
            results[key] = (ok and outcome == "passed", total + 1)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), (ok, total) in sorted(results.items()):
        cases = f" ({total} cases)" if total > 1 else ""
        terminalreporter.write_line(f"AC{num} {'PASS' if ok else 'FAIL'}  {name}{cases}")
