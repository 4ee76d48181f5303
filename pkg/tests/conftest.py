def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            item.user_properties.append(("criterion", mark.args))


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call" and outcome != "error":
                continue
            props = dict(getattr(rep, "user_properties", []))
            if "criterion" in props:
                n, title = props["criterion"]
                rows.append((n, "PASS" if outcome == "passed" else "FAIL", title))
    if rows:
        terminalreporter.section("acceptance criteria")
        for n, verdict, title in sorted(rows):
            terminalreporter.write_line(f"{verdict}  criterion {n:2d}: {title}")
