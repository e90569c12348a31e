"""Smoke test for the gschur_py extension.

Build first with `cargo build -p gschur-py --release`, then run
`python3 python/smoke.py`.
"""

import importlib.util
import json
import os
import pathlib
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load():
    lib = pathlib.Path(os.environ.get("GSCHUR_PY_LIB", ROOT / "target" / "release" / "libgschur_py.so"))
    if not lib.exists():
        sys.exit(f"{lib} not found; run `cargo build -p gschur-py --release`")
    tmp = pathlib.Path(tempfile.mkdtemp()) / "gschur_py.so"
    tmp.symlink_to(lib)
    spec = importlib.util.spec_from_file_location("gschur_py", tmp)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def main():
    g = load()
    fixtures = ROOT / "crates" / "core" / "fixtures"

    v = json.loads(g.verify(str(fixtures / "superUT.json"), n=2))
    assert v["ok"] and v["conforming"], v

    ch = json.loads(g.character("builtin:trivial", 2, "2"))
    assert ch["schur"] == "s[2]" and ch["agree"], ch
    assert ch["tableau"] == {"z1^2": 1, "z1z2": 1, "z2^2": 1}, ch

    f = json.loads(g.filtration("builtin:trivial", 2, "1", 1))
    assert f["factors"] == ["(2)", "(1,1)"] and f["certified"], f

    t = json.loads(g.filtration("builtin:trivial", 1, "1", 1, truncate=2))
    assert t["factors"] == ["(2)"] and t["certified"], t

    m = json.loads(g.multiplicities("builtin:superUT", 2, "1|", "|1"))
    assert m["multiplicities"] == {"((1),(1))": 1} and m["ok"], m

    try:
        g.filtration("builtin:trivial", 1, "1", 1)
    except ValueError as e:
        assert "requires d+c" in str(e), e
    else:
        raise AssertionError("degree guard did not fire")

    code, _, _ = g.run(["char", "--algebra", "builtin:trivial", "--n", "2", "--lambda", "1,1", "--mutate"])
    assert code == 1

    print("smoke: ok")


if __name__ == "__main__":
    main()
