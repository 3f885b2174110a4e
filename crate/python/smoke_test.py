"""Smoke test for the pysepwords extension.

Build the library first (`cargo build -p sepwords-py --release`); when the module
is not installed, the script loads target/{release,debug}/libpysepwords.so.
"""

import importlib.util
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load():
    try:
        import pysepwords

        return pysepwords
    except ImportError:
        pass
    for profile in ("release", "debug"):
        lib = ROOT / "target" / profile / "libpysepwords.so"
        if lib.exists():
            tmp = pathlib.Path(tempfile.mkdtemp()) / "pysepwords.so"
            shutil.copy(lib, tmp)
            spec = importlib.util.spec_from_file_location("pysepwords", tmp)
            module = importlib.util.module_from_spec(spec)
            spec.loader.exec_module(module)
            return module
    sys.exit("pysepwords not built; run cargo build -p sepwords-py")


def main():
    sw = load()

    cert = sw.exact_sep("0", "0000000")
    assert cert["exact"] and cert["lower"] == 3, cert
    d = sw.Dfa.from_text(cert["witness"])
    assert d.separates("0", "0000000")
    assert d.state_count == 3

    assert sw.no_separator("0", "0000000", 2)
    assert not sw.no_separator("0", "0000000", 3)

    g1 = sw.Lang.build("G_k", 1)
    assert g1.contains("") and g1.contains("112") and not g1.contains("12")
    assert g1.state_complexity() >= 2
    assert g1.reversed().state_complexity() <= 8
    assert sw.Lang.build("L_k", 1).words_of_length(3) == ["112"]

    h1 = sw.Lang.build("H_k", 1)
    assert sw.lsep_lower("112", h1, 1)

    report = sw.witness(1, 1)
    assert report["upper_status"] == "certified", report
    assert report["blueberry_verified_to"] >= 4
    assert report["w_prime"] != report["x_prime"]

    try:
        sw.exact_sep("01", "01")
    except ValueError:
        pass
    else:
        raise AssertionError("equal words must be rejected")

    print("pysepwords smoke test ok")


if __name__ == "__main__":
    main()
