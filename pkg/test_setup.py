#!/usr/bin/env python3
"""
Test script to verify the trlearn setup, plus the small runner the other
test scripts use when run directly
"""

import sys
import traceback
from pathlib import Path

CORPORA = Path(__file__).parent / "corpora"


def run_tests(title: str, namespace: dict) -> int:
    """Run every ``test_*`` function in ``namespace`` and print a summary"""
    print(f"🧪 {title}\n")
    tests = [
        (name, func)
        for name, func in namespace.items()
        if name.startswith("test_") and callable(func)
    ]

    results = []
    for test_name, test_func in tests:
        try:
            test_func()
            results.append((test_name, True))
        except Exception as e:
            print(f"❌ {test_name} failed: {e!r}")
            traceback.print_exc()
            results.append((test_name, False))

    print("\n" + "=" * 50)
    print("📊 Test Results Summary:")
    print("=" * 50)

    all_passed = True
    for test_name, passed in results:
        status = "✅ PASS" if passed else "❌ FAIL"
        print(f"{status} - {test_name}")
        if not passed:
            all_passed = False

    print("=" * 50)
    print("🎉 All tests passed!" if all_passed else "⚠️  Some tests failed.")
    return 0 if all_passed else 1


def test_python_version():
    """Python must be 3.12 or higher"""
    version = sys.version_info
    assert (version.major, version.minor) >= (3, 12), (
        f"Python {version.major}.{version.minor} - need 3.12+"
    )


def test_dependencies():
    """Required modules import"""
    for module in ("dotenv", "trlearn"):
        __import__(module)


def test_config_defaults():
    from trlearn.config import Config

    config = Config()
    assert config.validate_config()
    assert config.direction in ("l1l2", "l2l1")
    assert config.max_passes >= 1


def test_config_rejects_bad_values():
    from trlearn.config import Config

    for kwargs, needle in (
        ({"direction": "l1l3"}, "direction"),
        ({"mode": "some"}, "mode"),
        ({"max_passes": 0}, "max_passes"),
    ):
        try:
            Config(**kwargs).validate_config()
        except ValueError as e:
            assert needle in str(e)
        else:
            raise AssertionError(f"{kwargs} accepted")

    try:
        Config(corpus_path="/nonexistent/corpus.tsv").validate_config(require_corpus=True)
    except ValueError as e:
        assert "corpus file not found" in str(e)
    else:
        raise AssertionError("missing corpus accepted")


def test_message_templates():
    from trlearn.message_loader import MessageLoader

    loader = MessageLoader()
    banner = loader.get_repl_welcome(5, "rules.trl", "l1l2", "first", False)
    assert "5 rules" in banner and "rules.trl" in banner
    assert ":quit" in loader.get_repl_help()
    assert "trlearn learn" in loader.get_epilog()
    assert loader._load_template("missing.txt") == "[Template missing.txt not found]"


def test_fixture_corpora():
    from trlearn.corpus import load_corpus

    sizes = {
        "example1.tsv": 2,
        "example2.tsv": 4,
        "example3.tsv": 3,
        "it_is_a.tsv": 2,
        "give_past.tsv": 2,
        "to_mary.tsv": 2,
    }
    for name, size in sizes.items():
        assert len(load_corpus(CORPORA / name)) == size, name


if __name__ == "__main__":
    sys.exit(run_tests("trlearn - Setup Test", dict(globals())))
