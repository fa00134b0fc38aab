from strataforge._core import (
    Fixture,
    MalformedError,
    ResourceError,
    UnsupportedError,
    VerifyError,
    covers,
    ext_quiver,
    load_fixture,
    parse_fixture,
    present,
    run_command,
)

__all__ = [
    "Fixture",
    "MalformedError",
    "ResourceError",
    "UnsupportedError",
    "VerifyError",
    "covers",
    "ext_quiver",
    "load_fixture",
    "parse_fixture",
    "present",
    "run_command",
]
