"""Turn an experiment's config dataclass into command-line flags (``--field value``)."""

import argparse
import dataclasses
import json


def parse_config(cls, argv=None, description=None):
    ap = argparse.ArgumentParser(description=description or cls.__doc__)
    for f in dataclasses.fields(cls):
        default = f.default if f.default is not dataclasses.MISSING else f.default_factory()
        flag = "--" + f.name.replace("_", "-")
        if isinstance(default, bool):
            ap.add_argument(flag, action=argparse.BooleanOptionalAction, default=default)
        elif isinstance(default, (list, tuple)):
            ap.add_argument(flag, type=json.loads, default=default, help=f"JSON list (default {list(default)})")
        elif isinstance(default, dict):
            ap.add_argument(flag, type=json.loads, default=default, help="JSON object")
        else:
            ap.add_argument(flag, type=type(default) if default is not None else str, default=default)
    return cls(**vars(ap.parse_args(argv)))


def dump(obj, path):
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w") as f:
            f.write(text)
    return text
