import types

from collections import OrderedDict
from typing import Any, Optional

import pyhocon


_config_factory = pyhocon.ConfigFactory()


def obj_to_dict(obj: Any) -> dict[str, Any]:
    """Turns a settings tree (module attributes and nested classes) into nested dictionaries."""

    d = {}
    for k, v in obj.__dict__.items():
        if k.startswith('_') or isinstance(v, (types.ModuleType, types.FunctionType)):
            continue

        if isinstance(v, type):
            v = obj_to_dict(v)
        elif isinstance(v, tuple):
            v = list(v)

        d[k] = v

    return d


def update_obj_from_dict(obj: Any, d: OrderedDict) -> None:
    for k, v in d.items():
        ov = getattr(obj, k, None)
        if isinstance(ov, type):
            update_obj_from_dict(ov, v)
        elif isinstance(ov, (types.ModuleType, types.FunctionType)):
            continue
        else:
            setattr(obj, k, v)


def config_from_file(file: str) -> pyhocon.ConfigTree:
    return _config_factory.parse_file(file)


def config_from_str(s: str) -> pyhocon.ConfigTree:
    return _config_factory.parse_string(s)


def config_from_dict(d: dict[str, Any]) -> pyhocon.ConfigTree:
    return _config_factory.from_dict(d)


def config_to_dict(config: pyhocon.ConfigTree) -> OrderedDict:
    return config.as_plain_ordered_dict()


def config_merge(config1: pyhocon.ConfigTree, config2: pyhocon.ConfigTree) -> pyhocon.ConfigTree:
    return pyhocon.ConfigTree.merge_configs(config1, config2)


def apply_config(obj: Any, parsed: Optional[pyhocon.ConfigTree]) -> None:
    """Merges `parsed` over the current values of the settings tree `obj` and writes the result back."""

    config = config_from_dict(obj_to_dict(obj))
    if parsed:
        config = config_merge(config, parsed)

    update_obj_from_dict(obj, config_to_dict(config))
