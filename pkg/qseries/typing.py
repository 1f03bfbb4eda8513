from typing import Any


GenericJSONDict = dict[str, Any]
GenericJSONList = list[dict[str, Any]]

ParamStrings = dict[str, str]
