import enum
import json
import typing

JSON_DUMP_KWARGS = {"indent": 2, "ensure_ascii": False}

class IJsonSerializable:
  def ToJson(self) -> typing.Union[dict, list]:
    raise NotImplementedError()

  def FromJson(self, j) -> None:
    raise NotImplementedError()

  def ToJsonText(self, **kwargs) -> str:
    dump_kwargs = dict(JSON_DUMP_KWARGS)
    dump_kwargs.update(kwargs)
    return json.dumps(self.ToJson(), **dump_kwargs)

  def SaveToJsonFile(self, file_path, **kwargs) -> None:
    with open(file_path, "w", encoding="utf-8", newline="\n") as f:
      f.write(self.ToJsonText(**kwargs))
      f.write("\n")

  def LoadFromJsonFile(self, file_path) -> None:
    with open(file_path, "r", encoding="utf-8") as f:
      j = json.load(f)
      self.FromJson(j)

class IJsonSerializableWithDefault(IJsonSerializable):
  """Records whose public attributes are plain json values."""

  def ToJson(self) -> typing.Union[dict, list]:
    return AutoObjectToJsonHandler(self)

  def FromJson(self, j) -> None:
    AutoObjectFromJsonHandler(self, j)

def ToJsonValue(item):
  if isinstance(item, IJsonSerializable):
    return item.ToJson()
  if isinstance(item, enum.Enum):
    return item.value
  if isinstance(item, (list, tuple)):
    return [ToJsonValue(x) for x in item]
  if isinstance(item, dict):
    return {str(k): ToJsonValue(v) for k, v in item.items()}
  return item

def AutoObjectToJsonHandler(obj):
  # attribute insertion order keeps the output key order stable
  name_value_dict = {}
  for prop_name, item in vars(obj).items():
    if prop_name.startswith("_"):
      continue
    item = ToJsonValue(item)
    try:
      json.dumps(item)
    except (TypeError, ValueError):
      continue
    name_value_dict[prop_name] = item
  return name_value_dict

def AutoObjectFromJsonHandler(obj, j):
  for key, value in j.items():
    if key.startswith("_"):
      continue
    setattr(obj, key, value)
