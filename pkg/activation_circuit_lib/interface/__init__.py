from .json_serializable import IJsonSerializable, IJsonSerializableWithDefault

__all__ = [
  "IJsonSerializable",
  "IJsonSerializableWithDefault",
]
