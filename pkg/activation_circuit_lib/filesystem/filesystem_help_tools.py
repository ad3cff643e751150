import os

__all__ = [
  "OUTPUT_DIR_ENV",
  "CreateNeededFolderGivenPath",
  "GetOutputDir",
  "ResolveOutputPath",
]

OUTPUT_DIR_ENV = "ACTIVATION_CIRCUIT_OUTPUT_DIR"

def CreateNeededFolderGivenPath(path):
  parent_folder = os.path.dirname(path)
  if parent_folder and not os.path.exists(parent_folder):
    os.makedirs(parent_folder, exist_ok=True)

def GetOutputDir():
  return os.environ.get(OUTPUT_DIR_ENV) or None

def ResolveOutputPath(path):
  """Relative paths land in $ACTIVATION_CIRCUIT_OUTPUT_DIR when it is set."""
  if path is None or path == "-":
    return None
  output_dir = GetOutputDir()
  if output_dir and not os.path.isabs(path):
    path = os.path.join(output_dir, path)
  CreateNeededFolderGivenPath(path)
  return path
