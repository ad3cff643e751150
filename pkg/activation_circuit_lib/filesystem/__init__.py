from .filesystem_help_tools import CreateNeededFolderGivenPath, GetOutputDir, ResolveOutputPath
