from .process_builder import OrderedProcessMap, SplitListBySize
