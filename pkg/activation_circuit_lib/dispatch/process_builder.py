"""Queue-fed worker processes and an order-preserving map over them."""
__all__ = [
  "ProcessQueue",
  "OneInOneOutProcessPool",
  "SplitListBySize",
  "OrderedProcessMap",
]

import functools
import multiprocessing

ProcessQueue = multiprocessing.Queue

def SplitListBySize(l, size):
  for i in range(0, len(l), size):
    yield l[i: i + size]

def OneInOneOutProcessWrapper(i: int, in_queue: multiprocessing.Queue, out_queue: multiprocessing.Queue, process_fn, init_obj_fn):
  obj = None
  if init_obj_fn is not None:
    obj = init_obj_fn(i=i)
  while True:
    item = in_queue.get()
    if item is None:
      break
    result = process_fn(item=item, i=i, obj=obj)
    out_queue.put(result)

class OneInOneOutProcessPool:
  def __init__(self, process_count, in_queue: multiprocessing.Queue, out_queue: multiprocessing.Queue, process_fn, init_obj_fn=None) -> None:
    self.__in_queue = in_queue
    self.__processes = []
    self.__process_count = process_count
    self.__active = True

    for i in range(self.__process_count):
      p = multiprocessing.Process(target=OneInOneOutProcessWrapper, kwargs={
        "i": i, "in_queue": in_queue, "out_queue": out_queue, "process_fn": process_fn, "init_obj_fn": init_obj_fn})
      p.start()
      self.__processes.append(p)

  def JoinProcesses(self):
    if not self.__active:
      raise ValueError("try to join an inactive OneInOneOutProcessPool")
    self.__active = False
    for i in range(self.__process_count):
      self.__in_queue.put(None)

    for i in range(self.__process_count):
      self.__processes[i].join()

def _IndexedProcess(item, i, obj, process_fn):
  index, payload = item
  return index, process_fn(item=payload, i=i, obj=obj)

def OrderedProcessMap(process_fn, items, worker_count=1, init_obj_fn=None):
  """Applies process_fn(item=, i=, obj=) to every item; results keep input order."""
  items = list(items)
  if worker_count <= 1 or len(items) <= 1:
    obj = init_obj_fn(i=0) if init_obj_fn is not None else None
    return [process_fn(item=item, i=0, obj=obj) for item in items]

  in_queue = ProcessQueue()
  out_queue = ProcessQueue()
  pool = OneInOneOutProcessPool(min(worker_count, len(items)), in_queue, out_queue,
                                functools.partial(_IndexedProcess, process_fn=process_fn), init_obj_fn)
  for index, item in enumerate(items):
    in_queue.put((index, item))
  results = [out_queue.get() for _ in items]
  pool.JoinProcesses()
  results.sort(key=lambda pair: pair[0])
  return [result for _, result in results]
