import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Sequence

from tqdm import tqdm

from dlmkit.verify.cache import SweepTracker

logger = logging.getLogger(__name__)

# below this many items the pool runs in-process
INLINE_THRESHOLD = 64


class WorkerPool:
    """
    Runs independent per-graph work items over a process pool.

    Results come back in input order, so merged reports do not depend on scheduling.
    """

    def __init__(self, workers: int = 1, show_progress: bool = False):
        self.workers = max(1, workers)
        self.show_progress = show_progress
        self.is_processing = False
        self.completed = 0
        self.submitted = 0

    def map(
        self,
        func: Callable[..., Any],
        items: Sequence[Any],
        *args: Any,
        desc: str = "graphs",
        tracker: Optional[SweepTracker] = None,
        tracking_id: Optional[str] = None,
    ) -> List[Any]:
        """
        Apply ``func(item, *args)`` to every item.

        Args:
            func: A picklable top-level function
            items: Work items
            *args: Extra positional arguments passed to every call
            desc: Progress bar label
            tracker: Optional tracker whose entry ``tracking_id`` follows the run
            tracking_id: Tracker entry to update
        """
        self.is_processing = True
        self.submitted += len(items)
        if tracker and tracking_id:
            tracker.update_status(tracking_id, "processing")
        start = time.monotonic()
        try:
            if self.workers == 1 or len(items) < INLINE_THRESHOLD:
                results = [func(item, *args) for item in tqdm(items, desc=desc, disable=not self.show_progress)]
            else:
                chunksize = max(1, len(items) // (self.workers * 16))
                with ProcessPoolExecutor(max_workers=self.workers) as executor:
                    mapped = executor.map(func, items, *[[a] * len(items) for a in args], chunksize=chunksize)
                    results = list(tqdm(mapped, total=len(items), desc=desc, disable=not self.show_progress))
        except Exception as e:
            logger.error(f"Worker pool failed on {desc}: {str(e)}")
            if tracker and tracking_id:
                tracker.update_status(tracking_id, "failed", str(e))
            raise
        finally:
            self.is_processing = False

        self.completed += len(results)
        if tracker and tracking_id:
            tracker.update_status(tracking_id, "completed")
        logger.info(f"Processed {len(results)} {desc} with {self.workers} worker(s) in {time.monotonic() - start:.2f}s")
        return results

    def get_pool_stats(self) -> Dict[str, Any]:
        return {
            "workers": self.workers,
            "submitted": self.submitted,
            "completed": self.completed,
            "is_processing": self.is_processing,
        }
