"""
Utility functions shared by the flagstab engines.
"""
import json
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Sequence, TypeVar

from tqdm import tqdm

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def parallel_map(func: Callable[[T], R], items: Sequence[T], threads: int = 1,
                 desc: str = None, progress: bool = False) -> List[R]:
    """
    Apply func to every item, optionally on a thread pool.

    Results always come back in the order of items, whatever the thread count.

    Args:
        func: function of one item
        items: inputs
        threads: worker count; 1 runs inline
        desc: progress bar label
        progress: show a tqdm bar on stderr
    """
    if threads <= 1 or len(items) < 2:
        return [func(item) for item in tqdm(items, desc=desc, disable=not progress, leave=False)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(tqdm(pool.map(func, items), total=len(items), desc=desc,
                         disable=not progress, leave=False))


def load_json_file(file_path: str) -> Dict[str, Any]:
    """Load data from a JSON file."""
    with open(file_path, 'r', encoding='utf-8') as f:
        return json.load(f)


def save_json_file(file_path: str, data: Dict[str, Any]) -> bool:
    """Save data to a JSON file, creating the directory if needed."""
    try:
        directory = os.path.dirname(file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(file_path, 'w', encoding='utf-8') as f:
            json.dump(data, f, indent=2)
        return True
    except OSError as e:
        logger.error(f"Error saving JSON file '{file_path}': {e}")
        return False
