import os
import sys as system
from pathlib import Path
from typing import (
    Iterable,
    Mapping,
)
