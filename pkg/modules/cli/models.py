from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class CommandOutput:
    """What a subcommand produced: headline values, an optional table, and the exit status.

    ``document`` holds serialized model sections that only the JSON rendering carries.
    """
    command: str
    summary: Dict[str, Any] = field(default_factory=dict)
    rows: List[Dict[str, Any]] = field(default_factory=list)
    document: Dict[str, Any] = field(default_factory=dict)
    exit_code: int = 0
    message: str = ""
