from typing import Dict, List, Optional

from ..errors import UsageError
from .catalog import IdentityCase


class CaseStorage:
    def __init__(self):
        # In-memory catalog keyed by case id, kept in registration order
        self.cases: Dict[str, IdentityCase] = {}

    def add_case(self, case: IdentityCase) -> IdentityCase:
        """Register a case; ids are unique"""
        if case.id in self.cases:
            raise ValueError(f"duplicate case id {case.id}")
        self.cases[case.id] = case
        return case

    def get_case(self, id: str) -> Optional[IdentityCase]:
        """Get case by ID"""
        return self.cases.get(id)

    def require_case(self, id: str) -> IdentityCase:
        case = self.cases.get(id)
        if case is None:
            raise UsageError(f"unknown case id '{id}' (valid: {', '.join(self.cases)})")
        return case

    def get_cases(self) -> List[IdentityCase]:
        """Get all cases in catalog order"""
        return list(self.cases.values())

    def is_empty(self) -> bool:
        return not self.cases

    def clear(self) -> None:
        self.cases.clear()


# Create a single instance of the catalog
catalog = CaseStorage()
