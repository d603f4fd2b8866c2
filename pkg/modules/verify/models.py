from typing import Dict, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from models.forms import QuadForm
from models.series import IntSeries


def parse_terms(text: str) -> Dict[int, int]:
    """'1:1 2:-1 6:1' -> {1: 1, 2: -1, 6: 1}."""
    terms = {}
    for token in str(text).split():
        n, _, coef = token.partition(':')
        terms[int(n)] = int(coef)
    return terms


def format_terms(terms: Dict[int, int]) -> str:
    return " ".join(f"{n}:{c}" for n, c in sorted(terms.items()) if c)


class _Row(BaseModel):
    model_config = ConfigDict(extra='forbid', arbitrary_types_allowed=True)

    D: int = Field(gt=0)


def _form(value):
    return QuadForm.parse(value) if isinstance(value, str) else value


def _terms(value):
    return parse_terms(value) if isinstance(value, str) else value


class SchoenebergRow(_Row):
    s_form: QuadForm
    r_form: QuadForm

    @field_validator('s_form', 'r_form', mode='before')
    @classmethod
    def parse_forms(cls, value):
        return _form(value)


class ClassOneRow(_Row):
    form: QuadForm
    w: int = Field(ge=2)

    @field_validator('form', mode='before')
    @classmethod
    def parse_form(cls, value):
        return _form(value)


class ClassThreeRow(_Row):
    Q0: QuadForm
    Q1: QuadForm
    order: int = Field(ge=1)
    series: Dict[int, int]

    @field_validator('Q0', 'Q1', mode='before')
    @classmethod
    def parse_forms(cls, value):
        return _form(value)

    @field_validator('series', mode='before')
    @classmethod
    def parse_series(cls, value):
        return _terms(value)

    def expansion(self) -> IntSeries:
        return IntSeries.from_terms(self.order, self.series)


class ClassFiveRow(_Row):
    Q0: QuadForm
    Q1: QuadForm
    Q2: QuadForm
    order1: int = Field(ge=1)
    series1: Dict[int, int]
    order2: int = Field(ge=1)
    series2: Dict[int, int]

    @field_validator('Q0', 'Q1', 'Q2', mode='before')
    @classmethod
    def parse_forms(cls, value):
        return _form(value)

    @field_validator('series1', 'series2', mode='before')
    @classmethod
    def parse_series(cls, value):
        return _terms(value)

    def expansion(self, r: int) -> IntSeries:
        if r == 1:
            return IntSeries.from_terms(self.order1, self.series1)
        return IntSeries.from_terms(self.order2, self.series2)


class ErratumRow(BaseModel):
    model_config = ConfigDict(extra='forbid')

    table: str
    D: int = Field(gt=0)
    field: str
    n: Optional[int] = None
    printed: str
    corrected: str
    note: str = ""

    @field_validator('n', mode='before')
    @classmethod
    def blank_n(cls, value):
        return None if value in ('', None) else value
