# CLI Presenters
from .csv_presenter import CsvPresenter
from .json_presenter import JsonPresenter
from .latex_presenter import LatexPresenter

__all__ = [
    "CsvPresenter",
    "JsonPresenter",
    "LatexPresenter",
]
