# Application DTOs
from .job_dto import JobSpec, OutputFormat, Task
from .report_dto import CheckDto, JobReportDto, MatrixDto, TableDto

__all__ = [
    # Job DTOs
    "JobSpec",
    "OutputFormat",
    "Task",
    # Report DTOs
    "CheckDto",
    "JobReportDto",
    "MatrixDto",
    "TableDto",
]
