from typing import List

from pydantic import BaseModel, Field

from src.application.dtos.job_dto import JobSpec


class MatrixDto(BaseModel):
    """Matriz de elementos do anel, já na forma textual canônica."""

    title: str = Field(..., description="Nome da matriz")
    ring: str = Field(..., description="Anel dos coeficientes")
    rows: List[str] = Field(..., description="Rótulos das linhas")
    cols: List[str] = Field(..., description="Rótulos das colunas")
    entries: List[List[str]] = Field(..., description="Entradas, linha a linha")

    class Config:
        json_schema_extra = {
            "example": {
                "title": "stab(e-, cotangent, e;0)",
                "ring": "k-theory",
                "rows": ["e", "s1"],
                "cols": ["e", "s1"],
                "entries": [["1 - q*e[-1]", "0"], ["q^{1/2} - q^{-1/2}", "1 - e[1]"]]
            }
        }


class TableDto(BaseModel):
    """Tabela de texto livre (expansões, fatoração e suavidade)."""

    title: str
    headers: List[str]
    rows: List[List[str]]


class CheckDto(BaseModel):
    name: str
    passed: bool
    asserted: bool = True
    detail: str = ""


class JobReportDto(BaseModel):
    """
    Resultado de um job.

    passed só considera verificações afirmadas; verificações reportadas
    aparecem em checks com asserted = False.
    """

    job: JobSpec
    root_system: str = Field(..., description="Rótulo do sistema de raízes, por exemplo A2")
    group_order: int = Field(..., description="|W|")
    matrices: List[MatrixDto] = Field(default_factory=list)
    tables: List[TableDto] = Field(default_factory=list)
    checks: List[CheckDto] = Field(default_factory=list)
    passed: bool = True

    @property
    def failures(self) -> List[CheckDto]:
        return [check for check in self.checks if check.asserted and not check.passed]
