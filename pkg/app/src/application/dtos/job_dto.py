import re
import shlex
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, validator


_SUBSTITUTION = re.compile(r"^[a-z][a-z0-9]*=-?\d+(/\d+)?$")
_PAIR = re.compile(r"^[^:]+:[^:]+$")


class Task(str, Enum):
    """Tarefas da linha de comando."""
    STAB_K = "stab-k"
    STAB_COH = "stab-coh"
    ROOTPOLY = "rootpoly"
    CSM = "csm"
    MC = "mc"
    PADIC = "padic"
    WALL = "wall"
    VERIFY = "verify"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    LATEX = "latex"


class JobSpec(BaseModel):
    """
    Descrição completa de um job.

    Os parâmetros de tarefa ficam como texto (câmara "w+"/"w-", alcova "x;μ",
    palavras "s1.s2") e só são interpretados quando o grupo de Weyl existe.
    """

    type_label: str = Field(..., description="Tipo de Cartan (A, B, C, D, E, F, G)")
    rank: int = Field(..., ge=1, description="Posto do sistema de raízes")
    task: Task = Field(..., description="Tarefa a executar")
    chamber: str = Field("e-", description="Câmara w+ ou w- (w·𝔠±)")
    polarization: str = Field("cotangent", description="tangent ou cotangent")
    alcove: str = Field("e;0", description="Alcova 'x;μ'")
    target: Optional[str] = Field(None, description="Alcova adjacente de destino do cruzamento de parede")
    cell: str = Field("X", description="Família de células de Schubert: X ou Y")
    suite: str = Field("all", description="Bateria de verificação")
    pairs: List[str] = Field(default_factory=list, description="Pares 'u:w' para a tabela de fatoração")
    output_format: OutputFormat = Field(OutputFormat.JSON, description="Formato de saída")
    substitutions: List[str] = Field(default_factory=list, description="Especializações 'nome=valor'")
    variable: str = Field("q", description="Variável das classes motívicas: q ou y")
    long: bool = Field(False, description="Inclui as baterias longas")

    @validator('type_label')
    def validate_type_label(cls, v):
        v = v.strip().upper()
        if v not in ("A", "B", "C", "D", "E", "F", "G"):
            raise ValueError('Tipo de Cartan deve ser uma letra de A a G')
        return v

    @validator('cell')
    def validate_cell(cls, v):
        v = v.strip().upper()
        if v not in ("X", "Y"):
            raise ValueError('Célula deve ser X ou Y')
        return v

    @validator('variable')
    def validate_variable(cls, v):
        v = v.strip().lower()
        if v not in ("q", "y"):
            raise ValueError('Variável deve ser q ou y')
        return v

    @validator('chamber')
    def validate_chamber(cls, v):
        v = v.strip().replace("−", "-")
        if not v or v[-1] not in "+-":
            raise ValueError("Câmara deve terminar em '+' ou '-'")
        return v

    @validator('substitutions', each_item=True)
    def validate_substitution(cls, v):
        v = v.replace(" ", "")
        if not _SUBSTITUTION.match(v):
            raise ValueError(f"Substituição inválida: {v}")
        return v

    @validator('pairs', each_item=True)
    def validate_pair(cls, v):
        v = v.replace(" ", "")
        if not _PAIR.match(v):
            raise ValueError(f"Par inválido: {v}")
        return v

    def to_cli_args(self) -> List[str]:
        """Argumentos de linha de comando que reproduzem este job."""
        args = [
            self.task.value,
            "--type", self.type_label,
            "--rank", str(self.rank),
            "--chamber", self.chamber,
            "--polarization", self.polarization,
            "--alcove", self.alcove,
            "--cell", self.cell,
            "--suite", self.suite,
            "--format", self.output_format.value,
            "--variable", self.variable,
        ]
        if self.target is not None:
            args += ["--target", self.target]
        for pair in self.pairs:
            args += ["--pair", pair]
        for substitution in self.substitutions:
            args += ["--subs", substitution]
        if self.long:
            args.append("--long")
        return args

    def to_text(self) -> str:
        return shlex.join(self.to_cli_args())

    class Config:
        json_schema_extra = {
            "example": {
                "type_label": "A",
                "rank": 2,
                "task": "stab-k",
                "chamber": "e-",
                "polarization": "cotangent",
                "alcove": "e;0",
                "output_format": "json"
            }
        }
