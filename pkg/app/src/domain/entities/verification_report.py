"""
Entidade VerificationReport - Domain Layer

Resultado de uma bateria de verificações: cada item tem nome, veredito e
um detalhe opcional. Itens "reportados" entram no relatório sem decidir o
veredito global.
"""

from dataclasses import dataclass, field
from typing import List


@dataclass(frozen=True)
class CheckResult:
    """Veredito de uma verificação individual."""

    name: str
    passed: bool
    detail: str = ""
    asserted: bool = True


@dataclass
class VerificationReport:
    """Coleção ordenada de verificações."""

    title: str
    checks: List[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "", asserted: bool = True) -> CheckResult:
        result = CheckResult(name, bool(passed), detail, asserted)
        self.checks.append(result)
        return result

    def extend(self, other: "VerificationReport", prefix: str = "") -> "VerificationReport":
        for check in other.checks:
            name = f"{prefix}{check.name}" if prefix else check.name
            self.checks.append(CheckResult(name, check.passed, check.detail, check.asserted))
        return self

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks if check.asserted)

    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if check.asserted and not check.passed]

    def summary(self) -> str:
        asserted = [check for check in self.checks if check.asserted]
        ok = sum(1 for check in asserted if check.passed)
        return f"{self.title}: {ok}/{len(asserted)} verificações aprovadas"
