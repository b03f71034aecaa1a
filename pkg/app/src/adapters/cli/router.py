"""
Roteador de linha de comando - Adapters Layer

Traduz argv em JobSpec. Cada tarefa é um subcomando com as mesmas opções;
as opções irrelevantes para uma tarefa são ignoradas por ela.
"""

import argparse
from typing import Sequence, Tuple

from src.application.dtos.job_dto import JobSpec, OutputFormat, Task


class CliRouter:
    """
    Roteador argparse para os jobs.

    Aplicando o princípio Single Responsibility Principle (SRP) -
    responsável apenas pela gramática da linha de comando.
    """

    def __init__(self, prog: str = "stable-basis"):
        self.parser = self._build(prog)

    @staticmethod
    def _common_options() -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--type", dest="type_label", required=True, help="Tipo de Cartan (A-G)")
        common.add_argument("--rank", type=int, required=True, help="Posto")
        common.add_argument("--chamber", default="e-", help="Câmara w+ ou w-")
        common.add_argument("--polarization", default="cotangent", help="tangent ou cotangent")
        common.add_argument("--alcove", default="e;0", help="Alcova 'x;μ'")
        common.add_argument("--target", default=None, help="Alcova vizinha de destino (wall)")
        common.add_argument("--cell", default="X", help="Células X ou Y (csm, mc)")
        common.add_argument("--suite", default="all", help="Bateria de verificação (verify)")
        common.add_argument("--pair", dest="pairs", action="append", default=[], help="Par 'u:w' (padic)")
        common.add_argument(
            "--format", dest="output_format", default=OutputFormat.JSON.value,
            choices=[f.value for f in OutputFormat], help="Formato de saída",
        )
        common.add_argument("--subs", dest="substitutions", action="append", default=[], help="Especialização 'nome=valor'")
        common.add_argument("--variable", default="q", help="Variável das classes motívicas: q ou y")
        common.add_argument("--long", action="store_true", help="Inclui as baterias longas")
        common.add_argument("--save", action="store_true", help="Grava o relatório também como artefato")
        common.add_argument("--output-dir", default=None, help="Diretório dos artefatos (implica --save)")
        common.add_argument(
            "--log-level", default=None, type=str.upper,
            choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], help="Nível de logging (stderr)",
        )
        return common

    def _build(self, prog: str) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog=prog, description="Bases estáveis de T*(G/B) em aritmética exata")
        subparsers = parser.add_subparsers(dest="task", required=True)
        common = self._common_options()
        for task in Task:
            subparsers.add_parser(task.value, parents=[common])
        return parser

    def parse(self, argv: Sequence[str]) -> Tuple[JobSpec, argparse.Namespace]:
        """
        Args:
            argv: Argumentos sem o nome do programa

        Returns:
            Tuple[JobSpec, Namespace]: Job validado e as opções de execução

        Raises:
            SystemExit: Com status 2 para erros de gramática (argparse)
            pydantic.ValidationError: Para valores fora do domínio
        """
        namespace = self.parser.parse_args(list(argv))
        job = JobSpec(
            type_label=namespace.type_label,
            rank=namespace.rank,
            task=Task(namespace.task),
            chamber=namespace.chamber,
            polarization=namespace.polarization,
            alcove=namespace.alcove,
            target=namespace.target,
            cell=namespace.cell,
            suite=namespace.suite,
            pairs=namespace.pairs,
            output_format=OutputFormat(namespace.output_format),
            substitutions=namespace.substitutions,
            variable=namespace.variable,
            long=namespace.long,
        )
        return job, namespace

    def parse_job(self, argv: Sequence[str]) -> JobSpec:
        return self.parse(argv)[0]

