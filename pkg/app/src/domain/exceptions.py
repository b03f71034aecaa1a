"""
Exceções customizadas do domínio.

Aplicando o princípio Single Responsibility Principle (SRP) -
cada exceção tem uma responsabilidade específica.
"""


class DomainError(Exception):
    """Exceção base para erros de domínio."""
    pass


class ValidationError(DomainError):
    """Exceção para erros de validação de dados."""

    def __init__(self, message: str, field: str = None):
        self.message = message
        self.field = field
        super().__init__(message)


class NotFoundError(DomainError):
    """Exceção para recursos não encontrados."""

    def __init__(self, resource: str, identifier: str = None):
        if identifier:
            message = f"{resource} com identificador '{identifier}' não foi encontrado"
        else:
            message = f"{resource} não foi encontrado"
        super().__init__(message)


class BusinessRuleError(DomainError):
    """Exceção para violações de regras matemáticas do domínio."""

    def __init__(self, message: str, rule: str = None):
        self.message = message
        self.rule = rule
        super().__init__(message)


class PreconditionError(DomainError):
    """Exceção para precondições não atendidas."""

    def __init__(self, message: str, precondition: str = None):
        self.message = message
        self.precondition = precondition
        super().__init__(message)


# Exceções específicas do domínio
class InvalidRootSystemError(ValidationError):
    """Exceção para pares (tipo, posto) que não formam um sistema de raízes finito simples."""

    def __init__(self, type_label: str, rank: int):
        super().__init__(
            f"Sistema de raízes inválido: tipo '{type_label}' com posto {rank}",
            field="type_label"
        )


class ParseError(ValidationError):
    """Exceção para textos que não seguem a gramática esperada."""

    def __init__(self, text: str, expected: str):
        self.text = text
        super().__init__(f"Não foi possível interpretar '{text}' como {expected}", field=expected)


class WallPointError(ValidationError):
    """Exceção para pontos sobre uma parede H_{α^∨,n}."""

    def __init__(self, point):
        super().__init__(f"O ponto {point} está sobre uma parede do arranjo afim", field="point")


class NonReducedWordError(ValidationError):
    """Exceção para palavras que não são reduzidas."""

    def __init__(self, word):
        super().__init__(f"A palavra {tuple(word)} não é reduzida", field="word")


class UnsupportedPolarizationError(ValidationError):
    """Exceção para polarizações diferentes de TB e T*B."""

    def __init__(self, polarization: str):
        super().__init__(f"Polarização não suportada: '{polarization}'", field="polarization")


class NotBruhatComparableError(PreconditionError):
    """Exceção para pares (u, w) com u não menor ou igual a w na ordem de Bruhat."""

    def __init__(self, u: str, w: str):
        super().__init__(f"{u} não é ≤ {w} na ordem de Bruhat", precondition="u <= w")


class NotAdjacentAlcovesError(PreconditionError):
    """Exceção para alcovas que não compartilham uma parede em hiperplano por zero."""

    def __init__(self, message: str):
        super().__init__(message, precondition="alcovas adjacentes por H_{α^∨,0}")


class DegreeUndefinedError(PreconditionError):
    """Exceção para o politopo de Newton do elemento zero."""

    def __init__(self):
        super().__init__("O grau de zero não está definido", precondition="f != 0")


class ConsistencyError(BusinessRuleError):
    """Exceção para discordância entre duas rotas de cálculo independentes."""

    def __init__(self, message: str, rule: str = None):
        super().__init__(message, rule or "consistência interna")
