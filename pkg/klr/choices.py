from django.db import models


class VertexClass(models.TextChoices):
    """
    The split I = I+ u I0 u I- of the vertices by the diagonal of the Cartan matrix.

    Attributes:
        PLUS (VertexClass): a_ii = 2, a vertex without loops.
        ZERO (VertexClass): a_ii = 0, a vertex with exactly one loop.
        MINUS (VertexClass): a_ii < 0, a vertex with two or more loops.
    """

    PLUS = "plus", "I+"
    ZERO = "zero", "I0"
    MINUS = "minus", "I-"


class GeneratorKind(models.TextChoices):
    """
    Generators of a KLR algebra as written in the word syntax.

    Attributes:
        IDEMPOTENT (GeneratorKind): e(i1,...,in).
        DOT (GeneratorKind): x(k).
        CROSSING (GeneratorKind): t(k).
    """

    IDEMPOTENT = "e", "Idempotent"
    DOT = "x", "Dot"
    CROSSING = "t", "Crossing"


class OutputFormat(models.TextChoices):
    JSON = "json", "JSON"
    CSV = "csv", "CSV"


class DimensionMethod(models.TextChoices):
    """
    How a graded dimension of an idempotent truncation is computed.

    Attributes:
        DIRECT (DimensionMethod): Rank per degree of the span over the central symmetric
            polynomials.
        COINVARIANT (DimensionMethod): Rank of the coinvariant quotient times the dimension
            of the center.
    """

    DIRECT = "direct", "Direct"
    COINVARIANT = "coinvariant", "Coinvariant"
