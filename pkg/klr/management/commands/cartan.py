from klr.bases import ReportCommand
from klr.choices import VertexClass


class Command(ReportCommand):
    """
    Prints the Cartan matrix of a quiver with loops and the split of its vertices.

    Methods:
        - compute(self, quiver, options): One row per vertex with its matrix row and class.
    """

    help = "Prints the Cartan matrix a_ij = 2 delta_ij - (arrows i-j) - 2 (loops at i) and I+/I0/I-"
    report_name = "cartan"

    def compute(self, quiver, options: dict) -> list[dict]:
        cartan = quiver.cartan()
        return [
            {
                "vertex": vertex,
                "loops": quiver.loop_count(vertex),
                "row": list(row),
                "class": VertexClass(cartan.vertex_class(vertex)).label,
            }
            for vertex, row in zip(cartan.vertices, cartan.matrix)
        ]
