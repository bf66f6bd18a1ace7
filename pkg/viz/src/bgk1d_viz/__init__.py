"""Figure generation from bgk1d solver CSV outputs.

Never recomputes physics: every plotted number comes straight from a file,
and a checksum of the parsed values is printed so figures are auditable
against solver output.
"""

__version__ = "0.1.0"

from .readers import read_conservation, read_moments, read_snapshot
from .plots import plot_conservation, plot_moments, plot_pdf_heatmap
