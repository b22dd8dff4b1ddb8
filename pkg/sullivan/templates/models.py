"""Line templates of the model-file and reference-table formats."""

__all__ = [
    'differential_line', 'generator_line', 'model_header', 'reference_header', 'reference_row'
]

model_header: str = "# model: {name}"

generator_line: str = "generator {name} {degree:d}"

differential_line: str = "d {name} = {expression}"

reference_header: str = """# Degree sequences of elliptic models with formal dimension {fd:d}.
# One row per line: fd=<k>: (even degrees) | (odd degrees), degrees ascending."""

reference_row: str = "fd={fd:d}: {even} | {odd}"
