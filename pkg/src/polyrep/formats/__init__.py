"""Document formats: H-representations, P-representations and CSV grid scans."""
from polyrep.formats.grid import grid_eval_csv, grid_rows
from polyrep.formats.hrep import HRepDocument, emit_hrep, load_hrep, parse_hrep
from polyrep.formats.prep_document import FORMATS, emit_prep, parse_prep, prep_to_dict

__all__ = [
    'HRepDocument',
    'parse_hrep',
    'load_hrep',
    'emit_hrep',
    'FORMATS',
    'emit_prep',
    'parse_prep',
    'prep_to_dict',
    'grid_rows',
    'grid_eval_csv',
]
