"""Tower diagrams, the sliding-and-recording algorithm and reduced words of permutations."""

from .core import (
    CapExceededError,
    Cell,
    InvariantError,
    ParseError,
    TowerDiagram,
    TowerTableau,
    Word,
    as_word,
    contains,
    diagram_from_heights,
)
from .enumeration import count_stt, enumerate_stt, reduced_words, shape_of
from .flight import corner_cells, flight_number, flight_path, remove_corner
from .natural import is_natural_word, natural_labelling, natural_word
from .perm import (
    Permutation,
    coxeter_length,
    inverse,
    is_reduced_oracle,
    reduced_words_oracle,
    word_to_permutation,
)
from .read import is_standard, read
from .rothe import (
    complete_tableau,
    rothe_diagram,
    rothe_right_action,
    rothify,
    tower_from_rothe,
    virtual_diagram,
)
from .slide import is_reduced_by_sliding, recording_tableau, slide, sr_algorithm

__version__ = "0.1.0"
