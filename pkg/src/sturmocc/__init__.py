"""Characteristic Sturmian words and where their palindromes occur."""

from .errors import (
    IndexOutOfRange,
    InsufficientPrefix,
    InvalidSlope,
    InvalidWord,
    KOutOfRange,
    NotAFactor,
    NotAPalindrome,
    NotAPrefix,
    NotASuffix,
    SturmError,
    UnsupportedSlope,
)
from .occurrences import (
    Decomposition,
    OccurrenceReport,
    OccurrenceSequence,
    ReturnWords,
    closed_sequence,
    conjugate_occurrences,
    decompose,
    derived_labels,
    derived_word,
    locate,
    overlap_factors,
    palindrome_occurrences,
    render_decomposition,
    return_words,
    singular_v_occurrences,
    singular_w_occurrences,
    substitution_views,
)
from .palindromes import (
    FORM_U,
    FORM_UBAR,
    POWER_A,
    StructuralForm,
    band_form,
    classify,
    enumerate_palindromic_factors,
    is_palindromic_factor,
    reconstruct,
)
from .slope import Slope, parse_slope
from .standard import SingularIndex, U, Ubar, c_prefix, singular, standard_word, v, w

__version__ = "0.1.0"
