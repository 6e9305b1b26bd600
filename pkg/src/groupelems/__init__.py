from src.groupelems.elements import (
    construct_e,
    construct_f,
    construct_g,
    cumulative_terms,
    e_element,
    f_roots,
    f_square_element,
    g_element,
    reduced_e,
    reduced_e_element,
)
from src.groupelems.involutions import (
    CensusReport,
    InvolutionClassLabel,
    SurveyCase,
    SurveyReport,
    a7_involution_survey,
    involution_class,
    recognise_root_element,
    root_conjugation_map,
    torus_involution_census,
)
from src.groupelems.words import (
    GeneratorToken,
    GroupWord,
    TokenKind,
    evaluate,
    h_gen,
    h_word_image,
    w_gen,
    word,
    x_gen,
)

__all__ = [
    "CensusReport",
    "GeneratorToken",
    "GroupWord",
    "InvolutionClassLabel",
    "SurveyCase",
    "SurveyReport",
    "TokenKind",
    "a7_involution_survey",
    "construct_e",
    "construct_f",
    "construct_g",
    "cumulative_terms",
    "e_element",
    "evaluate",
    "f_roots",
    "f_square_element",
    "g_element",
    "h_gen",
    "h_word_image",
    "involution_class",
    "recognise_root_element",
    "reduced_e",
    "reduced_e_element",
    "root_conjugation_map",
    "torus_involution_census",
    "w_gen",
    "word",
    "x_gen",
]
