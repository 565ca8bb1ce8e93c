"""Maximal Thurston-Bennequin numbers of +adequate links via Mondrian fronts."""

from .diagram import (
    LinkDiagram,
    PDError,
    is_plus_adequate,
    mirror,
    nesting_forest,
    parse_pd,
    predicted_tb,
    s_plus,
    seifert_circles,
    writhe,
)
from .front import FrontDiagram, front_of_diagram, tb
from .kauffman import dubrovnik, kauffman_bound
from .mondrian import iterated_mondrian, mondrian_for_graph
from .pipeline import run_pipeline
from .poly import LaurentPoly2
from .ruling import enumerate_rulings, verify_ruling

__version__ = "0.1.0"

__all__ = [
    "LinkDiagram",
    "PDError",
    "LaurentPoly2",
    "parse_pd",
    "writhe",
    "mirror",
    "s_plus",
    "seifert_circles",
    "is_plus_adequate",
    "nesting_forest",
    "predicted_tb",
    "dubrovnik",
    "kauffman_bound",
    "mondrian_for_graph",
    "iterated_mondrian",
    "FrontDiagram",
    "front_of_diagram",
    "tb",
    "verify_ruling",
    "enumerate_rulings",
    "run_pipeline",
]
