"""Dual dimers on the torus, their tropical fans, Kasteleyn determinants and mutations."""

from ._tropdimer import (
    Dimer,
    DomainError,
    ParseError,
    catalog_names,
    compare_up_to_unimodular,
    del_pezzo_names,
    diagram_status,
    exchange,
    genus,
    inner_torus,
    outer_torus,
    run_cli,
    same_curve,
    section_examples,
    seed_dimer,
    seed_directions,
    x3333_classes,
)

__all__ = [
    "Dimer",
    "DomainError",
    "ParseError",
    "catalog_names",
    "compare_up_to_unimodular",
    "del_pezzo_names",
    "diagram_status",
    "exchange",
    "genus",
    "inner_torus",
    "outer_torus",
    "run_cli",
    "same_curve",
    "section_examples",
    "seed_dimer",
    "seed_directions",
    "x3333_classes",
]
