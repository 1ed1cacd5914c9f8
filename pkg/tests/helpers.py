"""Shared cached constructors so the suite builds each heavy object once."""

from functools import lru_cache

import carterlink as cl

# The 18 diagrams with tabulated matrices, in table order.
CATALOG = [
    "D4(a1)", "D5(a1)", "E6(a1)", "E6(a2)", "D6(a1)", "D6(a2)",
    "E7(a1)", "E7(a2)", "E7(a3)", "E7(a4)", "D7(a1)", "D7(a2)",
    "D4", "D5", "E6", "D6", "E7", "D7",
]

C4_CATALOG = CATALOG[:12]
DYNKIN_CATALOG = CATALOG[12:]


@lru_cache(maxsize=None)
def pc_of(name: str) -> cl.PartialCartan:
    return cl.build_partial_cartan(cl.catalog(name))


@lru_cache(maxsize=None)
def system_of(name: str) -> cl.LinkageSystem:
    return cl.build_system(pc_of(name))


@lru_cache(maxsize=None)
def links_of(name: str):
    return cl.enumerate_linkages(pc_of(name))


@lru_cache(maxsize=None)
def ambient(name: str) -> cl.RootSystem:
    return cl.build_root_system(name)


@lru_cache(maxsize=None)
def embedding_in(name: str, amb: str):
    return cl.find_embedding(cl.catalog(name), ambient(amb))


@lru_cache(maxsize=None)
def labels_in(name: str, amb: str):
    emb = embedding_in(name, amb)
    assert emb is not None, f"{name} does not embed into {amb}"
    return cl.direct_linkage_labels(emb)
