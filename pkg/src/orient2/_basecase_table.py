"""Generated by tools/gen_basecase_table.py; do not edit by hand.

Keys count the 1-, 2-, 3- and 4-vertex path components of a five-path
complement pattern; values are digraph6 orientations of the complement of
the canonical layout (larger paths first, vertices consecutive), each
checked to have diameter two by exhaustive search.
"""

TABLE: dict[tuple[int, int, int, int], str] = {
    (5, 0, 0, 0): '&D[SYW?',
    (4, 1, 0, 0): '&EKIFR`o',
    (3, 2, 0, 0): '&FME_oTFHw?',
    (4, 0, 1, 0): '&FLB@W]ado?',
    (4, 0, 0, 1): '&GEpqIB_]`PV?',
}
