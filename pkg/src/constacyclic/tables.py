"""Published parameter tables for the two families, embedded as static data.

Optimality labels are carried verbatim as strings; the tool never queries
external code databases.  Table 1 lists the parity-split negacyclic codes
C_(1,n) and their duals; Table 2 the q-weight codes C_(q,m,ell) and theirs.
"""

# (q, m, [n,k,d], label, dual [n,k,d], dual label)
TABLE1 = (
    (3, 2, (4, 2, 3), "optimal linear code", (4, 2, 3), "optimal linear code"),
    (3, 3, (13, 6, 6), "optimal linear code", (13, 7, 5), "optimal linear code"),
    (3, 4, (40, 20, 9), "d_best=12", (40, 20, 9), "d_best=12"),
    (5, 2, (12, 8, 4), "optimal linear code", (12, 4, 6), "d_optimal=8"),
    (5, 3, (62, 24, 22), "d_best=23", (62, 38, 12), "d_best=14"),
    (7, 2, (24, 18, 5), "best linear code known", (24, 6, 14), "d_best=16"),
    (9, 2, (40, 32, 6), "best linear code known", (40, 8, 20), "d_best=27"),
)

# (q, m, ells sharing the row, [n,k,d], label, dual [n,k,d], dual label)
TABLE2 = (
    (3, 2, (0, 1), (4, 2, 3), "optimal linear code",
     (4, 2, 3), "optimal linear code"),
    (3, 3, (0, 2), (13, 10, 3), "optimal linear code",
     (13, 3, 9), "optimal linear code"),
    (3, 3, (1,), (13, 6, 6), "optimal linear code",
     (13, 7, 5), "optimal linear code"),
    (3, 4, (0, 3), (40, 36, 3), "optimal linear code",
     (40, 4, 27), "optimal linear code"),
    (3, 4, (1, 2), (40, 24, 9), "best linear code known",
     (40, 16, 15), "best linear code known"),
    (3, 5, (0, 4), (121, 116, 3), "optimal linear code",
     (121, 5, 81), "optimal linear code"),
    (3, 5, (1,), (121, 91, 9), "d_best=11",
     (121, 30, 45), "d_best=46"),
    (4, 2, (0,), (5, 3, 3), "optimal linear code",
     (5, 2, 4), "optimal linear code"),
    (4, 2, (1,), (5, 2, 4), "optimal linear code",
     (5, 3, 3), "optimal linear code"),
    (4, 3, (0,), (21, 18, 3), "optimal linear code",
     (21, 3, 16), "optimal linear code"),
    (4, 3, (1,), (21, 9, 9), "optimal linear code",
     (21, 12, 7), "optimal linear code"),
    (4, 3, (2,), (21, 15, 4), "d_best=5",
     (21, 6, 12), "optimal linear code"),
    (5, 2, (0,), (6, 4, 3), "optimal linear code",
     (6, 2, 5), "optimal linear code"),
    (5, 2, (1,), (6, 2, 5), "optimal linear code",
     (6, 4, 3), "optimal linear code"),
    (5, 3, (0,), (31, 28, 3), "optimal linear code",
     (31, 3, 25), "optimal linear code"),
    (5, 3, (1,), (31, 13, 13), "best linear code known",
     (31, 18, 9), "best linear code known"),
    (5, 3, (2,), (31, 21, 5), "d_best=7",
     (31, 10, 15), "best linear code known"),
    (7, 2, (0,), (8, 6, 3), "optimal linear code",
     (8, 2, 7), "optimal linear code"),
    (7, 2, (1,), (8, 2, 7), "optimal linear code",
     (8, 6, 3), "optimal linear code"),
    (7, 3, (0,), (57, 54, 3), "optimal linear code",
     (57, 3, 49), "optimal linear code"),
    (7, 3, (1,), (57, 24, 21), "best linear code known",
     (57, 33, 13), "d_best=15"),
    (7, 3, (2,), (57, 36, 7), "d_best=13",
     (57, 21, 21), "d_best=24"),
)

# Full weight enumerator of the [40,20,9] self-dual code, as published.
ENUMERATOR_40_20 = {
    0: 1, 9: 1040, 12: 18720, 15: 1100736, 18: 25761840, 21: 236377440,
    24: 908079120, 27: 1388750720, 30: 783679104, 33: 137535840,
    36: 5468320, 39: 11520,
}


def table_rows(table_id):
    if table_id == 1:
        return TABLE1
    if table_id == 2:
        return TABLE2
    raise ValueError(f"no table {table_id}")
