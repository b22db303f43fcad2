"""Behaviour tables for the four-favourite gadget buyers.

Each row ``(a, b, c, d, first, second)`` covers the shelves (a, b, c, d)
and (b, a, c, d) restricted to the gadget's four products; ``first`` and
``second`` are what the table's two buyer roles pick, scanning left to right.

Symbols: U_I, V_J, U_K for a C-triple (u_i, v_j, u_k); V_I, W, U_J for a
D-triple (v_i, w, u_j); D1 and D2 are the shared dummy products.
"""

import hashlib

C_WITH_D1 = (
    ("U_I", "U_K", "D1", "V_J", "V_J", "D1"),
    ("U_I", "U_K", "V_J", "D1", "D1", "D1"),
    ("U_I", "D1", "U_K", "V_J", "V_J", "V_J"),
    ("U_I", "D1", "V_J", "U_K", "V_J", "U_K"),
    ("U_I", "V_J", "U_K", "D1", "D1", "D1"),
    ("U_I", "V_J", "D1", "U_K", "U_K", "U_K"),
    ("U_K", "D1", "U_I", "V_J", "V_J", "U_I"),
    ("U_K", "D1", "V_J", "U_I", "V_J", "U_I"),
    ("U_K", "V_J", "U_I", "D1", "D1", "U_I"),
    ("U_K", "V_J", "D1", "U_I", "U_I", "U_I"),
    ("D1", "V_J", "U_I", "U_K", "U_I", "U_K"),
    ("D1", "V_J", "U_K", "U_I", "U_I", "U_I"),
)

C_WITH_D2 = (
    ("U_K", "D2", "U_I", "V_J", "V_J", "V_J"),
    ("U_K", "D2", "V_J", "U_I", "U_I", "V_J"),
    ("U_K", "U_I", "D2", "V_J", "V_J", "V_J"),
    ("U_K", "U_I", "V_J", "D2", "V_J", "V_J"),
    ("U_K", "V_J", "D2", "U_I", "U_I", "U_I"),
    ("U_K", "V_J", "U_I", "D2", "D2", "U_I"),
    ("D2", "U_I", "U_K", "V_J", "V_J", "V_J"),
    ("D2", "U_I", "V_J", "U_K", "V_J", "U_K"),
    ("D2", "V_J", "U_K", "U_I", "U_I", "U_I"),
    ("D2", "V_J", "U_I", "U_K", "U_K", "U_K"),
    ("U_I", "V_J", "U_K", "D2", "U_K", "D2"),
    ("U_I", "V_J", "D2", "U_K", "U_K", "U_K"),
)

D_WITH_D1 = (
    ("V_I", "U_J", "D1", "W", "W", "D1"),
    ("V_I", "U_J", "W", "D1", "D1", "D1"),
    ("V_I", "D1", "U_J", "W", "W", "W"),
    ("V_I", "D1", "W", "U_J", "W", "U_J"),
    ("V_I", "W", "U_J", "D1", "D1", "D1"),
    ("V_I", "W", "D1", "U_J", "U_J", "U_J"),
    ("U_J", "D1", "V_I", "W", "W", "V_I"),
    ("U_J", "D1", "W", "V_I", "W", "V_I"),
    ("U_J", "W", "V_I", "D1", "D1", "V_I"),
    ("U_J", "W", "D1", "V_I", "V_I", "V_I"),
    ("D1", "W", "V_I", "U_J", "V_I", "U_J"),
    ("D1", "W", "U_J", "V_I", "V_I", "V_I"),
)

# first result is taken by 5 buyers, second by 7
D_WITH_D2 = (
    ("U_J", "D2", "V_I", "W", "W", "W"),
    ("U_J", "D2", "W", "V_I", "V_I", "W"),
    ("U_J", "V_I", "D2", "W", "W", "W"),
    ("U_J", "V_I", "W", "D2", "W", "W"),
    ("U_J", "W", "D2", "V_I", "V_I", "V_I"),
    ("U_J", "W", "V_I", "D2", "D2", "V_I"),
    ("D2", "V_I", "U_J", "W", "W", "W"),
    ("D2", "V_I", "W", "U_J", "W", "U_J"),
    ("D2", "W", "U_J", "V_I", "V_I", "V_I"),
    ("D2", "W", "V_I", "U_J", "U_J", "U_J"),
    ("V_I", "W", "U_J", "D2", "U_J", "D2"),
    ("V_I", "W", "D2", "U_J", "U_J", "U_J"),
)

TABLES = {
    "c-d1": C_WITH_D1,
    "c-d2": C_WITH_D2,
    "d-d1": D_WITH_D1,
    "d-d2": D_WITH_D2,
}


def checksum(tables=TABLES) -> str:
    text = "\n".join(f"{k}:" + ";".join(",".join(r) for r in v) for k, v in sorted(tables.items()))
    return hashlib.sha256(text.encode()).hexdigest()


TABLES_SHA256 = "daaa046b8884bb4e12256a67df756fc98c3a13b73cdf877c2d75cbdafdd935fb"
