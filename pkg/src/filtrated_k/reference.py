"""Published values the verification harness compares against."""

from .groups import parse_graded

# hom groups for the two-point chain, keyed (Y, Z)
CHAIN2_TABLE = {
    ("1", "1"): "Z[0]", ("1", "2"): "Z[1]", ("1", "12"): "0",
    ("2", "1"): "0", ("2", "2"): "Z[0]", ("2", "12"): "Z[0]",
    ("12", "1"): "Z[0]", ("12", "2"): "0", ("12", "12"): "Z[0]",
}

# hom groups of the four-point space D4: rows Y, columns Z in this order
D4_ORDER = ("4", "14", "24", "34", "124", "134", "234", "1234", "1", "2", "3")
D4_ROWS = {
    "4":    "Z    Z    Z    Z    Z    Z    Z    Z    0    0    0",
    "14":   "0    Z    0    0    Z    Z    0    Z    Z    0    0",
    "24":   "0    0    Z    0    Z    0    Z    Z    0    Z    0",
    "34":   "0    0    0    Z    0    Z    Z    Z    0    0    Z",
    "124":  "Z[1] 0    0    Z[1] Z    0    0    Z    Z    Z    0",
    "134":  "Z[1] 0    Z[1] 0    0    Z    0    Z    Z    0    Z",
    "234":  "Z[1] Z[1] 0    0    0    0    Z    Z    0    Z    Z",
    "1234": "Z^2[1] Z[1] Z[1] Z[1] 0  0    0    Z    Z    Z    Z",
    "1":    "Z[1] 0    Z[1] Z[1] 0    0    Z[1] 0    Z    0    0",
    "2":    "Z[1] Z[1] 0    Z[1] 0    Z[1] 0    0    0    Z    0",
    "3":    "Z[1] Z[1] Z[1] 0    Z[1] 0    0    0    0    0    Z",
}


def _cell(text):
    return parse_graded(text if text == "0" or "[" in text else text + "[0]")


def d4_table():
    table = {}
    for Y, row in D4_ROWS.items():
        for Z, cell in zip(D4_ORDER, row.split()):
            table[(Y, Z)] = _cell(cell)
    return table


def chain2_table():
    return {k: parse_graded(v) for k, v in CHAIN2_TABLE.items()}


def chain_law(Y, Z):
    """Hom group between intervals ``Y = [a1, b1]`` and ``Z = [a2, b2]`` of a chain, by cases."""
    (a1, b1), (a2, b2) = Y, Z
    if a2 <= a1 <= b2 <= b1:
        return parse_graded("Z[0]")
    if a2 - 1 <= b1 and a1 < a2 and b1 < b2:
        return parse_graded("Z[1]")
    return parse_graded("0")


# refined ring: homs into and out of the new object
REFINED_INTO = {"4": "Z^2[0]", "14": "Z[0]", "24": "Z[0]", "34": "Z[0]",
                "124": "0", "134": "0", "234": "0", "1234": "Z[1]",
                "1": "Z[1]", "2": "Z[1]", "3": "Z[1]", "12344": "Z[0]"}

# slots of the non-free exact module M; also the homs out of the new object
M_SLOTS = {"4": "Z[1]", "14": "0", "24": "0", "34": "0",
           "124": "Z[0]", "134": "Z[0]", "234": "Z[0]", "1234": "Z^2[0]",
           "1": "Z[0]", "2": "Z[0]", "3": "Z[0]"}
REFINED_OUT_OF = dict(M_SLOTS, **{"12344": "Z[0]"})

# free resolution of M: generators of F_0 and F_1
M_RESOLUTION = [[("124", 0), ("134", 0), ("234", 0)], [("1234", 0)]]

NIL_INDEX = {"d4": 5, "d4op": 5}


def chain_nil_index(n):
    return n
