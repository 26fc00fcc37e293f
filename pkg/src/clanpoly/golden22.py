"""Frozen reference values for the (2,2) family: canonical
clan string to the expanded two-alphabet cohomology polynomial
in canonical text form, used by the verify appendix suite."""

GOLDEN_H_XY = {
    "++--":
        "x1^2*x2^2 - x1^2*x2*y3 - x1^2*x2*y4 - x1*x2^2*y3 - x1*x2^2*y4 + x1^2*y3*y4 + x1*x2*y3^2 + 2*x1*x2*y3*y4 + x1*x2*y4^2 + x2^2*y3*y4 - x1*y3^2*y4 - x1*y3*y4^2 - x2*y3^2*y4 - x2*y3*y4^2 + y3^2*y4^2",
    "+-+-":
        "x1^3*x2 + x1^2*x2^2 + x1^3*x3 + x1^2*x2*x3 - x1^3*y3 - x1^3*y4 - x1^2*x2*y1 - x1^2*x2*y2 - 2*x1^2*x2*y3 - 2*x1^2*x2*y4 - x1*x2^2*y3 - x1*x2^2*y4 - x1^2*x3*y1 - x1^2*x3*y2 - x1^2*x3*y3 - x1^2*x3*y4 - x1*x2*x3*y3 - x1*x2*x3*y4 + x1^2*y1*y3 + x1^2*y2*y3 + x1^2*y3^2 + x1^2*y1*y4 + x1^2*y2*y4 + 2*x1^2*y3*y4 + x1^2*y4^2 + x1*x2*y1*y3 + x1*x2*y2*y3 + x1*x2*y3^2 + x1*x2*y1*y4 + x1*x2*y2*y4 + 3*x1*x2*y3*y4 + x1*x2*y4^2 + x2^2*y3*y4 + x1*x3*y1*y3 + x1*x3*y2*y3 + x1*x3*y1*y4 + x1*x3*y2*y4 + x1*x3*y3*y4 + x2*x3*y3*y4 - x1*y1*y3^2 - x1*y2*y3^2 - 2*x1*y1*y3*y4 - 2*x1*y2*y3*y4 - x1*y3^2*y4 - x1*y1*y4^2 - x1*y2*y4^2 - x1*y3*y4^2 - x2*y1*y3*y4 - x2*y2*y3*y4 - x2*y3^2*y4 - x2*y3*y4^2 - x3*y1*y3*y4 - x3*y2*y3*y4 + y1*y3^2*y4 + y2*y3^2*y4 + y1*y3*y4^2 + y2*y3*y4^2",
    "+--+":
        "x1^3*x2 + x1^3*x3 + x1^2*x2*x3 - x1^3*y1 - x1^3*y2 - x1^2*x2*y1 - x1^2*x2*y2 - x1^2*x2*y3 - x1^2*x2*y4 - x1^2*x3*y1 - x1^2*x3*y2 - x1^2*x3*y3 - x1^2*x3*y4 - x1*x2*x3*y3 - x1*x2*x3*y4 + x1^2*y1^2 + x1^2*y1*y2 + x1^2*y2^2 + x1^2*y1*y3 + x1^2*y2*y3 + x1^2*y1*y4 + x1^2*y2*y4 + x1*x2*y1*y3 + x1*x2*y2*y3 + x1*x2*y1*y4 + x1*x2*y2*y4 + x1*x2*y3*y4 + x1*x3*y1*y3 + x1*x3*y2*y3 + x1*x3*y1*y4 + x1*x3*y2*y4 + x1*x3*y3*y4 + x2*x3*y3*y4 - x1*y1^2*y3 - x1*y1*y2*y3 - x1*y2^2*y3 - x1*y1^2*y4 - x1*y1*y2*y4 - x1*y2^2*y4 - x1*y1*y3*y4 - x1*y2*y3*y4 - x2*y1*y3*y4 - x2*y2*y3*y4 - x3*y1*y3*y4 - x3*y2*y3*y4 + y1^2*y3*y4 + y1*y2*y3*y4 + y2^2*y3*y4",
    "+-11":
        "x1^3 + x1^2*x2 - x1^2*y1 - x1^2*y2 - x1^2*y3 - x1^2*y4 - x1*x2*y3 - x1*x2*y4 + x1*y1*y3 + x1*y2*y3 + x1*y1*y4 + x1*y2*y4 + x1*y3*y4 + x2*y3*y4 - y1*y3*y4 - y2*y3*y4",
    "+1-1":
        "x1^2 - x1*y3 - x1*y4 + y3*y4",
    "+11-":
        "x1^2*x2 + x1^2*x3 - x1^2*y3 - x1^2*y4 - x1*x2*y3 - x1*x2*y4 - x1*x3*y3 - x1*x3*y4 + x1*y3^2 + 2*x1*y3*y4 + x1*y4^2 + x2*y3*y4 + x3*y3*y4 - y3^2*y4 - y3*y4^2",
    "-++-":
        "x1^3*x2 + x1^3*x3 + x1^2*x2*x3 - x1^3*y3 - x1^3*y4 - x1^2*x2*y1 - x1^2*x2*y2 - x1^2*x2*y3 - x1^2*x2*y4 - x1^2*x3*y1 - x1^2*x3*y2 - x1^2*x3*y3 - x1^2*x3*y4 - x1*x2*x3*y1 - x1*x2*x3*y2 + x1^2*y1*y3 + x1^2*y2*y3 + x1^2*y3^2 + x1^2*y1*y4 + x1^2*y2*y4 + x1^2*y3*y4 + x1^2*y4^2 + x1*x2*y1*y2 + x1*x2*y1*y3 + x1*x2*y2*y3 + x1*x2*y1*y4 + x1*x2*y2*y4 + x1*x3*y1*y2 + x1*x3*y1*y3 + x1*x3*y2*y3 + x1*x3*y1*y4 + x1*x3*y2*y4 + x2*x3*y1*y2 - x1*y1*y2*y3 - x1*y1*y3^2 - x1*y2*y3^2 - x1*y1*y2*y4 - x1*y1*y3*y4 - x1*y2*y3*y4 - x1*y1*y4^2 - x1*y2*y4^2 - x2*y1*y2*y3 - x2*y1*y2*y4 - x3*y1*y2*y3 - x3*y1*y2*y4 + y1*y2*y3^2 + y1*y2*y3*y4 + y1*y2*y4^2",
    "-+-+":
        "x1^3*x2 + x1^2*x2^2 + x1^3*x3 + x1^2*x2*x3 - x1^3*y1 - x1^3*y2 - 2*x1^2*x2*y1 - 2*x1^2*x2*y2 - x1^2*x2*y3 - x1^2*x2*y4 - x1*x2^2*y1 - x1*x2^2*y2 - x1^2*x3*y1 - x1^2*x3*y2 - x1^2*x3*y3 - x1^2*x3*y4 - x1*x2*x3*y1 - x1*x2*x3*y2 + x1^2*y1^2 + 2*x1^2*y1*y2 + x1^2*y2^2 + x1^2*y1*y3 + x1^2*y2*y3 + x1^2*y1*y4 + x1^2*y2*y4 + x1*x2*y1^2 + 3*x1*x2*y1*y2 + x1*x2*y2^2 + x1*x2*y1*y3 + x1*x2*y2*y3 + x1*x2*y1*y4 + x1*x2*y2*y4 + x2^2*y1*y2 + x1*x3*y1*y2 + x1*x3*y1*y3 + x1*x3*y2*y3 + x1*x3*y1*y4 + x1*x3*y2*y4 + x2*x3*y1*y2 - x1*y1^2*y2 - x1*y1*y2^2 - x1*y1^2*y3 - 2*x1*y1*y2*y3 - x1*y2^2*y3 - x1*y1^2*y4 - 2*x1*y1*y2*y4 - x1*y2^2*y4 - x2*y1^2*y2 - x2*y1*y2^2 - x2*y1*y2*y3 - x2*y1*y2*y4 - x3*y1*y2*y3 - x3*y1*y2*y4 + y1^2*y2*y3 + y1*y2^2*y3 + y1^2*y2*y4 + y1*y2^2*y4",
    "-+11":
        "x1^3 + x1^2*x2 - x1^2*y1 - x1^2*y2 - x1^2*y3 - x1^2*y4 - x1*x2*y1 - x1*x2*y2 + x1*y1*y2 + x1*y1*y3 + x1*y2*y3 + x1*y1*y4 + x1*y2*y4 + x2*y1*y2 - y1*y2*y3 - y1*y2*y4",
    "--++":
        "x1^2*x2^2 - x1^2*x2*y1 - x1^2*x2*y2 - x1*x2^2*y1 - x1*x2^2*y2 + x1^2*y1*y2 + x1*x2*y1^2 + 2*x1*x2*y1*y2 + x1*x2*y2^2 + x2^2*y1*y2 - x1*y1^2*y2 - x1*y1*y2^2 - x2*y1^2*y2 - x2*y1*y2^2 + y1^2*y2^2",
    "-1+1":
        "x1^2 - x1*y1 - x1*y2 + y1*y2",
    "-11+":
        "x1^2*x2 + x1^2*x3 - x1^2*y1 - x1^2*y2 - x1*x2*y1 - x1*x2*y2 - x1*x3*y1 - x1*x3*y2 + x1*y1^2 + 2*x1*y1*y2 + x1*y2^2 + x2*y1*y2 + x3*y1*y2 - y1^2*y2 - y1*y2^2",
    "1+-1":
        "x1 + x2 - y3 - y4",
    "1+1-":
        "x1*x2 + x1*x3 + x2*x3 - x1*y3 - x1*y4 - x2*y3 - x2*y4 - x3*y3 - x3*y4 + y3^2 + y3*y4 + y4^2",
    "1-+1":
        "x1 + x2 - y1 - y2",
    "1-1+":
        "x1*x2 + x1*x3 + x2*x3 - x1*y1 - x1*y2 - x2*y1 - x2*y2 - x3*y1 - x3*y2 + y1^2 + y1*y2 + y2^2",
    "11+-":
        "x1^2*x2 + x1*x2^2 + x1^2*x3 + 2*x1*x2*x3 + x2^2*x3 - x1^2*y3 - x1^2*y4 - x1*x2*y1 - x1*x2*y2 - 2*x1*x2*y3 - 2*x1*x2*y4 - x2^2*y3 - x2^2*y4 - x1*x3*y1 - x1*x3*y2 - x1*x3*y3 - x1*x3*y4 - x2*x3*y1 - x2*x3*y2 - x2*x3*y3 - x2*x3*y4 + x1*y1*y3 + x1*y2*y3 + x1*y3^2 + x1*y1*y4 + x1*y2*y4 + x1*y3*y4 + x1*y4^2 + x2*y1*y3 + x2*y2*y3 + x2*y3^2 + x2*y1*y4 + x2*y2*y4 + x2*y3*y4 + x2*y4^2 + x3*y1*y3 + x3*y2*y3 + x3*y1*y4 + x3*y2*y4 - y1*y3^2 - y2*y3^2 - y1*y3*y4 - y2*y3*y4 - y1*y4^2 - y2*y4^2",
    "11-+":
        "x1^2*x2 + x1*x2^2 + x1^2*x3 + 2*x1*x2*x3 + x2^2*x3 - x1^2*y1 - x1^2*y2 - 2*x1*x2*y1 - 2*x1*x2*y2 - x1*x2*y3 - x1*x2*y4 - x2^2*y1 - x2^2*y2 - x1*x3*y1 - x1*x3*y2 - x1*x3*y3 - x1*x3*y4 - x2*x3*y1 - x2*x3*y2 - x2*x3*y3 - x2*x3*y4 + x1*y1^2 + x1*y1*y2 + x1*y2^2 + x1*y1*y3 + x1*y2*y3 + x1*y1*y4 + x1*y2*y4 + x2*y1^2 + x2*y1*y2 + x2*y2^2 + x2*y1*y3 + x2*y2*y3 + x2*y1*y4 + x2*y2*y4 + x3*y1*y3 + x3*y2*y3 + x3*y1*y4 + x3*y2*y4 - y1^2*y3 - y1*y2*y3 - y2^2*y3 - y1^2*y4 - y1*y2*y4 - y2^2*y4",
    "1122":
        "x1^2 + 2*x1*x2 + x2^2 - x1*y1 - x1*y2 - x1*y3 - x1*y4 - x2*y1 - x2*y2 - x2*y3 - x2*y4 + y1*y3 + y2*y3 + y1*y4 + y2*y4",
    "1212":
        "2*x1 + x2 + x3 - y1 - y2 - y3 - y4",
    "1221":
        "1",
}
