"""Frozen golden values for (2,2): canonical clan string to the
expanded cohomology polynomial in X and Y."""

from clanpoly.poly import Poly

N = 4


def x(i):
    return Poly.x(N, i)


def y(j):
    return Poly.y(N, j)


def _quad12():
    return (-x(1) * y(2) + y(1) * y(2) + y(2) ** 2 - x(2) * y(2)
            + x(1) * x(3) - x(3) * y(1) - x(3) * y(2) + x(2) * x(3)
            + x(2) * x(1) - x(2) * y(1) - y(1) * x(1) + y(1) ** 2)


def _quad34():
    return (-x(1) * y(3) + y(4) * y(3) + y(3) ** 2 - x(2) * y(3)
            + x(1) * x(3) - y(4) * x(3) - x(3) * y(3) + x(2) * x(3)
            + x(2) * x(1) - y(4) * x(2) - y(4) * x(1) + y(4) ** 2)


def golden_table():
    q12 = _quad12()
    q34 = _quad34()
    return {
        "--++": (x(2) - y(2)) * (x(2) - y(1)) * (x(1) - y(2)) * (x(1) - y(1)),
        "-+-+": (x(1) - y(2)) * (x(1) - y(1))
                * (x(1) - y(4) - y(3) + x(2)) * (x(2) - y(1) + x(3) - y(2)),
        "-++-": (x(1) - y(2)) * (x(1) - y(1)) * q34,
        "+--+": (x(1) - y(4)) * (x(1) - y(3)) * q12,
        "+-+-": (x(1) - y(4)) * (x(1) - y(3))
                * (x(1) - y(1) - y(2) + x(2)) * (x(3) - y(3) - y(4) + x(2)),
        "++--": (x(2) - y(4)) * (x(2) - y(3)) * (x(1) - y(4)) * (x(1) - y(3)),
        "-11+": (x(1) - y(2)) * (x(1) - y(1)) * (x(2) - y(1) + x(3) - y(2)),
        "-+11": (x(1) - y(2)) * (x(1) - y(1)) * (x(1) - y(4) - y(3) + x(2)),
        "11-+": (x(1) - y(4) - y(3) + x(2)) * q12,
        "11+-": (x(1) - y(1) - y(2) + x(2)) * q34,
        "+-11": (x(1) - y(4)) * (x(1) - y(3)) * (x(1) - y(1) - y(2) + x(2)),
        "+11-": (x(1) - y(4)) * (x(1) - y(3)) * (x(3) - y(3) - y(4) + x(2)),
        "-1+1": (x(1) - y(2)) * (x(1) - y(1)),
        "1-1+": q12,
        "1122": (x(1) - y(4) - y(3) + x(2)) * (x(1) - y(1) - y(2) + x(2)),
        "1+1-": q34,
        "+1-1": (x(1) - y(4)) * (x(1) - y(3)),
        "1-+1": x(1) - y(1) - y(2) + x(2),
        "1212": x(2) - y(1) - y(3) + 2 * x(1) - y(4) - y(2) + x(3),
        "1+-1": x(1) - y(4) - y(3) + x(2),
        "1221": Poly.one(N),
    }
