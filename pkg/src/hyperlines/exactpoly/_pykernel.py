"""Pure-Python convolution of bivariate term maps.

A term map sends an exponent pair ``(p, q)`` (meaning ``a**p * b**q``) to a
nonzero Python integer.
"""


def mul_terms(x, y):
    if not x or not y:
        return {}
    if len(x) < len(y):
        x, y = y, x
    acc = {}
    get = acc.get
    yitems = list(y.items())
    for (p, q), c in x.items():
        for (s, t), e in yitems:
            key = (p + s, q + t)
            acc[key] = get(key, 0) + c * e
    return {key: c for key, c in acc.items() if c}
