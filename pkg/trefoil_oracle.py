#!/usr/bin/env python
"""
Independent bracket and Jones oracle for fixtures/trefoil.vd

Enumerates the 8 states of the trefoil by hand-written port tables, without
importing anything from apps/. The printed values are the ones the test
suite and `manage.py jones fixtures/trefoil.vd` are checked against.

    python trefoil_oracle.py
"""

from collections import defaultdict
from itertools import product

# port 4c+k is position k (ccw) at crossing c; arcs join two ports
ARCS = [(0, 11), (1, 10), (2, 5), (3, 4), (6, 9), (7, 8)]
CROSSINGS = 3

# A-smoothing joins positions 0-1 and 2-3, B-smoothing joins 0-3 and 1-2
JOINS = {
    'A': [(0, 1), (2, 3)],
    'B': [(0, 3), (1, 2)],
}


def count_loops(choices):
    partner = {}
    for c, choice in enumerate(choices):
        for i, j in JOINS[choice]:
            partner[4 * c + i] = 4 * c + j
            partner[4 * c + j] = 4 * c + i
    mate = {}
    for p, q in ARCS:
        mate[p] = q
        mate[q] = p

    seen = set()
    loops = 0
    for start in range(4 * CROSSINGS):
        if start in seen:
            continue
        loops += 1
        p = start
        while p not in seen:
            seen.add(p)
            q = mate[p]
            seen.add(q)
            p = partner[q]
    return loops


def through(p):
    """The other end of the strand p lies on"""
    return p - p % 4 + (p % 4 + 2) % 4


def writhe():
    """
    Orient each component from its lowest port and sum crossing signs: +1
    when the over-strand enters one position clockwise of the under-strand
    """
    mate = {}
    for p, q in ARCS:
        mate[p] = q
        mate[q] = p

    entries = set()
    for start in range(4 * CROSSINGS):
        if start in entries or through(start) in entries:
            continue
        p = start
        while p not in entries:
            entries.add(p)
            p = mate[through(p)]

    total = 0
    for c in range(CROSSINGS):
        under = next(k for k in (0, 2) if 4 * c + k in entries)
        over = next(k for k in (1, 3) if 4 * c + k in entries)
        total += 1 if over == (under + 3) % 4 else -1
    return total


def bracket():
    """{(a, b, k): coefficient} for A^a B^b d^k, one factor of d per loop beyond the first"""
    terms = defaultdict(int)
    for choices in product('AB', repeat=CROSSINGS):
        a = choices.count('A')
        terms[(a, CROSSINGS - a, count_loops(choices) - 1)] += 1
    return dict(terms)


def jones(terms, w):
    """Exponents of t^(1/4): A -> t^(-1/4), B -> t^(1/4), d -> -t^(-1/2) - t^(1/2)"""
    poly = defaultdict(int)
    for (a, b, k), coefficient in terms.items():
        # expand (-t^(-2/4) - t^(2/4))^k
        expansion = {0: 1}
        for _ in range(k):
            step = defaultdict(int)
            for exponent, c in expansion.items():
                step[exponent - 2] -= c
                step[exponent + 2] -= c
            expansion = step
        for exponent, c in expansion.items():
            poly[exponent - a + b] += coefficient * c

    sign = -1 if w % 2 else 1
    return {exponent + 3 * w: sign * c for exponent, c in poly.items() if c}


def render(poly):
    parts = []
    for exponent in sorted(poly):
        c = poly[exponent]
        if exponent % 4:
            raise ValueError(f"unexpected fractional exponent {exponent}/4")
        power = exponent // 4
        if power == 0:
            body = str(abs(c))
        else:
            body = ('' if abs(c) == 1 else f"{abs(c)}*") + ('t' if power == 1 else f"t^{power}")
        if not parts:
            parts.append(('-' if c < 0 else '') + body)
        else:
            parts.append(('- ' if c < 0 else '+ ') + body)
    return ' '.join(parts) if parts else '0'


def main():
    terms = bracket()
    w = writhe()
    print('bracket:')
    for (a, b, k), coefficient in sorted(terms.items()):
        print(f"  {coefficient} * A^{a} B^{b} d^{k}")
    print(f"writhe: {w}")
    print(f"jones: {render(jones(terms, w))}")


if __name__ == '__main__':
    main()
