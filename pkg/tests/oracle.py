"""Reference definitions written directly over frozensets of ids.

Nothing here touches bitmasks, caches or the compiled kernels; tests
compare the library against these.
"""

from itertools import combinations


def faces(C, S, sign):
    out = set()
    for x in S:
        out |= C[x].minus if sign == "-" else C[x].plus
    return frozenset(out)


def pure(C, S, sign):
    other = "+" if sign == "-" else "-"
    return faces(C, S, sign) - faces(C, S, other)


def perp(C, S, T):
    return not (faces(C, S, "-") & faces(C, T, "-")) and not (faces(C, S, "+") & faces(C, T, "+"))


def well_formed(C, S):
    if sum(1 for x in S if C[x].dim == 0) > 1:
        return False
    for x, y in combinations(sorted(S), 2):
        if C[x].dim == C[y].dim and C[x].dim > 0 and not perp(C, {x}, {y}):
            return False
    return True


def moves(C, S, M, P):
    sm, sp = faces(C, S, "-"), faces(C, S, "+")
    return M == (P | sm) - sp and P == (M | sp) - sm


def is_cell(C, M, P):
    M, P = frozenset(M), frozenset(P)
    return (
        bool(M) and bool(P)
        and well_formed(C, M) and well_formed(C, P)
        and moves(C, M, M, P) and moves(C, P, M, P)
    )


def lt(C, x, y):
    return bool(C[x].plus & C[y].minus)


def reach(C, x, within=None):
    """Everything y with x ◁ y, paths restricted to ``within`` if given."""
    allowed = set(C.ids) if within is None else set(within)
    if x not in allowed:
        return set()
    seen, todo = {x}, [x]
    while todo:
        a = todo.pop()
        for b in allowed:
            if b not in seen and lt(C, a, b):
                seen.add(b)
                todo.append(b)
    return seen


def mu_pi(C, x, sign):
    other = "+" if sign == "-" else "-"
    level = {x}
    out = set(level)
    while level:
        level = set(faces(C, level, sign) - faces(C, level, other))
        out |= level
    return frozenset(out)


def is_tight(C, R):
    Rpp = pure(C, R, "+")
    for u in C.ids:
        if reach(C, u) & set(R) and C[u].minus & Rpp:
            return False
    return True


def is_segment(C, R, T):
    R, T = set(R), set(T)
    for x in R & T:
        for y in reach(C, x, T) - R:
            if reach(C, y, T) & R:
                return False
    return True


def all_cells(C, limit=10):
    """Every (M, P) over the power set; only for tiny complexes."""
    ids = list(C.ids)
    assert len(ids) <= limit
    subsets = [frozenset(s) for k in range(1, len(ids) + 1) for s in combinations(ids, k)]
    wf = [s for s in subsets if well_formed(C, s)]
    return {(M, P) for M in wf for P in wf if is_cell(C, M, P)}


def compose(C, n, a, b):
    (M, P), (N, Q) = a, b
    top = lambda S: frozenset(x for x in S if C[x].dim == n)
    return M | (N - top(N)), (P - top(P)) | Q
