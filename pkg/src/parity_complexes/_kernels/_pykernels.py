"""Pure-Python kernels over integer bitmasks.

Element ``i`` of a complex is bit ``1 << i``.  Both functions here have
twins in ``_ckernels.pyx`` with identical results.
"""


def bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def closure(succ, allowed):
    """Reflexive-transitive closure of ``succ`` restricted to ``allowed``.

    Returns a list ``reach`` with ``reach[i]`` the set of nodes reachable
    from ``i`` along edges inside ``allowed`` (``i`` included).  Nodes
    outside ``allowed`` get 0.
    """
    reach = [0] * len(succ)
    for i in bits(allowed):
        seen = 1 << i
        frontier = seen
        while frontier:
            nxt = 0
            for j in bits(frontier):
                nxt |= succ[j]
            frontier = nxt & allowed & ~seen
            seen |= frontier
        reach[i] = seen
    return reach


def _union(masks, members):
    out = 0
    for i in bits(members):
        out |= masks[i]
    return out


def _independent(mask, conflict):
    for i in bits(mask):
        if conflict[i] & mask:
            return False
    return True


def enumerate_cells(minus, plus, conflict):
    """All (M, P) mask pairs forming cells.

    ``conflict[i]`` holds the elements that may not share a well-formed set
    with ``i``.  M ranges over the non-empty independent sets of the
    conflict graph; P is then forced by ``P = (M | M+) & ~M-``.
    """
    n = len(minus)
    out = []
    # iterative DFS: (next index to decide, chosen, forbidden)
    stack = [(0, 0, 0)]
    while stack:
        i, chosen, banned = stack.pop()
        if i == n:
            if chosen:
                pair = _cell_from_source(chosen, minus, plus, conflict)
                if pair is not None:
                    out.append(pair)
            continue
        stack.append((i + 1, chosen, banned))
        if not (banned >> i) & 1:
            stack.append((i + 1, chosen | (1 << i), banned | conflict[i]))
    out.sort()
    return out


def _cell_from_source(m, minus, plus, conflict):
    m_minus = _union(minus, m)
    m_plus = _union(plus, m)
    p = (m | m_plus) & ~m_minus
    if not p or m != (p | m_minus) & ~m_plus:
        return None
    if not _independent(p, conflict):
        return None
    p_minus = _union(minus, p)
    p_plus = _union(plus, p)
    if p != (m | p_plus) & ~p_minus or m != (p | p_minus) & ~p_plus:
        return None
    return (m, p)
