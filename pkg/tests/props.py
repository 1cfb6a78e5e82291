"""Face-of-face identities and path/face statements, counted directly."""

from parity_complexes.core import MINUS, PLUS


def second_faces(C, x):
    fs = lambda S, s: C.face_mask(S, s)
    i = C.index[x]
    return (fs(C.minus[i], MINUS), fs(C.minus[i], PLUS), fs(C.plus[i], MINUS), fs(C.plus[i], PLUS))


def path_violations(C):
    """Counterexamples to the four path/face statements, by kind."""
    reach = C.triangle_reach
    n = len(C)
    out = {"a": 0, "b": 0, "c": 0, "d": 0}
    for x in range(n):
        xm, xp = C.minus[x], C.plus[x]
        mp, pm = C.face_mask(xm, PLUS), C.face_mask(xp, MINUS)
        mm, pp = C.face_mask(xm, MINUS), C.face_mask(xp, PLUS)
        for u in range(n):
            for v in range(n):
                if (reach[u] >> v) & 1:  # u ◁ v
                    if (xp >> v) & 1 and C.minus[u] & mp:
                        out["a"] += 1
                    if (xm >> v) & 1 and C.minus[u] & pp:
                        out["c"] += 1
                if (reach[v] >> u) & 1:  # v ◁ u
                    if (xm >> v) & 1 and C.plus[u] & pm:
                        out["b"] += 1
                    if (xp >> v) & 1 and C.plus[u] & mm:
                        out["d"] += 1
    return out


def face_identity_violations(C):
    bad = []
    for x in C.ids:
        mm, mp, pm, pp = second_faces(C, x)
        ok = (not pp & mm and not mp & pm
              and mm & ~mp == mm & pm == pm & ~pp
              and mp & ~mm == mp & pp == pp & ~pm)
        if not ok:
            bad.append(x)
    return bad
