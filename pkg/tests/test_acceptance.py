"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines.
"""

import time

import laws
from mutations import single_face_mutations
from props import face_identity_violations, path_violations
from parity_complexes import cube, glob, simplex
from parity_complexes.axioms import TAGS, check, replay
from parity_complexes.cells import (
    Cell,
    atom,
    enumerate_cells,
    enumerate_cells_bruteforce,
    is_atomic,
    mu,
    rank,
)
from parity_complexes.core import Subset, sub, tight_mask
from parity_complexes.document import parse_complex, serialize_complex
from parity_complexes.errors import SoundnessAlarm
from parity_complexes.excision import decompose, evaluate, excise, leaves
from parity_complexes.movement import Movement, advance, moves, retreat, split_movement, union_movement


def verdict(number, title, ok, detail=""):
    print(f"\n[criterion {number:>2}] {'PASS' if ok else 'FAIL'}  {title}  {detail}".rstrip())
    assert ok, detail


def corpus():
    return ([simplex(n) for n in range(5)] + [cube(n) for n in range(4)]
            + [glob(n) for n in range(6)])


def path_cell(C):
    return Cell.from_ids(C, ["0", "01", "12"], ["2", "01", "12"])


# -- 1 -------------------------------------------------------------------------

def test_criterion_01_axiom_suite():
    t0 = time.perf_counter()
    failures = [(C, r.tag) for C in corpus() for r in check(C) if not r.passed or r.witnesses]
    elapsed = time.perf_counter() - t0
    verdict(1, "axiom suite on the corpus", not failures and elapsed < 10,
            f"{len(failures)} failing checks, {elapsed:.2f}s")


# -- 2 -------------------------------------------------------------------------

def test_criterion_02_counts():
    bad = [("simplex", n) for n in range(7) if len(simplex(n)) != 2 ** (n + 1) - 1]
    bad += [("cube", n) for n in range(5) if len(cube(n)) != 3 ** n]
    bad += [("glob", n) for n in range(33) if len(glob(n)) != 2 * (n + 1)]
    verdict(2, "element counts", not bad, f"mismatches {bad}")


# -- 3 -------------------------------------------------------------------------

def test_criterion_03_face_and_path_statements():
    bad = 0
    for C in corpus():
        bad += len(face_identity_violations(C))
        bad += sum(path_violations(C).values())
    verdict(3, "face identities and the four path statements", bad == 0, f"{bad} counterexamples")


# -- 4 -------------------------------------------------------------------------

def movement_counterexamples(C):
    subsets = [Subset(C, m) for m in range(1 << len(C))]
    bad, found = 0, 0
    for S in subsets:
        for M in subsets:
            P = advance(S, M)
            if P is None:
                continue
            found += 1
            if retreat(S, P) != M:
                bad += 1
            by_dim = all(moves(sub(S, n + 1), sub(M, n), sub(P, n)) for n in range(C.dim + 1))
            if not (moves(S, M, P) and by_dim):
                bad += 1
            t = S.mask
            while t:
                T, Z = Subset(C, t), Subset(C, S.mask & ~t)
                N = split_movement(T, Z, M, P)
                if N is not None and union_movement(Movement(T, M, N), Movement(Z, N, P)) != Movement(S, M, P):
                    bad += 1
                t = (t - 1) & S.mask
    return bad, found


def test_criterion_04_movement_calculus():
    t0 = time.perf_counter()
    bad = found = 0
    for C in (simplex(2), glob(2)):
        assert len(C) <= 8
        b, f = movement_counterexamples(C)
        bad, found = bad + b, found + f
    elapsed = time.perf_counter() - t0
    verdict(4, "movement round trips, split/union, dimensionwise",
            bad == 0 and found > 0 and elapsed < 60,
            f"{found} movements, {bad} counterexamples, {elapsed:.1f}s")


# -- 5 -------------------------------------------------------------------------

GOLDEN = {"simplex2": 8, "glob2": 6}


def test_criterion_05_enumeration_oracle():
    problems = []
    for name, C in (("simplex2", simplex(2)), ("glob2", glob(2))):
        cells = enumerate_cells_bruteforce(C)
        if len(cells) != GOLDEN[name]:
            problems.append(f"{name}: {len(cells)} cells")
        for check_ in (laws.check_receptive, laws.check_boundaries):
            bad, _ = check_(cells)
            problems += [f"{name}: {check_.__name__}"] * bool(bad)
    verdict(5, "brute-force cells, receptive, boundaries are cells", not problems, "; ".join(problems))


# -- 6 -------------------------------------------------------------------------

def test_criterion_06_category_laws():
    t0 = time.perf_counter()
    cells = enumerate_cells(simplex(2))
    counts = {}
    bad = 0
    for law in ("pairs", "associativity", "interchange"):
        b, seen = getattr(laws, f"check_{law}")(cells)
        bad += len(b)
        counts[law] = seen
    elapsed = time.perf_counter() - t0
    verdict(6, "composition, associativity, interchange on the triangle",
            bad == 0 and all(counts.values()) and elapsed < 300,
            f"{counts}, {bad} counterexamples, {elapsed:.1f}s")


# -- 7 -------------------------------------------------------------------------

def test_criterion_07_excision_golden():
    C = simplex(2)
    c = path_cell(C)
    step = excise(c)
    ok = (step.m == 0 and step.early == atom(C, "01") and step.late == atom(C, "12")
          and evaluate(decompose(c), C) == c)
    verdict(7, "path cell excises into its two edges", ok, f"m={step.m} pivot={step.pivot}")


# -- 8 -------------------------------------------------------------------------

def round_trip_failures(C):
    failures = []

    def walk(c):
        step = excise(c)
        if step is None:
            return
        if not (rank(step.early) < rank(c) and rank(step.late) < rank(c)):
            failures.append(("rank", c))
        walk(step.early)
        walk(step.late)

    for c in enumerate_cells(C):
        if is_atomic(c):
            continue
        tree = decompose(c)
        if any(atom(C, x) is None for x in leaves(tree)):
            failures.append(("leaf", c))
        if evaluate(tree, C) != c:
            failures.append(("evaluate", c))
        if len(leaves(tree)) != rank(c):
            failures.append(("leaf count", c))
        walk(c)
    return failures


def test_criterion_08_excision_round_trip():
    failures = round_trip_failures(simplex(2)) + round_trip_failures(glob(2))
    verdict(8, "decompose/evaluate, rank descent, leaf count", not failures, f"{len(failures)} failures")


# -- 9 -------------------------------------------------------------------------

def test_criterion_09_tightness():
    bad = [(C, x) for C in (simplex(3), cube(2), glob(3)) for x in C.ids
           if not tight_mask(C, mu(C, x).mask)]
    verdict(9, "μ(x) is tight", not bad, f"{len(bad)} failures")


# -- 10 ------------------------------------------------------------------------

def test_criterion_10_duality():
    problems = []
    for C in corpus():
        R = C.reverse()
        if not all(r.passed for r in check(R)):
            problems.append(f"axioms fail on reversed {len(C)}-element complex")
        if face_identity_violations(R) or any(path_violations(R).values()):
            problems.append("path statements fail on a reversed complex")
    C = simplex(2)
    R = C.reverse()
    step = excise(path_cell(C).reversed().in_complex(R))
    if not (step.m == 0 and step.early == atom(R, "12") and step.late == atom(R, "01")):
        problems.append("reversed path cell does not excise into reversed factors")
    verdict(10, "reversal mirrors criteria 1, 3 and 7", not problems, "; ".join(problems))


# -- 11 ------------------------------------------------------------------------

def test_criterion_11_determinism():
    first = [str(decompose(c)) for c in enumerate_cells(simplex(3))]
    second = [str(decompose(c)) for c in enumerate_cells(simplex(3))]
    texts = [serialize_complex(C) for C in corpus()]
    exact = all(serialize_complex(parse_complex(t)) == t for t in texts)
    verdict(11, "repeatable trees, bit-exact serialization", first == second and exact)


# -- 12 ------------------------------------------------------------------------

def pipeline_detects_or_passes(M):
    """Criteria 5-8 on one complex; a soundness alarm counts as detection."""
    try:
        cells = enumerate_cells(M)
        for law in ("receptive", "boundaries", "pairs", "associativity", "interchange"):
            if getattr(laws, f"check_{law}")(cells)[0]:
                return "law failure"
        if round_trip_failures(M):
            return "silent"
    except SoundnessAlarm:
        return "alarm"
    return "passed"


def test_criterion_12_mutation_sensitivity():
    outcomes = {"witness": 0, "alarm": 0, "passed": 0}
    silent = []
    for C in (cube(2), simplex(2)):
        for label, M in single_face_mutations(C):
            failed = [r for r in check(M) if not r.passed]
            if failed:
                if all(replay(M, r.tag, w) for r in failed for w in r.witnesses):
                    outcomes["witness"] += 1
                else:
                    silent.append(label)
                continue
            result = pipeline_detects_or_passes(M)
            if result in outcomes:
                outcomes[result] += 1
            else:
                silent.append(label)
    total = sum(outcomes.values()) + len(silent)
    verdict(12, "single-face mutations are detected or harmless",
            total >= 20 and not silent, f"{total} mutations {outcomes}, {len(silent)} silent")


def test_mutations_reach_every_checker():
    hit = set()
    for C in (cube(2), simplex(2)):
        for _, M in single_face_mutations(C):
            hit |= {r.tag for r in check(M) if not r.passed}
    assert hit == set(TAGS)
