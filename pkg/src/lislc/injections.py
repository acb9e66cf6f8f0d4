"""Lattice-path injections behind the hook and two-row log-concavity proofs.

A pair of involutions with LIS lengths k-1 and k+1 is encoded as two NE
lattice paths whose start points are offset so the paths must meet.
Swapping their tails after the last common point yields two paths of the
middle type, hence two involutions with LIS length k.  ``lift_injection``
turns any shape-preserving involution map into a permutation map through
Robinson-Schensted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Hashable, Iterable, Iterator

from .partitions import Partition, is_hook, num_syt
from .rsk import (
    Permutation,
    StandardTableau,
    involution_tableau,
    rsk,
    rsk_inverse,
    tableau_involution,
)

Point = tuple[int, int]
InvolutionMap = Callable[[Permutation, Permutation], tuple[Permutation, Permutation]]

HOOK_STARTS = ((1, 0), (0, 1))
TWO_ROW_STARTS = ((1, -1), (0, 0))


class NoIntersection(ValueError):
    pass


class NotShapePreserving(ValueError):
    pass


@dataclass(frozen=True)
class NEPath:
    start: Point
    steps: str

    def __post_init__(self):
        if set(self.steps) - {"N", "E"}:
            raise ValueError(f"steps must be N/E: {self.steps!r}")

    def points(self) -> list[Point]:
        x, y = self.start
        pts = [(x, y)]
        for s in self.steps:
            if s == "E":
                x += 1
            else:
                y += 1
            pts.append((x, y))
        return pts

    @property
    def end(self) -> Point:
        return (self.start[0] + self.steps.count("E"), self.start[1] + self.steps.count("N"))

    def is_dyck(self) -> bool:
        """Never rises above the slope-1 line through the start point."""
        depth = 0
        for s in self.steps:
            depth += 1 if s == "E" else -1
            if depth < 0:
                return False
        return True


def hook_tableau_to_path(P: StandardTableau, start: Point = (0, 0)) -> NEPath:
    """Step i is E iff i+1 lies in the first row."""
    if not is_hook(P.shape):
        raise ValueError(f"not a hook shape: {tuple(P.shape)}")
    first = set(P.rows[0]) if P.rows else set()
    return NEPath(start, "".join("E" if i + 1 in first else "N" for i in range(1, P.n)))


def hook_path_to_tableau(path: NEPath) -> StandardTableau:
    first = [1] + [i + 1 for i, s in enumerate(path.steps, start=1) if s == "E"]
    rest = [i + 1 for i, s in enumerate(path.steps, start=1) if s == "N"]
    return StandardTableau._trusted([first] + [[x] for x in rest])


def tworow_tableau_to_path(P: StandardTableau, start: Point = (0, 0)) -> NEPath:
    """Step i is E iff i lies in the first row."""
    if len(P.rows) > 2:
        raise ValueError(f"more than two rows: {tuple(P.shape)}")
    first = set(P.rows[0]) if P.rows else set()
    return NEPath(start, "".join("E" if i in first else "N" for i in range(1, P.n + 1)))


def tworow_path_to_tableau(path: NEPath) -> StandardTableau:
    rows = [[i for i, s in enumerate(path.steps, start=1) if s == c] for c in "EN"]
    return StandardTableau._trusted([r for r in rows if r])


def last_intersection(p: NEPath, q: NEPath) -> tuple[Point, int, int]:
    """Last point of ``p`` (in traversal order) that lies on ``q``, with its step indices."""
    q_index = {pt: j for j, pt in enumerate(q.points())}
    hit = None
    for i, pt in enumerate(p.points()):
        if pt in q_index:
            hit = (pt, i, q_index[pt])
    if hit is None:
        raise NoIntersection(f"paths from {p.start} and {q.start} never meet")
    return hit


def path_swap(p: NEPath, p2: NEPath) -> tuple[NEPath, NEPath]:
    """Exchange the tails of two paths after their last common point."""
    _, i, j = last_intersection(p, p2)
    return NEPath(p.start, p.steps[:i] + p2.steps[j:]), NEPath(p2.start, p2.steps[:j] + p.steps[i:])


def hook_tableaux(n: int, k: int) -> Iterator[StandardTableau]:
    """All standard tableaux of shape (k, 1^(n-k))."""
    if not 1 <= k <= n:
        return
    for tail in combinations(range(2, n + 1), k - 1):
        rest = sorted(set(range(2, n + 1)) - set(tail))
        yield StandardTableau._trusted([[1, *tail]] + [[x] for x in rest])


def tworow_tableaux(n: int, k: int) -> Iterator[StandardTableau]:
    """All standard tableaux of shape (k, n-k); empty unless n-k <= k <= n."""
    if not (0 <= n - k <= k):
        return
    for first in combinations(range(1, n + 1), k):
        path = NEPath((0, 0), "".join("E" if i in first else "N" for i in range(1, n + 1)))
        if path.is_dyck():
            yield tworow_path_to_tableau(path)


def hook_involutions(n: int, k: int) -> Iterator[Permutation]:
    return (tableau_involution(P) for P in hook_tableaux(n, k))


def tworow_involutions(n: int, k: int) -> Iterator[Permutation]:
    return (tableau_involution(P) for P in tworow_tableaux(n, k))


def hook_injection(n: int, k: int) -> InvolutionMap:
    """Map I^hook_{n,k-1} x I^hook_{n,k+1} into (I^hook_{n,k})^2."""
    (a, b) = HOOK_STARTS

    def f(iota: Permutation, iota2: Permutation) -> tuple[Permutation, Permutation]:
        P, P2 = involution_tableau(iota), involution_tableau(iota2)
        if P.shape != (k - 1,) + (1,) * (n - k + 1) or P2.shape != (k + 1,) + (1,) * (n - k - 1):
            raise ValueError(f"arguments are not in I_{n},{k - 1} x I_{n},{k + 1} (hook)")
        q, q2 = path_swap(hook_tableau_to_path(P, a), hook_tableau_to_path(P2, b))
        return tableau_involution(hook_path_to_tableau(q)), tableau_involution(hook_path_to_tableau(q2))

    return f


def tworow_injection(n: int, k: int) -> InvolutionMap:
    """Two-row analogue of :func:`hook_injection`; outputs are checked Dyck."""
    (a, b) = TWO_ROW_STARTS

    def f(iota: Permutation, iota2: Permutation) -> tuple[Permutation, Permutation]:
        P, P2 = involution_tableau(iota), involution_tableau(iota2)
        if (tuple(P.shape), tuple(P2.shape)) != (_two_row(k - 1, n), _two_row(k + 1, n)):
            raise ValueError(f"arguments are not in I_{n},{k - 1} x I_{n},{k + 1} (two-row)")
        q, q2 = path_swap(tworow_tableau_to_path(P, a), tworow_tableau_to_path(P2, b))
        if not (q.is_dyck() and q2.is_dyck()):
            raise AssertionError(f"path swap left the Dyck paths: {q}, {q2}")
        return tableau_involution(tworow_path_to_tableau(q)), tableau_involution(tworow_path_to_tableau(q2))

    return f


def _two_row(k: int, n: int) -> tuple[int, ...]:
    return (k, n - k) if k < n else (k,)


def hook_domain(n: int, k: int) -> Iterator[tuple[Permutation, Permutation]]:
    return product(hook_involutions(n, k - 1), list(hook_involutions(n, k + 1)))


def tworow_domain(n: int, k: int) -> Iterator[tuple[Permutation, Permutation]]:
    return product(tworow_involutions(n, k - 1), list(tworow_involutions(n, k + 1)))


def lift_injection(
    f: InvolutionMap, pi: Permutation, pi2: Permutation
) -> tuple[Permutation, Permutation]:
    """Lift an involution-pair map to a permutation-pair map via RS.

    (pi, pi2) -> ((P, Q), (P2, Q2)) -> ((P, P2), (Q, Q2)) -> f on each pair
    -> ((S, S2), (T, T2)) -> ((S, T), (S2, T2)) -> inverse RS on each.
    """
    P, Q = rsk(pi)
    P2, Q2 = rsk(pi2)
    s, s2 = f(tableau_involution(P), tableau_involution(P2))
    t, t2 = f(tableau_involution(Q), tableau_involution(Q2))
    S, S2 = involution_tableau(s), involution_tableau(s2)
    T, T2 = involution_tableau(t), involution_tableau(t2)
    if S.shape != T.shape or S2.shape != T2.shape:
        raise NotShapePreserving(
            f"shapes {tuple(S.shape)}/{tuple(T.shape)} and {tuple(S2.shape)}/{tuple(T2.shape)} differ"
        )
    return rsk_inverse(S, T), rsk_inverse(S2, T2)


def lifted(f: InvolutionMap) -> Callable[[Permutation, Permutation], tuple[Permutation, Permutation]]:
    return lambda pi, pi2: lift_injection(f, pi, pi2)


def permutations_of_shapes(tableaux: Iterable[StandardTableau]) -> Iterator[Permutation]:
    """All permutations whose RS tableaux both come from ``tableaux`` with equal shape."""
    by_shape: dict[Partition, list[StandardTableau]] = {}
    for T in tableaux:
        by_shape.setdefault(T.shape, []).append(T)
    for group in by_shape.values():
        for P, Q in product(group, repeat=2):
            yield rsk_inverse(P, Q)


def lifted_domain(
    tableaux: Callable[[int, int], Iterable[StandardTableau]], n: int, k: int
) -> Iterator[tuple[Permutation, Permutation]]:
    right = list(permutations_of_shapes(tableaux(n, k + 1)))
    return product(permutations_of_shapes(tableaux(n, k - 1)), right)


@dataclass
class InjectionReport:
    domain_size: int = 0
    image_size: int = 0
    collisions: list[tuple[Hashable, Hashable, Hashable]] = field(default_factory=list)
    violations: list[tuple[Hashable, Hashable]] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.collisions and not self.violations

    def merge(self, other: "InjectionReport") -> "InjectionReport":
        return InjectionReport(
            self.domain_size + other.domain_size,
            self.image_size + other.image_size,
            self.collisions + other.collisions,
            self.violations + other.violations,
        )


def verify_injection(
    domain: Iterable[Hashable],
    fn: Callable[[Hashable], Hashable],
    in_codomain: Callable[[Hashable], bool] = lambda y: True,
) -> InjectionReport:
    """Evaluate ``fn`` on every domain element; record collisions and codomain misses."""
    seen: dict[Hashable, Hashable] = {}
    report = InjectionReport()
    for x in domain:
        report.domain_size += 1
        y = fn(x)
        if not in_codomain(y):
            report.violations.append((x, y))
        if y in seen:
            report.collisions.append((seen[y], x, y))
        else:
            seen[y] = x
    report.image_size = len(seen)
    return report


def _shape_pair_check(shape: tuple[int, ...], inv: bool) -> Callable[[tuple], bool]:
    def check(pair) -> bool:
        if inv:
            return all(tuple(involution_tableau(w).shape) == shape for w in pair)
        return all(tuple(rsk(w)[0].shape) == shape for w in pair)

    return check


def _applied(f):
    return lambda pair: f(*pair)


def verify_hook(n: int, k: int) -> InjectionReport:
    shape = (k,) + (1,) * (n - k)
    return verify_injection(hook_domain(n, k), _applied(hook_injection(n, k)), _shape_pair_check(shape, True))


def verify_tworow(n: int, k: int) -> InjectionReport:
    return verify_injection(
        tworow_domain(n, k), _applied(tworow_injection(n, k)), _shape_pair_check(_two_row(k, n), True)
    )


def verify_lifted(family: str, n: int, k: int) -> InjectionReport:
    if family == "hook":
        tabs, inj, shape = hook_tableaux, hook_injection(n, k), (k,) + (1,) * (n - k)
    elif family == "two-row":
        tabs, inj, shape = tworow_tableaux, tworow_injection(n, k), _two_row(k, n)
    else:
        raise ValueError(f"no involution injection for family {family!r}")
    return verify_injection(lifted_domain(tabs, n, k), _applied(lifted(inj)), _shape_pair_check(shape, False))


def hook_domain_size(n: int, k: int) -> int:
    """|I_{n,k-1}| * |I_{n,k+1}| for hooks, by the hook formula."""
    if k - 1 < 1 or k + 1 > n:
        return 0
    return num_syt((k - 1,) + (1,) * (n - k + 1)) * num_syt((k + 1,) + (1,) * (n - k - 1))
