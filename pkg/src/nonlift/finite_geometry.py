"""Exact projective geometry over prime fields in ambient dimension up to 3.

Points of P^n(F_p) are kept in a canonical form, scaling the first nonzero
coordinate to 1, which makes representatives unique, hashable, and totally
ordered by their coordinate tuples.  Lines are stored extensionally as their
p+1 member points in sorted order; planes of P^3 are represented through
their dual points.  Everything is small exact integer arithmetic.

The counts work out to 1 + p + ... + p^n points in P^n, the same number of
planes as points in P^3 by duality, and 1 + p + 2p^2 + p^3 + p^4 lines in
P^3 (the lines form the Grassmannian of 2-subspaces of a 4-space).
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from dataclasses import dataclass, field

from .errors import (
    DegenerateSpanError,
    InvalidParameterError,
    UnsupportedDimensionError,
)

MAX_DIM = 3


def check_prime(p):
    """Validate p by trial division and return it unchanged."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise InvalidParameterError(f"p must be an integer, got {p!r}")
    if p < 2:
        raise InvalidParameterError(f"p must be a prime >= 2, got {p}")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise InvalidParameterError(f"p must be prime, got {p} = {d} * {p // d}")
        d += 1
    return p


def _check_dim(n, *, low=0):
    if not isinstance(n, int) or isinstance(n, bool) or n < low:
        raise InvalidParameterError(f"ambient dimension must be an integer >= {low}, got {n!r}")
    if n > MAX_DIM:
        raise UnsupportedDimensionError(f"ambient dimension {n} not supported (max {MAX_DIM})")
    return n


class ProjPointFp:
    """A point of P^n(F_p) in canonical form (first nonzero coordinate 1)."""

    __slots__ = ("p", "coords")

    def __init__(self, coords, p):
        check_prime(p)
        coords = tuple(coords)
        _check_dim(len(coords) - 1)
        reduced = tuple(int(c) % p for c in coords)
        pivot = next((i for i, c in enumerate(reduced) if c), None)
        if pivot is None:
            raise InvalidParameterError("all coordinates vanish; not a projective point")
        inv = pow(reduced[pivot], -1, p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coords", tuple((c * inv) % p for c in reduced))

    def __setattr__(self, name, value):
        raise AttributeError("ProjPointFp is immutable")

    @property
    def dim(self):
        return len(self.coords) - 1

    def __eq__(self, other):
        if not isinstance(other, ProjPointFp):
            return NotImplemented
        return self.p == other.p and self.coords == other.coords

    def __hash__(self):
        return hash((self.p, self.coords))

    def __lt__(self, other):
        if not isinstance(other, ProjPointFp) or other.p != self.p:
            return NotImplemented
        return self.coords < other.coords

    def __le__(self, other):
        if not isinstance(other, ProjPointFp) or other.p != self.p:
            return NotImplemented
        return self.coords <= other.coords

    def __repr__(self):
        return f"({':'.join(str(c) for c in self.coords)})/F{self.p}"


def fp_point(coords, p):
    """Shorthand constructor for ProjPointFp."""
    return ProjPointFp(coords, p)


def _dot(u, v, p):
    return sum(a * b for a, b in zip(u, v)) % p


class LineFp:
    """A line of P^n(F_p), stored extensionally as its p+1 sorted points."""

    __slots__ = ("p", "points")

    def __init__(self, points):
        points = tuple(sorted(points))
        if not points:
            raise InvalidParameterError("a line needs points")
        p = points[0].p
        dim = points[0].dim
        for pt in points:
            if pt.p != p or pt.dim != dim:
                raise InvalidParameterError("line points must share one ambient space")
        if len(set(points)) != p + 1:
            raise InvalidParameterError(
                f"a line over F_{p} has exactly {p + 1} distinct points, got {len(set(points))}"
            )
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "points", points)

    def __setattr__(self, name, value):
        raise AttributeError("LineFp is immutable")

    @property
    def dim(self):
        return self.points[0].dim

    def __contains__(self, pt):
        i = bisect_left(self.points, pt)
        return i < len(self.points) and self.points[i] == pt

    def __eq__(self, other):
        if not isinstance(other, LineFp):
            return NotImplemented
        return self.p == other.p and self.points == other.points

    def __hash__(self):
        return hash((self.p, self.points))

    def __lt__(self, other):
        if not isinstance(other, LineFp) or other.p != self.p:
            return NotImplemented
        return self._key() < other._key()

    def _key(self):
        return tuple(pt.coords for pt in self.points)

    def __repr__(self):
        return f"LineFp[{', '.join(repr(pt) for pt in self.points)}]"


def line_through(x, y):
    """The unique line joining two distinct points.

    Members are x + t*y for t in F_p together with y, each put in canonical
    form.  Raises DegenerateSpanError when x == y.
    """
    if not isinstance(x, ProjPointFp) or not isinstance(y, ProjPointFp):
        raise InvalidParameterError("line_through expects ProjPointFp arguments")
    if x.p != y.p or x.dim != y.dim:
        raise InvalidParameterError("points live in different ambient spaces")
    if x == y:
        raise DegenerateSpanError(f"coincident points {x!r} span no line")
    p = x.p
    members = [y]
    for t in range(p):
        members.append(
            ProjPointFp(tuple((a + t * b) % p for a, b in zip(x.coords, y.coords)), p)
        )
    return LineFp(members)


def collinear(x, y, z):
    """Whether three (not necessarily distinct) points lie on one line.

    Decided exactly as rank of the 3 x (n+1) coordinate matrix being at
    most 2; symmetric in the arguments.
    """
    pts = (x, y, z)
    p = pts[0].p
    dim = pts[0].dim
    for pt in pts:
        if not isinstance(pt, ProjPointFp) or pt.p != p or pt.dim != dim:
            raise InvalidParameterError("collinear expects points of one ambient space")
    return _rank_mod_p([pt.coords for pt in pts], p) <= 2


def coplanar(x, y, z, w):
    """Whether four points of P^3(F_p) lie on one plane (4x4 determinant test)."""
    pts = (x, y, z, w)
    p = pts[0].p
    for pt in pts:
        if not isinstance(pt, ProjPointFp) or pt.p != p:
            raise InvalidParameterError("coplanar expects points of one ambient space")
        if pt.dim != 3:
            raise UnsupportedDimensionError("coplanar is defined in ambient dimension 3")
    return _det_int([pt.coords for pt in pts]) % p == 0


def _rank_mod_p(rows, p):
    mat = [list(r) for r in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    row = 0
    for col in range(cols):
        piv = next((r for r in range(row, len(mat)) if mat[r][col] % p), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = pow(mat[row][col] % p, -1, p)
        mat[row] = [(v * inv) % p for v in mat[row]]
        for r in range(len(mat)):
            if r != row and mat[r][col] % p:
                f = mat[r][col] % p
                mat[r] = [(a - f * b) % p for a, b in zip(mat[r], mat[row])]
        row += 1
        rank += 1
        if row == len(mat):
            break
    return rank


def _det_int(rows):
    """Exact integer determinant by cofactor expansion (tiny matrices only)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j in range(n):
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        term = rows[0][j] * _det_int(minor)
        total += term if j % 2 == 0 else -term
    return total


def enumerate_points(n, p):
    """All points of P^n(F_p) in ascending lexicographic coordinate order."""
    check_prime(p)
    _check_dim(n)
    out = []
    for pivot in range(n, -1, -1):
        prefix = (0,) * pivot + (1,)
        for tail in itertools.product(range(p), repeat=n - pivot):
            out.append(ProjPointFp(prefix + tail, p))
    return out


def enumerate_lines(n, p):
    """All lines of P^n(F_p), n in {2, 3}, each exactly once, sorted.

    Lines correspond to reduced row echelon 2 x (n+1) matrices; expanding
    each echelon basis gives every member point already in canonical form,
    so no normalization or deduplication is needed.
    """
    check_prime(p)
    _check_dim(n)
    if n < 2:
        raise InvalidParameterError(f"lines need ambient dimension 2 or 3, got {n}")
    cols = n + 1
    lines = []
    for a in range(cols):
        for b in range(a + 1, cols):
            free0 = [j for j in range(a + 1, cols) if j != b]
            free1 = [j for j in range(b + 1, cols)]
            for vals0 in itertools.product(range(p), repeat=len(free0)):
                r0 = [0] * cols
                r0[a] = 1
                for j, v in zip(free0, vals0):
                    r0[j] = v
                for vals1 in itertools.product(range(p), repeat=len(free1)):
                    r1 = [0] * cols
                    r1[b] = 1
                    for j, v in zip(free1, vals1):
                        r1[j] = v
                    members = [ProjPointFp(tuple(r1), p)]
                    for t in range(p):
                        members.append(
                            ProjPointFp(tuple((u + t * v) % p for u, v in zip(r0, r1)), p)
                        )
                    lines.append(LineFp(members))
    lines.sort()
    return lines


def line_dual(line):
    """Dual point of a line in P^2 (coefficients of its linear equation)."""
    if line.dim != 2:
        raise UnsupportedDimensionError("line duals live in ambient dimension 2")
    x, y = line.points[0], line.points[1]
    u, v = x.coords, y.coords
    p = line.p
    d = (
        (u[1] * v[2] - u[2] * v[1]) % p,
        (u[2] * v[0] - u[0] * v[2]) % p,
        (u[0] * v[1] - u[1] * v[0]) % p,
    )
    return ProjPointFp(d, p)


def line_from_dual(d):
    """Line of P^2 cut out by the linear form with coefficient vector d."""
    if d.dim != 2:
        raise UnsupportedDimensionError("line duals live in ambient dimension 2")
    members = [pt for pt in enumerate_points(2, d.p) if _dot(d.coords, pt.coords, d.p) == 0]
    return LineFp(members)


@dataclass(frozen=True)
class PlaneFp:
    """A plane of P^3(F_p): its dual point plus the sorted member indices."""

    dual: ProjPointFp
    point_indices: tuple


@dataclass(frozen=True)
class IncidenceConfig:
    """A finite point-line(-plane) configuration with its strict inclusions.

    Inclusions are child/parent pairs over a concatenated global index
    space: points first, then lines, then planes.  Only strict containments
    are listed (the reflexive closure is implicit); together with the
    point-in-plane pairs this makes the listed relation transitive.
    """

    dim: int
    p: int
    points: tuple
    lines: tuple
    planes: tuple = ()
    inclusions: tuple = ()

    @property
    def line_offset(self):
        return len(self.points)

    @property
    def plane_offset(self):
        return len(self.points) + len(self.lines)

    def to_json(self):
        idx = {pt: i for i, pt in enumerate(self.points)}
        return {
            "dim": self.dim,
            "p": self.p,
            "points": [list(pt.coords) for pt in self.points],
            "lines": [
                sorted(idx[pt] for pt in line.points if pt in idx) for line in self.lines
            ],
            "planes": [list(pl.point_indices) for pl in self.planes],
            "inclusions": [list(pair) for pair in self.inclusions],
        }

    @classmethod
    def from_json(cls, doc):
        """Rebuild a configuration from its JSON document.

        Line entries are index lists relative to the listed points.  A full
        configuration lists all p+1 members per line; a restricted one may
        list fewer, in which case the line is recovered by spanning its
        first two listed members.
        """
        p = check_prime(doc["p"])
        points = tuple(ProjPointFp(c, p) for c in doc["points"])
        lines = []
        for members in doc["lines"]:
            if len(members) == p + 1:
                lines.append(LineFp([points[i] for i in members]))
            elif len(members) >= 2:
                lines.append(line_through(points[members[0]], points[members[1]]))
            else:
                raise InvalidParameterError("line entry needs at least two member points")
        lines = tuple(lines)
        planes = tuple(
            PlaneFp(_plane_dual_from_members([points[i] for i in members], p), tuple(members))
            for members in doc["planes"]
        )
        return cls(
            dim=doc["dim"],
            p=p,
            points=points,
            lines=lines,
            planes=planes,
            inclusions=tuple(tuple(pair) for pair in doc["inclusions"]),
        )


def _plane_dual_from_members(members, p):
    for trio in itertools.combinations(members, 3):
        rows = [pt.coords for pt in trio]
        if _rank_mod_p(rows, p) == 3:
            d = tuple(
                (-1) ** j
                * _det_int([[r[c] for c in range(4) if c != j] for r in rows])
                % p
                for j in range(4)
            )
            return ProjPointFp(d, p)
    raise InvalidParameterError("plane members do not span a plane")


def incidence_config(n, p):
    """The full incidence configuration of P^n(F_p), n in {2, 3}."""
    check_prime(p)
    if n not in (2, 3):
        _check_dim(n)
        raise InvalidParameterError(f"incidence_config needs ambient dimension 2 or 3, got {n}")
    points = tuple(enumerate_points(n, p))
    lines = tuple(enumerate_lines(n, p))
    idx = {pt: i for i, pt in enumerate(points)}
    line_off = len(points)
    inclusions = []
    for li, line in enumerate(lines):
        for pt in line.points:
            inclusions.append((idx[pt], line_off + li))
    planes = ()
    if n == 3:
        plane_off = line_off + len(lines)
        built = []
        for d in points:
            member_idx = tuple(
                i for i, pt in enumerate(points) if _dot(d.coords, pt.coords, p) == 0
            )
            built.append(PlaneFp(d, member_idx))
        planes = tuple(built)
        for pi, plane in enumerate(planes):
            for i in plane.point_indices:
                inclusions.append((i, plane_off + pi))
        for pi, plane in enumerate(planes):
            member_set = set(plane.point_indices)
            for li, line in enumerate(lines):
                a, b = line.points[0], line.points[1]
                if idx[a] in member_set and idx[b] in member_set:
                    inclusions.append((line_off + li, plane_off + pi))
    return IncidenceConfig(
        dim=n,
        p=p,
        points=points,
        lines=lines,
        planes=planes,
        inclusions=tuple(inclusions),
    )


def mp_configuration(p):
    """The planar configuration pinned by forced propagation, with its lines.

    Points: (n:0:1) and (n+1:1:1) for 0 <= n <= p-1 together with (1:0:0),
    (0:1:0) and (1:1:0), always 2p+3 in total.  Lines: every line of
    P^2(F_p) meeting the point set in at least two points (the lines of the
    restriction matroid); listed lines keep their full p+1 members, while
    inclusions only relate the listed points to them.
    """
    check_prime(p)
    chosen = set()
    for n in range(p):
        chosen.add(ProjPointFp((n % p, 0, 1), p))
        chosen.add(ProjPointFp(((n + 1) % p, 1, 1), p))
    for c in ((1, 0, 0), (0, 1, 0), (1, 1, 0)):
        chosen.add(ProjPointFp(c, p))
    points = tuple(sorted(chosen))
    idx = {pt: i for i, pt in enumerate(points)}
    lines = tuple(
        line for line in enumerate_lines(2, p)
        if sum(1 for pt in line.points if pt in chosen) >= 2
    )
    line_off = len(points)
    inclusions = []
    for li, line in enumerate(lines):
        for pt in line.points:
            if pt in idx:
                inclusions.append((idx[pt], line_off + li))
    return IncidenceConfig(
        dim=2,
        p=p,
        points=points,
        lines=lines,
        planes=(),
        inclusions=tuple(inclusions),
    )
