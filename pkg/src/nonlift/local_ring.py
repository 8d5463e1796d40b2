"""Finite local rings Z/p^k and F_p[t]/(t^k), and projective geometry over them.

Both families are local with residue field F_p; an element is a unit exactly
when its residue is nonzero.  The first family has p * 1 != 0 as soon as
k >= 2 (in particular Z/p^2 is the ring of length-2 Witt vectors of F_p),
the second is the equicharacteristic control case with p * 1 = 0 always.

Elements are represented exactly: an integer in [0, p^k) for Z/p^k, and a
length-k tuple of coefficients (c0 + c1*t + ... ) with entries in [0, p)
for F_p[t]/(t^k).  Projective points over a ring A carry at least one unit
coordinate and are normalized by scaling the first unit coordinate to 1.

Lines in the projective plane over A are represented by their dual
coordinate vectors; joins, meets, collinearity and coplanarity are all
computed through exact cross products, cofactor vectors and determinants.
"""

from __future__ import annotations

import itertools

from .errors import (
    DegeneratePlaneError,
    IndeterminateIntersectionError,
    IndeterminateSpanError,
    InvalidParameterError,
    NotAProjectivePointError,
    UndecidableCollinearityError,
    UnsupportedDimensionError,
)
from .finite_geometry import MAX_DIM, ProjPointFp, check_prime
from .finite_geometry import collinear as fp_collinear

KINDS = ("zpk", "fpt")


class LocalRing:
    """One of the two coefficient ring families, fixed by (kind, p, k)."""

    __slots__ = ("kind", "p", "k", "size", "_modulus")

    def __init__(self, kind, p, k):
        if kind not in KINDS:
            raise InvalidParameterError(f"ring kind must be one of {KINDS}, got {kind!r}")
        check_prime(p)
        if not isinstance(k, int) or isinstance(k, bool) or k < 1:
            raise InvalidParameterError(f"ring length k must be an integer >= 1, got {k!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "size", p**k)
        object.__setattr__(self, "_modulus", p**k if kind == "zpk" else None)

    def __setattr__(self, name, value):
        raise AttributeError("LocalRing is immutable")

    # -- raw representation arithmetic ------------------------------------

    def norm_rep(self, rep):
        """Canonicalize a raw representation (int, or coefficient sequence)."""
        if self.kind == "zpk":
            if not isinstance(rep, int) or isinstance(rep, bool):
                raise InvalidParameterError(f"Z/p^k element must be an integer, got {rep!r}")
            return rep % self._modulus
        if isinstance(rep, int) and not isinstance(rep, bool):
            rep = (rep,)
        rep = tuple(int(c) % self.p for c in rep)
        if len(rep) > self.k:
            raise InvalidParameterError(
                f"coefficient vector longer than k={self.k}: {rep!r}"
            )
        return rep + (0,) * (self.k - len(rep))

    def add_rep(self, a, b):
        if self.kind == "zpk":
            return (a + b) % self._modulus
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub_rep(self, a, b):
        if self.kind == "zpk":
            return (a - b) % self._modulus
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg_rep(self, a):
        if self.kind == "zpk":
            return (-a) % self._modulus
        return tuple((-x) % self.p for x in a)

    def mul_rep(self, a, b):
        if self.kind == "zpk":
            return (a * b) % self._modulus
        out = [0] * self.k
        for i, x in enumerate(a):
            if x:
                for j in range(self.k - i):
                    out[i + j] = (out[i + j] + x * b[j]) % self.p
        return tuple(out)

    def residue_rep(self, a):
        return a % self.p if self.kind == "zpk" else a[0]

    def unit_rep(self, a):
        return self.residue_rep(a) != 0

    def inv_rep(self, a):
        if not self.unit_rep(a):
            raise InvalidParameterError(f"{a!r} is not a unit in {self}")
        if self.kind == "zpk":
            return pow(a, -1, self._modulus)
        p = self.p
        b = [pow(a[0], -1, p)]
        for m in range(1, self.k):
            s = sum(a[i] * b[m - i] for i in range(1, m + 1)) % p
            b.append((-b[0] * s) % p)
        return tuple(b)

    def zero_rep(self):
        return 0 if self.kind == "zpk" else (0,) * self.k

    def one_rep(self):
        return 1 if self.kind == "zpk" else (1,) + (0,) * (self.k - 1)

    def int_rep(self, n):
        """Representation of n * 1 for an ordinary integer n."""
        if self.kind == "zpk":
            return n % self._modulus
        return (n % self.p,) + (0,) * (self.k - 1)

    def reps(self):
        """All raw representations in ascending lexicographic order."""
        if self.kind == "zpk":
            return list(range(self.size))
        return list(itertools.product(range(self.p), repeat=self.k))

    def lifts_of_residue(self, r):
        """All representations reducing to residue r, ascending."""
        r = int(r) % self.p
        if self.kind == "zpk":
            return [r + self.p * m for m in range(self.p ** (self.k - 1))]
        return [(r,) + tail for tail in itertools.product(range(self.p), repeat=self.k - 1)]

    # -- element interface -------------------------------------------------

    def elem(self, value):
        """Wrap an integer n (meaning n * 1) or a raw representation."""
        return RingElem(self, value)

    @property
    def zero(self):
        return RingElem(self, self.zero_rep())

    @property
    def one(self):
        return RingElem(self, self.one_rep())

    @property
    def p_one(self):
        """The element p * 1, whose vanishing is the whole story."""
        return RingElem(self, self.int_rep(self.p))

    @property
    def p_vanishes(self):
        return self.p_one == self.zero

    def elements(self):
        return [RingElem(self, rep) for rep in self.reps()]

    # -- misc ---------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LocalRing):
            return NotImplemented
        return (self.kind, self.p, self.k) == (other.kind, other.p, other.k)

    def __hash__(self):
        return hash((self.kind, self.p, self.k))

    def __repr__(self):
        return f"LocalRing({self.kind!r}, p={self.p}, k={self.k})"

    def __str__(self):
        if self.kind == "zpk":
            return f"Z/{self.size}"
        if self.k == 1:
            return f"F_{self.p}"
        return f"F_{self.p}[t]/(t^{self.k})"

    def to_json(self):
        return {"kind": self.kind, "p": self.p, "k": self.k}

    @classmethod
    def from_json(cls, doc):
        return cls(doc["kind"], doc["p"], doc["k"])


def ring_make(kind, p, k):
    """Construct one of the two supported coefficient rings."""
    return LocalRing(kind, p, k)


class RingElem:
    """An element of a LocalRing; thin wrapper over the raw representation."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring, rep):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rep", ring.norm_rep(rep))

    def __setattr__(self, name, value):
        raise AttributeError("RingElem is immutable")

    def _coerce(self, other):
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise InvalidParameterError("elements of different rings")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.elem(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElem(self.ring, self.ring.add_rep(self.rep, other.rep))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElem(self.ring, self.ring.sub_rep(self.rep, other.rep))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElem(self.ring, self.ring.sub_rep(other.rep, self.rep))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElem(self.ring, self.ring.mul_rep(self.rep, other.rep))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElem(self.ring, self.ring.neg_rep(self.rep))

    @property
    def is_unit(self):
        return self.ring.unit_rep(self.rep)

    @property
    def is_zero(self):
        return self.rep == self.ring.zero_rep()

    @property
    def residue(self):
        return self.ring.residue_rep(self.rep)

    def inverse(self):
        return RingElem(self.ring, self.ring.inv_rep(self.rep))

    def sort_key(self):
        return self.rep

    def __eq__(self, other):
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.ring == other.ring and self.rep == other.rep

    def __hash__(self):
        return hash((self.ring, self.rep))

    def __repr__(self):
        return f"{self!s} in {self.ring}"

    def __str__(self):
        if self.ring.kind == "zpk":
            return str(self.rep)
        terms = []
        for i, c in enumerate(self.rep):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("t" if c == 1 else f"{c}*t")
            else:
                terms.append(f"t^{i}" if c == 1 else f"{c}*t^{i}")
        return " + ".join(terms) if terms else "0"

    def to_json(self):
        return self.rep if self.ring.kind == "zpk" else list(self.rep)


class ProjPointA:
    """A point of P^n(A) in canonical form (first unit coordinate 1)."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring, coords):
        elems = []
        for c in coords:
            if isinstance(c, RingElem):
                if c.ring != ring:
                    raise InvalidParameterError("coordinate from a different ring")
                elems.append(c)
            else:
                elems.append(ring.elem(c))
        if not 1 <= len(elems) - 1 <= MAX_DIM:
            raise UnsupportedDimensionError(
                f"projective points need 2 to {MAX_DIM + 1} coordinates, got {len(elems)}"
            )
        pivot = next((i for i, c in enumerate(elems) if c.is_unit), None)
        if pivot is None:
            raise NotAProjectivePointError(
                f"no unit coordinate in {[str(c) for c in elems]} over {ring}"
            )
        inv = elems[pivot].inverse()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coords", tuple(c * inv for c in elems))

    def __setattr__(self, name, value):
        raise AttributeError("ProjPointA is immutable")

    @property
    def dim(self):
        return len(self.coords) - 1

    def reduce(self):
        """Image in P^n(F_p) under the residue map."""
        return ProjPointFp(tuple(c.residue for c in self.coords), self.ring.p)

    def __eq__(self, other):
        if not isinstance(other, ProjPointA):
            return NotImplemented
        return self.ring == other.ring and self.coords == other.coords

    def __hash__(self):
        return hash((self.ring, tuple(c.rep for c in self.coords)))

    def __repr__(self):
        return f"({':'.join(str(c) for c in self.coords)}) over {self.ring}"

    def sort_key(self):
        return tuple(c.rep for c in self.coords)

    def to_json(self):
        return {
            "ring": self.ring.to_json(),
            "coords": [c.to_json() for c in self.coords],
        }

    @classmethod
    def from_json(cls, doc):
        ring = LocalRing.from_json(doc["ring"])
        return cls(ring, [ring.elem(c if isinstance(c, int) else tuple(c)) for c in doc["coords"]])


def point_normalize(coords, ring=None):
    """Canonical projective point from a coordinate vector.

    Accepts RingElem coordinates (ring optional) or raw values with an
    explicit ring.  Raises NotAProjectivePointError when no coordinate is
    a unit.
    """
    coords = list(coords)
    if ring is None:
        for c in coords:
            if isinstance(c, RingElem):
                ring = c.ring
                break
        if ring is None:
            raise InvalidParameterError("point_normalize needs a ring")
    return ProjPointA(ring, coords)


def point_reduce(x):
    """Residue image of a projective point over A in P^n(F_p)."""
    if not isinstance(x, ProjPointA):
        raise InvalidParameterError("point_reduce expects a ProjPointA")
    return x.reduce()


def enumerate_lifts(x, ring):
    """All points of P^2(A) reducing to the plane point x, ascending.

    The canonical form fixes the pivot coordinate to 1; every coordinate
    before it runs over the maximal ideal and every one after it over the
    lifts of its residue, p^(2(k-1)) points in total.
    """
    if not isinstance(x, ProjPointFp):
        raise InvalidParameterError("enumerate_lifts expects a ProjPointFp")
    if x.dim != 2:
        raise UnsupportedDimensionError("enumerate_lifts is defined in ambient dimension 2")
    if ring.p != x.p:
        raise InvalidParameterError(
            f"residue characteristics differ: point over F_{x.p}, ring {ring}"
        )
    pivot = next(i for i, c in enumerate(x.coords) if c)
    options = []
    for i, c in enumerate(x.coords):
        if i < pivot:
            options.append(ring.lifts_of_residue(0))
        elif i == pivot:
            options.append([ring.one_rep()])
        else:
            options.append(ring.lifts_of_residue(c))
    out = []
    for combo in itertools.product(*options):
        out.append(ProjPointA(ring, [ring.elem(rep) for rep in combo]))
    return out


def _same_plane_points(points, dim):
    ring = points[0].ring
    for x in points:
        if not isinstance(x, ProjPointA) or x.ring != ring:
            raise InvalidParameterError("points must share one coefficient ring")
        if x.dim != dim:
            raise UnsupportedDimensionError(
                f"operation defined in ambient dimension {dim}, got {x.dim}"
            )
    return ring


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot_elems(u, v):
    total = u[0] * v[0]
    for a, b in zip(u[1:], v[1:]):
        total = total + a * b
    return total


def _det3(rows):
    a, b, c = rows
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def _det4(rows):
    total = None
    for j in range(4):
        minor = [[row[c] for c in range(4) if c != j] for row in rows[1:]]
        term = rows[0][j] * _det3(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


class LineA:
    """A line of P^2(A), represented by its dual coordinate vector.

    The optional `through` pair records the two points that produced the
    line; it is provenance only and takes no part in equality.
    """

    __slots__ = ("dual", "through")

    def __init__(self, dual, through=None):
        if not isinstance(dual, ProjPointA) or dual.dim != 2:
            raise InvalidParameterError("a plane-line dual is a 3-coordinate point")
        object.__setattr__(self, "dual", dual)
        object.__setattr__(self, "through", through)

    def __setattr__(self, name, value):
        raise AttributeError("LineA is immutable")

    @property
    def ring(self):
        return self.dual.ring

    def contains(self, x):
        return _dot_elems(self.dual.coords, x.coords).is_zero

    def reduce_dual(self):
        return self.dual.reduce()

    def __eq__(self, other):
        if not isinstance(other, LineA):
            return NotImplemented
        return self.dual == other.dual

    def __hash__(self):
        return hash(("LineA", self.dual))

    def __repr__(self):
        return f"LineA(dual={self.dual!r})"

    def to_json(self):
        return {"dual": [c.to_json() for c in self.dual.coords]}


def line_through_A(x, y):
    """The unique line of P^2(A) joining two points with distinct residues."""
    ring = _same_plane_points((x, y), 2)
    if x.reduce() == y.reduce():
        raise IndeterminateSpanError(
            f"points reduce to the same residue point {x.reduce()!r}; join not unique"
        )
    dual = ProjPointA(ring, _cross(x.coords, y.coords))
    line = LineA(dual, through=(x, y))
    assert line.contains(x) and line.contains(y)
    return line


def line_intersect_A(l1, l2):
    """The unique intersection point of two lines with distinct residue duals."""
    if not isinstance(l1, LineA) or not isinstance(l2, LineA):
        raise InvalidParameterError("line_intersect_A expects LineA arguments")
    if l1.ring != l2.ring:
        raise InvalidParameterError("lines over different rings")
    if l1.reduce_dual() == l2.reduce_dual():
        raise IndeterminateIntersectionError(
            "lines reduce to the same residue line; intersection not unique"
        )
    point = ProjPointA(l1.ring, _cross(l1.dual.coords, l2.dual.coords))
    assert l1.contains(point) and l2.contains(point)
    return point


def collinear_A(x, y, z):
    """Determinant collinearity test for three plane points over A.

    Decisive whenever at least two of the three residues differ; when all
    three residues coincide the determinant always vanishes and the test
    says nothing, so that case raises UndecidableCollinearityError.
    """
    _same_plane_points((x, y, z), 2)
    if x.reduce() == y.reduce() == z.reduce():
        raise UndecidableCollinearityError(
            "all three points share one residue; determinant test undecidable"
        )
    return _det3([x.coords, y.coords, z.coords]).is_zero


class PlaneA:
    """A plane of P^3(A), represented by its dual coordinate vector."""

    __slots__ = ("dual", "through")

    def __init__(self, dual, through=None):
        if not isinstance(dual, ProjPointA) or dual.dim != 3:
            raise InvalidParameterError("a plane dual is a 4-coordinate point")
        object.__setattr__(self, "dual", dual)
        object.__setattr__(self, "through", through)

    def __setattr__(self, name, value):
        raise AttributeError("PlaneA is immutable")

    @property
    def ring(self):
        return self.dual.ring

    def contains(self, x):
        return _dot_elems(self.dual.coords, x.coords).is_zero

    def __eq__(self, other):
        if not isinstance(other, PlaneA):
            return NotImplemented
        return self.dual == other.dual

    def __hash__(self):
        return hash(("PlaneA", self.dual))

    def __repr__(self):
        return f"PlaneA(dual={self.dual!r})"


def plane_through_A(x1, x2, x3):
    """The unique plane of P^3(A) through three points with non-collinear residues."""
    ring = _same_plane_points((x1, x2, x3), 3)
    if fp_collinear(x1.reduce(), x2.reduce(), x3.reduce()):
        raise DegeneratePlaneError("residues are collinear; plane not unique")
    rows = [x1.coords, x2.coords, x3.coords]
    cof = []
    for j in range(4):
        minor = [[row[c] for c in range(4) if c != j] for row in rows]
        term = _det3(minor)
        if j % 2:
            term = -term
        cof.append(term)
    plane = PlaneA(ProjPointA(ring, cof), through=(x1, x2, x3))
    assert plane.contains(x1) and plane.contains(x2) and plane.contains(x3)
    return plane


def coplanar_A(x1, x2, x3, x4):
    """Determinant coplanarity test for four points of P^3(A)."""
    _same_plane_points((x1, x2, x3, x4), 3)
    return _det4([x1.coords, x2.coords, x3.coords, x4.coords]).is_zero
