"""Forced propagation of point lifts and the exhaustive search that audits it.

A map from the rational points of the plane over F_p to the plane over a
local coefficient ring A that preserves collinearity and fixes the standard
frame is forced, point by point: the image of every further point is the
meet of two joins of already-pinned points.  Chasing the chain

    next axis point   = join(previous diagonal point, (0:1:0)) ^ join((0:0:1), (1:0:0)),
    next diagonal pt  = join(that axis point, (1:1:0))         ^ join((1:1:1), (1:0:0)),

p steps along the axis returns to the start and pins (p*1 : 0 : 1) against
the already-pinned (0:0:1).  The two agree exactly when p * 1 = 0 in A, so
the element p * 1 is the whole obstruction: nonzero means no such map
exists, and the recorded trace is a replayable certificate of that.

The brute-force search below is the independent oracle: it enumerates every
frame-fixing assignment of lifts outright, pruning on violated collinear
triples, and must agree with the propagation verdict.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .errors import (
    BudgetExceededError,
    InvalidParameterError,
    MissingAssignmentError,
)
from .finite_geometry import (
    IncidenceConfig,
    ProjPointFp,
    check_prime,
    collinear,
    enumerate_lines,
    enumerate_points,
    line_from_dual,
)
from .local_ring import (
    LineA,
    LocalRing,
    ProjPointA,
    collinear_A,
    enumerate_lifts,
    line_intersect_A,
    line_through_A,
)

VERDICT_BLOCKED = "non-liftable"
VERDICT_OPEN = "liftable-not-excluded"

_ANCHOR_COORDS = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))


def frame_anchors(p):
    """The four standard frame points of P^2(F_p), in the fixed anchor order."""
    return tuple(ProjPointFp(c, p) for c in _ANCHOR_COORDS)


@dataclass(frozen=True)
class Frame:
    """Images of the four frame anchors in P^2(A)."""

    ring: LocalRing
    images: tuple

    def __post_init__(self):
        if len(self.images) != 4:
            raise InvalidParameterError("a frame fixes exactly four anchor images")
        p = self.ring.p
        anchors = frame_anchors(p)
        for anchor, img in zip(anchors, self.images):
            if not isinstance(img, ProjPointA) or img.ring != self.ring or img.dim != 2:
                raise InvalidParameterError("frame images must be plane points over the ring")
            if img.reduce() != anchor:
                raise InvalidParameterError(
                    f"frame image {img!r} does not reduce to its anchor {anchor!r}"
                )
        reductions = [img.reduce() for img in self.images]
        for i in range(4):
            trio = [reductions[j] for j in range(4) if j != i]
            if collinear(*trio):
                raise InvalidParameterError("frame image residues are not in general position")

    @classmethod
    def standard(cls, ring):
        imgs = tuple(
            ProjPointA(ring, [ring.elem(c) for c in coords]) for coords in _ANCHOR_COORDS
        )
        return cls(ring=ring, images=imgs)

    @property
    def is_standard(self):
        return self == Frame.standard(self.ring)

    def assignment(self):
        """Anchor point -> image, as a dict."""
        return dict(zip(frame_anchors(self.ring.p), self.images))


@dataclass(frozen=True)
class DerivationStep:
    """One forced step: the meet of two joins pins the target's image."""

    target: ProjPointFp
    line1: LineA
    line2: LineA
    derived: ProjPointA


@dataclass(frozen=True)
class PropagationTrace:
    """The full forced chain, ending in the step that closes the loop."""

    p: int
    ring: LocalRing
    frame: Frame
    steps: tuple
    status: str = "complete"

    def pinned_points(self):
        """Every residue point whose image the trace pinned, sorted."""
        pts = set(frame_anchors(self.p))
        pts.update(step.target for step in self.steps)
        return tuple(sorted(pts))

    def assignment(self):
        """Residue point -> forced image.  The closing step never overrides
        the frame value of its target; the clash, if any, lives in the
        Obstruction record instead."""
        out = self.frame.assignment()
        for step in self.steps:
            out.setdefault(step.target, step.derived)
        return out


@dataclass(frozen=True)
class Obstruction:
    """Outcome of the closing comparison: the element p * 1 must vanish."""

    element: object
    derived: ProjPointA
    required: ProjPointA
    verdict: str

    @property
    def is_zero(self):
        return self.element.is_zero


def _axis_point_fp(n, p):
    return ProjPointFp((n % p, 0, 1), p)


def _diag_point_fp(n, p):
    return ProjPointFp(((n + 1) % p, 1, 1), p)


def propagate_forced_lift(p, ring):
    """Run the forced chain over the given ring with the standard frame.

    Returns (trace, obstruction).  Every join and meet along the way is
    well-defined (distinct residues); this is asserted at each step, as is
    the derived-coordinate law: the n-th axis point comes out at
    (n*1 : 0 : 1) and the n-th diagonal point at ((n+1)*1 : 1 : 1),
    projectively.
    """
    check_prime(p)
    if not isinstance(ring, LocalRing):
        raise InvalidParameterError("propagate_forced_lift expects a LocalRing")
    if ring.p != p:
        raise InvalidParameterError(
            f"residue characteristic mismatch: p={p} but ring {ring} has p={ring.p}"
        )
    frame = Frame.standard(ring)
    e0_img, e1_img, e2_img, unit_img = frame.images
    steps = []

    def derive(target, la, lb, expected_coords):
        pt = line_intersect_A(la, lb)
        expected = ProjPointA(ring, [ring.elem(c) for c in expected_coords])
        assert pt == expected, (
            f"derived {pt!r} violates the derived-coordinate law, expected {expected!r}"
        )
        steps.append(DerivationStep(target=target, line1=la, line2=lb, derived=pt))
        return pt

    # the fifth frame-determined point (1:1:0)
    corner = derive(
        ProjPointFp((1, 1, 0), p),
        line_through_A(e2_img, unit_img),
        line_through_A(e0_img, e1_img),
        (1, 1, 0),
    )

    axis_line = line_through_A(e2_img, e0_img)      # residue line y = 0
    diag_line = line_through_A(unit_img, e0_img)    # residue line y = z
    prev_diag = unit_img                            # image of (1:1:1)
    for n in range(1, p):
        axis_pt = derive(
            _axis_point_fp(n, p),
            line_through_A(prev_diag, e1_img),
            axis_line,
            (n, 0, 1),
        )
        prev_diag = derive(
            _diag_point_fp(n, p),
            line_through_A(axis_pt, corner),
            diag_line,
            (n + 1, 1, 1),
        )

    # closing step: one more walk along the axis lands on (p*1 : 0 : 1),
    # whose target residue is the already-pinned (0:0:1)
    final = derive(
        _axis_point_fp(p, p),
        line_through_A(prev_diag, e1_img),
        axis_line,
        (p, 0, 1),
    )

    element = ring.p_one
    required = ProjPointA(ring, [ring.elem(c) for c in (0, 0, 1)])
    agrees = final == required
    assert agrees == element.is_zero
    obstruction = Obstruction(
        element=element,
        derived=final,
        required=required,
        verdict=VERDICT_OPEN if element.is_zero else VERDICT_BLOCKED,
    )
    trace = PropagationTrace(p=p, ring=ring, frame=frame, steps=tuple(steps))
    return trace, obstruction


def collinear_triples(p):
    """All collinear triples of distinct points of P^2(F_p).

    Each triple lies on exactly one line, so walking the lines lists every
    triple once.  Triples with a repeated point are omitted: their images
    are always collinear (a repeated row kills the determinant), so they
    constrain nothing.
    """
    triples = []
    for line in enumerate_lines(2, p):
        triples.extend(itertools.combinations(line.points, 3))
    return triples


def _images_collinear(a, b, c):
    if a.reduce() == b.reduce() == c.reduce():
        return True  # determinant test undecidable; vacuously accepted
    return collinear_A(a, b, c)


def check_collinearity_preserving(mapping, p, ring):
    """All collinear triples whose images fail the determinant test.

    `mapping` must assign a point of P^2(A) to every point of P^2(F_p).
    Triples whose three images share one residue are vacuously accepted.
    Returns the violating triples; an empty tuple means the map preserves
    collinearity.
    """
    check_prime(p)
    points = enumerate_points(2, p)
    for pt in points:
        if pt not in mapping:
            raise MissingAssignmentError(f"no image assigned for {pt!r}")
        img = mapping[pt]
        if not isinstance(img, ProjPointA) or img.ring != ring or img.dim != 2:
            raise InvalidParameterError(f"image of {pt!r} is not a plane point over {ring}")
    violations = []
    for x, y, z in collinear_triples(p):
        if not _images_collinear(mapping[x], mapping[y], mapping[z]):
            violations.append((x, y, z))
    return tuple(violations)


def trivial_lift_map(p, ring):
    """The coordinate-wise lift: each canonical F_p coordinate re-read in A."""
    check_prime(p)
    return {
        pt: ProjPointA(ring, [ring.elem(c) for c in pt.coords])
        for pt in enumerate_points(2, p)
    }


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a brute-force search: the maps found plus node accounting."""

    maps: tuple
    nodes_explored: int
    budget: int

    def __len__(self):
        return len(self.maps)

    def __iter__(self):
        return iter(self.maps)


DEFAULT_BUDGET = 10**7


def brute_force_lift_search(p, ring, frame=None, budget=DEFAULT_BUDGET, jobs=1):
    """Exhaustive search over all frame-fixing lift assignments.

    Walks the non-frame points in lexicographic order;candidates for each
    point are its lifts in ascending order.  After every assignment all
    newly-completed collinear triples are checked, so dead branches die at
    the first violated triple.  Every explored candidate counts one node
    against the budget.

    `jobs` shards the top-level candidate list into contiguous chunks,
    searched in order; results and node counts are identical for every
    value of jobs.
    """
    check_prime(p)
    if ring.p != p:
        raise InvalidParameterError(
            f"residue characteristic mismatch: p={p} but ring {ring} has p={ring.p}"
        )
    if not isinstance(budget, int) or isinstance(budget, bool) or budget < 1:
        raise InvalidParameterError(f"budget must be a positive integer, got {budget!r}")
    if not isinstance(jobs, int) or isinstance(jobs, bool) or jobs < 1:
        raise InvalidParameterError(f"jobs must be a positive integer, got {jobs!r}")
    if frame is None:
        frame = Frame.standard(ring)
    elif frame.ring != ring:
        raise InvalidParameterError("frame ring differs from search ring")

    points = enumerate_points(2, p)
    assignment = frame.assignment()
    free = [pt for pt in points if pt not in assignment]
    rank = {pt: -1 for pt in assignment}
    rank.update({pt: m for m, pt in enumerate(free)})
    completed = [[] for _ in free]
    for triple in collinear_triples(p):
        r = max(rank[x] for x in triple)
        if r >= 0:
            completed[r].append(triple)
    lifts = [enumerate_lifts(pt, ring) for pt in free]

    found = []
    nodes = 0

    def extend(m):
        nonlocal nodes
        if m == len(free):
            final = dict(assignment)
            assert not check_collinearity_preserving(final, p, ring)
            found.append(final)
            return
        pt = free[m]
        for cand in lifts[m]:
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(nodes, budget)
            assignment[pt] = cand
            if all(
                _images_collinear(assignment[x], assignment[y], assignment[z])
                for x, y, z in completed[m]
            ):
                extend(m + 1)
        assignment.pop(pt, None)

    if not free:
        final = dict(assignment)
        if not check_collinearity_preserving(final, p, ring):
            found.append(final)
        return SearchResult(maps=tuple(found), nodes_explored=0, budget=budget)

    top = lifts[0]
    chunk = max(1, -(-len(top) // jobs))
    shards = [top[i : i + chunk] for i in range(0, len(top), chunk)]
    first = free[0]
    for shard in shards:
        for cand in shard:
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(nodes, budget)
            assignment[first] = cand
            if all(
                _images_collinear(assignment[x], assignment[y], assignment[z])
                for x, y, z in completed[0]
            ):
                extend(1)
        assignment.pop(first, None)
    return SearchResult(maps=tuple(found), nodes_explored=nodes, budget=budget)


def search_over_all_frames(p, ring, budget=DEFAULT_BUDGET):
    """Spot check: rerun the search for every choice of frame anchor lifts.

    Returns (maps, nodes) aggregated over all frames.  Desk scale only; at
    p=2 over Z/4 this is 4^4 frames of at most 4^3 assignments each.
    """
    check_prime(p)
    anchors = frame_anchors(p)
    all_maps = []
    total_nodes = 0
    options = [enumerate_lifts(a, ring) for a in anchors]
    for images in itertools.product(*options):
        if total_nodes >= budget:
            raise BudgetExceededError(total_nodes, budget)
        frame = Frame(ring=ring, images=tuple(images))
        result = brute_force_lift_search(
            p, ring, frame=frame, budget=budget - total_nodes
        )
        all_maps.extend(result.maps)
        total_nodes += result.nodes_explored
    return tuple(all_maps), total_nodes


def extract_used_configuration(trace):
    """The point-line configuration a trace actually touched.

    Points: every residue point pinned by the trace (frame anchors plus all
    step targets).  Lines: the residue lines of every join used in a step.
    The result's point set must coincide with mp_configuration(trace.p)'s;
    tests hold the two together.
    """
    if not isinstance(trace, PropagationTrace):
        raise InvalidParameterError("extract_used_configuration expects a PropagationTrace")
    if trace.status != "complete":
        raise InvalidParameterError(f"trace is not complete: status {trace.status!r}")
    points = trace.pinned_points()
    duals = []
    for step in trace.steps:
        for line in (step.line1, step.line2):
            d = line.reduce_dual()
            if d not in duals:
                duals.append(d)
    lines = tuple(sorted(line_from_dual(d) for d in duals))
    chosen = set(points)
    idx = {pt: i for i, pt in enumerate(points)}
    line_off = len(points)
    inclusions = []
    for li, line in enumerate(lines):
        for pt in line.points:
            if pt in chosen:
                inclusions.append((idx[pt], line_off + li))
    return IncidenceConfig(
        dim=2,
        p=trace.p,
        points=points,
        lines=lines,
        planes=(),
        inclusions=tuple(inclusions),
    )


# -- certificates -----------------------------------------------------------


def certificate_json(trace, obstruction):
    """The replayable JSON document for a propagation run."""
    return {
        "p": trace.p,
        "ring": trace.ring.to_json(),
        "frame": "standard",
        "steps": [
            {
                "target": list(step.target.coords),
                "line1": step.line1.to_json(),
                "line2": step.line2.to_json(),
                "derived": [c.to_json() for c in step.derived.coords],
            }
            for step in trace.steps
        ],
        "obstruction": {
            "element": obstruction.element.to_json(),
            "isZero": obstruction.is_zero,
        },
        "verdict": obstruction.verdict,
    }


def certificate_parse(doc):
    """Rebuild (trace, obstruction) from a certificate document."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    p = check_prime(doc["p"])
    ring = LocalRing.from_json(doc["ring"])
    if doc.get("frame") != "standard":
        raise InvalidParameterError(f"unknown frame tag {doc.get('frame')!r}")
    frame = Frame.standard(ring)

    def elem_of(raw):
        return ring.elem(raw if isinstance(raw, int) else tuple(raw))

    def point_of(raws):
        return ProjPointA(ring, [elem_of(raw) for raw in raws])

    steps = []
    for raw in doc["steps"]:
        steps.append(
            DerivationStep(
                target=ProjPointFp(raw["target"], p),
                line1=LineA(point_of(raw["line1"]["dual"])),
                line2=LineA(point_of(raw["line2"]["dual"])),
                derived=point_of(raw["derived"]),
            )
        )
    if not steps:
        raise InvalidParameterError("certificate has no derivation steps")
    element = elem_of(doc["obstruction"]["element"])
    if bool(doc["obstruction"]["isZero"]) != element.is_zero:
        raise InvalidParameterError("certificate isZero flag contradicts its element")
    verdict = doc["verdict"]
    if verdict not in (VERDICT_BLOCKED, VERDICT_OPEN):
        raise InvalidParameterError(f"unknown verdict {verdict!r}")
    obstruction = Obstruction(
        element=element,
        derived=steps[-1].derived,
        required=ProjPointA(ring, [ring.elem(c) for c in (0, 0, 1)]),
        verdict=verdict,
    )
    trace = PropagationTrace(p=p, ring=ring, frame=frame, steps=tuple(steps))
    return trace, obstruction


def _fmt_fp(pt):
    return "(" + ":".join(str(c) for c in pt.coords) + ")"


def _fmt_a(pt):
    return "(" + ":".join(str(c) for c in pt.coords) + ")"


def certificate_render(trace, obstruction, format="text"):
    """Human-readable or JSON rendering of a propagation certificate."""
    if format == "json":
        return json.dumps(certificate_json(trace, obstruction), indent=2)
    if format != "text":
        raise InvalidParameterError(f"unknown certificate format {format!r}")
    ring = trace.ring
    lines = [
        "lift propagation certificate",
        f"p: {trace.p}",
        f"ring: {ring}",
        "frame: standard (1:0:0), (0:1:0), (0:0:1), (1:1:1)",
        f"steps: {len(trace.steps)}",
    ]
    for i, step in enumerate(trace.steps, start=1):
        lines.append(
            f"step {i}: target {_fmt_fp(step.target)}"
            f" = meet of duals {_fmt_a(step.line1.dual)} and {_fmt_a(step.line2.dual)}"
            f" -> {_fmt_a(step.derived)}"
        )
    lines.append(
        f"closing comparison: derived {_fmt_a(obstruction.derived)}"
        f" against pinned {_fmt_a(obstruction.required)}"
    )
    if obstruction.is_zero:
        lines.append("no obstruction")
    else:
        lines.append(
            f"obstruction p·1 = {obstruction.element} ≠ 0 in {ring}:"
            " no collinearity-preserving lift exists with this frame"
        )
    return "\n".join(lines)
