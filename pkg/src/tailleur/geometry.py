"""Moore paths and tailleur values in two concrete geometries.

Plane: phase space with points stored as (q, p) and the 2-form dp ^ dq, so
the impulse scenario (momentum leg, then position leg) has positive area
+pvt/2.  The taille of the plane is 0.

Sphere: radius R, area form oriented by the outward normal, taille 4 pi R^2.
Areas of geodesic triangles come from the half-angle solid-angle formula
tan(E/2) = a.(b x c) / (1 + a.b + b.c + c.a).
"""
from __future__ import annotations

import cmath
import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence, Union

import numpy as np

from .errors import (
    AntipodalUndefined,
    InvalidPath,
    NonpositiveParameter,
    NotClosed,
    NotComposable,
    SelfIntersecting,
    ZeroMomentum,
)

TOL = 1e-12
ANTIPODAL_TOL = 1e-12
FOUR_PI = 4 * math.pi


# --- plane ------------------------------------------------------------------


@dataclass(frozen=True)
class PlanePolyline:
    """Piecewise-linear Moore path, vertices as (q, p); unit speed."""

    vertices: tuple[tuple[float, float], ...]

    def __post_init__(self):
        vs = tuple((float(q), float(p)) for q, p in self.vertices)
        if not vs:
            raise InvalidPath("a path needs at least one vertex")
        object.__setattr__(self, "vertices", vs)

    @cached_property
    def segment_lengths(self) -> tuple[float, ...]:
        return tuple(math.dist(a, b) for a, b in zip(self.vertices, self.vertices[1:]))

    @property
    def length(self) -> float:
        return math.fsum(self.segment_lengths)

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    def point_at(self, t: float) -> np.ndarray:
        return _walk(self.vertices, self.segment_lengths, t, _lerp)

    def distance(self, x, y) -> float:
        return math.dist(x, y)


def _lerp(a, b, s):
    return (1 - s) * np.asarray(a) + s * np.asarray(b)


def _walk(vertices, seglens, t, interp):
    if t <= 0 or len(vertices) == 1:
        return np.asarray(vertices[0], dtype=float)
    acc = 0.0
    for a, b, L in zip(vertices, vertices[1:], seglens):
        if t <= acc + L:
            return interp(a, b, (t - acc) / L if L > 0 else 1.0)
        acc += L
    return np.asarray(vertices[-1], dtype=float)


def segment(a, b) -> PlanePolyline:
    return PlanePolyline((tuple(a), tuple(b)))


def signed_area_dpdq(a, b, c) -> float:
    """Integral of dp ^ dq over the triangle a -> b -> c, points as (q, p)."""
    (q0, p0), (q1, p1), (q2, p2) = a, b, c
    return 0.5 * ((p1 - p0) * (q2 - q0) - (p2 - p0) * (q1 - q0))


def plane_tailleur(g1: PlanePolyline, g2: PlanePolyline) -> float:
    if math.dist(g1.end, g2.start) > TOL:
        raise NotComposable("end of the first path is not the start of the second")
    return signed_area_dpdq(g1.start, g1.end, g2.end)


def _segments_intersect(a, b, c, d) -> bool:
    def orient(p, q, r):
        v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
        return 0 if abs(v) <= 1e-14 else (1 if v > 0 else -1)

    def on_seg(p, q, r):
        return min(p[0], q[0]) - 1e-14 <= r[0] <= max(p[0], q[0]) + 1e-14 and \
            min(p[1], q[1]) - 1e-14 <= r[1] <= max(p[1], q[1]) + 1e-14

    o1, o2, o3, o4 = orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    return (o1 == 0 and on_seg(a, b, c)) or (o2 == 0 and on_seg(a, b, d)) or \
        (o3 == 0 and on_seg(c, d, a)) or (o4 == 0 and on_seg(c, d, b))


def turning_number(closed: Sequence[tuple[float, float]]) -> float:
    pts = list(closed[:-1])
    n = len(pts)
    total = 0.0
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        h1 = math.atan2(b[1] - a[1], b[0] - a[0])
        h2 = math.atan2(c[1] - b[1], c[0] - b[0])
        total += (h2 - h1 + math.pi) % (2 * math.pi) - math.pi
    return total / (2 * math.pi)


def maslov_polygon(vertices: Sequence[tuple[float, float]]) -> int:
    """Twice the turning number of a simple closed polygon (first vertex
    repeated at the end)."""
    pts = [tuple(map(float, v)) for v in vertices]
    if len(pts) < 4 or math.dist(pts[0], pts[-1]) > TOL:
        raise NotClosed("polygon must have >= 3 vertices and end at its start")
    segs = list(zip(pts, pts[1:]))
    n = len(segs)
    for i, j in itertools.combinations(range(n), 2):
        if j == i + 1 or (i == 0 and j == n - 1):
            continue
        if _segments_intersect(*segs[i], *segs[j]):
            raise SelfIntersecting(f"edges {i} and {j} cross")
    for (a, b) in segs:
        if math.dist(a, b) <= TOL:
            raise SelfIntersecting("repeated vertex")
    return 2 * abs(round(turning_number(pts)))


# --- free particle ----------------------------------------------------------


@dataclass(frozen=True)
class PhaseSample:
    t: object
    area: object
    phase: complex


def _exact(*xs) -> bool:
    return all(isinstance(x, (int, Fraction)) for x in xs)


def _turn(x) -> complex:
    """exp(2 pi i x), exact at quarter turns when x is rational."""
    if isinstance(x, (int, Fraction)):
        x = Fraction(x) % 1
        quarter = {Fraction(0): 1 + 0j, Fraction(1, 4): 1j, Fraction(1, 2): -1 + 0j, Fraction(3, 4): -1j}
        if x in quarter:
            return quarter[x]
    return cmath.exp(2j * math.pi * float(x))


def free_particle_phase(p, v, t, h) -> PhaseSample:
    """Doubled impulse-triangle area pvt, reduced mod h, and its phase."""
    if p <= 0 or v <= 0 or h <= 0:
        raise NonpositiveParameter("p, v and h must be positive")
    if t < 0:
        raise NonpositiveParameter("t must be nonnegative")
    if _exact(p, v, t, h):
        area = Fraction(p) * v * t % h
        return PhaseSample(Fraction(t), area, _turn(area / Fraction(h)))
    # compute the tailleur from the actual path pair, doubled by the Maslov index
    g1 = segment((0.0, 0.0), (0.0, p))
    g2 = segment((0.0, p), (v * t, p))
    area = 2 * plane_tailleur(g1, g2) % h
    return PhaseSample(t, area, _turn(area / h))


def phase_period(p, v, h):
    if _exact(p, v, h):
        return Fraction(h) / (Fraction(p) * v)
    return h / (p * v)


def de_broglie_wavelength(p, h):
    if p == 0:
        raise ZeroMomentum("momentum must be nonzero")
    if h <= 0 or p < 0:
        raise NonpositiveParameter("h and p must be positive")
    if _exact(p, h):
        return Fraction(h) / Fraction(p)
    return h / p


# --- sphere -----------------------------------------------------------------


def unit(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    n = np.linalg.norm(v)
    if n == 0:
        raise InvalidPath("zero vector has no direction")
    return v / n


def _check_not_antipodal(a, b):
    if float(np.dot(a, b)) <= -1 + ANTIPODAL_TOL:
        raise AntipodalUndefined("antipodal points have no unique shortest geodesic")


@dataclass(frozen=True)
class GeodesicArc:
    a: np.ndarray
    b: np.ndarray
    angle: float


def sphere_geodesic(a, b) -> GeodesicArc:
    a, b = np.asarray(a, float), np.asarray(b, float)
    for v in (a, b):
        if abs(np.linalg.norm(v) - 1) > TOL:
            raise InvalidPath("geodesic endpoints must be unit vectors")
    _check_not_antipodal(a, b)
    # atan2 form is accurate for both tiny and near-pi angles
    angle = math.atan2(np.linalg.norm(np.cross(a, b)), float(np.dot(a, b)))
    return GeodesicArc(a, b, angle)


def _slerp(a, b, s):
    a, b = np.asarray(a), np.asarray(b)
    ang = math.atan2(np.linalg.norm(np.cross(a, b)), float(np.dot(a, b)))
    if ang < 1e-15:
        return a.copy()
    return (math.sin((1 - s) * ang) * a + math.sin(s * ang) * b) / math.sin(ang)


@dataclass(frozen=True)
class SphereGeodesicPath:
    """Piecewise minor-great-circle Moore path through unit waypoints."""

    waypoints: tuple[tuple[float, float, float], ...]
    radius: float = 1.0

    def __post_init__(self):
        wps = tuple(tuple(float(x) for x in w) for w in self.waypoints)
        if not wps:
            raise InvalidPath("a path needs at least one waypoint")
        if self.radius <= 0:
            raise NonpositiveParameter("radius must be positive")
        for w in wps:
            if abs(math.sqrt(sum(x * x for x in w)) - 1) > TOL:
                raise InvalidPath("waypoints must be unit vectors")
        for a, b in zip(wps, wps[1:]):
            _check_not_antipodal(np.asarray(a), np.asarray(b))
        object.__setattr__(self, "waypoints", wps)

    @cached_property
    def segment_lengths(self) -> tuple[float, ...]:
        return tuple(sphere_geodesic(a, b).angle * self.radius for a, b in zip(self.waypoints, self.waypoints[1:]))

    @property
    def vertices(self):
        return self.waypoints

    @property
    def length(self) -> float:
        return math.fsum(self.segment_lengths)

    @property
    def start(self) -> np.ndarray:
        return np.asarray(self.waypoints[0])

    @property
    def end(self) -> np.ndarray:
        return np.asarray(self.waypoints[-1])

    def point_at(self, t: float) -> np.ndarray:
        return _walk(self.waypoints, self.segment_lengths, t, _slerp)

    def distance(self, x, y) -> float:
        x, y = np.asarray(x), np.asarray(y)
        return self.radius * math.atan2(np.linalg.norm(np.cross(x, y)), float(np.dot(x, y)))


def sphere_path(points, radius: float = 1.0) -> SphereGeodesicPath:
    return SphereGeodesicPath(tuple(tuple(unit(p)) for p in points), radius)


Path = Union[PlanePolyline, SphereGeodesicPath]


class _ZeroPath:
    """The zero of the path semigroup (product of non-composable paths)."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "ZERO_PATH"

    def __bool__(self):
        return False


ZERO_PATH = _ZeroPath()


def moore_concat(g1, g2):
    if g1 is ZERO_PATH or g2 is ZERO_PATH:
        return ZERO_PATH
    if type(g1) is not type(g2):
        raise InvalidPath("paths live in different spaces")
    if isinstance(g1, SphereGeodesicPath) and g1.radius != g2.radius:
        raise InvalidPath("paths live on spheres of different radius")
    if float(np.linalg.norm(np.subtract(g1.end, g2.start))) > TOL:
        return ZERO_PATH
    verts = g1.vertices + g2.vertices[1:]
    if isinstance(g1, PlanePolyline):
        return PlanePolyline(verts)
    return SphereGeodesicPath(verts, g1.radius)


def moore_distance(g1: Path, g2: Path, resolution: int = 2048) -> float:
    """Moore metric for unit-speed paths.

    Max term: both paths evaluated at every breakpoint of either path and at
    ``resolution`` evenly spaced times in [0, max length].  For polylines the
    pointwise distance is convex between breakpoints, so the breakpoints
    alone give the exact maximum.  Speed term: the speeds differ (by 1) only
    between the two lengths, giving sqrt(|l2 - l1|).
    """
    L1, L2 = g1.length, g2.length
    T = max(L1, L2)
    times = {0.0, T}
    for g in (g1, g2):
        times.update(itertools.accumulate(g.segment_lengths))
    if T > 0:
        times.update(np.linspace(0.0, T, resolution + 1).tolist())
    dmax = max(g1.distance(g1.point_at(t), g2.point_at(t)) for t in times)
    dl = abs(L2 - L1)
    return dmax + math.sqrt(dl) + dl


def sphere_triangle_area(a, b, c, R: float = 1.0) -> float:
    """Signed area of the geodesic triangle a -> b -> c (outward orientation)."""
    a, b, c = (np.asarray(x, float) for x in (a, b, c))
    for x, y in ((a, b), (b, c), (c, a)):
        _check_not_antipodal(x, y)
    triple = float(np.dot(a, np.cross(b, c)))
    denom = 1.0 + float(np.dot(a, b) + np.dot(b, c) + np.dot(c, a))
    return 2.0 * math.atan2(triple, denom) * R * R


def reduce_circle(x: float, tau: float) -> float:
    r = math.fmod(x, tau)
    if r < 0:
        r += tau
    return 0.0 if r == tau else r


def circle_distance(x: float, tau: float) -> float:
    r = reduce_circle(x, tau)
    return min(r, tau - r)


def sphere_tailleur(g1: SphereGeodesicPath, g2: SphereGeodesicPath, raw: bool = False) -> float:
    """Area of the geodesic triangle (start g1, end g1, end g2), reduced into
    [0, 4 pi R^2) unless ``raw``."""
    if float(np.linalg.norm(g1.end - g2.start)) > TOL:
        raise NotComposable("end of the first path is not the start of the second")
    R = g1.radius
    A = sphere_triangle_area(g1.start, g1.end, g2.end, R)
    return A if raw else reduce_circle(A, FOUR_PI * R * R)


def _random_unit(rng: random.Random) -> np.ndarray:
    v = np.array([rng.gauss(0, 1) for _ in range(3)])
    return v / np.linalg.norm(v)


def _random_sphere_leg(rng, a, radius):
    """Path from a to a random endpoint, possibly through a random waypoint."""
    pts = [a]
    for _ in range(rng.randint(1, 2)):
        while True:
            b = _random_unit(rng)
            if float(np.dot(pts[-1], b)) > -1 + 1e-6:
                break
        pts.append(b)
    return SphereGeodesicPath(tuple(tuple(p) for p in pts), radius)


def tailleur_cocycle_residual(samples: int, seed: int, space: str = "sphere", radius: float = 1.0) -> float:
    """Largest |coboundary| of the tailleur over random composable triples.

    Sphere values are measured in the circle metric mod 4 pi R^2.  Triples
    whose relevant endpoints come within 1e-6 of antipodal are redrawn.
    """
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        if space == "sphere":
            while True:
                g1 = _random_sphere_leg(rng, _random_unit(rng), radius)
                g2 = _random_sphere_leg(rng, g1.end, radius)
                g3 = _random_sphere_leg(rng, g2.end, radius)
                pts = [g1.start, g1.end, g2.end, g3.end]
                if all(float(np.dot(x, y)) > -1 + 1e-6 for x, y in itertools.combinations(pts, 2)):
                    break
            w = sphere_tailleur
            tau = FOUR_PI * radius * radius
        else:
            p = [(rng.uniform(-10, 10), rng.uniform(-10, 10)) for _ in range(4)]
            g1, g2, g3 = segment(p[0], p[1]), segment(p[1], p[2]), segment(p[2], p[3])
            w = plane_tailleur
            tau = 0.0
        g12, g23 = moore_concat(g1, g2), moore_concat(g2, g3)
        d = w(g2, g3) - w(g12, g3) + w(g1, g23) - w(g1, g2)
        worst = max(worst, circle_distance(d, tau) if tau else abs(d))
    return worst


# --- equator scenario ---------------------------------------------------------


@dataclass
class ScenarioResult:
    samples: list  # PhaseSample with t = longitude
    raw_areas: list
    slope: float
    residuals: list
    skipped: list = field(default_factory=list)

    @property
    def nonlinearity(self) -> float:
        return max((abs(r) for r in self.residuals), default=0.0)


def equator_scenario(theta0: float, lambdas: Sequence[float], skip_undefined: bool = False) -> ScenarioResult:
    """Phase along the equator after an impulse from ``theta0`` radians south.

    Meridians are the momentum direction and the equator the spatial one; in
    the chart (q, p) = (longitude, latitude) the phase-space form dp ^ dq is
    minus the outward area form, which makes the south-pole case area(l) = +l.
    The linear fit is through the origin on the unreduced areas.
    """
    if not 0 < theta0 <= math.pi / 2:
        raise NonpositiveParameter("theta0 must lie in (0, pi/2]")
    start = np.array([math.cos(theta0), 0.0, -math.sin(theta0)])
    e0 = np.array([1.0, 0.0, 0.0])
    samples, raws, lams, skipped = [], [], [], []
    for lam in lambdas:
        el = np.array([math.cos(lam), math.sin(lam), 0.0])
        try:
            A = -sphere_triangle_area(start, e0, el)
        except AntipodalUndefined:
            if not skip_undefined:
                raise
            skipped.append(lam)
            continue
        w = reduce_circle(A, FOUR_PI)
        samples.append(PhaseSample(lam, w, cmath.exp(1j * w / 2)))
        raws.append(A)
        lams.append(lam)
    lam_arr, A_arr = np.asarray(lams), np.asarray(raws)
    den = float(lam_arr @ lam_arr)
    slope = float(lam_arr @ A_arr) / den if den else 0.0
    residuals = (A_arr - slope * lam_arr).tolist()
    return ScenarioResult(samples, raws, slope, residuals, skipped)


# --- triangulated sphere twist ---------------------------------------------


def _polyhedron(kind: str):
    from .nerve import boundary_of_simplex, octahedron_boundary

    if kind == "tetrahedral":
        K = boundary_of_simplex(3)
        coords = {"v0": (1, 1, 1), "v1": (1, -1, -1), "v2": (-1, 1, -1), "v3": (-1, -1, 1)}
    elif kind == "octahedral":
        K = octahedron_boundary()
        coords = {"px": (1, 0, 0), "mx": (-1, 0, 0), "py": (0, 1, 0), "my": (0, -1, 0), "pz": (0, 0, 1), "mz": (0, 0, -1)}
    else:
        raise ValueError(f"unknown triangulation {kind!r}")
    return K, {k: unit(v) for k, v in coords.items()}


@dataclass
class SphereTwistExport:
    semigroup: object
    twist: object
    points: dict  # poset element -> unit vector
    cells: dict  # strict chains (v, e, f) -> area in units of pi
    unit: str = "pi"


def rationalize(x: float, max_den: int = 10_000, tol: float = 1e-9) -> Fraction:
    q = Fraction(x).limit_denominator(max_den)
    if abs(float(q) - x) > tol:
        raise ValueError(f"{x!r} is not within {tol} of a rational with denominator <= {max_den}")
    return q


def export_sphere_twist(kind: str = "octahedral") -> SphereTwistExport:
    """Face poset of a centrally projected polyhedron as a poset semigroup,
    with the circle twist of geodesic-triangle areas (units of pi, tau = 4).

    Each element e[i,j] is the geodesic from the projected barycentre of face
    i to that of face j; a composable pair (e[i,j], e[j,k]) gets the area of
    the triangle (i, j, k).
    """
    from .cochains import make_cochain, mod
    from .nerve import face_poset
    from .semigroup import poset_pair, poset_semigroup
    from .twists import circle_twist

    K, coords = _polyhedron(kind)
    P = face_poset(K)
    pts = {}
    for name in P.elements:
        verts = name.strip("{}").split(",")
        pts[name] = unit(sum(coords[v] for v in verts))
    S = poset_semigroup(P)
    vals = {}
    for a, b in S.tuples(2):
        i, j = poset_pair(S, a)
        _, k = poset_pair(S, b)
        vals[a, b] = rationalize(sphere_triangle_area(pts[i], pts[j], pts[k]) / math.pi)
    F = make_cochain(S, 2, vals, mod(4))
    cells = {}
    for i, j, k in itertools.permutations(P.elements, 3):
        if P.lt(i, j) and P.lt(j, k):
            cells[i, j, k] = rationalize(sphere_triangle_area(pts[i], pts[j], pts[k]) / math.pi)
    return SphereTwistExport(S, circle_twist(F), pts, cells)
