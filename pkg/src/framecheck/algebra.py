"""Abstract frame and rotation algebra.

Everything a frame check needs to know about a rotation is *which axis ends
up where*: we only track rotations that permute (and possibly flip) the
coordinate axes.  Such a rotation is a signed permutation of the axes and is
abstracted as a triple of direction switches, one per axis.  Rotations that
are not axis-aligned, or whose coefficients are not statically known, are
abstracted to the absorbing value `TOP`.

All values in this module are immutable and freely shareable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class Top:
    """Singleton for the statically-unknown / non-orthogonal abstract value."""

    _instance: Top | None = None

    def __new__(cls) -> Top:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "TOP"


TOP = Top()


class Orientation(Enum):
    """World-relative direction of a single frame axis."""

    LEFT = "left"
    RIGHT = "right"
    UP = "up"
    DOWN = "down"
    FORWARD = "forward"
    BACKWARD = "backward"

    def __repr__(self) -> str:
        return self.value


_OPPOSITE = {
    Orientation.LEFT: Orientation.RIGHT,
    Orientation.RIGHT: Orientation.LEFT,
    Orientation.UP: Orientation.DOWN,
    Orientation.DOWN: Orientation.UP,
    Orientation.FORWARD: Orientation.BACKWARD,
    Orientation.BACKWARD: Orientation.FORWARD,
}


def opposite(o: Orientation) -> Orientation:
    """Flip an axis direction within its pair (left/right, up/down, fwd/back)."""
    return _OPPOSITE[o]


# A direction switch is one of "x", "-x", "y", "-y", "z", "-z", or TOP.
# The string names the axis of the *rotated* frame that points along the
# original axis in that slot.
DIRSWITCHES = ("x", "-x", "y", "-y", "z", "-z")

DirSwitch = str  # one of DIRSWITCHES
_AXIS_INDEX = {"x": 0, "y": 1, "z": 2}


def negate_switch(ds: DirSwitch | Top) -> DirSwitch | Top:
    if isinstance(ds, Top):
        return TOP
    return ds[1:] if ds.startswith("-") else "-" + ds


def _switch_axis(ds: DirSwitch) -> str:
    return ds[-1]


def _switch_sign(ds: DirSwitch) -> int:
    return -1 if ds.startswith("-") else 1


@dataclass(frozen=True)
class Rotation:
    """Abstract orthogonal rotation: a triple of direction switches.

    Slot i holding ``"z"`` means the rotated z axis points along the
    original axis i; ``"-z"`` means it points the opposite way.  Individual
    slots may be TOP when only part of the rotation is known.
    """

    dsx: DirSwitch | Top
    dsy: DirSwitch | Top
    dsz: DirSwitch | Top

    @property
    def slots(self) -> tuple[DirSwitch | Top, DirSwitch | Top, DirSwitch | Top]:
        return (self.dsx, self.dsy, self.dsz)

    def is_fully_known(self) -> bool:
        return not any(isinstance(s, Top) for s in self.slots)

    def __repr__(self) -> str:
        return "<%s>" % ", ".join(str(s) for s in self.slots)


IDENTITY_ROTATION = Rotation("x", "y", "z")

# A rotation type is either an abstract Rotation or TOP.
RotationType = Rotation | Top


@dataclass(frozen=True)
class OrientationTriple:
    """Axis orientations of a frame; components are None when unknown."""

    dx: Orientation | None
    dy: Orientation | None
    dz: Orientation | None

    @property
    def components(self) -> tuple[Orientation | None, ...]:
        return (self.dx, self.dy, self.dz)

    def is_fully_known(self) -> bool:
        return None not in self.components

    def __repr__(self) -> str:
        return "<%s>" % ", ".join(c.value if c else "?" for c in self.components)


FLU = OrientationTriple(Orientation.FORWARD, Orientation.LEFT, Orientation.UP)
RDF = OrientationTriple(Orientation.RIGHT, Orientation.DOWN, Orientation.FORWARD)
UNKNOWN_ORIENTATION = OrientationTriple(None, None, None)


# Displacements are plain floats or TOP.
Displacement = float | Top


@dataclass(frozen=True)
class FrameType:
    """Abstract frame: identity, parent, origin displacements, orientations.

    ``external`` marks frames produced outside the analyzed code; their id is
    a wildcard that satisfies any id comparison.
    """

    id: str
    pid: str = ""
    x: "float | Top" = TOP
    y: "float | Top" = TOP
    z: "float | Top" = TOP
    orientation: OrientationTriple = UNKNOWN_ORIENTATION
    external: bool = False


@dataclass(frozen=True)
class TransformType:
    """Abstract one-step transform from a child frame into its parent."""

    cid: str
    pid: str
    x: "float | Top" = TOP
    y: "float | Top" = TOP
    z: "float | Top" = TOP
    rot: "Rotation | Top" = TOP


def orthogonalize(m, tol: float = 1e-3) -> "Rotation | Top":
    """Abstract a numeric 3x3 matrix to a direction-switch triple.

    Row i must have exactly one entry within ``tol`` of +/-1 and the rest
    within ``tol`` of 0; the signed column of that entry becomes slot i.
    The three columns must be distinct (a signed permutation).  Any other
    matrix, including shears and non-quarter-turn rotations, yields TOP.
    """
    switches: list[DirSwitch] = []
    used_axes: set[str] = set()
    for row in m:
        if len(row) != 3:
            return TOP
        ds = _row_to_switch(row, tol)
        if ds is None:
            return TOP
        switches.append(ds)
        used_axes.add(_switch_axis(ds))
    if len(used_axes) != 3:
        return TOP
    return Rotation(*switches)


def _row_to_switch(row, tol: float) -> DirSwitch | None:
    hit: DirSwitch | None = None
    for value, axis in zip(row, "xyz"):
        if abs(value) <= tol:
            continue
        if abs(value - 1.0) <= tol:
            candidate = axis
        elif abs(value + 1.0) <= tol:
            candidate = "-" + axis
        else:
            return None
        if hit is not None:
            return None
        hit = candidate
    return hit


def matrix_of(r: Rotation) -> tuple[tuple[int, int, int], ...]:
    """Inverse of orthogonalize for fully known triples.

    Returns the unique signed permutation matrix whose abstraction is ``r``.
    Raises ValueError on triples with TOP slots or repeated axes.
    """
    if isinstance(r, Top) or not r.is_fully_known():
        raise ValueError("matrix_of requires a fully known rotation triple")
    axes = [_switch_axis(s) for s in r.slots]
    if len(set(axes)) != 3:
        raise ValueError("not a signed permutation: %r" % (r,))
    rows = []
    for ds in r.slots:
        row = [0, 0, 0]
        row[_AXIS_INDEX[_switch_axis(ds)]] = _switch_sign(ds)
        rows.append(tuple(row))
    return tuple(rows)


def all_signed_permutations() -> list[Rotation]:
    """All 48 fully known rotation triples (signed axis permutations)."""
    out = []
    for a in DIRSWITCHES:
        for b in DIRSWITCHES:
            if _switch_axis(b) == _switch_axis(a):
                continue
            for c in DIRSWITCHES:
                if _switch_axis(c) in (_switch_axis(a), _switch_axis(b)):
                    continue
                out.append(Rotation(a, b, c))
    return out


def compose(first: "Rotation | Top", second: "Rotation | Top") -> "Rotation | Top":
    """Aggregate two rotations; equals the matrix product first * second.

    A TOP argument is treated as a rotation with no orthogonal component:
    the other argument is returned unchanged.  Per-slot TOP values propagate
    through the slot lookup.
    """
    if isinstance(first, Top):
        return second
    if isinstance(second, Top):
        return first
    slots = []
    for ds in first.slots:
        if isinstance(ds, Top):
            slots.append(TOP)
            continue
        picked = second.slots[_AXIS_INDEX[_switch_axis(ds)]]
        if isinstance(picked, Top):
            slots.append(TOP)
        elif _switch_sign(ds) < 0:
            slots.append(negate_switch(picked))
        else:
            slots.append(picked)
    return Rotation(*slots)


def rotate(src: OrientationTriple, r: "Rotation | Top") -> OrientationTriple:
    """Apply an abstract rotation to a frame's axis orientations.

    The new axis-i orientation comes from the source slot whose switch names
    axis i (negated switches flip the orientation).  Unknown source
    components, TOP rotations and unresolvable slots yield None components.
    """
    if isinstance(r, Top):
        return UNKNOWN_ORIENTATION
    new: list[Orientation | None] = []
    for axis in "xyz":
        found: Orientation | None = None
        for slot, src_dir in zip(r.slots, src.components):
            if isinstance(slot, Top) or _switch_axis(slot) != axis:
                continue
            if src_dir is None:
                found = None
            elif _switch_sign(slot) < 0:
                found = opposite(src_dir)
            else:
                found = src_dir
            break
        new.append(found)
    return OrientationTriple(*new)


def euler_matrix(yaw: float, pitch: float, roll: float) -> list[list[float]]:
    """Numeric fixed-axis rotation matrix Rz(yaw) * Ry(pitch) * Rx(roll)."""
    cy, sy = math.cos(yaw), math.sin(yaw)
    cp, sp = math.cos(pitch), math.sin(pitch)
    cr, sr = math.cos(roll), math.sin(roll)
    return [
        [cy * cp, cy * sp * sr - sy * cr, cy * sp * cr + sy * sr],
        [sy * cp, sy * sp * sr + cy * cr, sy * sp * cr - cy * sr],
        [-sp, cp * sr, cp * cr],
    ]


def euler_to_rotation(yaw: float, pitch: float, roll: float, tol: float = 1e-3) -> "Rotation | Top":
    """Snap yaw/pitch/roll angles (radians) to an abstract rotation.

    Angle triples that do not produce an axis-aligned matrix within ``tol``
    yield TOP.
    """
    return orthogonalize(euler_matrix(yaw, pitch, roll), tol)


def quaternion_matrix(qx: float, qy: float, qz: float, qw: float) -> list[list[float]]:
    """Rotation matrix of a unit quaternion (x, y, z, w)."""
    return [
        [1 - 2 * (qy * qy + qz * qz), 2 * (qx * qy - qz * qw), 2 * (qx * qz + qy * qw)],
        [2 * (qx * qy + qz * qw), 1 - 2 * (qx * qx + qz * qz), 2 * (qy * qz - qx * qw)],
        [2 * (qx * qz - qy * qw), 2 * (qy * qz + qx * qw), 1 - 2 * (qx * qx + qy * qy)],
    ]


def quaternion_to_rotation(qx: float, qy: float, qz: float, qw: float, tol: float = 1e-3) -> "Rotation | Top":
    """Snap a unit quaternion to an abstract rotation (TOP when not aligned)."""
    return orthogonalize(quaternion_matrix(qx, qy, qz, qw), tol)
