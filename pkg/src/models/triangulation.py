from dataclasses import dataclass, field

Chord = tuple[int, int]
Triple = tuple[int, int, int]


def normalize_chord(u: int, v: int, m: int) -> Chord:
    u, v = u % m, v % m
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Triangulation:
    """
    A set of labeled diagonals of the convex ``m``-gon.

    Polygon vertices are ``0..m-1`` counterclockwise. ``chords[k]`` is the arc
    carrying label ``k + 1``; every chord is stored as ``(u, v)`` with ``u < v``.
    Validity (non-crossing, maximal) is checked by the triangulation service.
    """

    m: int
    chords: tuple[Chord, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "chords",
            tuple(normalize_chord(u, v, self.m) for u, v in self.chords),
        )

    @property
    def n(self) -> int:
        return len(self.chords)

    @property
    def labels(self) -> range:
        return range(1, self.n + 1)

    def arc(self, label: int) -> Chord:
        return self.chords[label - 1]

    def label_of(self, chord: Chord) -> int | None:
        chord = normalize_chord(*chord, self.m)
        try:
            return self.chords.index(chord) + 1
        except ValueError:
            return None

    def chord_set(self) -> frozenset[Chord]:
        return frozenset(self.chords)

    def replace(self, label: int, chord: Chord) -> "Triangulation":
        chords = list(self.chords)
        chords[label - 1] = chord
        return Triangulation(self.m, tuple(chords))


@dataclass(frozen=True)
class InscribedPolygon:
    """A closed polygon of arcs: the union of edge-adjacent interior triangles."""

    triangles: tuple[Triple, ...]
    boundary: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for triangle in self.triangles for v in triangle}))
