"""Ground-set and family representations over bitmasks.

Vertices are the integers 1..n with n <= 64; a subset of [n] is stored as a
single int with bit v-1 set for each member v.  All family-level operations
in this package work on these masks, so intersection tests are single AND
instructions and cardinality is a popcount.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

MAX_GROUND = 64


class ParameterError(ValueError):
    """Raised when an operation is called with out-of-range parameters."""


class PreconditionError(ValueError):
    """Raised when an input violates a documented precondition."""


def mask_of(members) -> int:
    """Bitmask of an iterable of vertices (1-based)."""
    m = 0
    for v in members:
        m |= 1 << (v - 1)
    return m


def elements(mask: int) -> tuple[int, ...]:
    """Sorted tuple of vertices in a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def lex_key(mask: int) -> tuple[int, ...]:
    """Sort key realizing the lexicographic order on equal-size sets."""
    return elements(mask)


def colex_key(mask: int) -> int:
    # Colex order on equal-size sets coincides with integer order of masks:
    # the highest differing element decides, and it is the highest differing bit.
    return mask


def compare_sets(a: int, b: int, order: str) -> int:
    """Compare two equal-cardinality sets; returns -1, 0 or 1.

    order='lex':   A < B iff min(A \\ B) < min(B \\ A)
    order='colex': A < B iff max(A \\ B) < max(B \\ A)
    """
    if a.bit_count() != b.bit_count():
        raise ParameterError("compare_sets requires equal cardinalities")
    if a == b:
        return 0
    if order == "colex":
        return -1 if a < b else 1
    if order == "lex":
        diff = a ^ b
        low = diff & -diff
        return -1 if a & low else 1
    raise ParameterError(f"unknown order {order!r}")


@dataclass(frozen=True)
class Family:
    """A k-uniform family over [n], canonically stored in lex order.

    ``excluded`` records vertices removed from the ground set by link
    operations; the ground set is [n] minus those vertices, with the original
    labels kept.
    """

    n: int
    k: int
    sets: tuple[int, ...]
    excluded: int = 0

    @staticmethod
    def from_masks(n: int, k: int, masks, excluded: int = 0) -> "Family":
        if not (1 <= n <= MAX_GROUND):
            raise ParameterError(f"ground-set size {n} out of range 1..{MAX_GROUND}")
        if not (0 <= k <= n):
            raise ParameterError(f"uniformity {k} out of range for n={n}")
        ground = full_mask(n) & ~excluded
        seen = set()
        for m in masks:
            if m & ~ground:
                raise ParameterError(f"set {elements(m)} leaves the ground set")
            if m.bit_count() != k:
                raise ParameterError(
                    f"set {elements(m)} has size {m.bit_count()}, expected {k}")
            seen.add(m)
        return Family(n, k, tuple(sorted(seen, key=lex_key)), excluded)

    @staticmethod
    def from_sets(n: int, k: int, sets, excluded: int = 0) -> "Family":
        return Family.from_masks(n, k, (mask_of(s) for s in sets), excluded)

    def __len__(self) -> int:
        return len(self.sets)

    def __contains__(self, mask: int) -> bool:
        return mask in set(self.sets)

    def ground(self) -> int:
        return full_mask(self.n) & ~self.excluded

    def as_tuples(self) -> list[tuple[int, ...]]:
        return [elements(m) for m in self.sets]


def all_ksets(n: int, k: int, ground: int | None = None):
    """All k-subsets of the ground set as masks, in lex order."""
    verts = elements(ground) if ground is not None else range(1, n + 1)
    for combo in combinations(verts, k):
        yield mask_of(combo)


@dataclass(frozen=True)
class DegreeSequence:
    """Per-vertex degrees with the non-increasing d_1 >= ... >= d_n view."""

    per_vertex: dict[int, int]
    sorted: tuple[int, ...]
    permutation: tuple[int, ...]  # vertex x_i realizing d_i; ties by smaller label

    def d(self, i: int) -> int:
        """The ith largest degree (1-based)."""
        return self.sorted[i - 1]


def degree_sequence(fam: Family) -> DegreeSequence:
    ground = elements(fam.ground())
    per_vertex = {v: 0 for v in ground}
    for m in fam.sets:
        for v in elements(m):
            per_vertex[v] += 1
    order = sorted(ground, key=lambda v: (-per_vertex[v], v))
    return DegreeSequence(
        per_vertex=per_vertex,
        sorted=tuple(per_vertex[v] for v in order),
        permutation=tuple(order),
    )


def is_t_intersecting(fam: Family, t: int) -> bool:
    if not (1 <= t <= fam.k):
        raise ParameterError(f"t={t} out of range 1..k={fam.k}")
    sets = fam.sets
    for i in range(len(sets)):
        a = sets[i]
        for j in range(i + 1, len(sets)):
            if (a & sets[j]).bit_count() < t:
                return False
    return True


def is_intersecting(fam: Family) -> bool:
    return is_t_intersecting(fam, 1) if fam.k >= 1 else True


def link(fam: Family, a: int, b: int) -> Family:
    """The restricted link {F \\ B : F in fam, F cap B = A}.

    The result lives on the original labels with ground set [n] \\ B and
    uniformity k - |A|.
    """
    if a & ~b:
        raise ParameterError("link requires A to be a subset of B")
    masks = [m & ~b for m in fam.sets if m & b == a]
    return Family.from_masks(fam.n, fam.k - a.bit_count(), masks,
                             excluded=fam.excluded | b)


def diversity(fam: Family) -> int:
    """|F| minus the maximum degree; 0 for stars and the empty family."""
    if not fam.sets:
        return 0
    return len(fam.sets) - degree_sequence(fam).sorted[0]


# --- family text format ----------------------------------------------------
# First line "n k", then one set per line as strictly increasing
# comma-separated vertices.  '#'-lines and blank lines are ignored.

def parse_family(text: str) -> Family:
    header = None
    masks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2:
                raise ParameterError(f"line {lineno}: expected header 'n k'")
            try:
                header = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise ParameterError(f"line {lineno}: malformed header {line!r}")
            continue
        try:
            vs = [int(p) for p in line.split(",")]
        except ValueError:
            raise ParameterError(f"line {lineno}: malformed set {line!r}")
        if any(x >= y for x, y in zip(vs, vs[1:])):
            raise ParameterError(f"line {lineno}: vertices must strictly increase")
        masks.append(mask_of(vs))
    if header is None:
        raise ParameterError("missing 'n k' header")
    n, k = header
    return Family.from_masks(n, k, masks)


def format_family(fam: Family) -> str:
    lines = [f"{fam.n} {fam.k}"]
    lines.extend(",".join(str(v) for v in elements(m)) for m in fam.sets)
    return "\n".join(lines) + "\n"
