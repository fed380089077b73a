"""The deformed Khovanov cube of a projective diagram.

Chain groups: one generator per labelling of the circles of a resolution
(unit label or X on each circle; the essential circle, when present,
carries the barred versions).  Gradings per generator:

    i = |v| - n-,   j = |v| + n+ - 2n- + (sum of +-1 over labels),
    k = 0, or +-1 according to the label on the essential circle.

Edge maps follow the two-parameter deformation: merges and splits act by
the (s, t)-deformed multiplication/comultiplication, one-to-one
bifurcations give zero, and the sign of every matrix entry is the product
of the permutation rule (near circles are pulled to the front of the
tensor order), the far-orientation rule, and the nearby-consistency rule.
Specializing (s, t) = (0, 0) gives the Khovanov complex, (1, 1) the Lee
complex; the generic specialization keeps both variables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .diagram import DiagramError, DividingChoice, dividing_orientation
from .polynomials import STPoly


@dataclass(frozen=True)
class CoeffSpec:
    """Coefficient ring tag plus the values of the deformation parameters."""

    ring: str  # 'Q' | 'Z' | 'ZST'
    s: object
    t: object

    @classmethod
    def khovanov(cls, ring="Q"):
        if ring == "ZST":
            raise DiagramError("khovanov specialization is numeric")
        zero = Fraction(0) if ring == "Q" else 0
        return cls(ring, zero, zero)

    @classmethod
    def lee(cls):
        return cls("Q", Fraction(1), Fraction(1))

    @classmethod
    def generic(cls):
        return cls("ZST", STPoly.gen_s(), STPoly.gen_t())

    def one(self):
        if self.ring == "Q":
            return Fraction(1)
        if self.ring == "Z":
            return 1
        return STPoly.const(1)

    def coeff(self, tag):
        if tag == "one":
            return self.one()
        if tag == "s":
            return self.s
        if tag == "t":
            return self.t
        return self.s * self.t

    @property
    def is_lee(self):
        return self.ring == "Q" and self.s == 1 and self.t == 1


class ResolutionChoices:
    """Per-vertex circle ordering and circle orientations."""

    def __init__(self, diagram, orderings, orientations):
        self.diagram = diagram
        self.orderings = orderings        # vertex -> tuple of circle indices
        self.orientations = orientations  # vertex -> tuple of +-1

    def ordering(self, v):
        return self.orderings[v]

    def orientation(self, v):
        return self.orientations[v]


def default_choices(diagram, dividing=None):
    """Canonical orderings with dividing-circle alternating orientations.

    dividing may map a vertex to a DividingChoice; unlisted vertices use
    the canonical choice (essential circle with its wall-convention
    direction, or the unique essential region).
    """
    dividing = dividing or {}
    orderings = {}
    orientations = {}
    n = len(diagram.crossings)
    for v in itertools.product((0, 1), repeat=n):
        res = diagram.resolve(v)
        choice = dividing.get(v, DividingChoice())
        co = dividing_orientation(res, choice)
        orderings[v] = tuple(range(len(res.circles)))
        orientations[v] = co.directions
    return ResolutionChoices(diagram, orderings, orientations)


def _perm_sign(src, dst):
    """Sign of the permutation carrying tuple src to tuple dst."""
    pos = {c: i for i, c in enumerate(src)}
    perm = [pos[c] for c in dst]
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def _required_exit_dir(sign, bit):
    # A circle through the crossing is "consistent" when it exits at the
    # corner where the diagram's own strands exit; with chords directed
    # slot s -> s+1 this reduces to one reference direction per smoothing.
    return 1 if (sign > 0) == (bit == 0) else -1


def _first_chord_index(sign, bit):
    # The chord whose circle is pulled first by the permutation rule (the
    # strand to the west for vertical smoothings, north for horizontal).
    return 0 if (sign > 0 and bit == 1) else 1


_MERGE_TRIVIAL = {(0, 0): (0, "one"), (0, 1): (1, "one"),
                  (1, 0): (1, "one"), (1, 1): (0, "st")}
_MERGE_ESSENTIAL = {(0, 0): (0, "one"), (0, 1): (1, "s"),
                    (1, 0): (1, "one"), (1, 1): (0, "t")}
_SPLIT_TRIVIAL = {0: (((0, 1), "one"), ((1, 0), "one")),
                  1: (((1, 1), "one"), ((0, 0), "st"))}
_SPLIT_ESSENTIAL = {0: (((0, 1), "one"), ((1, 0), "s")),
                    1: (((1, 1), "one"), ((0, 0), "t"))}


class EdgeMap:
    """The differential component along one cube edge u -> v."""

    def __init__(self, diagram, choices, u, pos):
        self.u = tuple(u)
        if self.u[pos] != 0:
            raise DiagramError("edge starts at a 0-bit of the vertex")
        v = list(self.u)
        v[pos] = 1
        self.v = tuple(v)
        self.pos = pos
        self.diagram = diagram
        self.choices = choices
        cid = diagram.crossings[pos]
        self.cid = cid
        ru = diagram.resolve(self.u)
        rv = diagram.resolve(self.v)
        self.ru, self.rv = ru, rv
        chords = (("c", cid, 0), ("c", cid, 1))
        near_u = []
        for ch in chords:
            ci = ru.circle_of_piece[ch]
            if ci not in near_u:
                near_u.append(ci)
        near_v = []
        for ch in chords:
            ci = rv.circle_of_piece[ch]
            if ci not in near_v:
                near_v.append(ci)
        self.near_u, self.near_v = near_u, near_v
        self.kind = {(2, 1): "merge", (1, 2): "split",
                     (1, 1): "one_one"}[(len(near_u), len(near_v))]
        if self.kind == "one_one":
            return
        # far circles occupy identical pieces on both sides
        by_pieces = {c.pieces: c.index for c in rv.circles
                     if c.index not in near_v}
        self.far_map = {}
        for c in ru.circles:
            if c.index in near_u:
                continue
            self.far_map[c.index] = by_pieces[c.pieces]
        # rule (P): near circles first, first chord's circle leading
        sign = diagram.sign(cid)
        first_u = ru.circle_of_piece[chords[_first_chord_index(sign, 0)]]
        first_v = rv.circle_of_piece[chords[_first_chord_index(sign, 1)]]
        self.sign_p = (self._pull_front_sign(ru, self.choices.ordering(self.u),
                                             first_u, near_u)
                       * self._pull_front_sign(rv, self.choices.ordering(self.v),
                                               first_v, near_v))
        # rule (C) data: consistency of each near circle
        self.consistent_u = {ci: self._consistency(ru, self.u, ci) for ci in near_u}
        self.consistent_v = {ci: self._consistency(rv, self.v, ci) for ci in near_v}
        # rule (O) data: far circles whose chosen orientation differs
        self.far_flipped = set()
        ou = self.choices.orientation(self.u)
        ov = self.choices.orientation(self.v)
        for cu, cv in self.far_map.items():
            if ou[cu] != ov[cv]:
                self.far_flipped.add(cu)

    def _pull_front_sign(self, res, ordering, first, near):
        rest = [c for c in ordering if c not in near]
        target = [first] + [c for c in near if c != first] + rest
        return _perm_sign(ordering, tuple(target))

    def _consistency(self, res, vertex, ci):
        bit = res.bit[self.cid]
        req = _required_exit_dir(self.diagram.sign(self.cid), bit)
        circ = res.circles[ci]
        tag = self.choices.orientation(vertex)[ci]
        vals = set()
        for idx in (0, 1):
            ch = ("c", self.cid, idx)
            if ch in circ.pieces:
                vals.add(tag * res.dart_direction_on_piece(circ, ch) == req)
        assert len(vals) == 1, "consistency must agree on both strands"
        return vals.pop()

    # -- application ---------------------------------------------------------

    def apply(self, labels, spec):
        """Image of a generator: list of (target labels, scalar)."""
        if self.kind == "one_one":
            return []
        sign_o = 1
        for ci in self.far_flipped:
            if labels[ci] == 1:
                sign_o = -sign_o
        out = []
        es_u = self.ru.essential_index
        es_v = self.rv.essential_index
        if self.kind == "merge":
            c1, c2 = self.near_u
            if es_u == c1:
                key, table = (labels[c1], labels[c2]), _MERGE_ESSENTIAL
            elif es_u == c2:
                key, table = (labels[c2], labels[c1]), _MERGE_ESSENTIAL
            else:
                key, table = (labels[c1], labels[c2]), _MERGE_TRIVIAL
            lab_out, tag = table[key]
            target = self._far_labels(labels)
            target[self.near_v[0]] = lab_out
            sign_c = self._sign_c(labels, target)
            out.append((tuple(target), self._scalar(spec, tag,
                                                    sign_o * sign_c)))
        else:
            src = self.near_u[0]
            if es_u == src:
                table = _SPLIT_ESSENTIAL
                ess_first = self.near_v[0] == es_v
                for (lab_es, lab_tr), tag in table[labels[src]]:
                    target = self._far_labels(labels)
                    target[es_v] = lab_es
                    target[self.near_v[0] if not ess_first else self.near_v[1]] = lab_tr
                    if ess_first:
                        target[self.near_v[0]] = lab_es
                    sign_c = self._sign_c(labels, target)
                    out.append((tuple(target), self._scalar(spec, tag,
                                                            sign_o * sign_c)))
            else:
                for (la, lb), tag in _SPLIT_TRIVIAL[labels[src]]:
                    target = self._far_labels(labels)
                    target[self.near_v[0]] = la
                    target[self.near_v[1]] = lb
                    sign_c = self._sign_c(labels, target)
                    out.append((tuple(target), self._scalar(spec, tag,
                                                            sign_o * sign_c)))
        return [(t, c) for t, c in out if c]

    def _far_labels(self, labels):
        target = [0] * len(self.rv.circles)
        for cu, cv in self.far_map.items():
            target[cv] = labels[cu]
        return target

    def _sign_c(self, labels, target):
        n = 0
        for ci in self.near_u:
            if labels[ci] == 1 and not self.consistent_u[ci]:
                n += 1
        for ci in self.near_v:
            if target[ci] == 1 and not self.consistent_v[ci]:
                n += 1
        return -1 if n % 2 else 1

    def _scalar(self, spec, tag, sign):
        c = spec.coeff(tag)
        if not c:
            return c
        return c * sign if sign > 0 else -(c * 1)

    def sign_factors(self, labels, target):
        """(sign_P, sign_O, sign_C) for a structural summand g -> h."""
        if self.kind == "one_one":
            raise DiagramError("one-one edges carry the zero map")
        sign_o = 1
        for ci in self.far_flipped:
            if labels[ci] == 1:
                sign_o = -sign_o
        return self.sign_p, sign_o, self._sign_c(labels, list(target))


def gradings(diagram, resolution, labels):
    w = sum(resolution.bit.values())
    i = w - diagram.n_minus
    j = w + diagram.n_plus - 2 * diagram.n_minus
    k = 0
    for ci, lab in enumerate(labels):
        j += 1 if lab == 0 else -1
        if ci == resolution.essential_index:
            k = 1 if lab == 0 else -1
    return (i, j, k)


class GradedComplex:
    """The full cube, materialized lazily per homological degree."""

    def __init__(self, diagram, spec, choices=None):
        self.diagram = diagram
        self.spec = spec
        self.choices = choices if choices is not None else default_choices(diagram)
        self.n = len(diagram.crossings)
        self.i_min = -diagram.n_minus
        self.i_max = diagram.n_plus
        self._gens = {}
        self._index = {}
        self._diff = {}
        self._edges = {}

    def degrees(self):
        return range(self.i_min, self.i_max + 1)

    def _vertices_at(self, i):
        w = i + self.diagram.n_minus
        if not 0 <= w <= self.n:
            return []
        verts = []
        for ones in itertools.combinations(range(self.n), w):
            v = [0] * self.n
            for p in ones:
                v[p] = 1
            verts.append(tuple(v))
        verts.sort()
        return verts

    def gens(self, i):
        if i not in self._gens:
            gens = []
            for v in self._vertices_at(i):
                res = self.diagram.resolve(v)
                for labels in itertools.product((0, 1), repeat=len(res.circles)):
                    gens.append((v, labels))
            self._gens[i] = gens
            self._index[i] = {g: n for n, g in enumerate(gens)}
        return self._gens[i]

    def index(self, i):
        self.gens(i)
        return self._index[i]

    def grading(self, gen):
        v, labels = gen
        return gradings(self.diagram, self.diagram.resolve(v), labels)

    def edge(self, u, pos):
        key = (u, pos)
        if key not in self._edges:
            self._edges[key] = EdgeMap(self.diagram, self.choices, u, pos)
        return self._edges[key]

    def differential(self, i):
        """Entries of C_i -> C_{i+1} as {(row, col): scalar}."""
        if i not in self._diff:
            entries = {}
            idx_from = self.index(i)
            idx_to = self.index(i + 1)
            for (v, labels), col in idx_from.items():
                for pos in range(self.n):
                    if v[pos] != 0:
                        continue
                    em = self.edge(v, pos)
                    for target, c in em.apply(labels, self.spec):
                        row = idx_to[(em.v, target)]
                        prev = entries.get((row, col))
                        c = c if prev is None else prev + c
                        if c:
                            entries[(row, col)] = c
                        else:
                            entries.pop((row, col), None)
            self._diff[i] = entries
        return self._diff[i]

    def apply_differential(self, i, vec):
        """vec: {col: scalar} chain in degree i; returns its boundary."""
        out = {}
        for (row, col), c in self.differential(i).items():
            if col in vec:
                w = out.get(row, 0) + c * vec[col]
                if w:
                    out[row] = w
                else:
                    out.pop(row, None)
        return out

    def verify_d2(self, degrees=None):
        """Assert that consecutive differentials compose to zero."""
        degs = list(degrees) if degrees is not None else list(self.degrees())[:-2]
        for i in degs:
            d1 = self.differential(i)
            d2 = self.differential(i + 1)
            by_col = {}
            for (r, c), val in d2.items():
                by_col.setdefault(c, []).append((r, val))
            acc = {}
            for (mid, col), val in d1.items():
                for row, val2 in by_col.get(mid, ()):
                    key = (row, col)
                    w = acc.get(key, 0) + val2 * val
                    if w:
                        acc[key] = w
                    else:
                        acc.pop(key, None)
            if acc:
                raise AssertionError(
                    f"differential does not square to zero in degree {i}")
        return True


def change_choices_map(diagram, choices_a, choices_b):
    """Sign of the natural isomorphism between two choice sets, per generator.

    The map sends a generator to +-1 times itself: the sign of the
    reordering permutation times -1 for every X-labelled circle whose
    chosen orientation differs.
    """
    def sign_of(gen):
        v, labels = gen
        s = _perm_sign(choices_a.ordering(v), choices_b.ordering(v))
        oa = choices_a.orientation(v)
        ob = choices_b.orientation(v)
        for ci, lab in enumerate(labels):
            if lab == 1 and oa[ci] != ob[ci]:
                s = -s
        return s
    return sign_of


def theta_sign_map(complex_):
    """The involution swapping the barred labels on the essential circle.

    Requires s = t (the Khovanov and Lee specializations).  Class-0
    complexes have no essential circles, so the map is the identity.
    Returns a function gen -> (gen', sign).
    """
    spec = complex_.spec
    if spec.s != spec.t:
        raise DiagramError("theta involution requires s = t")

    def theta(gen):
        v, labels = gen
        es = complex_.diagram.resolve(v).essential_index
        if es is None:
            return gen, 1
        flipped = list(labels)
        flipped[es] = 1 - flipped[es]
        return (v, tuple(flipped)), 1

    return theta
