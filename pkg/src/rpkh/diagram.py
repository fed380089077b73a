"""Projective link diagrams: tangles in a disk with antipodal wall identification.

A diagram lives in a round disk whose boundary carries 2m marked *wall
points*; point p is glued to point p+m (mod 2m), which turns the disk into
the projective plane.  Crossings store their four ports in counterclockwise
order starting at the incoming under-strand, exactly as in PD codes, and
arcs are directed from->to, so a diagram is oriented by construction.

The same machinery drives planar diagrams: m = 0 is a diagram disjoint from
the wall, and nothing downstream special-cases it.

Resolutions, their circles, and the complementary face structure are
computed here.  Faces are built in the orientation double cover (two
mirror copies of the disk glued antipodally along the boundary, i.e. a
sphere), where every orientation question becomes concrete: the unique
essential complementary region of a resolution is the face class fixed by
the deck involution, essential circles are the ones whose lift is
connected, and the alternating orientations induced by a dividing circle
reduce to nesting parity plus honest "counterclockwise in the sphere"
checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class DiagramError(ValueError):
    """Invalid diagram input or an ill-posed diagram operation."""


# Ports: ("x", crossing_id, slot) or ("w", wall_point).
# Pieces: ("a", arc_id) for arcs, ("c", crossing_id, chord_index) for the
# two smoothing chords of a resolved crossing.  Sides: 0 = left of the
# piece's own direction (drawn in the disk), 1 = right.

LEFT, RIGHT = 0, 1


def _chord_slots(bit):
    # 0-resolution joins slots 0-1 and 2-3; 1-resolution joins 1-2 and 3-0.
    # Each chord is directed first-slot -> second-slot; with slots numbered
    # counterclockwise this puts the middle of the crossing box on the
    # chord's left.
    return ((0, 1), (2, 3)) if bit == 0 else ((1, 2), (3, 0))


def _side_of_dart(piece, direction):
    """Atom (without sheet) on the model-left of a directed piece."""
    return (piece, LEFT if direction > 0 else RIGHT)


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent
        if x not in p:
            p[x] = x
            return x
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _atom_key(atom):
    """Total order on face atoms, used for canonical face ids."""
    kind = atom[0]
    if kind == "g":
        return (0, atom[1], 0, 0, 0, atom[2])
    piece, side, sheet = atom[1], atom[2], atom[3]
    if piece[0] == "a":
        return (1, piece[1], 0, side, sheet, 0)
    return (2, piece[1], piece[2], side, sheet, 0)


class ProjDiagram:
    """An oriented link diagram in the projective plane (m = 0: planar)."""

    def __init__(self, wall_points, arcs, crossings=None, placements=None):
        """arcs: {arc_id: (from_port, to_port)}; free loops use (None, None).

        placements: list of (outer_arc, outer_side, anchor) records, one per
        floating component; anchor is None (the canonical wall-adjacent
        face) or an (arc_id, side) pair on another component.
        """
        if wall_points % 2 != 0:
            raise DiagramError(f"odd wall-point count {wall_points}")
        self.wall_points = wall_points
        self.arcs = {int(a): (f, t) for a, (f, t) in arcs.items()}
        if crossings is None:
            crossings = sorted({p[1] for f, t in self.arcs.values()
                                for p in (f, t) if p is not None and p[0] == "x"})
        self.crossings = sorted(int(c) for c in crossings)
        self._validate_ports()
        self._validate_orientation()
        self.placements = self._normalize_placements(placements or [])
        self._res_cache = {}
        self._faces_cache = None

    # -- basic structure ---------------------------------------------------

    @property
    def m(self):
        return self.wall_points // 2

    @property
    def link_class(self):
        return self.m % 2

    def partner(self, p):
        return (p + self.m) % self.wall_points

    def port_owner(self, port):
        return self._port_map[port]

    def _validate_ports(self):
        port_map = {}
        for aid, (f, t) in sorted(self.arcs.items()):
            if (f is None) != (t is None):
                raise DiagramError(f"arc {aid} has exactly one endpoint")
            for end, port in enumerate((f, t)):
                if port is None:
                    continue
                kind = port[0]
                if kind == "x":
                    _, cid, slot = port
                    if cid not in set(self.crossings) or not 0 <= slot <= 3:
                        raise DiagramError(f"arc {aid} references unknown port {port}")
                elif kind == "w":
                    if not 0 <= port[1] < self.wall_points:
                        raise DiagramError(f"arc {aid} references unknown wall point {port[1]}")
                else:
                    raise DiagramError(f"arc {aid} has malformed port {port}")
                if port in port_map:
                    raise DiagramError(f"duplicate port use at {port}")
                port_map[port] = (aid, end)
        for cid in self.crossings:
            for slot in range(4):
                if ("x", cid, slot) not in port_map:
                    raise DiagramError(f"dangling crossing port ({cid}, {slot})")
        for p in range(self.wall_points):
            if ("w", p) not in port_map:
                raise DiagramError(f"dangling wall point {p}")
        self._port_map = port_map

    def _validate_orientation(self):
        # Under-strand flows slot 0 -> slot 2; over-strand uses slots 1/3
        # with exactly one incoming end; wall identification preserves the
        # direction of travel.
        signs = {}
        for cid in self.crossings:
            ends = [self._port_map[("x", cid, s)][1] for s in range(4)]
            # end == 1 means the arc's head ("to") sits here: flow comes in.
            if ends[0] != 1 or ends[2] != 0:
                raise DiagramError(f"inconsistent orientation at crossing {cid} (under-strand)")
            if ends[1] + ends[3] != 1:
                raise DiagramError(f"inconsistent orientation at crossing {cid} (over-strand)")
            signs[cid] = 1 if ends[3] == 1 else -1
        for p in range(self.wall_points):
            q = self.partner(p)
            if self._port_map[("w", p)][1] + self._port_map[("w", q)][1] != 1:
                raise DiagramError(f"inconsistent orientation through wall point {p}")
        self._signs = signs

    def sign(self, cid, flips=None):
        """Crossing sign; flips optionally reverses components (id -> +-1)."""
        s = self._signs[cid]
        if flips:
            comp = self.component_of_arc
            under = comp[self._port_map[("x", cid, 0)][0]]
            over = comp[self._port_map[("x", cid, 1)][0]]
            s *= flips.get(under, 1) * flips.get(over, 1)
        return s

    @property
    def n_plus(self):
        return sum(1 for c in self.crossings if self._signs[c] > 0)

    @property
    def n_minus(self):
        return sum(1 for c in self.crossings if self._signs[c] < 0)

    # -- components --------------------------------------------------------

    @property
    def component_of_arc(self):
        """arc_id -> link-component id (the component's minimal arc id)."""
        if not hasattr(self, "_comp_of_arc"):
            uf = _UnionFind()
            for aid in self.arcs:
                uf.find(("a", aid))
            for cid in self.crossings:
                for s_in, s_out in ((0, 2), (1, 3)):
                    a = self._port_map[("x", cid, s_in)][0]
                    b = self._port_map[("x", cid, s_out)][0]
                    uf.union(("a", a), ("a", b))
            for p in range(self.wall_points):
                a = self._port_map[("w", p)][0]
                b = self._port_map[("w", self.partner(p))][0]
                uf.union(("a", a), ("a", b))
            groups = {}
            for aid in self.arcs:
                groups.setdefault(uf.find(("a", aid)), []).append(aid)
            self._comp_of_arc = {}
            for members in groups.values():
                rep = min(members)
                for aid in members:
                    self._comp_of_arc[aid] = rep
        return self._comp_of_arc

    @property
    def components(self):
        return sorted(set(self.component_of_arc.values()))

    def link_data(self):
        """(homology class in RP3, number of link components)."""
        return (self.link_class, len(self.components))

    # -- structure-graph components & placements ---------------------------

    @property
    def structure_component_of_arc(self):
        """arc -> embedded-graph component (crossings and the wall connect)."""
        if not hasattr(self, "_struct_comp"):
            uf = _UnionFind()
            uf.find("wall")
            for aid, (f, t) in self.arcs.items():
                uf.find(("a", aid))
                for port in (f, t):
                    if port is None:
                        continue
                    other = "wall" if port[0] == "w" else ("x", port[1])
                    uf.union(("a", aid), other)
            for cid in self.crossings:
                uf.find(("x", cid))
            comp = {}
            groups = {}
            for aid in self.arcs:
                groups.setdefault(uf.find(("a", aid)), []).append(aid)
            wall_root = uf.find("wall")
            for root, members in groups.items():
                rep = "wall" if root == wall_root else min(members)
                for aid in members:
                    comp[aid] = rep
            self._struct_comp = comp
        return self._struct_comp

    def floating_components(self):
        return sorted({c for c in self.structure_component_of_arc.values() if c != "wall"})

    def _normalize_placements(self, placements):
        recs = {}
        comp = self.structure_component_of_arc
        for outer_arc, outer_side, anchor in placements:
            if outer_arc not in self.arcs:
                raise DiagramError(f"placement references unknown arc {outer_arc}")
            c = comp[outer_arc]
            if c == "wall":
                raise DiagramError(f"placement on wall-connected arc {outer_arc}")
            if c in recs:
                raise DiagramError(f"duplicate placement for component {c}")
            if anchor is not None:
                a_arc, _ = anchor
                if a_arc not in self.arcs:
                    raise DiagramError(f"placement anchor references unknown arc {a_arc}")
                if comp[a_arc] == c:
                    raise DiagramError(f"placement anchor for component {c} lies on itself")
            recs[c] = (outer_arc, outer_side, anchor)
        for c in self.floating_components():
            if c not in recs:
                recs[c] = (c, LEFT, None)
        return recs

    # -- resolutions ---------------------------------------------------------

    def resolve(self, vertex):
        vertex = tuple(int(b) for b in vertex)
        if len(vertex) != len(self.crossings):
            raise DiagramError("vertex length does not match crossing count")
        if vertex not in self._res_cache:
            self._res_cache[vertex] = Resolution(self, vertex)
        return self._res_cache[vertex]

    def oriented_vertex(self, flips=None):
        """The resolution vertex compatible with the (possibly flipped) orientation."""
        return tuple(0 if self.sign(c, flips) > 0 else 1 for c in self.crossings)

    def diagram_faces(self):
        """Face structure of the diagram itself (crossings as 4-valent vertices)."""
        if self._faces_cache is None:
            self._faces_cache = _FaceStructure(self, vertex=None)
        return self._faces_cache

    # -- serialization -------------------------------------------------------

    def to_json(self):
        def port(p):
            if p is None:
                return None
            if p[0] == "x":
                return {"crossing": p[1], "slot": p[2]}
            return {"wall": p[1]}

        arcs = []
        for aid in sorted(self.arcs):
            f, t = self.arcs[aid]
            if f is None:
                arcs.append({"id": aid, "loop": "trivial"})
            else:
                arcs.append({"id": aid, "from": port(f), "to": port(t)})
        doc = {
            "wall_points": self.wall_points,
            "crossings": [{"id": c} for c in self.crossings],
            "arcs": arcs,
        }
        placements = []
        for c in sorted(self.placements):
            outer_arc, outer_side, anchor = self.placements[c]
            rec = {"arc": outer_arc, "side": "left" if outer_side == LEFT else "right"}
            if anchor is None:
                rec["at"] = "wall"
            else:
                rec["at"] = {"arc": anchor[0],
                             "side": "left" if anchor[1] == LEFT else "right"}
            placements.append(rec)
        if placements:
            doc["placements"] = placements
        return doc


def _parse_port(obj, where):
    if not isinstance(obj, dict):
        raise DiagramError(f"malformed port in {where}")
    if "crossing" in obj:
        return ("x", int(obj["crossing"]), int(obj.get("slot", -1)))
    if "wall" in obj:
        return ("w", int(obj["wall"]))
    raise DiagramError(f"malformed port in {where}")


def parse_diagram(doc):
    """Build a validated ProjDiagram from the JSON document (dict or text)."""
    import json as _json

    if isinstance(doc, (str, bytes)):
        doc = _json.loads(doc)
    wall_points = int(doc.get("wall_points", 0))
    crossings = [int(c["id"]) for c in doc.get("crossings", [])]
    arcs = {}
    essential_loops = []
    for rec in doc.get("arcs", []):
        aid = int(rec["id"])
        if "loop" in rec:
            if rec["loop"] == "trivial":
                arcs[aid] = (None, None)
            elif rec["loop"] == "essential":
                essential_loops.append(aid)
            else:
                raise DiagramError(f"arc {aid}: unknown loop tag {rec['loop']!r}")
        else:
            if "from" not in rec or "to" not in rec:
                raise DiagramError(f"arc {aid} missing endpoint")
            arcs[aid] = (_parse_port(rec["from"], f"arc {aid}"),
                         _parse_port(rec["to"], f"arc {aid}"))
    if essential_loops:
        # An essential free loop must meet every other essential curve, so
        # it is only meaningful on an otherwise planar diagram; desugar it
        # into an explicit wall-to-wall arc.
        if wall_points != 0 or len(essential_loops) > 1:
            raise DiagramError("essential free loop requires a planar diagram without one")
        wall_points = 2
        arcs[essential_loops[0]] = (("w", 0), ("w", 1))
    placements = []
    for rec in doc.get("placements", []):
        side = LEFT if rec.get("side", "left") == "left" else RIGHT
        at = rec.get("at", "wall")
        if at == "wall":
            anchor = None
        else:
            anchor = (int(at["arc"]), LEFT if at.get("side", "left") == "left" else RIGHT)
        placements.append((int(rec["arc"]), side, anchor))
    return ProjDiagram(wall_points, arcs, crossings, placements)


# -- resolutions and their face structure -----------------------------------


@dataclass
class Circle:
    index: int
    darts: tuple          # ((piece, dir), ...) canonical traversal
    pieces: frozenset
    arcs: frozenset
    wall_passes: int
    min_arc: int

    @property
    def essential(self):
        return self.wall_passes % 2 == 1


class Resolution:
    """Circles of one cube vertex, plus the complementary face structure."""

    def __init__(self, diagram, vertex):
        self.diagram = diagram
        self.vertex = tuple(vertex)
        self.bit = {c: self.vertex[i] for i, c in enumerate(diagram.crossings)}
        self._trace_circles()
        self._faces = None

    # traversal ------------------------------------------------------------

    def _chord_of_slot(self, cid, slot):
        for i, (u, v) in enumerate(_chord_slots(self.bit[cid])):
            if slot == u:
                return (("c", cid, i), 1)
            if slot == v:
                return (("c", cid, i), -1)
        raise AssertionError

    def _leaving_arc(self, port):
        aid, end = self.diagram.port_owner(port)
        return (("a", aid), 1 if end == 0 else -1)

    def next_dart(self, dart):
        """Successor along the resolved curve; also reports a wall pass."""
        (piece, direction) = dart
        if piece[0] == "a":
            f, t = self.diagram.arcs[piece[1]]
            if f is None:
                return dart, 0  # free loop closes on itself
            head = t if direction > 0 else f
            if head[0] == "x":
                return self._chord_of_slot(head[1], head[2]), 0
            q = self.diagram.partner(head[1])
            return self._leaving_arc(("w", q)), 1
        cid, idx = piece[1], piece[2]
        u, v = _chord_slots(self.bit[cid])[idx]
        head_slot = v if direction > 0 else u
        return self._leaving_arc(("x", cid, head_slot)), 0

    def _trace_circles(self):
        seen = set()
        circles = []
        for aid in sorted(self.diagram.arcs):
            start = (("a", aid), 1)
            if start in seen or (("a", aid), -1) in seen:
                continue
            darts = []
            passes = 0
            d = start
            while True:
                darts.append(d)
                seen.add(d)
                d, hop = self.next_dart(d)
                passes += hop
                if d == start:
                    break
            arcs = frozenset(p[1] for p, _ in darts if p[0] == "a")
            circles.append(Circle(
                index=-1,
                darts=tuple(darts),
                pieces=frozenset(p for p, _ in darts),
                arcs=arcs,
                wall_passes=passes,
                min_arc=min(arcs),
            ))
        # Canonical order: ascending minimal arc id, essential circle last.
        circles.sort(key=lambda c: (c.essential, c.min_arc))
        self.circles = []
        self.circle_of_piece = {}
        for i, c in enumerate(circles):
            c.index = i
            self.circles.append(c)
            for p in c.pieces:
                self.circle_of_piece[p] = i
        ess = [c.index for c in self.circles if c.essential]
        if len(ess) > 1:
            raise AssertionError("more than one essential circle in a resolution")
        if bool(ess) != bool(self.diagram.link_class):
            raise AssertionError("essential circle does not match link class")
        self.essential_index = ess[0] if ess else None
        total = sum(c.wall_passes for c in self.circles)
        assert total == self.diagram.m, "wall passes must cover each wall pair once"

    def dart_direction_on_piece(self, circle, piece):
        """+1 if the canonical traversal runs along the piece's own direction."""
        for p, d in circle.darts:
            if p == piece:
                return d
        raise KeyError(piece)

    # face structure ---------------------------------------------------------

    def faces(self):
        if self._faces is None:
            self._faces = _FaceStructure(self.diagram, self.vertex, self)
        return self._faces


class _FaceStructure:
    """Complementary regions, computed in the orientation double cover.

    vertex=None builds the faces of the diagram graph itself (used to
    validate saddle bands); otherwise the faces of the resolved circles.
    """

    def __init__(self, diagram, vertex, resolution=None):
        self.diagram = diagram
        self.resolution = resolution
        uf = _UnionFind()
        d = diagram
        two_m = d.wall_points
        gaps = list(range(two_m)) if two_m else [0]
        self.gaps = gaps

        def left(dart, sheet):
            (piece, side) = _side_of_dart(*dart)
            return ("s", piece, side, sheet)

        def right(dart, sheet):
            (piece, side) = _side_of_dart(dart[0], -dart[1])
            return ("s", piece, side, sheet)

        for sheet in (0, 1):
            if vertex is None:
                # Crossing corners: consecutive entering darts share a corner.
                for cid in d.crossings:
                    entering = []
                    for s in range(4):
                        aid, end = d.port_owner(("x", cid, s))
                        entering.append((("a", aid), 1 if end == 1 else -1))
                    for s in range(4):
                        uf.union(right(entering[s], sheet),
                                 left(entering[(s + 1) % 4], sheet))
            else:
                res = resolution
                for cid in d.crossings:
                    # port junctions: arc continues onto the chord
                    for s in range(4):
                        arc_leave = res._leaving_arc(("x", cid, s))
                        chord_leave = res._chord_of_slot(cid, s)
                        uf.union(right(arc_leave, sheet), left(chord_leave, sheet))
                        uf.union(left(arc_leave, sheet), right(chord_leave, sheet))
                    # middle of the box lies on the left of both chords
                    uf.union(("s", ("c", cid, 0), LEFT, sheet),
                             ("s", ("c", cid, 1), LEFT, sheet))
            # wall points: sides of the entering arc touch the two gaps
            for p in range(two_m):
                aid, end = d.port_owner(("w", p))
                entering = (("a", aid), 1 if end == 1 else -1)
                uf.union(left(entering, sheet), ("g", p, sheet))
                uf.union(right(entering, sheet), ("g", (p - 1) % two_m, sheet))
        # antipodal gap gluing crosses sheets
        if two_m:
            for p in range(two_m):
                uf.union(("g", p, 0), ("g", d.partner(p), 1))
        else:
            uf.union(("g", 0, 0), ("g", 0, 1))
        # placements: floating components sit in their anchor's face
        host = ("g", gaps[-1] if two_m else 0)
        for comp in sorted(d.placements):
            outer_arc, outer_side, anchor = d.placements[comp]
            for sheet in (0, 1):
                src = ("s", ("a", outer_arc), outer_side, sheet)
                if anchor is None:
                    dst = ("g", host[1], sheet)
                else:
                    dst = ("s", ("a", anchor[0]), anchor[1], sheet)
                uf.union(src, dst)
        self._uf = uf
        self._build_face_ids()
        if vertex is not None:
            self._build_lifts()

    # faces ------------------------------------------------------------------

    def _atoms(self):
        atoms = []
        d = self.diagram
        pieces = [("a", aid) for aid in sorted(d.arcs)]
        if self.resolution is not None:
            for cid in d.crossings:
                pieces.append(("c", cid, 0))
                pieces.append(("c", cid, 1))
        for sheet in (0, 1):
            for g in self.gaps:
                atoms.append(("g", g, sheet))
            for piece in pieces:
                for side in (LEFT, RIGHT):
                    atoms.append(("s", piece, side, sheet))
        return atoms

    def _build_face_ids(self):
        classes = {}
        for atom in self._atoms():
            classes.setdefault(self._uf.find(atom), []).append(atom)
        reps = sorted(classes, key=lambda r: min(_atom_key(a) for a in classes[r]))
        self.face_count = len(reps)
        self._face_of_root = {r: i for i, r in enumerate(reps)}
        self._face_atoms = {self._face_of_root[r]: sorted(classes[r], key=_atom_key)
                            for r in reps}

    def face_of(self, atom):
        return self._face_of_root[self._uf.find(atom)]

    def face_of_dart_side(self, dart, sheet, side):
        """Face on the model-left (side=LEFT) or -right of a directed piece."""
        piece, direction = dart
        if side == RIGHT:
            direction = -direction
        s = LEFT if direction > 0 else RIGHT
        return self.face_of(("s", piece, s, sheet))

    def sigma_face(self, fid):
        atom = self._face_atoms[fid][0]
        if atom[0] == "g":
            return self.face_of(("g", atom[1], 1 - atom[2]))
        return self.face_of(("s", atom[1], atom[2], 1 - atom[3]))

    def sigma_invariant_faces(self):
        return [f for f in range(self.face_count) if self.sigma_face(f) == f]

    def s2_left_face(self, dart, sheet, direction=1):
        """Face on the sphere-left of a directed dart in the given sheet.

        Sheet 0 carries the disk's drawn orientation; sheet 1 is the mirror
        copy, so the sphere-left there is the drawn right.
        """
        d = (dart[0], dart[1] * direction)
        side = LEFT if sheet == 0 else RIGHT
        return self.face_of_dart_side(d, sheet, side)

    # lifted circles -----------------------------------------------------------

    def _build_lifts(self):
        res = self.resolution
        self.lifts = []           # (circle_index, copy) -> lift record id
        self.lift_ids = {}
        for circ in res.circles:
            copies = 1 if circ.essential else 2
            for copy in range(copies):
                sheet0 = copy
                # side faces read off at the first dart of the canonical traversal
                dart0 = circ.darts[0]
                fl = self.face_of_dart_side(dart0, sheet0, LEFT)
                fr = self.face_of_dart_side(dart0, sheet0, RIGHT)
                rec = {
                    "circle": circ.index,
                    "start_sheet": sheet0,
                    "left": fl,
                    "right": fr,
                }
                self.lift_ids[(circ.index, copy)] = len(self.lifts)
                self.lifts.append(rec)
        # The faces of disjoint circles in a sphere form a tree.
        edges = len(self.lifts)
        assert edges == self.face_count - 1, "face adjacency is not a tree"
        self._adj = {f: [] for f in range(self.face_count)}
        for lid, rec in enumerate(self.lifts):
            self._adj[rec["left"]].append((rec["right"], lid))
            self._adj[rec["right"]].append((rec["left"], lid))

    def bfs_costs(self, sources, blocked_lift=None, free_lifts=()):
        """Crossing counts from the source faces; blocked lift impassable."""
        from collections import deque

        INF = None
        cost = {f: INF for f in range(self.face_count)}
        dq = deque()
        for f in sources:
            cost[f] = 0
            dq.append(f)
        free = set(free_lifts)
        while dq:
            f = dq.popleft()
            for g, lid in self._adj[f]:
                if lid == blocked_lift:
                    continue
                c = cost[f] + (0 if lid in free else 1)
                if cost[g] is None or c < cost[g]:
                    cost[g] = c
                    # 0/1 weights: deque suffices at these sizes
                    if c == cost[f]:
                        dq.appendleft(g)
                    else:
                        dq.append(g)
        return cost

    def component_faces(self, sources, blocked_lift):
        """Faces reachable from sources without crossing the blocked lift."""
        from collections import deque

        seen = set(sources)
        dq = deque(sources)
        while dq:
            f = dq.popleft()
            for g, lid in self._adj[f]:
                if lid == blocked_lift or g in seen:
                    continue
                seen.add(g)
                dq.append(g)
        return seen


# -- dividing choices and circle orientations --------------------------------


@dataclass(frozen=True)
class DividingChoice:
    """Dividing-circle datum for one resolution.

    Class-1: the essential circle itself, with one of its two directions.
    Class-0: an essential curve in the unique essential complementary
    region; region=None selects it, an explicit face id is validated.
    """
    region: int | None = None
    direction: int = 1


@dataclass(frozen=True)
class CircleOrientation:
    directions: tuple      # +-1 per circle, relative to the canonical traversal
    provenance: str        # 'induced-from-o' | 'dividing-circle-alternating'
    distances: tuple = ()  # per circle, when alternating (essential circle: 0)


def essential_face(resolution):
    """Face id of the unique essential complementary region (class-0 only)."""
    fs = resolution.faces()
    inv = fs.sigma_invariant_faces()
    if resolution.essential_index is not None:
        assert not inv, "class-1 resolutions have no essential face"
        return None
    assert len(inv) == 1, "class-0 resolutions have exactly one essential face"
    return inv[0]


def canonical_essential_direction(resolution):
    """Directs the essential circle away from its lowest wall point."""
    circ = resolution.circles[resolution.essential_index]
    best = None
    for (piece, direction) in circ.darts:
        if piece[0] != "a":
            continue
        f, t = resolution.diagram.arcs[piece[1]]
        for port, leave_dir in ((f, 1), (t, -1)):
            if port is not None and port[0] == "w":
                cand = (port[1], 1 if direction == leave_dir else -1)
                if best is None or cand[0] < best[0]:
                    best = cand
    assert best is not None, "essential circle must cross the wall"
    return best[1]


def dividing_orientation(resolution, choice):
    """Alternating orientation induced by a dividing circle.

    Each circle's distance from the dividing circle is the minimal number
    of other circles a path must cross, plus one; a circle is directed
    counterclockwise (in the disk the dividing circle bounds, oriented
    compatibly with its direction) exactly when that distance is even.
    """
    res = resolution
    fs = res.faces()
    n = len(res.circles)
    dirs = [0] * n
    dists = [0] * n

    if res.essential_index is not None:
        es = res.essential_index
        if choice.region is not None:
            raise DiagramError("invalid dividing region")
        es_lift = fs.lift_ids[(es, 0)]
        rec = fs.lifts[es_lift]
        sources = {rec["left"], rec["right"]}
        # direction is relative to the wall convention (away from the
        # circle's lowest wall point); convert to the canonical traversal
        d = (1 if choice.direction >= 0 else -1) * canonical_essential_direction(res)
        # component split of the sphere along the essential lift
        sideA = fs.component_faces({rec["left"]}, es_lift)
        P = sideA if min(sideA) <= min(set(range(fs.face_count)) - sideA) else \
            set(range(fs.face_count)) - sideA
        circ = res.circles[es]
        a_left = fs.s2_left_face(circ.darts[0], 0, d)
        eta = 1 if a_left in P else -1
        cost = fs.bfs_costs(sources, free_lifts={es_lift})
        for c in res.circles:
            if c.index == es:
                dirs[c.index] = d
                dists[c.index] = 0
                continue
            l0 = fs.lifts[fs.lift_ids[(c.index, 0)]]
            l1 = fs.lifts[fs.lift_ids[(c.index, 1)]]
            dist = 1 + min(cost[f] for f in
                           (l0["left"], l0["right"], l1["left"], l1["right"]))
            dists[c.index] = dist
            if l0["left"] in P and l0["right"] in P:
                lp, copy = l0, 0
            else:
                lp, copy = l1, 1
                assert l1["left"] in P and l1["right"] in P, "lift straddles the cut"
            lid = fs.lift_ids[(c.index, copy)]
            outside = fs.component_faces(sources, lid)
            inside = lp["right"] if lp["left"] in outside else lp["left"]
            assert (lp["left"] in outside) != (lp["right"] in outside)
            ccw_s2 = fs.s2_left_face(res.circles[c.index].darts[0], copy) == inside
            ccw_d2 = ccw_s2 if eta == 1 else not ccw_s2
            want = dist % 2 == 0
            dirs[c.index] = 1 if ccw_d2 == want else -1
    else:
        f0 = essential_face(res)
        if choice.region is not None and choice.region != f0:
            raise DiagramError("invalid dividing region")
        sgn = 1 if choice.direction >= 0 else -1
        cost = fs.bfs_costs({f0})
        # islands: subtrees hanging off the essential face, swapped by sigma
        island = {}
        for g, lid in fs._adj[f0]:
            if g == f0 or g in island:
                continue
            for f in fs.component_faces({g}, lid):
                if f != f0:
                    island.setdefault(f, g)
        # primary = island whose minimal face id beats its mirror island's
        prim_of_root = {}
        for root in set(island.values()):
            members = [f for f, r in island.items() if r == root]
            mi = min(members)
            mroot = island[fs.sigma_face(mi)]
            other = min(f for f, r in island.items() if r == mroot)
            assert mroot != root, "island fixed by the deck involution"
            prim_of_root[root] = mi < other
        for c in res.circles:
            lid = fs.lift_ids[(c.index, 0)]
            l0 = fs.lifts[lid]
            l1 = fs.lifts[fs.lift_ids[(c.index, 1)]]
            dist = 1 + min(cost[f] for f in
                           (l0["left"], l0["right"], l1["left"], l1["right"]))
            dists[c.index] = dist
            side = l0["left"] if l0["left"] != f0 else l0["right"]
            prim = prim_of_root[island[side]]
            outside = fs.component_faces({f0}, lid)
            inside = l0["right"] if l0["left"] in outside else l0["left"]
            assert (l0["left"] in outside) != (l0["right"] in outside)
            ccw_s2 = fs.s2_left_face(c.darts[0], 0) == inside
            eff = sgn * (1 if prim else -1)
            ccw_d2 = ccw_s2 if eff == 1 else not ccw_s2
            want = dist % 2 == 0
            dirs[c.index] = 1 if ccw_d2 == want else -1
    return CircleOrientation(tuple(dirs), "dividing-circle-alternating", tuple(dists))


def induced_orientation(resolution, flips=None):
    """Circle directions inherited from the link orientation (at D_o only)."""
    flips = flips or {}
    comp = resolution.diagram.component_of_arc
    dirs = []
    for circ in resolution.circles:
        tags = set()
        for (piece, d) in circ.darts:
            if piece[0] == "a":
                f, _ = resolution.diagram.arcs[piece[1]]
                eff = flips.get(comp[piece[1]], 1)
                tags.add(d * eff)
        if len(tags) != 1:
            raise DiagramError("orientation does not induce a direction "
                               "(not the oriented resolution?)")
        dirs.append(tags.pop())
    return CircleOrientation(tuple(dirs), "induced-from-o")


def classify_bifurcation(diagram, vertex, crossing_pos):
    """Edge type at a 0-bit crossing: 'one_two', 'two_one', or 'one_one'."""
    vertex = tuple(vertex)
    if vertex[crossing_pos] != 0:
        raise DiagramError("bifurcation is classified at a 0-bit crossing")
    target = list(vertex)
    target[crossing_pos] = 1
    ru = diagram.resolve(vertex)
    rv = diagram.resolve(tuple(target))
    cid = diagram.crossings[crossing_pos]
    near_u = {ru.circle_of_piece[("c", cid, 0)], ru.circle_of_piece[("c", cid, 1)]}
    near_v = {rv.circle_of_piece[("c", cid, 0)], rv.circle_of_piece[("c", cid, 1)]}
    if len(near_u) == 2 and len(near_v) == 1:
        return "two_one"
    if len(near_u) == 1 and len(near_v) == 2:
        return "one_two"
    return "one_one"
