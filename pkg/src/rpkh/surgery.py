"""Diagram-level operations: mirrors, reversals, kinks, unions, saddles.

All operations return fresh ProjDiagram objects.  Reversing part of a link
re-anchors crossing slots (slot 0 must stay the incoming under-strand), so
ports are relabelled by the appropriate rotation; mirroring swaps the roles
of over- and under-strand the same way.
"""

from __future__ import annotations

from .diagram import DiagramError, LEFT, RIGHT, ProjDiagram


def _rotate_ports(arcs, rotations):
    """Relabel crossing slots: an endpoint at old slot s moves to s - r(c)."""
    out = {}
    for aid, (f, t) in arcs.items():
        def fix(port):
            if port is None or port[0] != "x":
                return port
            _, cid, slot = port
            r = rotations.get(cid, 0)
            return ("x", cid, (slot - r) % 4)
        out[aid] = (fix(f), fix(t))
    return out


def reverse_components(diagram, components):
    """Reverse the orientation of the given link components."""
    comps = set(components)
    flips = {}
    new_arcs = {}
    for aid, (f, t) in diagram.arcs.items():
        if diagram.component_of_arc[aid] in comps and f is not None:
            new_arcs[aid] = (t, f)
            flips[aid] = -1
        else:
            new_arcs[aid] = (f, t)
    rotations = {}
    for cid in diagram.crossings:
        under_in = diagram.port_owner(("x", cid, 0))[0]
        if diagram.component_of_arc[under_in] in comps:
            rotations[cid] = 2
    new_arcs = _rotate_ports(new_arcs, rotations)
    placements = []
    for comp in sorted(diagram.placements):
        outer_arc, side, anchor = diagram.placements[comp]
        if flips.get(outer_arc):
            side = 1 - side
        if anchor is not None and flips.get(anchor[0]):
            anchor = (anchor[0], 1 - anchor[1])
        placements.append((outer_arc, side, anchor))
    return ProjDiagram(diagram.wall_points, new_arcs, diagram.crossings, placements)


def mirror_diagram(diagram):
    """Swap over- and under-strand at every crossing (the mirror link)."""
    rotations = {c: (3 if diagram.sign(c) > 0 else 1) for c in diagram.crossings}
    new_arcs = _rotate_ports(dict(diagram.arcs), rotations)
    placements = [(a, s, anch) for a, s, anch in
                  (diagram.placements[c] for c in sorted(diagram.placements))]
    return ProjDiagram(diagram.wall_points, new_arcs, diagram.crossings, placements)


def add_kink(diagram, arc, sign=1):
    """Insert a one-crossing kink into an arc (a Reidemeister-I move)."""
    f, t = diagram.arcs[arc]
    if f is None:
        raise DiagramError("cannot kink a free loop")
    cid = max(diagram.crossings, default=-1) + 1
    loop_id = max(diagram.arcs) + 1
    tail_id = loop_id + 1
    new_arcs = dict(diagram.arcs)
    if sign > 0:
        new_arcs[arc] = (f, ("x", cid, 0))
        new_arcs[loop_id] = (("x", cid, 2), ("x", cid, 3))
        new_arcs[tail_id] = (("x", cid, 1), t)
    else:
        new_arcs[arc] = (f, ("x", cid, 0))
        new_arcs[loop_id] = (("x", cid, 2), ("x", cid, 1))
        new_arcs[tail_id] = (("x", cid, 3), t)
    placements = [diagram.placements[c] for c in sorted(diagram.placements)]
    return ProjDiagram(diagram.wall_points, new_arcs,
                       diagram.crossings + [cid], placements)


def disjoint_union(diagram, other):
    """Place a planar diagram next to the wall, away from everything.

    Returns (union, arc_map, crossing_map) for the second factor.
    """
    if other.wall_points != 0:
        raise DiagramError("disjoint union requires a planar second factor")
    arc_off = max(diagram.arcs, default=-1) + 1
    x_off = max(diagram.crossings, default=-1) + 1
    arc_map = {a: a + arc_off for a in other.arcs}
    x_map = {c: c + x_off for c in other.crossings}

    def shift(port):
        if port is None:
            return None
        if port[0] == "x":
            return ("x", x_map[port[1]], port[2])
        raise DiagramError("planar factor touches the wall")

    new_arcs = dict(diagram.arcs)
    for aid, (f, t) in other.arcs.items():
        new_arcs[arc_map[aid]] = (shift(f), shift(t))
    placements = [diagram.placements[c] for c in sorted(diagram.placements)]
    for comp in sorted(other.placements):
        outer, side, anchor = other.placements[comp]
        anchor = None if anchor is None else (arc_map[anchor[0]], anchor[1])
        placements.append((arc_map[outer], side, anchor))
    union = ProjDiagram(diagram.wall_points, new_arcs,
                        diagram.crossings + sorted(x_map.values()), placements)
    return union, arc_map, x_map


def _reorient_consistently(wall_points, arcs, crossings):
    """Flip arc directions until the diagram is globally oriented.

    Returns (arcs, flips) with flips[aid] = -1 for reversed arcs.
    """
    port_map = {}
    for aid, (f, t) in arcs.items():
        for end, port in enumerate((f, t)):
            if port is not None:
                port_map[port] = (aid, end)
    partner = (lambda p: (p + wall_points // 2) % wall_points) if wall_points else None

    def continuation(port):
        if port[0] == "x":
            return ("x", port[1], (port[2] + 2) % 4)
        return ("w", partner(port[1]))

    flips = {}
    for start in sorted(arcs):
        if start in flips or arcs[start][0] is None:
            continue
        aid, direction = start, 1
        while True:
            if aid in flips:
                if flips[aid] != direction:
                    raise DiagramError("component cannot be consistently oriented")
                break
            flips[aid] = direction
            f, t = arcs[aid]
            head = t if direction > 0 else f
            nxt_port = continuation(head)
            nxt, end = port_map[nxt_port]
            # leaving the junction: next arc runs forward if its tail is here
            direction = 1 if end == 0 else -1
            aid = nxt
            if aid == start:
                if direction != 1:
                    raise DiagramError("component cannot be consistently oriented")
                break
    new_arcs = {}
    for aid, (f, t) in arcs.items():
        if flips.get(aid, 1) < 0:
            new_arcs[aid] = (t, f)
        else:
            new_arcs[aid] = (f, t)
    rotations = {}
    for cid in crossings:
        under_in = port_map[("x", cid, 0)]
        if flips.get(under_in[0], 1) < 0:
            rotations[cid] = 2
    new_arcs = _rotate_ports(new_arcs, rotations)
    return new_arcs, {a: flips.get(a, 1) for a in arcs}


def saddle_surgery(diagram, arc_a, side_a, arc_b, side_b, wall_parity=0,
                   fix_orientation=True):
    """Band surgery between two arcs whose chosen sides share a face.

    Returns (new_diagram, info).  info records the replacement arcs and any
    orientation flips applied to make the result consistently oriented; the
    cobordism machinery uses it to match pieces across the move.
    """
    if arc_a == arc_b:
        raise DiagramError("saddle needs two distinct arcs")
    fa, ta = diagram.arcs[arc_a]
    fb, tb = diagram.arcs[arc_b]
    faces = diagram.diagram_faces()

    def side_face(arc, side):
        return faces.face_of_dart_side((("a", arc), 1), 0, side)

    fa0 = side_face(arc_a, side_a)
    fb0 = side_face(arc_b, side_b)
    want = fb0 if wall_parity == 0 else faces.sigma_face(fb0)
    if fa0 != want:
        raise DiagramError("saddle band endpoints lie in different faces")

    new_arcs = dict(diagram.arcs)
    info = {"a": arc_a, "b": arc_b, "side_a": side_a, "side_b": side_b}
    if fa is None and fb is None:
        del new_arcs[arc_b]
        info.update(pattern="loops", new_arcs=(arc_a,))
    elif fa is None or fb is None:
        loop = arc_a if fa is None else arc_b
        keep = arc_b if fa is None else arc_a
        del new_arcs[loop]
        info.update(pattern="absorb", new_arcs=(keep,))
    else:
        cross = (side_a == side_b) ^ (wall_parity == 1)
        a1 = max(diagram.arcs) + 1
        a2 = a1 + 1
        del new_arcs[arc_a]
        del new_arcs[arc_b]
        if cross:
            # from-to: orientations glue as they stand
            new_arcs[a1] = (fa, tb)
            new_arcs[a2] = (fb, ta)
        else:
            new_arcs[a1] = (fa, fb)
            new_arcs[a2] = (ta, tb)
        info.update(pattern="cross" if cross else "parallel", new_arcs=(a1, a2))
    flips = {a: 1 for a in new_arcs}
    if fix_orientation:
        new_arcs, flips = _reorient_consistently(diagram.wall_points, new_arcs,
                                                 diagram.crossings)
    info["flips"] = flips
    # placements: drop records of affected components, re-add survivors
    trial = ProjDiagram(diagram.wall_points, new_arcs, diagram.crossings, [])
    comp = trial.structure_component_of_arc
    placements = []
    seen = set()
    remap = {arc_a: info["new_arcs"][0], arc_b: info["new_arcs"][-1]}
    for c in sorted(diagram.placements):
        outer, side, anchor = diagram.placements[c]
        outer = remap.get(outer, outer)
        if outer not in trial.arcs:
            continue
        if flips.get(outer, 1) < 0:
            side = 1 - side
        if anchor is not None:
            a0 = remap.get(anchor[0], anchor[0])
            if a0 not in trial.arcs:
                anchor = None
            else:
                anchor = (a0, 1 - anchor[1] if flips.get(a0, 1) < 0 else anchor[1])
        cc = comp[outer]
        if cc == "wall" or cc in seen:
            continue
        seen.add(cc)
        placements.append((outer, side, anchor))
    result = ProjDiagram(diagram.wall_points, new_arcs, diagram.crossings,
                         placements)
    return result, info


def connected_sum(diagram, arc_a, other, arc_b):
    """Connected sum with a planar diagram, banded inside the host face."""
    union, arc_map, _ = disjoint_union(diagram, other)
    b = arc_map[arc_b]
    faces = union.diagram_faces()
    host_gap = union.wall_points - 1 if union.wall_points else 0
    host = faces.face_of(("g", host_gap, 0))

    def facing(arc):
        for side in (LEFT, RIGHT):
            if faces.face_of_dart_side((("a", arc), 1), 0, side) == host:
                return side
        return None

    sa, sb = facing(arc_a), facing(b)
    if sa is None or sb is None:
        raise DiagramError("connected-sum arcs do not face the wall-adjacent region")
    result, _ = saddle_surgery(union, arc_a, sa, b, sb)
    return result


def unknot_unions(diagram, count=1):
    """Disjoint union with crossingless planar unknots."""
    out = diagram
    for _ in range(count):
        aid = max(out.arcs, default=-1) + 1
        arcs = dict(out.arcs)
        arcs[aid] = (None, None)
        placements = [out.placements[c] for c in sorted(out.placements)]
        placements.append((aid, LEFT, None))
        out = ProjDiagram(out.wall_points, arcs, out.crossings, placements)
    return out
