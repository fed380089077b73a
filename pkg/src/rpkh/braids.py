"""Braid words and their planar / projective closures.

Words are lists of nonzero integers: k > 0 is the positive Artin generator
on strands k, k+1 (strand k crossing over), k < 0 its inverse.  Strands are
numbered 1..m from the top; the braid flows left to right.

The projective closure glues the left endpoint of strand i to the right
endpoint of strand m+1-i through the wall: with left endpoints at wall
points 0..m-1 (top to bottom) and right endpoints at m..2m-1 (bottom to
top), that is exactly the antipodal identification p <-> p+m.
"""

from __future__ import annotations

from .diagram import DiagramError, LEFT, RIGHT, ProjDiagram


def from_braid(strands, word, closure="projective"):
    m = int(strands)
    if m < 1:
        raise DiagramError("braid needs at least one strand")
    word = [int(g) for g in word]
    for g in word:
        if g == 0 or abs(g) >= m:
            raise DiagramError(f"generator {g} out of range for {m} strands")
    if closure not in ("projective", "planar"):
        raise DiagramError(f"unknown closure {closure!r}")

    arcs = {}
    next_arc = 0
    # per row: start port of the currently open arc (None before the first
    # crossing in planar mode), and the first incoming port (planar closure)
    open_start = {}
    first_in = {}
    for row in range(1, m + 1):
        open_start[row] = ("w", row - 1) if closure == "projective" else None

    def end_row(row, port):
        nonlocal next_arc
        start = open_start[row]
        if start is None:
            first_in[row] = port
        else:
            arcs[next_arc] = (start, port)
            next_arc += 1

    for cid, g in enumerate(word):
        row = abs(g)
        if g > 0:
            # slots ccw from incoming under: (B_in, D_out, C_out, A_in)
            in_top, in_bot = ("x", cid, 3), ("x", cid, 0)
            out_top, out_bot = ("x", cid, 2), ("x", cid, 1)
        else:
            in_top, in_bot = ("x", cid, 0), ("x", cid, 1)
            out_top, out_bot = ("x", cid, 3), ("x", cid, 2)
        end_row(row, in_top)
        end_row(row + 1, in_bot)
        open_start[row] = out_top
        open_start[row + 1] = out_bot

    placements = []
    if closure == "projective":
        for row in range(1, m + 1):
            end_row(row, ("w", 2 * m - row))
    else:
        closure_arc = {}
        for row in range(1, m + 1):
            if row in first_in:
                arcs[next_arc] = (open_start[row], first_in[row])
                closure_arc[row] = next_arc
                next_arc += 1
            else:
                arcs[next_arc] = (None, None)  # untouched strand: free loop
                closure_arc[row] = next_arc
                next_arc += 1
        # bands of rows linked by crossings nest top-down; each band's outer
        # face touches the closure arc of its top row on the left
        bands = []
        row = 1
        while row <= m:
            top = row
            while row < m and any(abs(g) == row for g in word):
                row += 1
            bands.append((top, row))
            row += 1
        prev_inner = None
        for top, bot in bands:
            anchor = None if prev_inner is None else (prev_inner, RIGHT)
            placements.append((closure_arc[top], LEFT, anchor))
            prev_inner = closure_arc[bot]

    wall_points = 2 * m if closure == "projective" else 0
    return ProjDiagram(wall_points, arcs, list(range(len(word))), placements)
