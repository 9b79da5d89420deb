"""Oriented link diagrams as edge-labeled planar diagram codes.

A crossing is written X[a,b,c,d]: the four incident edge labels listed
counterclockwise, starting from the incoming under-strand edge a.  The
under-strand therefore runs a -> c, and the over-strand occupies slots
b and d.  Within each component, edge labels increase along the
orientation and wrap around from the maximum back to the minimum; that
rule determines the direction of every over-strand and hence every
crossing sign.  Circles with no crossings at all cannot be expressed by
crossing lists, so a diagram carries an explicit free-loop counter.

Construction validates everything: each label must occur exactly twice,
the under-strand of every crossing must agree with the label order, and
the over-strand directions must consume each label-successor transition
exactly once across the whole diagram.

One genuine ambiguity exists in this encoding: a component with at most
two edges that never passes under anything admits two direction
readings (they differ by reversing that circle).  Such a circle lies
entirely above or below the rest of the diagram wherever it is planar,
so either reading denotes the same link; we fix the reading
deterministically (enter along the smaller label first).
"""

from __future__ import annotations

from itertools import permutations, product


class DiagramError(ValueError):
    pass


class PDSyntaxError(DiagramError):
    def __init__(self, message: str, col: int):
        super().__init__(f"line 1, col {col}: {message}")
        self.col = col


class Diagram:
    """Immutable validated diagram."""

    __slots__ = ("crossings", "free_loops", "succ", "components",
                 "signs", "over_in", "comp_of", "_hash")

    def __init__(self, crossings, free_loops: int = 0):
        crossings = tuple(tuple(int(x) for x in cr) for cr in crossings)
        if free_loops < 0:
            raise DiagramError("free loop count cannot be negative")
        for ci, cr in enumerate(crossings):
            if len(cr) != 4:
                raise DiagramError(f"crossing {ci} has {len(cr)} slots, need 4")
            for lab in cr:
                if lab < 1:
                    raise DiagramError(f"crossing {ci}: labels must be positive, got {lab}")
        object.__setattr__(self, "crossings", crossings)
        object.__setattr__(self, "free_loops", int(free_loops))
        object.__setattr__(self, "_hash", None)
        self._derive()

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Diagram is immutable")

    # -- construction-time analysis ---------------------------------------

    def _derive(self) -> None:
        occ: dict[int, list[tuple[int, int]]] = {}
        for ci, cr in enumerate(self.crossings):
            for s, lab in enumerate(cr):
                occ.setdefault(lab, []).append((ci, s))
        for lab, places in occ.items():
            if len(places) != 2:
                raise DiagramError(
                    f"edge label {lab} appears {len(places)} time(s), need exactly 2"
                )

        # components: union the two strands through each crossing
        parent = {lab: lab for lab in occ}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, c, d in self.crossings:
            parent[find(a)] = find(c)
            parent[find(b)] = find(d)
        groups: dict[int, list[int]] = {}
        for lab in occ:
            groups.setdefault(find(lab), []).append(lab)
        components = tuple(sorted(
            (tuple(sorted(g)) for g in groups.values()), key=lambda t: t[0]
        ))
        comp_of = {}
        succ = {}
        for idx, comp in enumerate(components):
            for i, lab in enumerate(comp):
                comp_of[lab] = idx
                succ[lab] = comp[(i + 1) % len(comp)]

        # orientation accounting: every transition lab -> succ[lab] is
        # consumed by exactly one crossing transit
        avail = {(lab, succ[lab]): 1 for lab in succ}
        for ci, (a, b, c, d) in enumerate(self.crossings):
            if succ.get(a) != c:
                raise DiagramError(
                    f"crossing {ci}: under-strand runs {a}->{c}, but the label "
                    f"order gives {a}->{succ.get(a)}"
                )
            if avail.get((a, c), 0) <= 0:
                raise DiagramError(f"crossing {ci}: transition {a}->{c} claimed twice")
            avail[(a, c)] -= 1

        over_in = [0] * len(self.crossings)
        deferred = []
        for ci, (a, b, c, d) in enumerate(self.crossings):
            if b == d:
                # one-edge circle lying over: direction is a free choice
                if succ.get(b) != b or avail.get((b, b), 0) <= 0:
                    raise DiagramError(f"crossing {ci}: over-loop {b} is inconsistent")
                avail[(b, b)] -= 1
                over_in[ci] = 3
                continue
            cand_b = succ.get(b) == d and avail.get((b, d), 0) > 0
            cand_d = succ.get(d) == b and avail.get((d, b), 0) > 0
            if cand_b and cand_d:
                deferred.append(ci)
            elif cand_b:
                avail[(b, d)] -= 1
                over_in[ci] = 1
            elif cand_d:
                avail[(d, b)] -= 1
                over_in[ci] = 3
            else:
                raise DiagramError(
                    f"crossing {ci}: over-strand {b}/{d} fits no remaining transition"
                )
        for ci in deferred:
            _, b, _, d = self.crossings[ci]
            cand_b = avail.get((b, d), 0) > 0
            cand_d = avail.get((d, b), 0) > 0
            if cand_b and cand_d:
                # both-ways tie: a fully-over (or fully-under) two-edge circle
                if b < d:
                    cand_d = False
                else:
                    cand_b = False
            if cand_b:
                avail[(b, d)] -= 1
                over_in[ci] = 1
            elif cand_d:
                avail[(d, b)] -= 1
                over_in[ci] = 3
            else:
                raise DiagramError(f"crossing {ci}: over-strand direction exhausted")
        leftover = [t for t, k in avail.items() if k > 0]
        if leftover:
            raise DiagramError(f"transitions never realized by any crossing: {leftover}")

        signs = tuple(1 if oi == 3 else -1 for oi in over_in)
        object.__setattr__(self, "components", components)
        object.__setattr__(self, "comp_of", comp_of)
        object.__setattr__(self, "succ", succ)
        object.__setattr__(self, "over_in", tuple(over_in))
        object.__setattr__(self, "signs", signs)

    # -- basic queries ------------------------------------------------------

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def component_count(self) -> int:
        return len(self.components) + self.free_loops

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    def sign(self, ci: int) -> int:
        return self.signs[ci]

    def classify(self, ci: int) -> str:
        """'self' when both strands of the crossing lie on one component."""
        a, b, _, _ = self.crossings[ci]
        return "self" if self.comp_of[a] == self.comp_of[b] else "mixed"

    def over_out_slot(self, ci: int) -> int:
        return 4 - self.over_in[ci]  # 1 <-> 3

    def in_slots(self, ci: int) -> tuple[int, int]:
        return (0, self.over_in[ci])

    def pred(self, edge: int) -> int:
        comp = self.components[self.comp_of[edge]]
        i = comp.index(edge)
        return comp[i - 1]

    @property
    def key(self):
        """Exact-labeled identity, usable as a dict key."""
        return (self.crossings, self.free_loops)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash(self.key)
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Diagram({self.pd_text()!r})"

    # -- rewriting ----------------------------------------------------------

    def crossing_change(self, ci: int) -> "Diagram":
        """Swap over and under at one crossing; labels stay put."""
        if not 0 <= ci < len(self.crossings):
            raise DiagramError(f"no crossing {ci}")
        a, b, c, d = self.crossings[ci]
        rotated = (d, a, b, c) if self.signs[ci] > 0 else (b, c, d, a)
        crs = list(self.crossings)
        crs[ci] = rotated
        return Diagram(crs, self.free_loops)

    def smooth(self, ci: int) -> "Diagram":
        return self.smooth_with_map(ci)[0]

    def smooth_with_map(self, ci: int) -> tuple["Diagram", dict[int, int | None]]:
        """Orientation-respecting smoothing of one crossing.

        Returns the relabeled diagram and the old-label -> new-label map
        (None for labels absorbed into a detached crossingless circle).
        """
        if not 0 <= ci < len(self.crossings):
            raise DiagramError(f"no crossing {ci}")
        a, b, c, d = self.crossings[ci]
        glues = [(a, b), (d, c)] if self.signs[ci] > 0 else [(a, d), (b, c)]
        rest = [
            (cr, self.over_in[j])
            for j, cr in enumerate(self.crossings)
            if j != ci
        ]
        return _assemble(rest, glues, self.free_loops)

    def mirror(self) -> "Diagram":
        """Swap slots b and d everywhere; negates every crossing sign."""
        return Diagram(
            [(a, d, c, b) for (a, b, c, d) in self.crossings], self.free_loops
        )

    # -- text forms -----------------------------------------------------------

    def pd_text(self) -> str:
        body = ",".join(f"X[{a},{b},{c},{d}]" for a, b, c, d in self.crossings)
        suffix = f"+O^{self.free_loops}" if self.free_loops else ""
        return f"PD[{body}]{suffix}"

    def canonical_encode(self) -> str:
        """Deterministic text key, equal for equal labeled diagrams.

        Minimizes the rendered PD text over all component orders and all
        starting edges, with crossings sorted.
        """
        suffix = f"+O^{self.free_loops}" if self.free_loops else ""
        if not self.crossings:
            return f"PD[]{suffix}"
        best = None
        comp_count = len(self.components)
        for order in permutations(range(comp_count)):
            for starts in product(*(self.components[i] for i in order)):
                labmap = {}
                nxt = 1
                for pos in range(comp_count):
                    e = starts[pos]
                    for _ in range(len(self.components[order[pos]])):
                        labmap[e] = nxt
                        nxt += 1
                        e = self.succ[e]
                rows = sorted(tuple(labmap[x] for x in cr) for cr in self.crossings)
                text = "PD[" + ",".join(f"X[{a},{b},{c},{d}]" for a, b, c, d in rows) + "]"
                if best is None or text < best:
                    best = text
        return best + suffix


def canonical_encode(d: Diagram) -> str:
    return d.canonical_encode()


# -- assembling mutated diagrams ------------------------------------------


def _assemble(slotted, glues, free_loops: int):
    """Build a relabeled diagram from crossing stubs and gluing relations.

    slotted: list of ((a,b,c,d), over_in_slot) in original labels.
    glues: pairs of labels to be merged into one edge (direction-free).
    Labels whose merged class no longer touches any crossing become free
    loops.  Returns (diagram, old-label -> new-label-or-None).
    """
    labels = set()
    for cr, _ in slotted:
        labels.update(cr)
    for x, y in glues:
        labels.add(x)
        labels.add(y)
    parent = {lab: lab for lab in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in glues:
        parent[find(x)] = find(y)

    members: dict[int, list[int]] = {}
    for lab in labels:
        members.setdefault(find(lab), []).append(lab)

    in_occ: dict[int, tuple[int, int]] = {}
    out_occ: dict[int, tuple[int, int]] = {}
    touched: dict[int, int] = {}
    for ci, (cr, oi) in enumerate(slotted):
        oo = 4 - oi
        for s, lab in enumerate(cr):
            root = find(lab)
            touched[root] = touched.get(root, 0) + 1
            if s == 0 or s == oi:
                if root in in_occ:
                    raise DiagramError("gluing gave an edge two incoming ends")
                in_occ[root] = (ci, s)
            elif s == 2 or s == oo:
                if root in out_occ:
                    raise DiagramError("gluing gave an edge two outgoing ends")
                out_occ[root] = (ci, s)

    new_loops = free_loops
    loop_roots = set()
    for root in members:
        n = touched.get(root, 0)
        if n == 0:
            new_loops += 1
            loop_roots.add(root)
        elif n != 2 or root not in in_occ or root not in out_occ:
            raise DiagramError("gluing left an edge with mismatched ends")

    # follow strands to give compact labels in traversal order
    def next_root(root):
        ci, s = in_occ[root]
        cr, oi = slotted[ci]
        out_slot = 2 if s == 0 else 4 - oi
        return find(cr[out_slot])

    comp_min = {}
    for root, labs in members.items():
        if root not in loop_roots:
            comp_min[root] = min(labs)

    assigned: dict[int, int] = {}
    nxt = 1
    seen = set()
    cycles = []
    for root in sorted(comp_min, key=comp_min.get):
        if root in seen:
            continue
        cycle = []
        x = root
        while x not in seen:
            seen.add(x)
            cycle.append(x)
            x = next_root(x)
        cycles.append(cycle)
    cycles.sort(key=lambda cyc: min(comp_min[r] for r in cyc))
    for cyc in cycles:
        start = min(range(len(cyc)), key=lambda i: comp_min[cyc[i]])
        for i in range(len(cyc)):
            assigned[cyc[(start + i) % len(cyc)]] = nxt
            nxt += 1

    new_crossings = [
        tuple(assigned[find(lab)] for lab in cr) for cr, _ in slotted
    ]
    labmap = {
        lab: (None if find(lab) in loop_roots else assigned[find(lab)])
        for lab in labels
    }
    return Diagram(new_crossings, new_loops), labmap


# -- braids -----------------------------------------------------------------


def braid_to_diagram(n: int, letters) -> Diagram:
    """Closure of a braid word on n strands.

    A letter i stands for the positive generator at positions |i|, |i|+1,
    negative i for its inverse.  Strands are oriented downward; the braid
    axis closure joins each bottom end back to its own top end.
    """
    if n < 1:
        raise DiagramError(f"braid needs at least one strand, got {n}")
    pos = {i: i for i in range(1, n + 1)}
    fresh = n + 1
    slotted = []
    for L in letters:
        m = abs(L)
        if m == 0 or m >= n:
            raise DiagramError(f"braid letter {L} out of range for {n} strands")
        x = pos[m]
        w = pos[m + 1]
        u, y = fresh, fresh + 1
        fresh += 2
        if L > 0:
            slotted.append(((x, u, y, w), 3))
        else:
            slotted.append(((w, x, u, y), 1))
        pos[m], pos[m + 1] = u, y
    glues = [(pos[i], i) for i in range(1, n + 1)]
    return _assemble(slotted, glues, 0)[0]


# -- parsing -----------------------------------------------------------------


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def skip_ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    @property
    def col(self) -> int:
        return self.i + 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, token: str):
        self.skip_ws()
        if not self.text.startswith(token, self.i):
            got = self.text[self.i:self.i + len(token)] or "end of input"
            raise PDSyntaxError(f"expected {token!r}, found {got!r}", self.col)
        self.i += len(token)

    def integer(self) -> int:
        self.skip_ws()
        j = self.i
        while j < len(self.text) and self.text[j].isdigit():
            j += 1
        if j == self.i:
            raise PDSyntaxError("expected an integer", self.col)
        value = int(self.text[self.i:j])
        self.i = j
        return value

    def done(self):
        self.skip_ws()
        if self.i < len(self.text):
            raise PDSyntaxError(
                f"unexpected trailing input {self.text[self.i:]!r}", self.col
            )


def parse_pd(text: str) -> Diagram:
    """Parse `PD[X[a,b,c,d],...]` with an optional `+O^k` free-loop suffix."""
    sc = _Scanner(text)
    sc.expect("PD[")
    crossings = []
    if sc.peek() != "]":
        while True:
            sc.expect("X[")
            a = sc.integer()
            sc.expect(",")
            b = sc.integer()
            sc.expect(",")
            c = sc.integer()
            sc.expect(",")
            d = sc.integer()
            sc.expect("]")
            crossings.append((a, b, c, d))
            if sc.peek() == ",":
                sc.expect(",")
                continue
            break
    sc.expect("]")
    loops = 0
    if sc.peek() == "+":
        sc.expect("+")
        sc.expect("O^")
        loops = sc.integer()
    sc.done()
    return Diagram(crossings, loops)


def parse_diagram(text: str) -> Diagram:
    """Accept either PD text or a braid word `braid(n; i1 i2 ...)`."""
    stripped = text.strip()
    if stripped.startswith("braid"):
        sc = _Scanner(stripped)
        sc.expect("braid")
        sc.expect("(")
        n = sc.integer()
        sc.expect(";")
        letters = []
        while sc.peek() not in (")", ""):
            sc.skip_ws()
            neg = False
            if sc.peek() == "-":
                sc.expect("-")
                neg = True
            val = sc.integer()
            letters.append(-val if neg else val)
        sc.expect(")")
        sc.done()
        return braid_to_diagram(n, letters)
    return parse_pd(stripped)
