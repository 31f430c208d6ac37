"""Core combinatorial types: decorated graphs, orientations and gradings.

A graph is stored as a list of edges between typed endpoints.  Endpoint
kinds:

    v  internal vertex          (ids 0..nv-1, valence >= 3)
    l  numbered leg             (ids are the leg numbers 1..n, each once)
    e  epsilon leg instance     (unmarked half-edge at the special vertex)
    w  omega leg instance       (marked half-edge at the special vertex)
    h  hair                     (unlabeled leg, hairy-complex modes)
    x  external vertex          (unary-operations mode, id 0)

Modes:

    X     blown-up generators (epsilon/omega legs, numbered legs); the
          complexes B and C are omega-count truncations of X
    GC0   connected, no legs, no tadpoles, valence >= 3
    fHGC  possibly disconnected, hairs allowed, no tadpoles
    G1    connected, one external vertex of arbitrary valence

An orientation is an ordering of the *orientation set*: the structural
edges (edges touching neither a numbered leg nor a hair) together with
one mark per omega endpoint.  Orderings are identified up to even
permutation; odd reorderings flip the sign, and a generator admitting an
automorphism that induces an odd permutation of the orientation set is
zero.

Generators are stored in canonical form: a byte-string key plus a sign.
The canonical orientation implied by a key lists, component by component
(components sorted by their local encodings), the structural edges in
encoding order followed by the omega marks in id order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

KV, KL, KE, KW, KH, KX = 0, 1, 2, 3, 4, 5
_KIND_CH = {KV: "v", KL: "l", KE: "e", KW: "w", KH: "h", KX: "x"}
_CH_KIND = {c: k for k, c in _KIND_CH.items()}

MODE_X = "X"
MODE_GC0 = "GC0"
MODE_FHGC = "fHGC"
MODE_G1 = "G1"

# sort rank used for edge encodings; v < x < l < e < w < h keeps internal
# structure in front of the decorations
_RANK = {KV: 0, KX: 1, KL: 2, KE: 3, KW: 4, KH: 5}


class StructuralError(ValueError):
    """A graph violates one of the structural invariants of its mode."""

    def __init__(self, rule, detail=""):
        self.rule = rule
        super().__init__(f"{rule}: {detail}" if detail else rule)


class BudgetError(RuntimeError):
    """An enumeration exceeded its generator budget."""


@dataclass
class RawGraph:
    """A not-necessarily-canonical decorated graph.

    `edges` is a list of endpoint pairs; endpoints are (kind, id) tuples.
    `sign` is the orientation sign relative to the graph's own ordering
    (structural edges in list order, then omega marks by id).
    """

    mode: str
    n: int
    nv: int
    edges: list
    has_external: bool = False
    sign: int = 1

    def copy(self):
        return RawGraph(self.mode, self.n, self.nv,
                        [tuple(e) for e in self.edges],
                        self.has_external, self.sign)

    def default_orientation(self):
        """Structural edges in list order, marks sorted by omega id."""
        orient = [("E", i) for i, e in enumerate(self.edges)
                  if _is_structural(e)]
        wids = sorted(i for (k, i) in _endpoints(self.edges) if k == KW)
        orient.extend(("M", wid) for wid in wids)
        return orient

    def fresh_id(self, kind):
        ids = [i for (k, i) in _endpoints(self.edges) if k == kind]
        return max(ids) + 1 if ids else 0


def blown_generator(n, nv, edges, sign=1):
    return RawGraph(MODE_X, n, nv, [tuple(e) for e in edges], False, sign)


def plain_graph(mode, nv, edges, has_external=False, sign=1):
    if mode not in (MODE_GC0, MODE_FHGC, MODE_G1):
        raise ValueError(f"not a plain-graph mode: {mode}")
    return RawGraph(mode, 0, nv, [tuple(e) for e in edges],
                    has_external, sign)


def _endpoints(edges):
    for a, b in edges:
        yield a
        yield b


def _is_structural(edge):
    (ka, _), (kb, _) = edge
    return ka not in (KL, KH) and kb not in (KL, KH)


def _edge_sorted(a, b):
    return (a, b) if (_RANK[a[0]], a[1]) <= (_RANK[b[0]], b[1]) else (b, a)


# ---------------------------------------------------------------------------
# validation


def validate(raw):
    """Check the structural invariants of `raw`'s mode.

    Raises StructuralError naming the violated rule.  Tadpoles at the
    external vertex are tolerated (needed for the tadpole fixture that
    extends the unary-composition action); internal tadpoles never are.
    """
    seen = {}
    val = {}
    for a, b in raw.edges:
        for kind, idx in (a, b):
            if kind == KV:
                if not (0 <= idx < raw.nv):
                    raise StructuralError("dangling-endpoint",
                                          f"vertex id {idx} out of range")
                val[idx] = val.get(idx, 0) + 1
            elif kind == KX:
                if not raw.has_external:
                    raise StructuralError("dangling-endpoint",
                                          "external endpoint without external vertex")
            else:
                key = (kind, idx)
                if key in seen:
                    raise StructuralError("duplicate-leg",
                                          f"{_KIND_CH[kind]}{idx} used twice")
                seen[key] = True
        if a[0] == KV and b[0] == KV and a[1] == b[1]:
            raise StructuralError("internal-tadpole", f"at vertex {a[1]}")
        if a[0] == KL and b[0] == KL:
            raise StructuralError("leg-leg-edge", "numbered to numbered")
        if a[0] == KH and b[0] == KH:
            raise StructuralError("leg-leg-edge", "hair to hair")
        if {a[0], b[0]} & {KL, KH} and {a[0], b[0]} & {KE, KW}:
            # a numbered/hair leg attached straight to the special vertex is
            # fine in X mode (omega-j and epsilon-j edges)
            if raw.mode != MODE_X or a[0] == KH or b[0] == KH:
                raise StructuralError("leg-leg-edge",
                                      "hair attached to special vertex")
    nums = sorted(i for (k, i) in _endpoints(raw.edges) if k == KL)
    if raw.mode == MODE_X:
        if nums != list(range(1, raw.n + 1)):
            raise StructuralError("numbered-legs",
                                  f"expected 1..{raw.n}, got {nums}")
    elif nums:
        raise StructuralError("numbered-legs", "not allowed in this mode")
    for kind in ((KE, KW) if raw.mode != MODE_X else ()):
        if any(k == kind for (k, _) in _endpoints(raw.edges)):
            raise StructuralError("special-legs", "not allowed in this mode")
    if raw.mode != MODE_FHGC and any(
            k == KH for (k, _) in _endpoints(raw.edges)):
        raise StructuralError("hairs", "only allowed in hairy mode")
    if raw.has_external and raw.mode != MODE_G1:
        raise StructuralError("external-vertex", "only allowed in G1 mode")
    for v in range(raw.nv):
        if val.get(v, 0) < 3:
            raise StructuralError("valence", f"vertex {v} has valence "
                                  f"{val.get(v, 0)} < 3")
    comps = _split_components(raw)
    if raw.mode == MODE_X:
        for verts, eidx in comps:
            if not any(a[0] in (KE, KW) or b[0] in (KE, KW)
                       for a, b in (raw.edges[i] for i in eidx)):
                raise StructuralError("component-special",
                                      "component without epsilon/omega leg")
    elif raw.mode in (MODE_GC0, MODE_G1):
        if len(comps) != 1 or (raw.mode == MODE_GC0 and raw.nv == 0):
            raise StructuralError("connectivity",
                                  f"{raw.mode} graph must be connected")
    return raw


def _split_components(raw):
    """Connected components as (sorted vertex ids, sorted edge indices).

    The external vertex, if present, participates like an ordinary vertex
    (it may form a component by itself: the unit graph).
    """
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    nodes = [(KV, v) for v in range(raw.nv)]
    if raw.has_external:
        nodes.append((KX, 0))
    for node in nodes:
        parent[node] = node
    for i, (a, b) in enumerate(raw.edges):
        for ep in (a, b):
            if ep not in parent:
                parent[ep] = ep
        union(a, b)
    groups = {}
    for i, (a, b) in enumerate(raw.edges):
        groups.setdefault(find(a), []).append(i)
    comps = []
    claimed = set()
    for root, eidx in sorted(groups.items(),
                             key=lambda kv: min(kv[1])):
        verts = sorted({i for e in eidx for (k, i) in raw.edges[e] if k == KV})
        claimed.update(verts)
        comps.append((verts, sorted(eidx)))
    for v in range(raw.nv):
        if v not in claimed:
            comps.append(([v], []))
    if raw.has_external and not any(
            k == KX for (k, _) in _endpoints(raw.edges)):
        comps.append(([], []))
    return comps


# ---------------------------------------------------------------------------
# canonical form of one component


def _initial_colors(verts, edges, raw):
    """Label-independent starting colors for the refinement."""
    colors = {}
    for v in verts:
        inc = []
        for a, b in edges:
            for p, q in ((a, b), (b, a)):
                if p == (KV, v):
                    if q[0] == KL:
                        inc.append((KL, q[1]))
                    elif q[0] == KV:
                        inc.append((KV, -1))
                    else:
                        inc.append((q[0], -1))
        colors[v] = (0, tuple(sorted(inc)))
    return colors


def _refine(verts, nbrs, colors):
    """Iterated neighborhood refinement; returns stable integer colors."""
    cur = colors
    while True:
        sig = {v: (cur[v], tuple(sorted(cur[u] for u in nbrs[v])))
               for v in verts}
        ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: (1, ranks[sig[v]]) for v in verts}
        if len(set(new.values())) == len(set(cur.values())):
            return new
        cur = new


def _component_canonical(verts, edges, raw):
    """Canonicalize one connected component.

    Returns (encoding, slot_of_edge, zero, n_struct, wid_order) where
    `encoding` is a tuple of edges in canonical local labels,
    `slot_of_edge[i]` gives the canonical position of input edge i,
    `zero` is True if the component admits an odd automorphism, and
    `wid_order` lists the input omega ids in canonical mark order.
    """
    # a marked special tadpole has an odd half-edge swap
    zero = any(a[0] == KW and b[0] == KW for a, b in edges)

    nbrs = {v: [] for v in verts}
    for a, b in edges:
        if a[0] == KV and b[0] == KV:
            nbrs[a[1]].append(b[1])
            nbrs[b[1]].append(a[1])

    best = None
    best_parities = None

    def leaf(order):
        nonlocal best, best_parities, zero
        pos = {v: i for i, v in enumerate(order)}

        def wild(ep):
            k, i = ep
            if k == KV:
                return (_RANK[KV], pos[i])
            if k in (KE, KW, KH):
                return (_RANK[k], -1)
            return (_RANK[k], i)

        def ekey(i):
            a, b = wild(edges[i][0]), wild(edges[i][1])
            return (a, b) if a <= b else (b, a)

        keyed = sorted(range(len(edges)), key=ekey)
        enc = tuple(ekey(i) for i in keyed)
        if best is not None and enc > best[0]:
            return
        slot = [0] * len(edges)
        for s, i in enumerate(keyed):
            slot[i] = s
        # parity of the permutation taking input orientation order
        # (structural edges by input index, marks by input omega id) to
        # canonical order (structural by slot, marks by edge slot)
        struct_in = [i for i in range(len(edges)) if _is_structural(edges[i])]
        struct_slots = sorted(slot[i] for i in struct_in)
        srank = {s: r for r, s in enumerate(struct_slots)}
        marks_in = sorted((i, wid) for i in range(len(edges))
                          for (k, wid) in edges[i] if k == KW)
        marks_in.sort(key=lambda t: t[1])
        mrank = {}
        for r, (i, wid) in enumerate(sorted(marks_in,
                                            key=lambda t: slot[t[0]])):
            mrank[wid] = r
        ns = len(struct_in)
        perm = [srank[slot[i]] for i in struct_in] + \
               [ns + mrank[wid] for (_, wid) in marks_in]
        par = _perm_parity(perm)
        wid_order = [wid for (_, wid) in sorted(marks_in,
                                                key=lambda t: slot[t[0]])]
        if best is None or enc < best[0]:
            best = (enc, slot, wid_order)
            best_parities = {par}
        else:
            best_parities.add(par)

    if not verts:
        leaf(())
    else:
        init = _initial_colors(verts, edges, raw)

        def search(colors):
            colors = _refine(verts, nbrs, {v: colors[v] for v in verts})
            cells = {}
            for v in verts:
                cells.setdefault(colors[v], []).append(v)
            ordered = [cells[c] for c in sorted(cells)]
            target = next((cell for cell in ordered if len(cell) > 1), None)
            if target is None:
                leaf(tuple(v for cell in ordered for v in cell))
                return
            for v in sorted(target):
                branched = dict(colors)
                branched[v] = (-1, colors[v])
                search(branched)

        search(init)

    enc, slot, wid_order = best
    if len(best_parities) > 1:
        zero = True
    # parallel mark-free structural edges admit an odd swap
    counts = {}
    for i, e in enumerate(edges):
        if _is_structural(e) and not any(k == KW for (k, _) in e):
            counts[enc[slot[i]]] = counts.get(enc[slot[i]], 0) + 1
    if any(c >= 2 for c in counts.values()):
        zero = True
    base_par = min(best_parities)
    return enc, slot, zero, base_par, wid_order


def _perm_parity(perm):
    seen = [False] * len(perm)
    par = 0
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        par ^= (clen - 1) & 1
    return par


def _render_component(enc):
    """Render a canonical component with local ids assigned in slot order."""
    ne = nw = nh = 0
    out = []
    for a, b in enc:
        eps = []
        for r, i in (a, b):
            if r == _RANK[KE] and i < 0:
                eps.append((r, ne)); ne += 1
            elif r == _RANK[KW] and i < 0:
                eps.append((r, nw)); nw += 1
            elif r == _RANK[KH] and i < 0:
                eps.append((r, nh)); nh += 1
            else:
                eps.append((r, i))
        out.append(tuple(eps))
    return tuple(out), ne, nw, nh


_R2K = {_RANK[k]: k for k in _RANK}


def canonicalize(raw, ordering=None):
    """Canonical (key, sign) of a raw graph; sign 0 means the zero vector.

    `ordering` is an explicit orientation list of ("E", edge_index) and
    ("M", omega_id) entries; when omitted the graph's default orientation
    is used.  The key is mode-independent text; the sign is the parity of
    the permutation carrying `ordering` to the canonical orientation,
    times raw.sign.
    """
    if ordering is None:
        ordering = raw.default_orientation()
    comps = _split_components(raw)
    wid_edge = {}
    for i, e in enumerate(raw.edges):
        for (k, wid) in e:
            if k == KW:
                wid_edge[wid] = i

    pieces = []
    zero = False
    for verts, eidx in comps:
        edges = [raw.edges[i] for i in eidx]
        enc, slot, z, base_par, wid_order = _component_canonical(
            verts, edges, raw)
        zero = zero or z
        rendered, ne, nw, nh = _render_component(enc)
        struct_local = sorted(
            s for i, s in enumerate(slot) if _is_structural(edges[i]))
        pieces.append({
            "rendered": rendered,
            "nv": len(verts),
            "ne": ne, "nw": nw, "nh": nh,
            "eidx": eidx,
            "slot": slot,
            "base_par": base_par,
            "wid_order": wid_order,
            "n_struct": len(struct_local),
            "struct_rank": {s: r for r, s in enumerate(struct_local)},
            "m": len(struct_local) + nw,
        })

    pieces.sort(key=lambda p: p["rendered"])
    for p1, p2 in zip(pieces, pieces[1:]):
        if p1["rendered"] == p2["rendered"] and p1["m"] % 2 == 1:
            zero = True

    # global canonical position of every orientation element
    pos_of = {}
    offset = 0
    par = 0
    for p in pieces:
        par ^= p["base_par"]
        for i, eglobal in enumerate(p["eidx"]):
            if _is_structural(raw.edges[eglobal]):
                pos_of[("E", eglobal)] = offset + p["struct_rank"][p["slot"][i]]
        for r, wid in enumerate(p["wid_order"]):
            pos_of[("M", wid)] = offset + p["n_struct"] + r
        offset += p["m"]
    if len(ordering) != offset or set(ordering) != set(pos_of):
        raise StructuralError("orientation",
                              "ordering does not list the orientation set")
    par ^= _perm_parity([pos_of[el] for el in ordering])
    sign = 0 if zero else (raw.sign if par == 0 else -raw.sign)

    key = _render_key(raw, pieces)
    return key, sign


def _render_key(raw, pieces):
    voff = eoff = woff = hoff = 0
    all_edges = []
    for p in pieces:
        for a, b in p["rendered"]:
            eps = []
            for r, i in (a, b):
                k = _R2K[r]
                off = {KV: voff, KE: eoff, KW: woff, KH: hoff}.get(k, 0)
                eps.append((r, i + off))
            all_edges.append(tuple(eps))
        voff += p["nv"]; eoff += p["ne"]; woff += p["nw"]; hoff += p["nh"]
    all_edges.sort()
    body = ",".join(f"{_KIND_CH[_R2K[a[0]]]}{a[1]}-{_KIND_CH[_R2K[b[0]]]}{b[1]}"
                    for a, b in all_edges)
    g = grading_genus(raw)
    return f"g={g},n={raw.n};{body}".encode()


def grading_genus(raw):
    """The genus grading rendered into keys.

    X mode: one plus the sum of component genus contributions.  GC0/G1:
    the loop order.  fHGC: total loop order over components, legs counted
    as tree branches.
    """
    if raw.mode == MODE_X:
        return 1 + sum(c[1] for c in components_data(raw))
    comps = _split_components(raw)
    nodes = raw.nv + (1 if raw.has_external else 0) + sum(
        1 for (k, _) in _endpoints(raw.edges) if k in (KL, KE, KW, KH))
    return len(raw.edges) - nodes + len(comps)


def components_data(raw):
    """Per blown-up component: (edge indices, genus g_i, excess E_i)."""
    out = []
    for verts, eidx in _split_components(raw):
        ne = nw = nnum = 0
        for i in eidx:
            for (k, _) in raw.edges[i]:
                if k == KE:
                    ne += 1
                elif k == KW:
                    nw += 1
                elif k == KL:
                    nnum += 1
        # component Betti number, counting leg endpoints as vertices
        nodes = len(verts) + ne + nw + nnum + sum(
            1 for i in eidx for (k, _) in raw.edges[i] if k == KH)
        h1 = len(eidx) - nodes + 1
        gi = h1 + ne + nw - 1
        out.append((eidx, gi, 3 * gi + 2 * nnum - 2 * nw))
    return out


# ---------------------------------------------------------------------------
# gradings on raw graphs and keys


def degree(obj, kind="X"):
    """Cohomological degree: X-degree is #structural - #omega; B and C
    shift by 22 and 21; plain modes count structural edges."""
    raw = obj if isinstance(obj, RawGraph) else decode(obj)
    ns = sum(1 for e in raw.edges if _is_structural(e))
    nw = sum(1 for (k, _) in _endpoints(raw.edges) if k == KW)
    if kind in (MODE_GC0, MODE_FHGC, MODE_G1):
        return ns
    d = ns - nw
    if kind == "B":
        return d + 22
    if kind == "C":
        return d + 21
    if kind == "X":
        return d
    raise ValueError(f"unknown kind {kind}")


def genus(obj):
    raw = obj if isinstance(obj, RawGraph) else decode(obj)
    return grading_genus(raw)


def excess(obj):
    raw = obj if isinstance(obj, RawGraph) else decode(obj)
    nw = sum(1 for (k, _) in _endpoints(raw.edges) if k == KW)
    return 3 * (genus(raw) - 1) + 2 * raw.n - 2 * nw


def excess_budget(g, n):
    return 3 * g + 2 * n - 25


def omega_count(obj):
    raw = obj if isinstance(obj, RawGraph) else decode(obj)
    return sum(1 for (k, _) in _endpoints(raw.edges) if k == KW)


def components(raw):
    """Split a generator into component generators with their gradings.

    Numbered legs are relabeled 1..n_i in increasing order of their
    original numbers; returns [(component RawGraph, g_i, E(C_i))].
    """
    out = []
    for eidx, gi, exc in components_data(raw):
        edges = [raw.edges[i] for i in eidx]
        verts = sorted({i for e in edges for (k, i) in e if k == KV})
        vmap = {v: j for j, v in enumerate(verts)}
        nums = sorted(i for e in edges for (k, i) in e if k == KL)
        lmap = {x: j + 1 for j, x in enumerate(nums)}

        def remap(ep):
            k, i = ep
            if k == KV:
                return (KV, vmap[i])
            if k == KL:
                return (KL, lmap[i])
            return ep

        comp = RawGraph(raw.mode, len(nums), len(verts),
                        [(remap(a), remap(b)) for a, b in edges],
                        raw.has_external)
        out.append((comp, gi, exc))
    return out


# ---------------------------------------------------------------------------
# decoding keys back to raw graphs


def decode(key, mode=MODE_X):
    """Rebuild the RawGraph (in canonical labels) from a key."""
    if isinstance(key, bytes):
        key = key.decode()
    head, body = key.split(";", 1)
    body = body.rstrip(";")
    fields = dict(p.split("=") for p in head.split(","))
    n = int(fields["n"])
    edges = []
    has_external = False
    if body:
        for part in body.split(","):
            sa, sb = part.split("-")
            eps = []
            for s in (sa, sb):
                k = _CH_KIND[s[0]]
                eps.append((k, int(s[1:])))
                if k == KX:
                    has_external = True
            edges.append(tuple(eps))
    nv = 1 + max((i for (k, i) in _endpoints(edges) if k == KV), default=-1)
    if mode == MODE_G1:
        has_external = True
    return RawGraph(mode, n, nv, edges, has_external)


def decode_oriented(key, mode=MODE_X):
    """Decode a key together with its canonical orientation list.

    Re-canonicalizing the result gives back (key, +1); every operation on
    stored generators starts from this pair.
    """
    raw = decode(key, mode)
    return raw, canonical_orientation(raw)


def canonical_orientation(raw):
    """The orientation list implied by a canonical key's edge order.

    Components sorted by their local encodings; within each component the
    structural edges in encoding order, then the marks in omega-id order.
    This agrees with what `canonicalize` produced for a decoded key, so
    decode + canonical_orientation round-trips with sign +1.
    """
    comps = _split_components(raw)
    blocks = []
    for verts, eidx in comps:
        relabel = {}
        for kind in (KV, KE, KW, KH):
            ids = sorted({i for e in eidx for (k, i) in raw.edges[e]
                          if k == kind})
            relabel.update({(kind, i): (kind, j) for j, i in enumerate(ids)})

        def lkey(i):
            a, b = raw.edges[i]
            a = relabel.get(a, a)
            b = relabel.get(b, b)
            ra = (_RANK[a[0]], a[1])
            rb = (_RANK[b[0]], b[1])
            return (ra, rb) if ra <= rb else (rb, ra)

        local = sorted(eidx, key=lkey)
        struct = [("E", i) for i in local if _is_structural(raw.edges[i])]
        wids = sorted(w for i in eidx for (k, w) in raw.edges[i] if k == KW)
        rendered = tuple(lkey(i) for i in local)
        blocks.append((rendered, struct + [("M", w) for w in wids]))
    blocks.sort(key=lambda b: b[0])
    return [el for _, block in blocks for el in block]


# ---------------------------------------------------------------------------
# sparse vectors of canonical generators


class GraphVector:
    """Sparse rational linear combination of canonical generators."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    @classmethod
    def from_raw(cls, raw, coeff=1, ordering=None):
        key, sign = canonicalize(raw, ordering)
        if sign == 0:
            return cls()
        return cls({key: Fraction(coeff) * sign})

    def add_raw(self, raw, coeff=1, ordering=None):
        key, sign = canonicalize(raw, ordering)
        if sign:
            self._bump(key, Fraction(coeff) * sign)
        return self

    def _bump(self, key, c):
        new = self.terms.get(key, 0) + c
        if new:
            self.terms[key] = new
        else:
            self.terms.pop(key, None)

    def __add__(self, other):
        out = GraphVector(self.terms)
        for k, c in other.terms.items():
            out._bump(k, c)
        return out

    def __sub__(self, other):
        out = GraphVector(self.terms)
        for k, c in other.terms.items():
            out._bump(k, -c)
        return out

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        if not scalar:
            return GraphVector()
        return GraphVector({k: c * scalar for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        return isinstance(other, GraphVector) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "GraphVector(0)"
        bits = [f"{c}*{k.decode()}" for k, c in sorted(self.terms.items())]
        return "GraphVector(" + " + ".join(bits) + ")"

    def support_omega_max(self):
        return max((omega_count(k) for k in self.terms), default=-1)

    def restrict(self, pred):
        return GraphVector({k: c for k, c in self.terms.items() if pred(k)})
