"""Brute-force oracles. They only read dims and arrow matrices and never call package solvers."""

import itertools
import math

import numpy as np


def matrices(rows, cols, q):
    if rows * cols == 0:
        yield np.zeros((rows, cols), dtype=np.int64)
        return
    for entries in itertools.product(range(q), repeat=rows * cols):
        yield np.array(entries, dtype=np.int64).reshape(rows, cols)


def matrix_tuples(shapes, q):
    for combo in itertools.product(*[list(matrices(r, c, q)) for r, c in shapes]):
        yield combo


def log_q(count, q):
    k = round(math.log(count, q))
    assert q ** k == count, f"{count} is not a power of {q}"
    return k


def arrows_of(rep):
    return [(a.source, a.target) for a in rep.algebra.quiver.arrows]


def maps_of(rep):
    return [np.asarray(m, dtype=np.int64) for m in rep.maps]


# ------------------------------------------------------------ paths


def brute_paths(algebra, max_len=12):
    """All nonzero paths as ``(source, arrow tuple)`` by filtering words against the relations."""
    arrows = [(a.source, a.target) for a in algebra.quiver.arrows]
    rels = [tuple(r) for r in algebra.ideal.relations]
    out = {(v, ()) for v in range(algebra.n)}
    layer = [(v, ()) for v in range(algebra.n)]
    for _ in range(max_len):
        nxt = []
        for s, word in layer:
            end = arrows[word[-1]][1] if word else s
            for i, (a_s, _) in enumerate(arrows):
                if a_s != end:
                    continue
                w = word + (i,)
                if any(w[j:j + len(r)] == r for r in rels for j in range(len(w) - len(r) + 1)):
                    continue
                nxt.append((s, w))
        if not nxt:
            return out
        out.update(nxt)
        layer = nxt
    raise RuntimeError("path enumeration did not terminate")


# ------------------------------------------------------------ homs, isos, extensions


def is_hom(X, Y, f, q):
    for (s, t), xa, ya in zip(arrows_of(X), maps_of(X), maps_of(Y)):
        if np.any((ya @ f[s] - f[t] @ xa) % q):
            return False
    return True


def homs(X, Y, q):
    shapes = [(Y.dims[v], X.dims[v]) for v in range(X.n)]
    for f in matrix_tuples(shapes, q):
        if is_hom(X, Y, f, q):
            yield f


def hom_dim(X, Y, q):
    return log_q(sum(1 for _ in homs(X, Y, q)), q)


def _rank_mod(m, q):
    m = np.array(m, dtype=np.int64) % q
    r = 0
    rows, cols = m.shape
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i, c]), None)
        if piv is None:
            continue
        m[[r, piv]] = m[[piv, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, q)) % q
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % q
        r += 1
    return r


def is_iso(X, Y, q):
    if X.dims != Y.dims:
        return False
    for f in homs(X, Y, q):
        if all(_rank_mod(f[v], q) == X.dims[v] for v in range(X.n) if X.dims[v]):
            return True
    return False


def _path_product(mats, rel):
    out = None
    for a in rel:
        out = mats[a] if out is None else mats[a] @ out
    return out


def ext1_dim(X, Y, q):
    """``Ext^1(X, Y)``: middle terms ``[[Y_a, e_a], [0, X_a]]`` obeying the relations, modulo coboundaries."""
    arrows = arrows_of(X)
    shapes = [(Y.dims[t], X.dims[s]) for s, t in arrows]
    rels = X.algebra.ideal.relations
    xm, ym = maps_of(X), maps_of(Y)
    z = 0
    for e in matrix_tuples(shapes, q):
        mids = [np.block([[ym[i], e[i]], [np.zeros((X.dims[t], Y.dims[s]), dtype=np.int64), xm[i]]])
                for i, (s, t) in enumerate(arrows)]
        if all(not np.any(_path_product(mids, r) % q) for r in rels):
            z += 1
    coboundaries = set()
    for h in matrix_tuples([(Y.dims[v], X.dims[v]) for v in range(X.n)], q):
        e = tuple(((ym[i] @ h[s] - h[t] @ xm[i]) % q).tobytes() for i, (s, t) in enumerate(arrows))
        coboundaries.add(e)
    return log_q(z, q) - log_q(len(coboundaries), q)


# ------------------------------------------------------------ submodules and Hall numbers


_SUBSPACES = {}


def _span(gens, d, q):
    out = set()
    for coeffs in itertools.product(range(q), repeat=len(gens)):
        out.add(tuple(int(sum(c * g[i] for c, g in zip(coeffs, gens)) % q) for i in range(d)))
    return frozenset(out) if out else frozenset({tuple([0] * d)})


def subspaces(d, k, q):
    """All k-dimensional subspaces of F_q^d as frozensets of vectors (spans, or annihilators when k > d/2)."""
    key = (d, k, q)
    if key not in _SUBSPACES:
        vecs = list(itertools.product(range(q), repeat=d))
        if 2 * k <= d:
            found = {_span(g, d, q) for g in itertools.combinations(vecs, k)}
            found = {w for w in found if len(w) == q ** k}
        else:
            found = set()
            for w in subspaces(d, d - k, q):
                found.add(frozenset(v for v in vecs if all(sum(a * b for a, b in zip(v, u)) % q == 0 for u in w)))
        _SUBSPACES[key] = sorted(found, key=sorted)
    return _SUBSPACES[key]


def _basis_of(space, d, q):
    basis, cur = [], frozenset({tuple([0] * d)})
    for v in sorted(space):
        if v not in cur:
            basis.append(v)
            cur = _span(basis, d, q)
    return basis


class _Rep:
    def __init__(self, algebra, dims, maps):
        self.algebra = algebra
        self.dims = tuple(dims)
        self.maps = maps
        self.n = algebra.n


def _sub_and_quotient(L, N, q):
    """Representations on ``N`` and on ``L/N`` from bases found by brute-force spans."""
    d = L.dims
    sub_b, full_b = [], []
    for v in range(L.n):
        b = _basis_of(N[v], d[v], q)
        comp = list(b)
        cur = _span(comp, d[v], q)
        for i in range(d[v]):
            e = tuple(1 if j == i else 0 for j in range(d[v]))
            if e not in cur:
                comp.append(e)
                cur = _span(comp, d[v], q)
        sub_b.append(b)
        full_b.append(comp)
    coords = []
    for v in range(L.n):
        table = {}
        for c in itertools.product(range(q), repeat=d[v]):
            vec = tuple(int(sum(ci * full_b[v][j][i] for j, ci in enumerate(c)) % q) for i in range(d[v]))
            table[vec] = c
        coords.append(table)
    sub_maps, quo_maps = [], []
    for (s, t), m in zip(arrows_of(L), maps_of(L)):
        ks, kt = len(sub_b[s]), len(sub_b[t])
        sm = np.zeros((kt, ks), dtype=np.int64)
        qm = np.zeros((d[t] - kt, d[s] - ks), dtype=np.int64)
        for j, vec in enumerate(full_b[s]):
            img = tuple(int(x) for x in (m @ np.array(vec, dtype=np.int64)) % q) if d[s] else ()
            c = coords[t][img] if d[t] else ()
            if j < ks:
                sm[:, j] = c[:kt]
            else:
                qm[:, j - ks] = c[kt:]
        sub_maps.append(sm)
        quo_maps.append(qm)
    sub = _Rep(L.algebra, [len(b) for b in sub_b], sub_maps)
    quo = _Rep(L.algebra, [d[v] - len(sub_b[v]) for v in range(L.n)], quo_maps)
    return sub, quo


def _is_stable(L, N, q):
    for (s, t), m in zip(arrows_of(L), maps_of(L)):
        for vec in N[s]:
            img = tuple(int(x) for x in (m @ np.array(vec, dtype=np.int64)) % q) if L.dims[s] else \
                tuple([0] * L.dims[t])
            if img not in N[t]:
                return False
    return True


def hall_number(X, Y, L, q):
    """Submodules ``N ⊆ L`` with ``N ≅ X`` and ``L/N ≅ Y``, by enumerating graded subspaces."""
    if tuple(a + b for a, b in zip(X.dims, Y.dims)) != L.dims:
        return 0
    memo = {}

    def iso(rep, target, tag):
        key = (tag, tuple(np.asarray(m, dtype=np.int64).tobytes() for m in rep.maps))
        if key not in memo:
            memo[key] = is_iso(rep, target, q)
        return memo[key]

    count = 0
    for N in itertools.product(*[subspaces(L.dims[v], X.dims[v], q) for v in range(L.n)]):
        if not _is_stable(L, N, q):
            continue
        sub, quo = _sub_and_quotient(L, N, q)
        if iso(sub, X, 0) and iso(quo, Y, 1):
            count += 1
    return count


def submodule_count(L, q):
    """All subrepresentations, by closing vector sets under the arrow maps."""
    per_vertex = []
    for v in range(L.n):
        d = L.dims[v]
        vecs = [tuple(c) for c in itertools.product(range(q), repeat=d)]
        spaces = set()
        for k in range(d + 1):
            for gens in itertools.combinations(vecs, k):
                span = set()
                for coeffs in itertools.product(range(q), repeat=k):
                    span.add(tuple(int(sum(c * g[i] for c, g in zip(coeffs, gens)) % q) for i in range(d)))
                spaces.add(frozenset(span) if span else frozenset({tuple([0] * d)}))
        per_vertex.append(sorted(spaces, key=lambda s: (len(s), sorted(s))))
    count = 0
    mats = maps_of(L)
    for choice in itertools.product(*per_vertex):
        ok = True
        for (s, t), m in zip(arrows_of(L), mats):
            for vec in choice[s]:
                img = tuple(int(x) for x in (m @ np.array(vec, dtype=np.int64)) % q) if L.dims[s] else \
                    tuple([0] * L.dims[t])
                if img not in choice[t]:
                    ok = False
                    break
            if not ok:
                break
        count += ok
    return count


def _cocycles(M, L, q):
    """Extension cocycles ``e_a: M_s -> L_t`` of ``0 -> L -> E -> M -> 0`` and the coboundary set."""
    arrows = arrows_of(M)
    rels = M.algebra.ideal.relations
    mm, lm = maps_of(M), maps_of(L)
    shapes = [(L.dims[t], M.dims[s]) for s, t in arrows]
    zs = []
    for e in matrix_tuples(shapes, q):
        mids = [np.block([[lm[i], e[i]], [np.zeros((M.dims[t], L.dims[s]), dtype=np.int64), mm[i]]])
                for i, (s, t) in enumerate(arrows)]
        if all(not np.any(_path_product(mids, r) % q) for r in rels):
            zs.append(tuple(np.asarray(x) % q for x in e))
    bs = []
    for h in matrix_tuples([(L.dims[v], M.dims[v]) for v in range(M.n)], q):
        bs.append(tuple((lm[i] @ h[s] - h[t] @ mm[i]) % q for i, (s, t) in enumerate(arrows)))
    return zs, bs


class _Middle:
    def __init__(self, algebra, dims, maps):
        self.algebra = algebra
        self.dims = tuple(dims)
        self.maps = maps
        self.n = algebra.n


def extension_orbits_with_middle(M, L, E, q):
    """Aut(M)-orbits of classes in ``Ext^1(M, L)`` whose middle term is isomorphic to ``E``."""
    arrows = arrows_of(M)
    zs, bs = _cocycles(M, L, q)

    def key(e):
        return min(b"".join(((x + b) % q).astype(np.int64).tobytes() for x, b in zip(e, bb)) for bb in bs)

    classes = {}
    for e in zs:
        classes.setdefault(key(e), e)
    auts = [g for g in homs(M, M, q)
            if all(_rank_mod(g[v], q) == M.dims[v] for v in range(M.n) if M.dims[v])]
    mm, lm = maps_of(M), maps_of(L)
    seen = set()
    count = 0
    for k, e in sorted(classes.items()):
        if k in seen:
            continue
        orbit = {key(tuple((e[i] @ g[s]) % q for i, (s, t) in enumerate(arrows))) for g in auts}
        seen |= orbit
        dims = [L.dims[v] + M.dims[v] for v in range(M.n)]
        mids = [np.block([[lm[i], e[i]], [np.zeros((M.dims[t], L.dims[s]), dtype=np.int64), mm[i]]])
                for i, (s, t) in enumerate(arrows)]
        if is_iso(_Middle(M.algebra, dims, mids), E, q):
            count += 1
    return count
