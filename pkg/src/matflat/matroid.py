"""Matroid oracles over bitset ground sets, with lazy minors and simplification.

Every oracle answers ``rank(S)`` and ``closure(S)`` for ``S`` a subset of its
ground set, given either as an int bitmask or an iterable of element indices.
Minor views keep the element labels of the matroid they were taken from.
"""

from itertools import combinations, product

from .bits import MAX_ELEMENTS, bits, full_mask, popcount, to_mask
from .errors import ResourceLimit, Unsupported


class Matroid:
    """Base oracle.  Subclasses implement ``_rank`` and may override ``_closure``."""

    kind = "abstract"

    def __init__(self, n, ground=None):
        if n > MAX_ELEMENTS:
            raise ResourceLimit(f"{n} elements exceeds the bitset width {MAX_ELEMENTS}")
        self.n = n
        self.ground = full_mask(n) if ground is None else ground
        self._full_rank = None

    def _check(self, S):
        S = to_mask(S)
        if S & ~self.ground:
            raise ValueError(f"subset {sorted(bits(S & ~self.ground))} not in the ground set")
        return S

    def rank(self, S=None):
        return self._rank(self.ground if S is None else self._check(S))

    def closure(self, S):
        return self._closure(self._check(S))

    def _closure(self, S):
        r = self._rank(S)
        out = S
        for e in bits(self.ground & ~S):
            if self._rank(S | (1 << e)) == r:
                out |= 1 << e
        return out

    @property
    def full_rank(self):
        if self._full_rank is None:
            self._full_rank = self._rank(self.ground)
        return self._full_rank

    @property
    def size(self):
        return popcount(self.ground)

    def elements(self):
        return list(bits(self.ground))

    def loops(self):
        return self._closure(0)

    def is_flat(self, S):
        S = self._check(S)
        return self._closure(S) == S

    def _covers(self, F):
        """Optional fast path for the covers of a flat; None means use generic closures."""
        return None

    def __repr__(self):
        return f"<{type(self).__name__} kind={self.kind} size={self.size} rank={self.full_rank}>"


class LinearMatroid(Matroid):
    """Column matroid of a matrix over GF(q); ``columns[i]`` is the vector of element i."""

    kind = "linear"

    def __init__(self, field, columns, rows=None):
        columns = [tuple(c) for c in columns]
        super().__init__(len(columns))
        self.field = field
        self.columns = columns
        self.rows = rows if rows is not None else (len(columns[0]) if columns else 0)
        for c in columns:
            if len(c) != self.rows:
                raise ValueError("columns have inconsistent lengths")
        # Parallel classes by normalized direction; zero columns are loops.
        self._loop_mask = 0
        by_dir = {}
        for i, c in enumerate(columns):
            d = self._normalize(c)
            if d is None:
                self._loop_mask |= 1 << i
            else:
                by_dir[d] = by_dir.get(d, 0) | (1 << i)
        self._dir_mask = by_dir
        self._class_of = [0] * len(columns)
        for mask in by_dir.values():
            for i in bits(mask):
                self._class_of[i] = mask

    def _normalize(self, v):
        for x in v:
            if x:
                s = self.field.inv_table[x]
                row = self.field.mul_table[s]
                return tuple(row[y] for y in v)
        return None

    def _reduce(self, v, basis):
        add, mul, neg = self.field.add_table, self.field.mul_table, self.field.neg_table
        for piv, b in basis:
            c = v[piv]
            if c:
                row = mul[neg[c]]
                v = [add[x][row[y]] for x, y in zip(v, b)]
        return v

    def _coords(self, v, basis):
        """Coefficients c with v = sum c_i * basis_i; v must lie in the span."""
        add, mul, neg = self.field.add_table, self.field.mul_table, self.field.neg_table
        coeffs = []
        for piv, b in basis:
            c = v[piv]
            coeffs.append(c)
            if c:
                row = mul[neg[c]]
                v = [add[x][row[y]] for x, y in zip(v, b)]
        if any(v):
            raise ValueError("vector is not in the span of the basis")
        return coeffs

    def _insert(self, v, basis):
        """Reduce v against basis; append it if independent.  Returns True on growth."""
        v = self._reduce(v, basis)
        for p, x in enumerate(v):
            if x:
                row = self.field.mul_table[self.field.inv_table[x]]
                basis.append((p, [row[y] for y in v]))
                return True
        return False

    def _rank(self, S):
        basis = []
        for i in bits(S & ~self._loop_mask):
            if self._insert(self.columns[i], basis) and len(basis) == self.rows:
                break
        return len(basis)

    def _basis(self, S):
        basis = []
        for i in bits(S & ~self._loop_mask):
            if self._insert(self.columns[i], basis) and len(basis) == self.rows:
                break
        return basis

    def _span_closure(self, basis, S):
        """All elements in the span of ``basis`` (which spans S)."""
        d = len(basis)
        if d == self.rows:
            return self.ground
        out = S | self._loop_mask
        for i in bits(S & ~self._loop_mask):
            out |= self._class_of[i]
        remaining = self.ground & ~out
        q = self.field.q
        if (q ** d - 1) // (q - 1) < popcount(remaining):
            # Fewer span points than candidates: walk the span instead.
            add, mul = self.field.add_table, self.field.mul_table
            vecs = [b for _, b in basis]
            for coeffs in _projective_coeffs(q, d):
                v = [0] * self.rows
                for c, b in zip(coeffs, vecs):
                    if c:
                        row = mul[c]
                        v = [add[x][row[y]] for x, y in zip(v, b)]
                out |= self._dir_mask.get(self._normalize(v), 0)
            return out & self.ground
        while remaining:
            i = (remaining & -remaining).bit_length() - 1
            cls = self._class_of[i]
            if not any(self._reduce(self.columns[i], basis)):
                out |= cls
            remaining &= ~cls
        return out

    def _closure(self, S):
        return self._span_closure(self._basis(S), S)

    def _covers_in(self, F, ground):
        """Covers of the flat F, each intersected with ``ground``; F's basis is computed once."""
        basis = self._basis(F)
        out = []
        remaining = ground & ~F
        while remaining:
            e = (remaining & -remaining).bit_length() - 1
            ext = list(basis)
            self._insert(self.columns[e], ext)
            G = self._span_closure(ext, F | (1 << e)) & ground
            out.append(G)
            remaining &= ~G
        return out

    def _covers(self, F):
        return self._covers_in(F, self.ground)


def _projective_coeffs(q, d):
    """Coefficient vectors of length d with first nonzero entry 1."""
    for lead in range(d):
        for tail in product(range(q), repeat=d - lead - 1):
            yield (0,) * lead + (1,) + tail


class PointLineMatroid(Matroid):
    """Simple matroid of rank <= 3 given by its lines with at least three points."""

    kind = "rank3_pointline"

    def __init__(self, n, long_lines):
        super().__init__(n)
        self.long_lines = [to_mask(L) for L in long_lines]
        self._line_of = [[0] * n for _ in range(n)]
        for idx, L in enumerate(self.long_lines):
            pts = list(bits(L))
            if len(pts) < 3:
                raise ValueError(f"long line {idx} has fewer than 3 points")
            if pts[-1] >= n:
                raise ValueError(f"long line {idx} mentions element {pts[-1]} >= n = {n}")
            for a, b in combinations(pts, 2):
                if self._line_of[a][b]:
                    raise ValueError(f"elements {a} and {b} lie on two long lines")
                self._line_of[a][b] = self._line_of[b][a] = L

    def line_through(self, a, b):
        """The rank-2 flat spanned by two distinct elements."""
        return self._line_of[a][b] or (1 << a) | (1 << b)

    def _rank(self, S):
        c = popcount(S)
        if c <= 2:
            return c
        a = (S & -S).bit_length() - 1
        rest = S & (S - 1)
        b = (rest & -rest).bit_length() - 1
        L = self._line_of[a][b]
        return 2 if L and not S & ~L else 3

    def _closure(self, S):
        c = popcount(S)
        if c <= 1:
            return S
        r = self._rank(S)
        if r == 3:
            return self.ground
        a = (S & -S).bit_length() - 1
        rest = S & (S - 1)
        b = (rest & -rest).bit_length() - 1
        L = self._line_of[a][b] or S
        # All points on one long line: the line is then the whole matroid.
        return L


class UniformMatroid(Matroid):
    kind = "uniform"

    def __init__(self, r, n):
        if not 0 <= r <= n:
            raise ValueError(f"U_{{{r},{n}}} needs 0 <= r <= n")
        super().__init__(n)
        self.r = r

    def _rank(self, S):
        return min(popcount(S), self.r)

    def _closure(self, S):
        return S if popcount(S) < self.r else self.ground


class MinorView(Matroid):
    """Lazy minor base / contracted \\ deleted.  Rank rule r(S) = r_base(S | C) - r_base(C)."""

    def __init__(self, base, contracted=0, deleted=0, kind="minor_view"):
        if contracted & deleted:
            raise ValueError("contracted and deleted sets must be disjoint")
        super().__init__(base.n, base.ground & ~(contracted | deleted))
        self.kind = kind
        self.base = base
        self.contracted = contracted
        self.deleted = deleted
        self._rc = base._rank(contracted)

    def _rank(self, S):
        return self.base._rank(S | self.contracted) - self._rc

    def _closure(self, S):
        return self.base._closure(S | self.contracted) & self.ground

    def _covers(self, F):
        if isinstance(self.base, LinearMatroid):
            return self.base._covers_in(F | self.contracted, self.ground)
        return None


def _split(M):
    if isinstance(M, MinorView):
        return M.base, M.contracted, M.deleted
    return M, 0, 0


def contract(M, C):
    C = M._check(C)
    base, c0, d0 = _split(M)
    return MinorView(base, c0 | C, d0)


def delete(M, D):
    D = M._check(D)
    base, c0, d0 = _split(M)
    return MinorView(base, c0, d0 | D)


def restrict(M, F):
    F = M._check(F)
    return delete(M, M.ground & ~F)


def rank(M, S=None):
    return M.rank(S)


def closure(M, S):
    return M.closure(S)


def parallel_classes(M):
    """Parallel classes of the non-loops, each a bitmask, ordered by least element."""
    loops = M.loops()
    classes = []
    seen = loops
    for e in bits(M.ground & ~loops):
        if seen >> e & 1:
            continue
        cls = M._closure(1 << e) & ~loops
        classes.append(cls)
        seen |= cls
    return classes


def simplify(M):
    """Return ``(si(M), partition)``; the partition lists each parallel class as a sorted list.

    The simplification keeps the least element of every class.  A matroid that
    is already simple is returned unchanged.
    """
    loops = M.loops()
    classes = parallel_classes(M)
    partition = [list(bits(c)) for c in classes]
    drop = loops
    for c in classes:
        drop |= c & (c - 1)  # everything except the least element
    if not drop:
        return M, partition
    base, c0, d0 = _split(M)
    return MinorView(base, c0, d0 | drop, kind="simplification_view"), partition


def is_simple(M):
    return M.loops() == 0 and all(popcount(c) == 1 for c in parallel_classes(M))


def is_gfq_representable_rank_le3(M, q):
    """Decide whether a simple matroid of rank <= 3 is a restriction of PG(2, q).

    Exhaustive backtracking over injective maps into the points of PG(2, q),
    with the images of a basis pinned to the coordinate points (PGL(3, q) is
    transitive on ordered triangles).
    """
    from .geometry import pg_points  # geometry depends on this module

    r = M.full_rank
    if r > 3:
        raise Unsupported("representability is only implemented for rank <= 3")
    if not is_simple(M):
        raise ValueError("matroid must be simple")
    elems = M.elements()
    n = len(elems)
    if r <= 1:
        return True
    if r == 2:
        return n <= q + 1
    if n > q * q + q + 1:
        return False

    from .gf import build_field

    f = build_field(q)
    pts = pg_points(f, 3)
    index = {p: i for i, p in enumerate(pts)}
    npts = len(pts)

    def det(u, v, w):
        a, m, s = f.add, f.mul, f.sub
        t1 = m(u[0], s(m(v[1], w[2]), m(v[2], w[1])))
        t2 = m(u[1], s(m(v[0], w[2]), m(v[2], w[0])))
        t3 = m(u[2], s(m(v[0], w[1]), m(v[1], w[0])))
        return a(s(t1, t2), t3)

    pg_col = {}

    def pg_collinear(i, j, k):
        key = tuple(sorted((i, j, k)))
        if key not in pg_col:
            pg_col[key] = det(pts[i], pts[j], pts[k]) == 0
        return pg_col[key]

    m_col = {}

    def m_collinear(a, b, c):
        key = tuple(sorted((a, b, c)))
        if key not in m_col:
            m_col[key] = M.rank((1 << a) | (1 << b) | (1 << c)) == 2
        return m_col[key]

    # Order elements: a basis first, then the rest.
    basis = []
    for e in elems:
        if M.rank(sum(1 << b for b in basis) | (1 << e)) > len(basis):
            basis.append(e)
    order = basis + [e for e in elems if e not in basis]
    fixed = [index[(1, 0, 0)], index[(0, 1, 0)], index[(0, 0, 1)]]
    image = dict(zip(basis, fixed))
    used = set(fixed)

    def extend(pos):
        if pos == n:
            return True
        x = order[pos]
        placed = order[:pos]
        for p in range(npts):
            if p in used:
                continue
            ok = True
            for a, b in combinations(placed, 2):
                if m_collinear(a, b, x) != pg_collinear(image[a], image[b], p):
                    ok = False
                    break
            if ok:
                image[x] = p
                used.add(p)
                if extend(pos + 1):
                    return True
                del image[x]
                used.discard(p)
        return False

    return extend(3)


def materialize(M):
    """Rebuild a minor view as a stand-alone oracle on elements 0..n'-1.

    Returns ``(matroid, labels)`` where ``labels[i]`` is the original label of
    new element i.  Supported for minors of linear and uniform matroids and
    for deletions of point-line matroids.
    """
    if not isinstance(M, MinorView):
        return M, M.elements()
    base, C, D = M.base, M.contracted, M.deleted
    labels = M.elements()
    if isinstance(base, LinearMatroid):
        basis = base._basis(C)
        dc = len(basis)
        for e in labels:
            base._insert(base.columns[e], basis)
        cols = [tuple(base._coords(base.columns[e], basis)[dc:]) for e in labels]
        return LinearMatroid(base.field, cols, rows=len(basis) - dc), labels
    if isinstance(base, UniformMatroid):
        rc = min(popcount(C), base.r)
        return UniformMatroid(min(base.r - rc, len(labels)), len(labels)), labels
    if isinstance(base, PointLineMatroid) and not C:
        pos = {e: i for i, e in enumerate(labels)}
        lines = []
        for L in base.long_lines:
            kept = [pos[e] for e in bits(L & M.ground)]
            if len(kept) >= 3:
                lines.append(kept)
        return PointLineMatroid(len(labels), lines), labels
    raise Unsupported(f"cannot materialize a {M.kind} over a {base.kind} matroid")
