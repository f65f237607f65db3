"""Word complexes and their coinvariant quotients under permutation actions.

Degree m of the full complex is the word space (k^m)^{tensor n}: basis words
w map positions {1..n} to slots {1..m}.  The cofaces are

* d0: every letter j becomes j+1;
* di (1 <= i <= m): letters below i unchanged, letters above i shift up,
  every letter equal to i splits into the sum over {i, i+1};
* d(m+1): the plain inclusion into slots [m+1];

and the differential is the alternating sum d = sum_i (-1)^i d^i, acting
diagonally on tensor factors.  Degree 0 is zero (there are no functions into
an empty slot set), and reporting Betti numbers through m_max requires the
differential out of degree m_max, so complexes are built through degree
m_max + 1.

The group G permutes positions on the left, (g.w)(p) = w(g^{-1}(p)), and a
right module M is tensored over G via the transfer identity
x (x) g.w = x.g (x) w.  Two constructions are provided:

* orbit mode decomposes each degree into G-orbits of words; the block of
  the complex at an orbit is the coinvariant space of M under the orbit
  representative's stabilizer, and the differential is assembled by
  rewriting each coface term g.w_rep through the transfer identity and
  projecting into the target orbit's coinvariant basis;
* naive mode builds the full space M (x) (k^m)^{tensor n}, takes the image
  of the diagonal averaging projector, and restricts the full differential
  to it.  It exists purely as an oracle and enforces a dimension cap.

Both modes must agree on dimensions and Betti tables; that equality is part
of the acceptance suite, so neither implementation is allowed to borrow
pieces of the other beyond the shared coface definition.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial

from .linalg import (
    RationalMatrix,
    RowSpanSolver,
    _norm,
    image_basis,
    rank,
)
from .perm import Permutation, PermutationGroup, young_subgroup

DEFAULT_NAIVE_CAP = 20000


class DimensionCapExceeded(RuntimeError):
    def __init__(self, required, cap, what):
        super().__init__(
            f"{what} needs dimension {required}, above the cap {cap}; "
            "raise the cap to force the computation"
        )
        self.required = required
        self.cap = cap


# -- words ----------------------------------------------------------------


def words(n: int, m: int) -> list:
    """All words of length n over slots 1..m, lexicographic."""
    return list(product(range(1, m + 1), repeat=n))


def word_label(w) -> str:
    return "".join(str(x) for x in w)


def position_action(g: Permutation, w):
    """(g.w)(p) = w(g^{-1}(p)); a left action permuting tensor positions."""
    inv = g.inverse().images
    return tuple(w[inv[p] - 1] for p in range(len(w)))


def position_matrix(g: Permutation, n: int, m: int) -> RationalMatrix:
    """Column-convention matrix of w -> g.w on the degree-m word space."""
    ws = words(n, m)
    index = {w: i for i, w in enumerate(ws)}
    entries = ((index[position_action(g, w)], index[w], 1) for w in ws)
    return RationalMatrix.from_entries(len(ws), len(ws), entries)


def coface(i: int, w, m: int) -> list:
    """Images of w under d^i into slots [m+1], all with coefficient +1."""
    if not 0 <= i <= m + 1:
        raise ValueError(f"coface index {i} out of range for m={m}")
    if i == 0:
        return [tuple(x + 1 for x in w)]
    if i == m + 1:
        return [tuple(w)]
    out = [()]
    for x in w:
        if x < i:
            out = [o + (x,) for o in out]
        elif x > i:
            out = [o + (x + 1,) for o in out]
        else:
            out = [o + (y,) for o in out for y in (i, i + 1)]
    return out


@lru_cache(maxsize=None)
def differential_columns(n: int, m: int):
    """Per source word of degree m: {target word index: coefficient}."""
    tgt_index = {w: i for i, w in enumerate(words(n, m + 1))}
    cols = []
    for w in words(n, m):
        acc = {}
        for i in range(m + 2):
            s = -1 if i % 2 else 1
            for t in coface(i, w, m):
                j = tgt_index[t]
                acc[j] = acc.get(j, 0) + s
        cols.append({j: c for j, c in acc.items() if c})
    return tuple(cols)


def differential(n: int, m: int) -> RationalMatrix:
    """The map C^m -> C^{m+1} on word spaces, target-by-source."""
    cols = differential_columns(n, m)
    entries = ((i, j, c) for j, col in enumerate(cols) for i, c in col.items())
    return RationalMatrix.from_entries((m + 1) ** n, m ** n, entries)


def antisymmetrizer_vector(n: int) -> dict:
    """sum_s sign(s) (s(1), ..., s(n)) as {word index in degree n: sign}."""
    from itertools import permutations as _perms

    index = {w: i for i, w in enumerate(words(n, n))}
    out = {}
    for imgs in _perms(range(1, n + 1)):
        out[index[imgs]] = Permutation(imgs).sign()
    return out


# -- complexes and Betti tables -------------------------------------------


@dataclass
class CochainComplex:
    """Spaces for degrees 1..m_max+1 and differentials for 1..m_max.

    diffs[m] maps degree m to degree m+1 in the column convention, shape
    dims[m+1] x dims[m].
    """

    label: str
    n_slots: int
    m_max: int
    dims: dict
    diffs: dict
    labels: dict = field(default_factory=dict)

    def __post_init__(self):
        for m in range(1, self.m_max + 1):
            d = self.diffs[m]
            if d.shape != (self.dims[m + 1], self.dims[m]):
                raise ValueError(
                    f"{self.label}: differential {m} has shape {d.shape}, "
                    f"expected {(self.dims[m + 1], self.dims[m])}"
                )
        self._ranks = {}

    def rank_d(self, m: int) -> int:
        if m < 1 or m > self.m_max:
            return 0
        r = self._ranks.get(m)
        if r is None:
            r = rank(self.diffs[m])
            self._ranks[m] = r
        return r

    def check_d_squared(self) -> bool:
        for m in range(1, self.m_max):
            if not (self.diffs[m + 1] * self.diffs[m]).is_zero():
                return False
        return True

    def betti_number(self, m: int) -> int:
        return self.dims[m] - self.rank_d(m) - self.rank_d(m - 1)

    def betti_table(self) -> "BettiTable":
        rows = tuple(
            BettiRow(m, self.dims[m], self.rank_d(m), self.betti_number(m))
            for m in range(1, self.m_max + 1)
        )
        table = BettiTable(self.label, self.n_slots, rows)
        for row in rows:
            if row.betti < 0 or row.betti > row.dim:
                raise ArithmeticError(f"{self.label}: impossible Betti row {row}")
        return table


@dataclass(frozen=True)
class BettiRow:
    m: int
    dim: int
    rank: int
    betti: int


@dataclass(frozen=True)
class BettiTable:
    label: str
    n_slots: int
    rows: tuple

    def betti(self, m: int) -> int:
        for row in self.rows:
            if row.m == m:
                return row.betti
        raise KeyError(m)

    def bettis(self) -> tuple:
        return tuple(row.betti for row in self.rows)

    def graded_symbol(self) -> str:
        parts = []
        for row in self.rows:
            if row.betti == 1:
                parts.append(f"k[-{row.m}]")
            elif row.betti > 1:
                parts.append(f"k[-{row.m}]^{row.betti}")
        return " + ".join(parts) if parts else "0"

    def as_dict(self) -> dict:
        return {
            "family": self.label,
            "n": self.n_slots,
            "rows": [
                {"m": r.m, "dim": r.dim, "rank_d": r.rank, "betti": r.betti}
                for r in self.rows
            ],
        }


def full_complex(n: int, m_max: int) -> CochainComplex:
    """The plain word complex: dimension m^n in degree m."""
    dims = {m: m ** n for m in range(1, m_max + 2)}
    diffs = {m: differential(n, m) for m in range(1, m_max + 1)}
    labels = {m: [word_label(w) for w in words(n, m)] for m in range(1, m_max + 2)}
    return CochainComplex(f"full(n={n})", n, m_max, dims, diffs, labels)


def betti(complex_: CochainComplex) -> BettiTable:
    return complex_.betti_table()


# -- orbit decomposition ---------------------------------------------------


def compositions(total: int, parts: int):
    """Weak compositions, lexicographically by leading part descending."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def content_of(w, m: int):
    c = [0] * m
    for x in w:
        c[x - 1] += 1
    return tuple(c)


def sorted_word(content):
    out = []
    for letter, count in enumerate(content, start=1):
        out.extend([letter] * count)
    return tuple(out)


def sort_transfer(w):
    """(rep, g) with rep sorted and w = g.rep; the stable sort makes g
    deterministic."""
    order = sorted(range(len(w)), key=lambda p: (w[p], p))
    g = Permutation(tuple(p + 1 for p in order))
    rep = tuple(w[p] for p in order)
    return rep, g


@dataclass(frozen=True)
class Orbit:
    rep: tuple
    stabilizer: PermutationGroup
    size: int


def orbit_decomposition(n: int, m: int, group: PermutationGroup) -> list:
    """Orbits of the position action on degree-m words.

    For the full symmetric group the orbits are the letter contents and the
    stabilizers are Young subgroups; proper subgroups fall back to explicit
    closure with lexicographically least representatives.
    """
    if group.is_symmetric():
        out = []
        for content in compositions(n, m):
            stab = young_subgroup(content)
            out.append(Orbit(sorted_word(content), stab, factorial(n) // stab.order))
        return out
    orbits = []
    for rep, members in _subgroup_orbits(n, m, group):
        stab_elems = tuple(
            g for g in group.elements if position_action(g, rep) == rep
        )
        stab = PermutationGroup(n, stab_elems)
        orbits.append(Orbit(rep, stab, len(members)))
    return orbits


def _subgroup_orbits(n: int, m: int, group: PermutationGroup):
    """(lex-least representative, {word: transfer}) per orbit; the transfer
    g of a word w satisfies w = g.rep."""
    seen = {}
    out = []
    for w in words(n, m):
        if w in seen:
            continue
        ident = Permutation(tuple(range(1, n + 1)))
        members = {w: ident}
        frontier = [w]
        while frontier:
            nxt = []
            for u in frontier:
                gu = members[u]
                for s in group.generators:
                    v = position_action(s, u)
                    if v not in members:
                        members[v] = s * gu
                        nxt.append(v)
            frontier = nxt
        rep = min(members)
        grep = members[rep]
        # rebase transfers onto the representative: u = g_u . w = g_u g_rep^{-1} . rep
        inv = grep.inverse()
        rebased = {u: gu * inv for u, gu in members.items()}
        seen.update(rebased)
        out.append((rep, rebased))
    return out


# -- coinvariant bases ------------------------------------------------------


class CoinvariantBasis:
    """Basis of M_H as rows, with fast coordinates for projected classes.

    For a row vector v over M, the class of v in the coinvariant space has
    coordinates (v @ W) / scale in this basis, where W folds the scaled
    averaging projector restricted to pivot columns with the inverse of the
    pivot submatrix.
    """

    def __init__(self, module, stabilizer: PermutationGroup):
        dim = module.dim
        self.module_dim = dim
        if stabilizer.order == 1:
            self.trivial = True
            self.k = dim
            self.basis = [{j: 1} for j in range(dim)]
            return
        self.trivial = False
        acc = RationalMatrix.zeros(dim, dim)
        for h in stabilizer.elements:
            acc = acc + module.act(h)
        self.basis = image_basis(acc.transpose())
        self.k = len(self.basis)
        if self.k == 0:
            self._scaled_projector = acc
            return
        solver = RowSpanSolver(self.basis, dim)
        # W = P[:, piv] @ Tscaled, so coords(v) = v @ W / (L * |H|)
        p_piv = RationalMatrix.from_rows(
            [[acc.entry(r, c) for c in solver.piv] for r in range(dim)], len(solver.piv)
        )
        t_mat = RationalMatrix.from_rows(solver.tscaled, solver.k)
        self.w_matrix = p_piv * t_mat
        self.scale = solver.scale * stabilizer.order

    def class_block(self, x: RationalMatrix) -> dict:
        """Coordinate rows of the classes of x's rows (x is rows x dim)."""
        if self.trivial:
            return x.rows
        if self.k == 0:
            check = x * self._scaled_projector
            if not check.is_zero():
                raise ArithmeticError("nonzero class in a zero coinvariant space")
            return {}
        u = x * self.w_matrix
        s = self.scale
        out = {}
        for i, row in u.rows.items():
            out[i] = {
                j: _norm(Fraction(v, s)) if v % s else v // s for j, v in row.items()
            }
        return out


def _stab_signature(content):
    return tuple(c for c in content if c)


class _OrbitDegree:
    """Basis bookkeeping of one degree of the orbit-mode complex."""

    def __init__(self, orbits, coinv):
        self.orbits = orbits
        self.coinv = coinv
        self.offsets = []
        off = 0
        for basis in coinv:
            self.offsets.append(off)
            off += basis.k
        self.dim = off


class OrbitComplexBuilder:
    def __init__(self, module, group: PermutationGroup):
        self.module = module
        self.group = group
        self.n = group.degree
        self.symmetric = group.is_symmetric()
        self._coinv_cache = {}
        self._degrees = {}

    def _coinv(self, stabilizer: PermutationGroup, signature):
        basis = self._coinv_cache.get(signature)
        if basis is None:
            basis = CoinvariantBasis(self.module, stabilizer)
            self._coinv_cache[signature] = basis
        return basis

    def degree(self, m: int) -> _OrbitDegree:
        deg = self._degrees.get(m)
        if deg is not None:
            return deg
        if self.symmetric:
            orbits = []
            lookup = {}
            coinv = []
            for idx, content in enumerate(compositions(self.n, m)):
                stab = young_subgroup(content)
                orbits.append(
                    Orbit(sorted_word(content), stab, factorial(self.n) // stab.order)
                )
                lookup[content] = idx
                coinv.append(self._coinv(stab, _stab_signature(content)))
            deg = _OrbitDegree(orbits, coinv)
            deg.content_lookup = lookup
        else:
            orbits = []
            coinv = []
            transfers = {}
            for idx, (rep, members) in enumerate(
                _subgroup_orbits(self.n, m, self.group)
            ):
                stab_elems = tuple(
                    g
                    for g in self.group.elements
                    if position_action(g, rep) == rep
                )
                stab = PermutationGroup(self.n, stab_elems)
                orbits.append(Orbit(rep, stab, len(members)))
                signature = frozenset(g.images for g in stab_elems)
                coinv.append(self._coinv(stab, signature))
                for w, g in members.items():
                    transfers[w] = (idx, g)
            deg = _OrbitDegree(orbits, coinv)
            deg.transfers = transfers
        self._degrees[m] = deg
        return deg

    def locate(self, deg: _OrbitDegree, w, m: int):
        """(orbit index, transfer g) with w = g.rep inside degree m."""
        if self.symmetric:
            rep, g = sort_transfer(w)
            return deg.content_lookup[content_of(w, m)], g
        return deg.transfers[w]

    def differential_matrix(self, m: int) -> RationalMatrix:
        src = self.degree(m)
        tgt = self.degree(m + 1)

        def emit():
            for oi, orbit in enumerate(src.orbits):
                src_basis = src.coinv[oi]
                if src_basis.k == 0:
                    continue
                col_off = src.offsets[oi]
                basis_mat = RationalMatrix.from_row_dicts(
                    src_basis.basis, src_basis.k, self.module.dim
                )
                block_cache = {}
                for i in range(m + 2):
                    sgn = -1 if i % 2 else 1
                    for w2 in coface(i, orbit.rep, m):
                        ti, g = self.locate(tgt, w2, m + 1)
                        key = (g.images, ti)
                        block = block_cache.get(key)
                        if block is None:
                            action = self.module.act(g)
                            x = action if src_basis.trivial else basis_mat * action
                            block = tgt.coinv[ti].class_block(x)
                            block_cache[key] = block
                        row_off = tgt.offsets[ti]
                        for a, row in block.items():
                            col = col_off + a
                            for b, v in row.items():
                                yield (row_off + b, col, sgn * v)

        return RationalMatrix.from_entries(tgt.dim, src.dim, emit())

    def labels(self, m: int):
        deg = self.degree(m)
        out = []
        for orbit, basis in zip(deg.orbits, deg.coinv):
            for j in range(basis.k):
                out.append(f"{word_label(orbit.rep)}#{j}")
        return out


def cubical_complex(
    module,
    group: PermutationGroup,
    m_max: int,
    mode: str = "orbit",
    cap: int = DEFAULT_NAIVE_CAP,
) -> CochainComplex:
    """The complex M tensored over G with the word complex.

    ``module`` may be defined over the full symmetric group or over G only;
    it must be able to act for every element of G.
    """
    n = group.degree
    label = f"{getattr(module, 'name', 'M')}/{'S' if group.is_symmetric() else 'G'}{n}"
    if mode == "orbit":
        builder = OrbitComplexBuilder(module, group)
        dims = {m: builder.degree(m).dim for m in range(1, m_max + 2)}
        diffs = {m: builder.differential_matrix(m) for m in range(1, m_max + 1)}
        labels = {m: builder.labels(m) for m in range(1, m_max + 2)}
        return CochainComplex(label, n, m_max, dims, diffs, labels)
    if mode == "naive":
        return _naive_complex(module, group, m_max, cap, label)
    raise ValueError(f"unknown mode: {mode}")


def _naive_complex(module, group, m_max, cap, label) -> CochainComplex:
    n = group.degree
    dim_m = module.dim
    top = dim_m * (m_max + 1) ** n
    if top > cap:
        raise DimensionCapExceeded(top, cap, f"naive mode for {label}")
    bases = {}
    dims = {}
    for m in range(1, m_max + 2):
        size = dim_m * m ** n
        acc = RationalMatrix.zeros(size, size)
        for g in group.elements:
            acc = acc + module.act(g).kron(position_matrix(g, n, m))
        proj = acc.scale(Fraction(1, group.order))
        basis = image_basis(proj.transpose())
        bases[m] = basis
        dims[m] = len(basis)
    diffs = {}
    for m in range(1, m_max + 1):
        cols = differential_columns(n, m)
        wcount = m ** n
        wcount_t = (m + 1) ** n
        tgt_rows = bases[m + 1]
        solver = RowSpanSolver(tgt_rows, dim_m * wcount_t) if tgt_rows else None

        def image_of(row):
            out = {}
            for idx, v in row.items():
                b, w = divmod(idx, wcount)
                for t, c in cols[w].items():
                    key = b * wcount_t + t
                    cur = out.get(key, 0) + v * c
                    if cur:
                        out[key] = cur
                    elif key in out:
                        del out[key]
            return out

        entries = []
        for j, src_row in enumerate(bases[m]):
            img = image_of(src_row)
            if solver is None:
                if img:
                    raise ArithmeticError(f"{label}: image escapes zero space")
                continue
            coords = solver.coords(img, verify=True)
            if coords is None:
                raise ArithmeticError(
                    f"{label}: differential image escapes the coinvariant space"
                )
            for i, v in enumerate(coords):
                if v:
                    entries.append((i, j, v))
        diffs[m] = RationalMatrix.from_entries(dims[m + 1], dims[m], entries)
    return CochainComplex(label, n, m_max, dims, diffs)


# -- verification ------------------------------------------------------------


@dataclass(frozen=True)
class Cor2Report:
    label: str
    n_slots: int
    expected_dim: int
    table: BettiTable
    ok: bool


def verify_cor2(module, group, m_max=None, mode="orbit") -> Cor2Report:
    """Cohomology concentrated in degree n with dimension dim(M (x)_G sgn)."""
    from .modules import sgn_coinvariants_dim

    n = group.degree
    if m_max is None:
        m_max = n + 2
    expected = sgn_coinvariants_dim(module, group)
    table = cubical_complex(module, group, m_max, mode=mode).betti_table()
    ok = all(
        row.betti == (expected if row.m == n else 0) for row in table.rows
    )
    return Cor2Report(table.label, n, expected, table, ok)
