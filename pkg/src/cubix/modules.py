"""Right modules over symmetric groups as explicit matrix representations.

A module is given by one matrix per adjacent transposition s_1 ... s_{N-1},
acting on ROW coordinate vectors from the right.  The Coxeter presentation
(order 2, braid, distant commutation) is verified at construction, which
makes the action of an arbitrary permutation well defined as the product of
generator matrices along any reduced word; with the composition convention
(p * q)(i) = p(q(i)) the matrices satisfy act(p * q) = act(p) * act(q).

Built-in modules:

* ``trivial`` / ``sign``: one-dimensional.
* ``regular``: basis = permutations of [n], right multiplication.
* ``lie``: the left-normed bracket basis of the multilinear Lie elements,
  dimension (n-1)!; a letter permutation sends a multilinear word w to
  s^{-1} o w, and the matrices express that relabeling in the bracket basis.
* ``tr_cyclic``: basis = lexicographically least representatives of the
  left cosets C_n \\ S_n; right multiplication followed by normalization.
* ``lie_cyclic``: the Lie elements as a module over S_{n+1} via the cyclic
  word action on associative words, restricted to the Lie subspace.

Coinvariants are realized concretely as the row space of the averaging
projector (characteristic zero), so downstream code can transfer vectors
into a coinvariant basis with plain linear algebra.
"""

import json
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import permutations

from .freelie import lie_basis_multilinear
from .linalg import (
    RationalMatrix,
    RowSpanSolver,
    format_scalar,
    image_basis,
    parse_scalar,
)
from .perm import (
    Permutation,
    PermutationGroup,
    adjacent_transposition,
    cyclic_group,
    identity_permutation,
)


def _check_coxeter(name, n, dim, mats):
    """Raise ValueError naming the first violated relation, if any."""
    ident = RationalMatrix.identity(dim)
    for i, a in enumerate(mats, start=1):
        if a.shape != (dim, dim):
            raise ValueError(f"{name}: generator s{i} is not {dim}x{dim}")
        if a * a != ident:
            raise ValueError(f"{name}: generator s{i} does not square to the identity")
    for i in range(1, n - 1):
        a, b = mats[i - 1], mats[i]
        if a * b * a != b * a * b:
            raise ValueError(
                f"{name}: braid relation s{i} s{i + 1} s{i} = s{i + 1} s{i} s{i + 1} fails"
            )
    for i in range(1, n):
        for j in range(i + 2, n):
            a, b = mats[i - 1], mats[j - 1]
            if a * b != b * a:
                raise ValueError(f"{name}: generators s{i} and s{j} do not commute")


class ModuleSpec:
    """Right S_N-module presented by adjacent-transposition matrices."""

    def __init__(self, name, N, dim, basis_labels, gen_actions, validate=True):
        if len(basis_labels) != dim:
            raise ValueError(f"{name}: {len(basis_labels)} labels for dim {dim}")
        if len(gen_actions) != max(N - 1, 0):
            raise ValueError(
                f"{name}: expected {N - 1} generator matrices, got {len(gen_actions)}"
            )
        self.name = name
        self.N = N
        self.dim = dim
        self.basis_labels = list(basis_labels)
        self.gen_actions = list(gen_actions)
        if validate:
            _check_coxeter(name, N, dim, gen_actions)
        self._memo = {identity_permutation(N).images: RationalMatrix.identity(dim)}

    def act(self, p: Permutation) -> RationalMatrix:
        if p.degree != self.N:
            raise ValueError(f"{self.name}: permutation degree {p.degree} != {self.N}")
        mat = self._memo.get(p.images)
        if mat is None:
            mat = RationalMatrix.identity(self.dim)
            for i in p.adjacent_factorization():
                mat = mat * self.gen_actions[i - 1]
            self._memo[p.images] = mat
        return mat

    def character(self, p: Permutation):
        return self.act(p).trace()

    def __repr__(self):
        return f"ModuleSpec({self.name}, N={self.N}, dim={self.dim})"


def act(module: ModuleSpec, p: Permutation) -> RationalMatrix:
    return module.act(p)


def character(module: ModuleSpec, p: Permutation):
    return module.character(p)


class SubgroupModule:
    """Module over an arbitrary permutation group, given on its generators.

    The full action table is built by closure and every product relation
    act(s * h) = act(s) * act(h) is checked, so the input matrices must
    define an actual representation of the group.
    """

    def __init__(self, name, group: PermutationGroup, dim, gen_actions, basis_labels=None):
        if len(gen_actions) != len(group.generators):
            raise ValueError(f"{name}: one matrix per group generator required")
        self.name = name
        self.group = group
        self.dim = dim
        self.basis_labels = basis_labels or [f"b{i}" for i in range(dim)]
        table = {identity_permutation(group.degree).images: RationalMatrix.identity(dim)}
        frontier = [identity_permutation(group.degree)]
        while frontier:
            nxt = []
            for h in frontier:
                mh = table[h.images]
                for s, ms in zip(group.generators, gen_actions):
                    q = s * h
                    if q.images not in table:
                        table[q.images] = ms * mh
                        nxt.append(q)
            frontier = nxt
        for h in group.elements:
            mh = table[h.images]
            for s, ms in zip(group.generators, gen_actions):
                if table[(s * h).images] != ms * mh:
                    raise ValueError(f"{name}: generator matrices do not define an action")
        self._table = table

    def act(self, g: Permutation) -> RationalMatrix:
        mat = self._table.get(g.images)
        if mat is None:
            raise ValueError(f"{self.name}: {g} is not in the group")
        return mat

    def character(self, g: Permutation):
        return self.act(g).trace()

    def __repr__(self):
        return f"SubgroupModule({self.name}, |G|={self.group.order}, dim={self.dim})"


def restrict(module: ModuleSpec, group: PermutationGroup) -> SubgroupModule:
    if group.degree != module.N:
        raise ValueError("degree mismatch")
    mats = [module.act(g) for g in group.generators]
    return SubgroupModule(
        f"{module.name}|G", group, module.dim, mats, module.basis_labels
    )


def trivial_subgroup_module(group: PermutationGroup) -> SubgroupModule:
    one = RationalMatrix.identity(1)
    return SubgroupModule("triv", group, 1, [one] * len(group.generators), ["1"])


def sign_subgroup_module(group: PermutationGroup) -> SubgroupModule:
    mats = [RationalMatrix.from_rows([[g.sign()]]) for g in group.generators]
    return SubgroupModule("sgn", group, 1, mats, ["sgn"])


# -- built-in catalog ----------------------------------------------------


def _word_index(words):
    return {w: i for i, w in enumerate(words)}


def _perm_matrix(words, index, mapping):
    """0/1 matrix of a basis permutation w -> mapping(w), rows = source."""
    entries = ((index[w], index[mapping(w)], 1) for w in words)
    return RationalMatrix.from_entries(len(words), len(words), entries)


def _bracket_label(seq):
    out = f"x{seq[0]}"
    for x in seq[1:]:
        out = f"[{out},x{x}]"
    return out


def _lie_gen_matrices(n, words, expansions):
    """Relabeling matrices on the bracket basis: w -> s o w on words."""
    index = _word_index(words)
    rows = []
    for vec in expansions:
        rows.append({index[w]: c for w, c in vec.items()})
    solver = RowSpanSolver(rows, len(words))
    mats = []
    for i in range(1, n):
        s = adjacent_transposition(n, i)
        cols = []
        for vec in expansions:
            moved = {}
            for w, c in vec.items():
                moved[index[tuple(s(x) for x in w)]] = c
            coords = solver.coords(moved, verify=True)
            if coords is None:
                raise ArithmeticError("relabeling escaped the Lie subspace")
            cols.append(coords)
        mats.append(RationalMatrix.from_rows(cols, len(expansions)))
    return mats


@lru_cache(maxsize=None)
def cyclic_action(n: int) -> ModuleSpec:
    """S_{n+1} acting on the n! words of length n via cyclic words.

    A word w stands for the cyclic word (0, w_1, ..., w_n); g relabels the
    letters {0, ..., n} (shifted to 1..n+1 internally), the result is
    rotated so the 0 letter leads, and the remaining word is read off.
    """
    words = sorted(permutations(range(1, n + 1)))
    index = _word_index(words)
    mats = []
    for i in range(1, n + 1):
        s = adjacent_transposition(n + 1, i)

        def move(w, s=s):
            cyc = (1,) + tuple(x + 1 for x in w)
            relabeled = tuple(s(x) for x in cyc)
            k = relabeled.index(1)
            rotated = relabeled[k:] + relabeled[:k]
            return tuple(x - 1 for x in rotated[1:])

        mats.append(_perm_matrix(words, index, move))
    labels = ["".join(map(str, w)) for w in words]
    return ModuleSpec(f"ass_cyclic({n})", n + 1, len(words), labels, mats)


@lru_cache(maxsize=None)
def builtin(kind: str, n: int) -> ModuleSpec:
    if n < 1:
        raise ValueError("n must be at least 1")
    if kind == "trivial":
        one = RationalMatrix.identity(1)
        return ModuleSpec(f"trivial({n})", n, 1, ["1"], [one] * (n - 1))
    if kind == "sign":
        neg = RationalMatrix.from_rows([[-1]])
        return ModuleSpec(f"sign({n})", n, 1, ["sgn"], [neg] * (n - 1))
    if kind == "regular":
        words = sorted(permutations(range(1, n + 1)))
        index = _word_index(words)
        mats = []
        for i in range(1, n):
            s = adjacent_transposition(n, i)
            mats.append(
                _perm_matrix(words, index, lambda w, s=s: tuple(w[s(j + 1) - 1] for j in range(n)))
            )
        labels = ["".join(map(str, w)) for w in words]
        return ModuleSpec(f"regular({n})", n, len(words), labels, mats)
    if kind == "lie":
        basis = lie_basis_multilinear(n)
        words = sorted(permutations(range(1, n + 1)))
        labels = [_bracket_label(seq) for seq, _ in basis]
        if n == 1:
            return ModuleSpec("lie(1)", 1, 1, labels, [])
        mats = _lie_gen_matrices(n, words, [vec for _, vec in basis])
        return ModuleSpec(f"lie({n})", n, len(basis), labels, mats)
    if kind == "tr_cyclic":
        cyc = [c.images for c in cyclic_group(n).elements]

        def normalize(w):
            return min(tuple(c[x - 1] for x in w) for c in cyc)

        reps = sorted({normalize(w) for w in permutations(range(1, n + 1))})
        index = _word_index(reps)
        mats = []
        for i in range(1, n):
            s = adjacent_transposition(n, i)
            mats.append(
                _perm_matrix(
                    reps,
                    index,
                    lambda w, s=s: normalize(tuple(w[s(j + 1) - 1] for j in range(n))),
                )
            )
        labels = ["".join(map(str, w)) for w in reps]
        return ModuleSpec(f"tr_cyclic({n})", n, len(reps), labels, mats)
    if kind == "lie_cyclic":
        ass = cyclic_action(n)
        words = sorted(permutations(range(1, n + 1)))
        index = _word_index(words)
        basis = lie_basis_multilinear(n)
        rows = [{index[w]: c for w, c in vec.items()} for _, vec in basis]
        solver = RowSpanSolver(rows, len(words))
        mats = []
        for gen in ass.gen_actions:
            cols = []
            for row in rows:
                moved = {}
                for j, c in row.items():
                    for jj, a in gen.row_dict(j).items():
                        moved[jj] = moved.get(jj, 0) + c * a
                coords = solver.coords(moved, verify=True)
                if coords is None:
                    raise ArithmeticError(
                        f"cyclic action escapes the Lie subspace at n={n}"
                    )
                cols.append(coords)
            mats.append(RationalMatrix.from_rows(cols, len(basis)))
        labels = [_bracket_label(seq) for seq, _ in basis]
        return ModuleSpec(f"lie_cyclic({n})", n + 1, len(basis), labels, mats)
    raise ValueError(f"unknown module kind: {kind}")


BUILTIN_KINDS = ("trivial", "sign", "regular", "lie", "tr_cyclic", "lie_cyclic")


# -- coinvariants and characters -----------------------------------------


def coinvariants(module, group: PermutationGroup):
    """Averaging projector and a basis (row vectors) of its row space.

    The projector acts on row vectors from the right, so the row space of
    its matrix is the image of the projection and models the coinvariant
    space in characteristic zero.
    """
    acc = RationalMatrix.zeros(module.dim, module.dim)
    for g in group.elements:
        acc = acc + module.act(g)
    proj = acc.scale(Fraction(1, group.order))
    basis = image_basis(proj.transpose())
    return proj, basis


def sgn_coinvariants_dim(module, group: PermutationGroup) -> int:
    """(1/|G|) sum of sign(g) * character(g); must be a non-negative integer."""
    total = 0
    for g in group.elements:
        total += g.sign() * module.character(g)
    val = Fraction(total, group.order)
    if val.denominator != 1 or val < 0:
        raise ArithmeticError(
            f"sign-isotypic dimension of {module.name} is {val}, not a non-negative integer"
        )
    return int(val)


# -- induction ------------------------------------------------------------


def induce(module: SubgroupModule) -> ModuleSpec:
    """Induced module over the full symmetric group on the same letters.

    Basis = (right coset representative, module basis) pairs; s sends
    (t, b) to (t', b * g) where t * s = g * t' with t' the lexicographically
    least element of its coset and g in the subgroup.
    """
    group = module.group
    n = group.degree
    elems = [g.images for g in group.elements]

    def coset_rep(p: Permutation) -> Permutation:
        return Permutation(min(tuple(e[x - 1] for x in p.images) for e in elems))

    reps = sorted(
        {coset_rep(Permutation(w)).images for w in permutations(range(1, n + 1))}
    )
    rep_index = {w: i for i, w in enumerate(reps)}
    dim = module.dim * len(reps)
    mats = []
    for i in range(1, n):
        s = adjacent_transposition(n, i)
        entries = []
        for t_imgs, ti in rep_index.items():
            u = Permutation(t_imgs) * s
            t2 = coset_rep(u)
            g = u * t2.inverse()
            block = module.act(g)
            for b, row in block.rows.items():
                for b2, v in row.items():
                    entries.append(
                        (ti * module.dim + b, rep_index[t2.images] * module.dim + b2, v)
                    )
        mats.append(RationalMatrix.from_entries(dim, dim, entries))
    labels = [
        f"{''.join(map(str, t))}:{bl}" for t in reps for bl in module.basis_labels
    ]
    return ModuleSpec(f"ind_{module.name}", n, dim, labels, mats)


# -- custom modules -------------------------------------------------------


def load_module(data) -> ModuleSpec:
    """Build a module from the JSON dict format; validation errors name the
    first violated Coxeter relation."""
    if isinstance(data, str):
        with open(data) as fh:
            data = json.load(fh)
    for key in ("name", "N", "dim", "basis_labels", "generators"):
        if key not in data:
            raise ValueError(f"custom module: missing field {key!r}")
    name = data["name"]
    n, dim = data["N"], data["dim"]
    mats = []
    for k, rows in enumerate(data["generators"], start=1):
        if len(rows) != dim or any(len(r) != dim for r in rows):
            raise ValueError(f"{name}: generator s{k} is not {dim}x{dim}")
        mats.append(
            RationalMatrix.from_rows(
                [[parse_scalar(v) if isinstance(v, str) else v for v in r] for r in rows],
                dim,
            )
        )
    return ModuleSpec(name, n, dim, data["basis_labels"], mats)


def serialize_module(module: ModuleSpec) -> dict:
    return {
        "name": module.name,
        "N": module.N,
        "dim": module.dim,
        "basis_labels": list(module.basis_labels),
        "generators": [
            [[format_scalar(a.entry(i, j)) for j in range(module.dim)] for i in range(module.dim)]
            for a in module.gen_actions
        ],
    }


def random_basis_change(module: ModuleSpec, seed: int) -> ModuleSpec:
    """Conjugate all generators by a random integer shear product.

    The change of basis is unimodular, so the conjugated matrices are still
    exact integer/rational and present the same module.
    """
    import random

    rng = random.Random(seed)
    dim = module.dim
    p = RationalMatrix.identity(dim)
    p_inv = RationalMatrix.identity(dim)
    for _ in range(min(4 * dim, 24)):
        i = rng.randrange(dim)
        j = rng.randrange(dim)
        if i == j:
            continue
        v = rng.choice((-2, -1, 1, 2))
        shear = RationalMatrix.identity(dim)
        shear.rows.setdefault(i, {})[j] = v
        unshear = RationalMatrix.identity(dim)
        unshear.rows.setdefault(i, {})[j] = -v
        p = p * shear
        p_inv = unshear * p_inv
    assert p * p_inv == RationalMatrix.identity(dim)
    mats = [p * a * p_inv for a in module.gen_actions]
    return ModuleSpec(
        f"{module.name}~seed{seed}", module.N, dim, module.basis_labels, mats
    )
