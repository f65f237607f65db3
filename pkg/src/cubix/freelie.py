"""Free Lie algebra combinatorics: Lyndon words and bracket expansions.

A Lie word is a binary bracketing tree: a leaf is a letter (int >= 1) and an
internal node is a pair ``(left, right)`` meaning the bracket [left, right].
Lie elements are always carried as expansions inside the associative word
space, i.e. dicts mapping word tuples to integer coefficients, so membership
and equality questions reduce to linear algebra instead of Hall rewriting.

Two bases are provided and both are rank-verified at construction, since
downstream cohomology claims silently depend on them being bases:

* the left-normed multilinear basis [[...[x_1, x_{s(2)}], ...], x_{s(n)}]
  indexed by permutations of {2, ..., n}, of size (n-1)!;
* expansions of the standard bracketings of Lyndon words of length n over
  the alphabet [m], of size witt_dim(m, n).
"""

from functools import lru_cache, reduce
from itertools import permutations, product

from .linalg import RationalMatrix, rank


def expand(tree) -> dict:
    """Multilinear expansion of a bracket tree into associative words."""
    if isinstance(tree, int):
        return {(tree,): 1}
    left, right = expand(tree[0]), expand(tree[1])
    out = {}
    for wu, cu in left.items():
        for wv, cv in right.items():
            c = cu * cv
            uv = wu + wv
            vu = wv + wu
            out[uv] = out.get(uv, 0) + c
            out[vu] = out.get(vu, 0) - c
    return {w: c for w, c in out.items() if c}


def left_normed(letters):
    """[[...[a_1, a_2], ...], a_k] as a bracket tree."""
    return reduce(lambda a, b: (a, b), letters)


def is_lyndon(word) -> bool:
    """Strictly smaller than every proper suffix (hence aperiodic)."""
    return all(tuple(word) < tuple(word[i:]) for i in range(1, len(word)))


def lyndon_words(m: int, n: int) -> list:
    """All Lyndon words of length n over the alphabet 1..m, in lex order."""
    return [w for w in product(range(1, m + 1), repeat=n) if is_lyndon(w)]


@lru_cache(maxsize=None)
def _mobius(d: int) -> int:
    out = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            out = -out
        else:
            p += 1
    if d > 1:
        out = -out
    return out


def witt_dim(m: int, n: int) -> int:
    total = sum(_mobius(d) * m ** (n // d) for d in range(1, n + 1) if n % d == 0)
    assert total % n == 0
    return total // n


def lyndon_bracketing(word):
    """Standard bracketing: split off the longest proper Lyndon suffix."""
    if len(word) == 1:
        return word[0]
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return (lyndon_bracketing(word[:i]), lyndon_bracketing(word[i:]))
    raise ValueError(f"not a Lyndon word: {word}")


def _verify_rank(vectors, expected, what):
    index = {}
    rows = []
    for vec in vectors:
        row = {}
        for w, c in vec.items():
            row[index.setdefault(w, len(index))] = c
        rows.append(row)
    mat = RationalMatrix.from_row_dicts(rows, len(rows), len(index))
    got = rank(mat)
    if got != expected:
        raise ArithmeticError(f"{what}: rank {got}, expected {expected}")


@lru_cache(maxsize=None)
def lie_basis_multilinear(n: int):
    """Left-normed brackets [[...[x_1, x_{s(2)}], ...], x_{s(n)}].

    Returns a tuple of (letter sequence, expansion dict) pairs, one per
    permutation s of {2, ..., n}; expansions are verified to have full rank
    (n-1)! in the multilinear word space.
    """
    if n == 1:
        return (((1,), {(1,): 1}),)
    out = []
    for rest in permutations(range(2, n + 1)):
        seq = (1,) + rest
        out.append((seq, expand(left_normed(seq))))
    _verify_rank([e for _, e in out], len(out), f"multilinear Lie basis n={n}")
    return tuple(out)


@lru_cache(maxsize=None)
def lie_projector_basis(m: int, n: int):
    """Expansions of standard bracketings of Lyndon words, lex order.

    A basis of the degree-n part of the free Lie algebra on m generators
    inside the word space; verified independent with witt_dim(m, n) members.
    """
    vectors = tuple(expand(lyndon_bracketing(w)) for w in lyndon_words(m, n))
    expected = witt_dim(m, n)
    _verify_rank(vectors, len(vectors), f"Lyndon basis m={m} n={n}")
    if len(vectors) != expected:
        raise ArithmeticError(
            f"Lyndon basis m={m} n={n}: {len(vectors)} words, expected {expected}"
        )
    return vectors
