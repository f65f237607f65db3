"""Named verification suites over the whole catalog of complexes.

Each suite is a fixed list of checks; a check is a module-level function so
that suites can run in worker processes.  Results come back in definition
order no matter how they were scheduled, which keeps output byte-identical
across worker counts.
"""

from dataclasses import dataclass

from .cubical import (
    cubical_complex,
    differential,
    full_complex,
    position_matrix,
)
from .harrison import (
    check_idempotent,
    harrison_betti,
    word_eulerian_matrix,
)
from .modules import (
    BUILTIN_KINDS,
    ModuleSpec,
    builtin,
    induce,
    random_basis_change,
    sgn_coinvariants_dim,
    trivial_subgroup_module,
)
from .perm import Permutation, PermutationGroup, cyclic_group, symmetric_group
from .realizations import compare_with_engine


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str


def _concentrated(table, degree: int, dim: int) -> bool:
    return all(
        row.betti == (dim if row.m == degree else 0) for row in table.rows
    )


def _fmt(table) -> str:
    return f"betti={table.bettis()}"


# -- individual checks -------------------------------------------------------


def chk_prop1(n: int):
    table = full_complex(n, n + 2).betti_table()
    ok = _concentrated(table, n, 1)
    return ok, f"full n={n}: {_fmt(table)}, expected single class at m={n}"


def chk_cor2_builtin(kind: str, n: int):
    module = builtin(kind, n)
    group = symmetric_group(n)
    expected = sgn_coinvariants_dim(module, group)
    table = cubical_complex(module, group, n + 2).betti_table()
    ok = _concentrated(table, n, expected)
    return ok, f"{kind} n={n}: {_fmt(table)}, expected {expected} at m={n}"


def chk_cor2_custom(kind: str, seed: int):
    base = builtin(kind, 3)
    module = random_basis_change(base, seed=seed)
    group = symmetric_group(3)
    expected = sgn_coinvariants_dim(module, group)
    table = cubical_complex(module, group, 5).betti_table()
    ok = _concentrated(table, 3, expected)
    return ok, (
        f"{module.name}: {_fmt(table)}, expected {expected} at m=3"
    )


def chk_cor3(n: int):
    table = cubical_complex(builtin("lie", n), symmetric_group(n), n + 2).betti_table()
    expected = 1 if n in (1, 2) else 0
    ok = _concentrated(table, n, expected)
    return ok, f"lie n={n}: {_fmt(table)}, expected {expected} at m={n}"


def chk_ass(n: int):
    table = cubical_complex(
        builtin("regular", n), symmetric_group(n), n + 2
    ).betti_table()
    ok = _concentrated(table, n, 1)
    return ok, f"regular n={n}: {_fmt(table)}, expected single class at m={n}"


def chk_cor4(n: int):
    table = cubical_complex(
        builtin("tr_cyclic", n), symmetric_group(n), n + 2
    ).betti_table()
    expected = 1 if n % 2 else 0
    ok = _concentrated(table, n, expected)
    return ok, f"tr n={n}: {_fmt(table)}, expected {expected} at m={n}"


def chk_cor5(n: int):
    slots = n + 1
    table = cubical_complex(
        builtin("lie_cyclic", n), symmetric_group(slots), slots + 2
    ).betti_table()
    if n == 2:
        ok = _concentrated(table, 3, 1)
        want = "single class at m=3"
    else:
        ok = all(row.betti == 0 for row in table.rows)
        want = "no cohomology"
    return ok, f"sder n={n} ({slots} slots): {_fmt(table)}, expected {want}"


def chk_harrison_dim(kind: str):
    group = symmetric_group(1)
    if kind == "trivial":
        module = builtin("trivial", 1)
    else:
        module = random_basis_change(
            ModuleSpec("wide", 1, 3, ["a", "b", "c"], ()), seed=11
        )
    table = harrison_betti(module, group, 3)
    ok = _concentrated(table, 1, module.dim)
    return ok, f"harrison {module.name} n=1: {_fmt(table)}, expected {module.dim} at m=1"


def chk_harrison_vanishes(kind: str, n: int):
    table = harrison_betti(builtin(kind, n), symmetric_group(n), n + 2)
    ok = all(row.betti == 0 for row in table.rows)
    return ok, f"harrison {kind} n={n}: {_fmt(table)}, expected no cohomology"


def chk_modes_agree(kind: str, n: int):
    module = builtin(kind, n)
    # lie_cyclic(n) lives over S_{n+1}, so take the slot count from the module
    group = symmetric_group(module.N)
    a = cubical_complex(module, group, 4, mode="orbit")
    b = cubical_complex(module, group, 4, mode="naive")
    dims_a = tuple(a.dims[m] for m in range(1, 6))
    dims_b = tuple(b.dims[m] for m in range(1, 6))
    ba = a.betti_table().bettis()
    bb = b.betti_table().bettis()
    ok = dims_a == dims_b and ba == bb
    return ok, f"{kind} n={n}: orbit dims={dims_a} betti={ba} vs naive dims={dims_b} betti={bb}"


def chk_realization(family: str, n: int):
    rep = compare_with_engine(family, n, 6)
    return rep.ok, (
        f"{family} n={n}: direct dims={rep.direct_dims} betti={rep.direct_betti} "
        f"vs engine dims={rep.engine_dims} betti={rep.engine_betti}"
    )


def chk_induction(tag: str):
    if tag == "c3":
        group = cyclic_group(3)
        m_max = 5
    else:
        group = PermutationGroup(
            4, (Permutation((2, 1, 3, 4)), Permutation((1, 2, 4, 3)))
        )
        m_max = 6
    module = trivial_subgroup_module(group)
    n = group.degree
    sub = cubical_complex(module, group, m_max).betti_table()
    ind = cubical_complex(induce(module), symmetric_group(n), m_max).betti_table()
    ok = sub.bettis() == ind.bettis()
    return ok, f"{tag}: subgroup betti={sub.bettis()} vs induced betti={ind.bettis()}"


def chk_d_squared(tag: str):
    if tag == "full":
        ok = all(full_complex(n, n + 2).check_d_squared() for n in (1, 2, 3))
    elif tag == "orbit":
        cases = (
            (builtin("lie", 4), symmetric_group(4)),
            (builtin("tr_cyclic", 3), symmetric_group(3)),
            (builtin("lie_cyclic", 3), symmetric_group(4)),
            (trivial_subgroup_module(cyclic_group(3)), cyclic_group(3)),
        )
        ok = all(cubical_complex(mod, grp, 4).check_d_squared() for mod, grp in cases)
    else:
        ok = cubical_complex(
            builtin("regular", 3), symmetric_group(3), 3, mode="naive"
        ).check_d_squared()
    return ok, f"d.d = 0 ({tag} complexes)"


def chk_equivariance():
    n = 3
    ok = True
    for m in (1, 2, 3):
        d = differential(n, m)
        for g in symmetric_group(n).elements:
            if d * position_matrix(g, n, m) != position_matrix(g, n, m + 1) * d:
                ok = False
    return ok, "differential commutes with the position action (n=3, m<=3)"


def chk_coxeter():
    built = []
    for kind in BUILTIN_KINDS:
        for n in (1, 2, 3, 4):
            built.append(builtin(kind, n).name)
    return True, f"Coxeter relations hold for {len(built)} builtin modules"


def chk_jacobi():
    from .freelie import expand

    a, b, c = 1, 2, 3
    total = {}
    for tree in (((a, b), c), ((b, c), a), ((c, a), b)):
        for w, v in expand(tree).items():
            total[w] = total.get(w, 0) + v
    ok = all(v == 0 for v in total.values())
    return ok, "Jacobi identity vanishes after expansion"


def chk_eulerian():
    ok = True
    for n in (1, 2, 3):
        for m in (1, 2, 3, 4):
            e, s = word_eulerian_matrix(n, m)
            if not check_idempotent(e, s):
                ok = False
            e2, s2 = word_eulerian_matrix(n, m + 1)
            d = differential(n, m)
            if (d * e).scale(s2) != (e2 * d).scale(s):
                ok = False
    return ok, "Eulerian idempotency and d-commutation (n<=3, m<=4)"


_REGISTRY = {
    f.__name__: f
    for f in (
        chk_prop1,
        chk_cor2_builtin,
        chk_cor2_custom,
        chk_cor3,
        chk_ass,
        chk_cor4,
        chk_cor5,
        chk_harrison_dim,
        chk_harrison_vanishes,
        chk_modes_agree,
        chk_realization,
        chk_induction,
        chk_d_squared,
        chk_equivariance,
        chk_coxeter,
        chk_jacobi,
        chk_eulerian,
    )
}


# -- suite definitions -------------------------------------------------------


def _specs(suite: str, nmax: int):
    out = []

    def add(name, func, *args):
        out.append((suite, name, func, args))

    if suite == "prop1":
        for n in range(1, min(nmax, 4) + 1):
            add(f"full n={n}", "chk_prop1", n)
    elif suite == "cor2":
        for kind in ("trivial", "sign", "regular"):
            for n in range(1, min(nmax, 4) + 1):
                add(f"{kind} n={n}", "chk_cor2_builtin", kind, n)
        for kind, seed in (("sign", 1), ("regular", 2), ("tr_cyclic", 3)):
            add(f"custom({kind}) seed={seed}", "chk_cor2_custom", kind, seed)
    elif suite == "cor3":
        for n in range(1, min(nmax, 5) + 1):
            add(f"lie n={n}", "chk_cor3", n)
    elif suite == "ass":
        for n in range(1, min(nmax, 4) + 1):
            add(f"regular n={n}", "chk_ass", n)
    elif suite == "cor4":
        for n in range(1, min(nmax, 5) + 1):
            add(f"tr n={n}", "chk_cor4", n)
    elif suite == "cor5":
        for n in range(2, min(nmax, 4) + 1):
            add(f"sder n={n}", "chk_cor5", n)
    elif suite == "harrison":
        add("dim M at n=1 (trivial)", "chk_harrison_dim", "trivial")
        add("dim M at n=1 (custom)", "chk_harrison_dim", "custom")
        for kind in ("trivial", "regular", "lie"):
            for n in range(2, min(nmax, 3) + 1):
                add(f"{kind} n={n}", "chk_harrison_vanishes", kind, n)
    elif suite == "oracles":
        for kind in BUILTIN_KINDS:
            for n in range(1, min(nmax, 3) + 1):
                add(f"modes {kind} n={n}", "chk_modes_agree", kind, n)
        for family in ("ass", "lie", "tr"):
            for n in range(1, min(nmax, 4) + 1):
                add(f"direct {family} n={n}", "chk_realization", family, n)
    elif suite == "induction":
        add("C3 inside S3", "chk_induction", "c3")
        add("S2 x S2 inside S4", "chk_induction", "s2s2")
    elif suite == "structural":
        add("d squared, word complexes", "chk_d_squared", "full")
        add("d squared, orbit complexes", "chk_d_squared", "orbit")
        add("d squared, naive complex", "chk_d_squared", "naive")
        add("position equivariance", "chk_equivariance")
        add("Coxeter relations", "chk_coxeter")
        add("Jacobi identity", "chk_jacobi")
        add("Eulerian idempotent", "chk_eulerian")
    else:
        raise ValueError(f"unknown suite: {suite}")
    return out


SUITE_NAMES = (
    "prop1",
    "cor2",
    "cor3",
    "cor4",
    "cor5",
    "ass",
    "harrison",
    "induction",
    "oracles",
    "structural",
)


def _run_spec(spec) -> Check:
    suite, name, func, args = spec
    try:
        passed, detail = _REGISTRY[func](*args)
    except Exception as exc:  # a crash is a failure, not an abort
        return Check(suite, name, False, f"error: {exc}")
    return Check(suite, name, bool(passed), detail)


def run_suite(suite: str, nmax: int = 4, jobs: int = 1) -> list:
    """Run one suite (or "all") and return checks in definition order."""
    if suite == "all":
        specs = []
        for name in SUITE_NAMES:
            specs.extend(_specs(name, nmax))
    else:
        specs = _specs(suite, nmax)
    if jobs > 1 and len(specs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_spec, specs))
    return [_run_spec(spec) for spec in specs]
