"""Handlers shared by the HTTP service and the command-line client.

Each handler takes a request model and returns a response model; all number
parsing/formatting between wire strings and exact/complex scalars lives
here.  Exit-code policy: 0 pass, 2 bad input, 3 cap exceeded, 4 unresolved
chains, 5 pole collision.
"""

from __future__ import annotations

from fractions import Fraction

from . import schemas
from .bethe import (
    BetheProblem,
    BetheRoots,
    canonical_colours,
    gl11_norm_factors,
    gl11_solve,
    gl11_solve_exact,
    gl21_bethe_vector_ratio,
    gl21_one_point,
)
from .errors import (
    DuplicateSite,
    InvalidHook,
    InvalidParity,
    NoSuchComponent,
    PoleCollision,
    SuperGaudinError,
    TooLarge,
    UnsupportedInstance,
)
from .gaudin import ChainSpec, brute_spectrum
from .reps import (
    defining_module,
    dual_module,
    gl11_module,
    realize_module,
    singular_vectors,
)
from .scalars import GaussianRational, is_exact, to_complex
from .solver import (
    SolveOutcome,
    homotopy_complete,
    simple_spectrum_check,
    solve_problem,
    verify_solution,
)
from .superalg import ParitySequence, cartan_matrix, distinguished_parities

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_UNRESOLVED = 4
EXIT_POLE = 5


# ---------------------------------------------------------------------------
# scalar wire format


def parse_real(s) -> Fraction | float:
    """Parse "p/q" or a decimal string into an exact Fraction if possible."""
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if isinstance(s, float):
        return s
    text = str(s).strip()
    try:
        return Fraction(text)
    except ValueError:
        return float(text)


def parse_scalar(v):
    """Parse a wire scalar: single value or [re, im] pair."""
    if isinstance(v, (list, tuple)):
        if len(v) != 2:
            raise ValueError(f"complex value must be [re, im], got {v!r}")
        re, im = parse_real(v[0]), parse_real(v[1])
        if isinstance(re, Fraction) and isinstance(im, Fraction):
            if im == 0:
                return re
            return GaussianRational(re, im)
        return complex(float(re), float(im))
    return parse_real(v)


def format_scalar(x) -> list:
    """Emit a scalar as an [re, im] pair of unambiguous strings."""
    if isinstance(x, (int, Fraction)):
        return [str(Fraction(x)), "0"]
    if isinstance(x, GaussianRational):
        return [str(x.re), str(x.im)]
    c = to_complex(x)
    return [repr(c.real), repr(c.imag)]


def format_eigenvalues(values) -> list:
    return [format_scalar(v) for v in values]


def roots_by_colour(roots: BetheRoots) -> dict:
    out: dict = {}
    for v, c in zip(roots.values, roots.colours):
        out.setdefault(str(c), []).append(format_scalar(v))
    return out


def parse_roots(doc: schemas.RootsFile, rank: int) -> BetheRoots:
    values = []
    colours = []
    for c in range(1, rank + 1):
        for v in doc.roots.get(str(c), []):
            values.append(parse_scalar(v))
            colours.append(c)
    return BetheRoots(values, colours)


# ---------------------------------------------------------------------------
# problem construction


def build_parities(m: int, n: int, parities: str) -> ParitySequence:
    if parities == "distinguished":
        return distinguished_parities(m, n)
    ps = ParitySequence.from_string(parities)
    if ps.m != m or ps.n != n:
        raise InvalidParity(
            f"parity string {parities!r} has (m,n)=({ps.m},{ps.n}), expected ({m},{n})"
        )
    return ps


def build_module(ps: ParitySequence, spec):
    if spec == "box":
        return defining_module(ps)
    if isinstance(spec, (list, tuple)):
        return realize_module(tuple(int(x) for x in spec), ps)
    if isinstance(spec, dict):
        if "gl11" in spec:
            if ps.dim != 2:
                raise InvalidHook("gl11 modules need a gl(1|1) parity sequence")
            r, s = (parse_real(x) for x in spec["gl11"])
            return gl11_module(r, s)
        if "dual_hook" in spec:
            return dual_module(
                realize_module(tuple(int(x) for x in spec["dual_hook"]), ps)
            )
    raise InvalidHook(f"unrecognized module spec: {spec!r}")


def build_chain(doc: schemas.ProblemFile):
    ps = build_parities(doc.m, doc.n, doc.parities)
    sites = [(parse_scalar(site.z), build_module(ps, site.module)) for site in doc.sites]
    chain = ChainSpec(ps, sites)
    if len(doc.l) != ps.rank:
        raise InvalidHook(f"l must have {ps.rank} entries, got {len(doc.l)}")
    return ps, chain, tuple(int(x) for x in doc.l)


def _solution_record(label, roots, report) -> schemas.SolutionRecord:
    return schemas.SolutionRecord(
        label=list(label),
        roots=roots_by_colour(roots),
        residual=float(report.residual_norm),
        eigenvalues=format_eigenvalues(report.eigenvalues),
        norm_sq=format_scalar(report.norm_sq),
        zero_vector=report.zero_vector,
        singular_ok=report.singular_ok,
        eigen_ok=report.eigen_ok,
        all_ok=report.all_ok,
    )


# ---------------------------------------------------------------------------
# handlers


def handle_structure(req: schemas.StructureRequest) -> schemas.StructureReport:
    ps = build_parities(req.m, req.n, req.parities)
    if ps.dim == 1:
        return schemas.StructureReport(
            m=req.m, n=req.n, parities=ps.as_string(),
            simple_root_parities=[], cartan=[], symmetrized=[], dynkin="(no simple roots)",
        )
    rd = cartan_matrix(ps)
    dynkin = "-".join("x" if p else "o" for p in rd.simple_root_parities)
    return schemas.StructureReport(
        m=req.m,
        n=req.n,
        parities=ps.as_string(),
        simple_root_parities=list(rd.simple_root_parities),
        cartan=[list(r) for r in rd.cartan],
        symmetrized=[list(r) for r in rd.symmetrized],
        dynkin=dynkin,
    )


def handle_solve(req: schemas.SolveRequest) -> schemas.SolveReport:
    doc = req.problem
    ps, chain, l = build_chain(doc)
    cfg = doc.solver
    outcome: SolveOutcome = solve_problem(
        chain,
        l,
        seed=cfg.seed,
        tol=cfg.tol,
        eps0=cfg.eps0,
        max_dim=cfg.max_dim,
        c_param=parse_real(cfg.c_param),
    )
    records = [
        _solution_record(s.label, s.roots, s.report) for s in outcome.solutions
    ]
    all_ok = bool(records) and all(
        r.all_ok or r.zero_vector for r in records
    ) and not outcome.unresolved
    return schemas.SolveReport(
        method=outcome.method,
        l=list(l),
        solutions=records,
        unresolved=[[list(map(list, u[0])), u[1]] for u in outcome.unresolved],
        note=outcome.note,
        all_ok=all_ok,
    )


def handle_verify(req: schemas.VerifyRequest) -> schemas.VerifyReport:
    ps, chain, l = build_chain(req.problem)
    roots = parse_roots(req.roots, ps.rank)
    if roots.colours != canonical_colours(l):
        raise InvalidHook(
            f"roots grouped as {roots.colours} do not match l={l}"
        )
    prob = BetheProblem(chain, l)
    rep = verify_solution(prob, roots)
    # an exactly vanishing weight function passes vacuously (flagged), e.g.
    # the one-point families whose vector dies in the typical quotient
    checks_ok = rep.zero_vector or (rep.singular_ok and rep.eigen_ok)
    ok = checks_ok and rep.residual_norm <= 1e-8
    return schemas.VerifyReport(
        residual_norm=float(rep.residual_norm),
        zero_vector=rep.zero_vector,
        singular_ok=rep.singular_ok,
        singular_residual=float(rep.singular_residual),
        eigen_ok=rep.eigen_ok,
        eigen_residual=float(rep.eigen_residual),
        eigenvalues=format_eigenvalues(rep.eigenvalues),
        norm_sq=format_scalar(rep.norm_sq),
        all_ok=bool(ok),
    )


def handle_complete(req: schemas.CompleteRequest) -> schemas.CompleteReport:
    ps = build_parities(req.m, req.n, req.parities)
    z = [parse_scalar(v) for v in req.z] if req.z else None
    result = homotopy_complete(
        ps,
        req.N,
        z,
        seed=req.seed,
        eps0=req.eps0,
        tol=req.tol,
        max_dim=req.max_dim,
    )
    chain = ChainSpec(ps, [(zz, defining_module(ps)) for zz in result.z])
    space = chain.space
    strata = []
    sing_dim = 0
    for w in sorted(space.weight_spaces(), key=lambda w: w.coords, reverse=True):
        k = len(singular_vectors(space, w))
        if k:
            strata.append(
                schemas.StratumCount(weight=[str(c) for c in w.coords], count=k)
            )
            sing_dim += k
    records = [
        _solution_record(s.label, s.roots, s.report) for s in result.solutions
    ]
    simple = simple_spectrum_check(result.solutions, chain) if result.solutions else True
    brute = brute_spectrum(chain, cap=req.max_dim)
    brute_match = _eigen_multisets_match(
        [s.report.eigenvalues for s in result.solutions],
        [r.eigenvalues for r in brute],
    )
    all_ok = (
        not result.unresolved
        and not result.duplicates
        and len(records) == sing_dim
        and all(r.all_ok for r in records)
        and simple
        and brute_match
    )
    return schemas.CompleteReport(
        m=req.m,
        n=req.n,
        parities=ps.as_string(),
        N=req.N,
        z=[format_scalar(v) for v in result.z],
        seed=req.seed,
        solutions=records,
        count=len(records),
        singular_dimension=sing_dim,
        strata=strata,
        unresolved=[[list(map(list, u[0])), u[1]] for u in result.unresolved],
        duplicates=[[list(map(list, a)), list(map(list, b))] for a, b in result.duplicates],
        simple_spectrum=bool(simple),
        brute_match=bool(brute_match),
        all_ok=bool(all_ok),
    )


def _eigen_multisets_match(a, b, tol: float = 1e-7) -> bool:
    if len(a) != len(b):
        return False
    key = lambda t: [(c.real, c.imag) for c in t]
    aa = sorted(([complex(to_complex(x)) for x in t] for t in a), key=key)
    bb = sorted(([complex(to_complex(x)) for x in t] for t in b), key=key)
    return all(
        max((abs(x - y) for x, y in zip(s, t)), default=0.0) <= tol
        for s, t in zip(aa, bb)
    )


def handle_gl11(req: schemas.Gl11Request) -> schemas.Gl11Report:
    h = [parse_real(x) for x in req.h]
    z = [parse_scalar(x) for x in req.z]
    if len(h) != len(z):
        raise InvalidHook("need one weight h per site")
    exact_roots = gl11_solve_exact(h, z) if all(is_exact(x) for x in h + z) else None
    numeric = gl11_solve(h, z)
    roots = exact_roots if exact_roots is not None else numeric.roots
    res = 0.0
    for t in roots:
        val = sum(to_complex(hi) / (to_complex(t) - to_complex(zi)) for hi, zi in zip(h, z))
        res = max(res, abs(val))
    norms = gl11_norm_factors(h, z, roots)
    # per-stratum counts: l roots chosen among the n-1 zeros of alpha
    n = len(h)
    strata = [
        schemas.StratumCount(weight=[str(l)], count=int(_binom(n - 1, l)))
        for l in range(n)
    ]
    return schemas.Gl11Report(
        h=[str(x) for x in req.h],
        z=[format_scalar(x) for x in z],
        roots=[format_scalar(r) for r in roots],
        reduced_degree=numeric.reduced_degree,
        norm_factors=[format_scalar(x) for x in norms],
        residual_max=float(res),
        singular_dimension=2 ** (n - 1),
        strata=strata,
    )


def _binom(n, k):
    import math

    return math.comb(n, k) if 0 <= k <= n else 0


def handle_gl21(req: schemas.Gl21Request) -> schemas.Gl21Report:
    fams = gl21_one_point(
        req.r1, req.r2, req.l1, req.l2, c_param=parse_real(req.c_param)
    )
    records = []
    for fam in fams:
        ca, cb = gl21_bethe_vector_ratio(fam)
        if fam.exact:
            collinear = (ca * req.r2 - cb * req.r1) == 0
        else:
            scale = max(1.0, abs(to_complex(ca)), abs(to_complex(cb)))
            collinear = abs(to_complex(ca) * req.r2 - to_complex(cb) * req.r1) <= 1e-10 * scale
        records.append(
            schemas.Gl21FamilyRecord(
                t_roots=[format_scalar(t) for t in fam.t_roots],
                s_roots=[format_scalar(s) for s in fam.s_roots],
                c_param=str(fam.c_param),
                exact=fam.exact,
                collinear=bool(collinear),
            )
        )
    return schemas.Gl21Report(
        r1=req.r1,
        r2=req.r2,
        l1=req.l1,
        l2=req.l2,
        admissible=bool(fams),
        families=records,
    )


# ---------------------------------------------------------------------------
# error mapping


def classify_error(exc: Exception) -> tuple:
    """(kind, exit code) for an exception raised by a handler."""
    if isinstance(exc, PoleCollision):
        return "pole_collision", EXIT_POLE
    if isinstance(exc, TooLarge):
        return "cap_exceeded", EXIT_CAP
    if isinstance(
        exc,
        (
            InvalidParity,
            InvalidHook,
            DuplicateSite,
            NoSuchComponent,
            UnsupportedInstance,
            ValueError,
        ),
    ):
        return "invalid_input", EXIT_INPUT
    if isinstance(exc, SuperGaudinError):
        return "engine_error", EXIT_INPUT
    raise exc


def error_report(exc: Exception) -> tuple:
    kind, code = classify_error(exc)
    return schemas.ErrorReport(error=str(exc), kind=kind, exit_code=code), code
