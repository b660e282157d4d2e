"""Command-line client.

By default commands run in-process through the same handlers as the HTTP
service; `--url` posts the identical request to a running service instead.
Exit codes: 0 pass, 1 checks failed, 2 bad input, 3 cap exceeded, 4
unresolved chains, 5 pole collision.
"""

from __future__ import annotations

import json
import sys

import click

from . import api, schemas
from .errors import SuperGaudinError

ENDPOINTS = {
    schemas.StructureRequest: "structure",
    schemas.SolveRequest: "solve",
    schemas.VerifyRequest: "verify",
    schemas.CompleteRequest: "complete",
    schemas.Gl11Request: "gl11",
    schemas.Gl21Request: "gl21",
}

HANDLERS = {
    "structure": (api.handle_structure, schemas.StructureReport),
    "solve": (api.handle_solve, schemas.SolveReport),
    "verify": (api.handle_verify, schemas.VerifyReport),
    "complete": (api.handle_complete, schemas.CompleteReport),
    "gl11": (api.handle_gl11, schemas.Gl11Report),
    "gl21": (api.handle_gl21, schemas.Gl21Report),
}


def dispatch(ctx, req):
    """Run the request in-process or against a remote service."""
    name = ENDPOINTS[type(req)]
    handler, report_cls = HANDLERS[name]
    url = ctx.obj.get("url")
    if url is None:
        try:
            return handler(req)
        except (SuperGaudinError, ValueError) as exc:
            report, code = api.error_report(exc)
            click.echo(report.error, err=True)
            sys.exit(code)
    import httpx

    resp = httpx.post(
        url.rstrip("/") + "/" + name,
        json=req.model_dump(by_alias=True, mode="json"),
        timeout=600.0,
    )
    body = resp.json()
    if resp.status_code != 200:
        click.echo(body.get("error", resp.text), err=True)
        sys.exit(int(body.get("exit_code", 2)))
    return report_cls.model_validate(body)


def emit(report, as_json: bool, text_fn):
    if as_json:
        click.echo(json.dumps(report.model_dump(by_alias=True), indent=2))
    else:
        text_fn(report)


@click.group()
@click.option("--url", default=None, help="Base URL of a running supergaudin service.")
@click.pass_context
def main(ctx, url):
    """Exact Gaudin models for the general linear Lie superalgebra."""
    ctx.ensure_object(dict)
    ctx.obj["url"] = url


@main.command()
@click.argument("m", type=int)
@click.argument("n", type=int)
@click.option("--parities", default="distinguished", show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def structure(ctx, m, n, parities, as_json):
    """Cartan matrix, symmetrized form, and Dynkin data."""
    report = dispatch(ctx, schemas.StructureRequest(m=m, n=n, parities=parities))

    def text(rep):
        click.echo(f"gl({rep.m}|{rep.n})  parities {rep.parities}  dynkin {rep.dynkin}")
        if not rep.cartan:
            click.echo("no simple roots")
            return
        click.echo("Cartan matrix:")
        for row in rep.cartan:
            click.echo("  " + " ".join(f"{v:3d}" for v in row))
        click.echo("Symmetrized Cartan matrix:")
        for row in rep.symmetrized:
            click.echo("  " + " ".join(f"{v:3d}" for v in row))
        click.echo(
            "simple root parities: "
            + " ".join(str(p) for p in rep.simple_root_parities)
        )

    emit(report, as_json, text)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(f"cannot read {path}: {exc}", err=True)
        sys.exit(api.EXIT_INPUT)


def _echo_solutions(solutions):
    for s in solutions:
        roots = "; ".join(
            f"colour {c}: " + ", ".join(f"{r[0]}+{r[1]}i" for r in rs)
            for c, rs in sorted(s.roots.items())
        )
        flags = []
        flags.append("zero-vector" if s.zero_vector else
                     ("ok" if s.all_ok else "FAILED"))
        click.echo(
            f"  {s.label}: {roots or '(no roots)'}  residual={s.residual:.2e}  "
            f"[{', '.join(flags)}]"
        )


@main.command()
@click.argument("problem_file", type=click.Path())
@click.option("--json", "as_json", is_flag=True)
@click.option("--seed", type=int, default=None, help="Override solver seed.")
@click.option("--tol", type=float, default=None, help="Override Newton tolerance.")
@click.option("--max-dim", type=int, default=None, help="Override dimension cap.")
@click.option("--out", type=click.Path(), default=None, help="Write the JSON report here.")
@click.pass_context
def solve(ctx, problem_file, as_json, seed, tol, max_dim, out):
    """Solve the Bethe equations of a problem file."""
    try:
        doc = schemas.ProblemFile.model_validate(_load_json(problem_file))
    except ValueError as exc:
        click.echo(f"invalid problem file: {exc}", err=True)
        sys.exit(api.EXIT_INPUT)
    if seed is not None:
        doc.solver.seed = seed
    if tol is not None:
        doc.solver.tol = tol
    if max_dim is not None:
        doc.solver.max_dim = max_dim
    report = dispatch(ctx, schemas.SolveRequest(problem=doc))
    if out:
        with open(out, "w") as fh:
            json.dump(report.model_dump(by_alias=True), fh, indent=2)

    def text(rep):
        click.echo(f"method: {rep.method}   l = {rep.l}")
        click.echo(f"solutions: {len(rep.solutions)}")
        _echo_solutions(rep.solutions)
        if rep.note:
            click.echo(f"note: {rep.note}")
        for u in rep.unresolved:
            click.echo(f"  unresolved: {u}")

    emit(report, as_json, text)
    if report.unresolved:
        sys.exit(api.EXIT_UNRESOLVED)
    if not report.all_ok and report.solutions:
        bad = [s for s in report.solutions if not (s.all_ok or s.zero_vector)]
        if bad:
            sys.exit(1)


@main.command()
@click.argument("problem_file", type=click.Path())
@click.argument("roots_file", type=click.Path())
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def verify(ctx, problem_file, roots_file, as_json):
    """Verify candidate roots against the problem's equations and operators."""
    try:
        doc = schemas.ProblemFile.model_validate(_load_json(problem_file))
        roots = schemas.RootsFile.model_validate(_load_json(roots_file))
    except ValueError as exc:
        click.echo(f"invalid input file: {exc}", err=True)
        sys.exit(api.EXIT_INPUT)
    report = dispatch(ctx, schemas.VerifyRequest(problem=doc, roots=roots))

    def text(rep):
        click.echo(f"residual max-norm: {rep.residual_norm:.3e}")
        click.echo(f"singular: {rep.singular_ok} (residual {rep.singular_residual:.3e})")
        click.echo(f"eigenvector: {rep.eigen_ok} (residual {rep.eigen_residual:.3e})")
        click.echo(f"zero vector: {rep.zero_vector}")
        click.echo(f"norm^2: {rep.norm_sq}")
        click.echo("PASS" if rep.all_ok else "FAIL")

    emit(report, as_json, text)
    if not report.all_ok:
        sys.exit(1)


@main.command()
@click.argument("m", type=int)
@click.argument("n", type=int)
@click.argument("nsites", type=int)
@click.option("--z", "zs", multiple=True, help="Site point (repeat; p/q or decimal).")
@click.option("--parities", default="distinguished", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--max-dim", type=int, default=4096, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def complete(ctx, m, n, nsites, zs, parities, seed, max_dim, as_json):
    """Completeness run on the N-th power of the defining representation."""
    req = schemas.CompleteRequest(
        m=m,
        n=n,
        parities=parities,
        N=nsites,
        z=list(zs) if zs else None,
        seed=seed,
        max_dim=max_dim,
    )
    report = dispatch(ctx, req)

    def text(rep):
        click.echo(
            f"gl({rep.m}|{rep.n}) N={rep.N}  z = "
            + ", ".join(f"{a}+{b}i" for a, b in rep.z)
        )
        click.echo(
            f"verified Bethe vectors: {rep.count} / singular dimension "
            f"{rep.singular_dimension}"
        )
        for st in rep.strata:
            click.echo(f"  weight ({','.join(st.weight)}): {st.count}")
        click.echo(f"simple joint spectrum: {rep.simple_spectrum}")
        click.echo(f"matches brute-force spectrum: {rep.brute_match}")
        _echo_solutions(rep.solutions)
        for u in rep.unresolved:
            click.echo(f"  unresolved: {u}")
        click.echo("PASS" if rep.all_ok else "FAIL")

    emit(report, as_json, text)
    if report.unresolved:
        sys.exit(api.EXIT_UNRESOLVED)
    if not report.all_ok:
        sys.exit(1)


@main.command()
@click.option("--h", "hs", multiple=True, required=True, help="Site weight r+s (repeat).")
@click.option("--z", "zs", multiple=True, required=True, help="Site point (repeat).")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def gl11(ctx, hs, zs, as_json):
    """Decoupled gl(1|1) Bethe roots, norms, and stratum counts."""
    report = dispatch(ctx, schemas.Gl11Request(h=list(hs), z=list(zs)))

    def text(rep):
        click.echo("roots: " + ", ".join(f"{a}+{b}i" for a, b in rep.roots))
        click.echo("norm factors: " + ", ".join(f"{a}+{b}i" for a, b in rep.norm_factors))
        click.echo(f"max residual: {rep.residual_max:.3e}")
        click.echo(f"singular dimension: {rep.singular_dimension}")
        for st in rep.strata:
            click.echo(f"  l={st.weight[0]}: {st.count} vectors")
        if rep.reduced_degree:
            click.echo("note: degenerate leading coefficient, reduced degree")

    emit(report, as_json, text)


@main.command()
@click.argument("r1", type=int)
@click.argument("r2", type=int)
@click.argument("l1", type=int)
@click.argument("l2", type=int)
@click.option("--c-param", default="1", show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def gl21(ctx, r1, r2, l1, l2, c_param, as_json):
    """One-point admissible solutions for the typical rank-2 odd-odd chain."""
    report = dispatch(
        ctx, schemas.Gl21Request(r1=r1, r2=r2, l1=l1, l2=l2, c_param=c_param)
    )

    def text(rep):
        if not rep.admissible:
            click.echo("no admissible solutions")
            return
        for fam in rep.families:
            ts = ", ".join(f"{a}+{b}i" for a, b in fam.t_roots) or "(none)"
            ss = ", ".join(f"{a}+{b}i" for a, b in fam.s_roots) or "(none)"
            click.echo(f"c = {fam.c_param}  exact = {fam.exact}")
            click.echo(f"  colour-1 roots: {ts}")
            click.echo(f"  colour-2 roots: {ss}")
            click.echo(f"  Bethe vector collinear with (r1, r2) combination: {fam.collinear}")

    emit(report, as_json, text)


if __name__ == "__main__":
    main()
