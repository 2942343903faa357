"""Single computations on one arrangement: hilbert, basis, tutte, rho, lines, strata, defect."""
from fractions import Fraction

import click

from powerideals.arrangement import large_strata, lines, max_multiplicity, rho_min, strata
from powerideals.errors import InputError
from powerideals.harness.fileformat import RATIONAL, load_builtin, load_file
from powerideals.harness.report import jsonable
from powerideals.matroid import matroid_of, tutte, tutte_eval
from powerideals.middlewares import emit, handles_errors
from powerideals.powerideal import IdealSpec, Variant, exact_sequence_defect, hilbert_function, inverse_system_basis


class RationalType(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        if not RATIONAL.match(str(value)) or str(value).endswith("/0"):
            self.fail(f"{value!r} is not an integer or p/q rational", param, ctx)
        return Fraction(value)


def arrangement_source(f):
    f = click.option("--builtin", type=click.Choice(["prop1", "u23"]), help="Use a shipped arrangement.")(f)
    f = click.option("--file", "path", type=click.Path(exists=True, dir_okay=False), help="Arrangement file.")(f)
    return f


def json_flag(f):
    return click.option("--json", "as_json", is_flag=True, help="Emit a JSON document.")(f)


def load_arrangement(path, builtin):
    if bool(path) == bool(builtin):
        raise InputError("give exactly one of --file and --builtin")
    return load_file(path) if path else load_builtin(builtin)


def _source(path, builtin) -> str:
    return path or f"builtin:{builtin}"


@click.command()
@arrangement_source
@click.option("-k", "k", type=int, required=True, help="Power ideal parameter k >= -(rho+1).")
@click.option("--lines-only", is_flag=True, help="Use the ideal generated by line powers only.")
@json_flag
@click.pass_context
@handles_errors
def hilbert(ctx, path, builtin, k, lines_only, as_json):
    """Hilbert function of the inverse system C_{A,k}."""
    variant = Variant.LINES if lines_only else Variant.FULL
    result = hilbert_function(IdealSpec(load_arrangement(path, builtin), k, variant))
    document = {
        "arrangement": _source(path, builtin),
        "k": k,
        "variant": variant.value,
        "dims": list(result.dims),
        "total": result.total,
    }
    emit(ctx, document, f"k={k} {variant.value}: {list(result.dims)} (total {result.total})")


@click.command()
@arrangement_source
@click.option("-k", "k", type=int, required=True)
@click.option("-d", "degree", type=click.IntRange(min=0), required=True, help="Degree of the component.")
@click.option("--lines-only", is_flag=True)
@json_flag
@click.pass_context
@handles_errors
def basis(ctx, path, builtin, k, degree, lines_only, as_json):
    """Canonical basis of the inverse system in one degree."""
    variant = Variant.LINES if lines_only else Variant.FULL
    polys = [str(p) for p in inverse_system_basis(IdealSpec(load_arrangement(path, builtin), k, variant), degree)]
    document = {"arrangement": _source(path, builtin), "k": k, "degree": degree, "basis": polys}
    emit(ctx, document, "\n".join(polys) if polys else "(empty)")


@click.command(name="tutte")
@arrangement_source
@click.option("--eval", "point", type=(RationalType(), RationalType()), default=None,
              help="Evaluate T at (X, Y).")
@json_flag
@click.pass_context
@handles_errors
def tutte_command(ctx, path, builtin, point, as_json):
    """Tutte polynomial of the arrangement's matroid."""
    polynomial = tutte(matroid_of(load_arrangement(path, builtin)))
    document = {"arrangement": _source(path, builtin), "tutte": str(polynomial)}
    text = f"T(x, y) = {polynomial}"
    if point is not None:
        value = tutte_eval(polynomial, *point)
        document["eval"] = {"x": jsonable(point[0]), "y": jsonable(point[1]), "value": jsonable(value)}
        text += f"\nT({point[0]}, {point[1]}) = {value}"
    emit(ctx, document, text)


@click.command()
@arrangement_source
@json_flag
@click.pass_context
@handles_errors
def rho(ctx, path, builtin, as_json):
    """rho(A), the largest stratum multiplicity and the large strata."""
    a = load_arrangement(path, builtin)
    top = large_strata(a)
    document = {
        "arrangement": _source(path, builtin),
        "n": a.n,
        "rho": rho_min(a),
        "max_multiplicity": max_multiplicity(a),
        "large_strata": [jsonable(x.basis.to_rows()) for x in top],
    }
    emit(ctx, document, f"rho={rho_min(a)} (n={a.n}, max multiplicity {max_multiplicity(a)}, "
                        f"{len(top)} large strata)")


@click.command(name="lines")
@arrangement_source
@json_flag
@click.pass_context
@handles_errors
def lines_command(ctx, path, builtin, as_json):
    """Lines of the arrangement with their multiplicities."""
    found = lines(load_arrangement(path, builtin))
    rows = [{"direction": jsonable(x.direction()), "multiplicity": x.multiplicity} for x in found]
    text = "\n".join(f"{row['direction']}  m={row['multiplicity']}" for row in rows)
    emit(ctx, {"arrangement": _source(path, builtin), "lines": rows}, text or "(no lines)")


@click.command(name="strata")
@arrangement_source
@json_flag
@click.pass_context
@handles_errors
def strata_command(ctx, path, builtin, as_json):
    """Every intersection subspace with its dimension and multiplicity."""
    found = strata(load_arrangement(path, builtin))
    rows = [
        {"dim": x.dim, "multiplicity": x.multiplicity, "containing": sorted(x.containing),
         "basis": jsonable(x.basis.to_rows())}
        for x in found
    ]
    text = "\n".join(f"dim={row['dim']} m={row['multiplicity']} basis={row['basis']}" for row in rows)
    emit(ctx, {"arrangement": _source(path, builtin), "strata": rows}, text)


@click.command()
@arrangement_source
@click.option("-k", "k", type=int, required=True)
@click.option("--hyperplane", type=int, required=True, help="Label of the hyperplane H.")
@json_flag
@click.pass_context
@handles_errors
def defect(ctx, path, builtin, k, hyperplane, as_json):
    """Per-degree defect of the deletion-contraction dimension count."""
    values = exact_sequence_defect(load_arrangement(path, builtin), hyperplane, k)
    document = {"arrangement": _source(path, builtin), "k": k, "hyperplane": hyperplane, "defect": values}
    emit(ctx, document, f"defect: {values}" + ("" if any(values) else " (exact)"))


COMMANDS = [hilbert, basis, tutte_command, rho, lines_command, strata_command, defect]
