import functools
import json
import os
import traceback

import click
import yaml
from flask import current_app as app
from flask.cli import with_appcontext

from cambrianite import cluster, dihedral, embeddings, export, polytopes, verify
from cambrianite.coxeter import build_system
from cambrianite.defaultconfig import DefaultConfig
from cambrianite.exceptions import (
    CambrianiteError,
    DimensionMismatch,
    GroupTooLarge,
    JobSpecError,
    NonFinite,
    NotInterior,
    UnknownRoot,
)
from cambrianite.extensions import logger
from cambrianite.fans import fan_for
from cambrianite.functions import format_word, parse_fractions
from cambrianite.models.BasePoint import BasePoint
from cambrianite.models.JobSpec import JobSpec
from cambrianite.sortable import CoxeterElementChoice, lattice_for

INPUT_ERRORS = (JobSpecError, NonFinite, NotInterior, DimensionMismatch, UnknownRoot, GroupTooLarge)


class Job:
    def __init__(self, system, c, base_point, c_given, out=None, export=None):
        self.system = system
        self.c = c
        self.base_point = base_point
        self.c_given = c_given
        self.out = out
        self.export = export


def load_job(system, c=None, base_point=None, max_order=None):
    """Resolve the SYSTEM argument and the flags into a Job, flags winning over job files"""
    if max_order is not None:
        app.config["CAMBRIANITE_MAX_ORDER"] = max_order
    spec = JobSpec.parse(system)
    built = build_system(spec.system)

    c_text = c if c is not None else spec.c
    if c_text:
        choice = CoxeterElementChoice.parse(built, c_text)
    else:
        choice = CoxeterElementChoice.default(built)

    coefficients = parse_fractions(base_point) if base_point is not None else spec.base_point
    if coefficients:
        point = BasePoint.from_coefficients(built, coefficients)
    else:
        point = BasePoint.balanced(built)
    logger.debug("Job {} c = {} a = {}".format(built.name, choice, point.serialize()))
    return Job(built, choice, point, bool(c_text), out=spec.out, export=spec.export)


def handle_errors(f):
    """Input errors exit with 2, anything else that escapes a command with 1"""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except INPUT_ERRORS as e:
            raise click.UsageError("{}: {}".format(e.__class__.__name__, e))
        except CambrianiteError as e:
            logger.error("{}: {}".format(e.__class__.__name__, e))
            logger.debug(traceback.format_exc())
            raise click.exceptions.Exit(1)

    return wrapper


def job_options(f):
    f = click.option(
        "--max-order", type=int, default=None, help="Refuse groups with more elements"
    )(f)
    f = click.option("--out", default=None, help="Write the output to this file")(f)
    f = click.option("--base-point", default=None, help="Coefficients a1,a2,... of a")(f)
    f = click.option("--c", "c", default=None, help="Coxeter element, e.g. s2,s1,s3")(f)
    f = click.argument("system")(f)
    return f


def emit(text, out=None):
    if out is None or out == "-":
        click.echo(text.rstrip("\n"))
    else:
        export.write(text, out)
        logger.info("Wrote {}".format(out))


def dump(data):
    return json.dumps(data, indent=2)


@click.group()
def cambrianite_cli():
    """Cambrian fans and generalized associahedra of finite Coxeter groups"""


@cambrianite_cli.command()
@job_options
@with_appcontext
@handle_errors
def group(system, c, base_point, out, max_order):
    """Order, number of positive roots and the longest element"""
    job = load_job(system, c, base_point, max_order)
    elements = job.system.enumerate_group()
    w0 = job.system.longest_element()
    lines = [
        "system: {}".format(job.system.name),
        "rank: {}".format(job.system.rank),
        "order: {}".format(len(elements)),
        "positive roots: {}".format(job.system.roots.num_positive),
        "longest element: {}".format(format_word(w0.reduced_word())),
        "crystallographic: {}".format(str(job.system.crystallographic).lower()),
        "number field: {}".format(job.system.field.describe()["minimal_polynomial"]),
    ]
    emit("\n".join(lines), out)


@cambrianite_cli.command()
@job_options
@with_appcontext
@handle_errors
def sortables(system, c, base_point, out, max_order):
    """The c-sortable elements as c-sorting words"""
    job = load_job(system, c, base_point, max_order)
    lattice = lattice_for(job.c)
    lines = [
        "# {} c-sortable elements of {} for c = {}".format(
            len(lattice.sortables), job.system.name, job.c
        )
    ]
    lines += [lattice.format(w) for w in lattice.sortables]
    emit("\n".join(lines), out)


@cambrianite_cli.command()
@job_options
@with_appcontext
@handle_errors
def singletons(system, c, base_point, out, max_order):
    """The c-singletons by the cover, antisortable and prefix tests, with their differences"""
    job = load_job(system, c, base_point, max_order)
    lattice = lattice_for(job.c)
    found = {
        "covers": lattice.singletons,
        "antisortable": lattice.singletons_via_antisortable,
        "prefixes": lattice.singletons_via_prefixes,
    }
    lines = [
        "# {} c-singletons of {} for c = {}".format(
            len(lattice.singletons), job.system.name, job.c
        )
    ]
    lines += [lattice.format(w) for w in lattice.singletons]
    agree = True
    for method in ("antisortable", "prefixes"):
        diff = set(found["covers"]) ^ set(found[method])
        if diff:
            agree = False
            lines.append("# covers and {} disagree on:".format(method))
            lines += [lattice.format(w) for w in sorted(diff, key=lattice.order_key)]
    emit("\n".join(lines), out)
    if not agree:
        raise click.exceptions.Exit(1)


def job_permutahedron(job):
    perm = polytopes.permutahedron(job.system, job.base_point)
    if job.c_given:
        polytopes.mark_admissible(perm, job.c)
    return perm


def render_polytope(polytope, export_format):
    if export_format == "off":
        return export.to_off(polytope)
    return export.to_json(polytope)


@cambrianite_cli.command()
@job_options
@click.option("--export", "export_format", type=click.Choice(["json", "off"]), default="json")
@with_appcontext
@handle_errors
def perm(system, c, base_point, out, max_order, export_format):
    """The permutahedron Perm^a(W)"""
    job = load_job(system, c, base_point, max_order)
    emit(render_polytope(job_permutahedron(job), export_format), out)


@cambrianite_cli.command()
@job_options
@click.option("--export", "export_format", type=click.Choice(["json", "off"]), default="json")
@with_appcontext
@handle_errors
def asso(system, c, base_point, out, max_order, export_format):
    """The c-generalized associahedron Ass_c^a(W)"""
    job = load_job(system, c, base_point, max_order)
    asso_ = polytopes.associahedron(job.system, job.c, job.base_point)
    emit(render_polytope(asso_, export_format), out)


@cambrianite_cli.command()
@job_options
@with_appcontext
@handle_errors
def fan(system, c, base_point, out, max_order):
    """Rays, maximal cones and adjacency of the c-Cambrian fan"""
    job = load_job(system, c, base_point, max_order)
    emit(dump(fan_for(job.c).serialize()), out)


@cambrianite_cli.command()
@job_options
@with_appcontext
@handle_errors
def clusters(system, c, base_point, out, max_order):
    """The c-clusters read off the facets of the associahedron"""
    job = load_job(system, c, base_point, max_order)
    complex_ = cluster.ClusterComplex.build(job.system, job.c, job.base_point)
    emit(dump(complex_.serialize()), out)


@cambrianite_cli.command(context_settings={"ignore_unknown_options": True})
@job_options
@click.argument("roots", nargs=-1, required=True, type=click.UNPROCESSED)
@with_appcontext
@handle_errors
def compat(system, c, base_point, out, max_order, roots):
    """Whether the almost positive ROOTS, e.g. -a1 a2+a3, are c-compatible"""
    job = load_job(system, c, base_point, max_order)
    complex_ = cluster.ClusterComplex.build(job.system, job.c, job.base_point)
    compatible = cluster.is_c_compatible(complex_, list(roots))
    emit("compatible" if compatible else "not compatible", out)


@cambrianite_cli.command()
@job_options
@with_appcontext
@handle_errors
def barycentre(system, c, base_point, out, max_order):
    """Barycentres of Perm and Ass, exit 1 when they differ"""
    job = load_job(system, c, base_point, max_order)
    perm_ = polytopes.permutahedron(job.system, job.base_point)
    asso_ = polytopes.associahedron(job.system, job.c, job.base_point)
    left, right = polytopes.barycentre(perm_.points()), polytopes.barycentre(asso_.points())
    equal = left == right
    lines = [
        "perm: {}".format(", ".join(str(x) for x in left)),
        "asso: {}".format(", ".join(str(x) for x in right)),
        "equal: {}".format(str(equal).lower()),
    ]
    emit("\n".join(lines), out)
    if not equal:
        raise click.exceptions.Exit(1)


@cambrianite_cli.command("verify")
@job_options
@with_appcontext
@handle_errors
def verify_(system, c, base_point, out, max_order):
    """Run every check, for all Coxeter elements unless --c is given"""
    job = load_job(system, c, base_point, max_order)
    reports = verify.run_acceptance(job.system, job.c if job.c_given else None, job.base_point)
    counts = verify.summarize(reports)
    if out is not None:
        data = {
            "system": job.system.name,
            "summary": counts,
            "reports": [report.serialize() for report in reports],
        }
        emit(dump(data), out)
    for report in reports:
        click.echo("[{}] {}".format(report.status, report.name))
        for violation in report.violations:
            click.echo("    {}".format(violation))
    click.echo(
        "{} passed, {} failed, {} skipped".format(
            counts["passed"], counts["failed"], counts["skipped"]
        )
    )
    if counts["failed"]:
        raise click.exceptions.Exit(1)


@cambrianite_cli.command("export")
@job_options
@click.option("--format", "export_format", type=click.Choice(["json", "off"]), default=None)
@click.option("--polytope", type=click.Choice(["asso", "perm"]), default="asso")
@with_appcontext
@handle_errors
def export_(system, c, base_point, out, max_order, export_format, polytope):
    """Write Ass or Perm as JSON or OFF"""
    job = load_job(system, c, base_point, max_order)
    export_format = export_format or job.export or "json"
    if export_format not in ("json", "off"):
        raise JobSpecError("Unknown export format {}".format(export_format))
    if polytope == "perm":
        built = job_permutahedron(job)
    else:
        built = polytopes.associahedron(job.system, job.c, job.base_point)
    emit(render_polytope(built, export_format), out or job.out)


@cambrianite_cli.command()
@click.argument("family", type=click.Choice(["A", "B"], case_sensitive=False))
@click.argument("rank", type=int)
@click.option("--c", "c", default=None, help="Coxeter element, e.g. s2,s1,s3")
@click.option("--out", default=None, help="Write the report to this file")
@with_appcontext
@handle_errors
def embedding(family, rank, c, out):
    """Classical coordinates: Perm(A) at the permutations, B inside A_(2n-1)"""
    small = build_system("{}{}".format(family.upper(), rank))
    c_word = CoxeterElementChoice.parse(small, c).word if c else None
    if family.upper() == "A":
        report = embeddings.type_a_embedding(rank, c_word)
    else:
        report = embeddings.type_b_embedding(rank, c_word)
    data = report.serialize()
    data["ambient"] = report.ambient
    emit(dump(data), out)
    if report.status == "failed":
        raise click.exceptions.Exit(1)


@cambrianite_cli.command("dihedral")
@click.argument("m", type=click.IntRange(min=2))
@with_appcontext
@handle_errors
def dihedral_(m):
    """Compare the extra vertex of Ass(I2(m)) with its closed form"""
    report = dihedral.dihedral_check(m)
    click.echo(dump(report.serialize()))
    if report.status == "failed":
        raise click.exceptions.Exit(1)


@cambrianite_cli.group()
def config():
    """Manage config.yml"""


@config.command()
@click.option("--overwrite", is_flag=True)
@with_appcontext
def generate(overwrite):
    path = os.path.join(app.config.get("CAMBRIANITE_DATA_FOLDER"), "config.yml")
    if os.path.exists(path) and not overwrite:
        logger.warning("config.yml already exists")
        return

    logger.info("Creating {}".format(path))
    os.makedirs(app.config.get("CAMBRIANITE_DATA_FOLDER"), exist_ok=True)
    conf = {
        option: getattr(DefaultConfig, option)
        for option in DefaultConfig.__dict__
        if option.isupper()
    }
    with open(path, "w") as config_file:
        yaml.safe_dump(conf, config_file)
