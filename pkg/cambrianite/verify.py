import re
import traceback

from cambrianite import cluster, dihedral, embeddings, fans, polytopes, sortable
from cambrianite.exceptions import BasePointNotInLattice, CambrianiteError, NotCrystallographic
from cambrianite.extensions import logger
from cambrianite.models.BasePoint import BasePoint
from cambrianite.models.Report import Report
from cambrianite.sortable import CoxeterElementChoice

DIHEDRAL_PATTERN = re.compile(r"^I2\((\d+)\)$", re.IGNORECASE)
CLASSICAL_PATTERN = re.compile(r"^([AB])(\d+)$", re.IGNORECASE)

SORTABLE_CHECKS = [
    sortable.sorting_word_check,
    sortable.factorization_independence_check,
    sortable.projection_check,
    sortable.singleton_agreement_check,
    sortable.singleton_lattice_check,
    sortable.singleton_cover_factorization_check,
    sortable.prefix_closure_check,
]

FAN_CHECKS = [
    fans.label_bijection_check,
    fans.cone_check,
    fans.adjacency_check,
    fans.initial_ray_check,
]


def run_check(name, check, *args, **kwargs):
    """Run one check, turning raised errors into a failed or skipped Report"""
    try:
        report = check(*args, **kwargs)
    except (BasePointNotInLattice, NotCrystallographic) as e:
        report = Report(name).skip(str(e))
    except CambrianiteError as e:
        report = Report(name)
        report.fail("{}: {}".format(e.__class__.__name__, e))
        logger.debug(traceback.format_exc())
    except Exception as e:
        logger.error("{} crashed: {}".format(name, e))
        logger.debug(traceback.format_exc())
        report = Report(name)
        report.fail("{}: {}".format(e.__class__.__name__, e))
    if report.status == "failed":
        logger.warning("{}: {}".format(report.name, "; ".join(report.violations[:3])))
    else:
        logger.info("{}: {}".format(report.name, report.status))
    return report


def _integer_reports(system, c_choices):
    if not system.crystallographic:
        return [
            Report("integer coordinates {}".format(system.name)).skip(
                "{} is not crystallographic".format(system.name)
            )
        ]
    lattice_point = BasePoint.sum_of_positive_roots(system)
    reports = [
        run_check(
            "integer coordinates permutahedron",
            polytopes.integer_coordinate_check,
            polytopes.permutahedron(system, lattice_point),
        )
    ]
    for c in c_choices:
        reports.append(
            run_check(
                "integer coordinates associahedron {}".format(c),
                polytopes.integer_coordinate_check,
                polytopes.associahedron(system, c, lattice_point),
            )
        )
    return reports


def _per_element_reports(system, c, base_point, perm):
    reports = [run_check(check.__name__, check, system, c) for check in SORTABLE_CHECKS]
    fan = fans.fan_for(c)
    reports += [run_check(check.__name__, check, fan) for check in FAN_CHECKS]

    asso = polytopes.associahedron(system, c, base_point)
    offsets = polytopes.fan_offsets(fan, base_point)
    reports.append(run_check("admissible", polytopes.admissible_check, perm, c))
    reports.append(run_check("pointing", polytopes.pointing_check, fan, offsets))
    reports.append(
        run_check("pointing negative control", polytopes.pointing_negative_control, fan, base_point)
    )
    reports.append(run_check("strictness", polytopes.vertex_strictness_check, asso))
    reports.append(run_check("hv associahedron", polytopes.hv_consistency, asso))
    reports.append(run_check("common vertices", polytopes.common_vertex_check, perm, asso))
    reports.append(run_check("barycentre", polytopes.barycentre_check, perm, asso))
    reports.append(run_check("scaling", polytopes.scaling_check, system, c, base_point))

    complex_ = cluster.ClusterComplex(asso)
    reports.append(run_check("cluster stats", cluster.complex_stats, complex_))
    reports.append(
        run_check("compatibility", cluster.compatibility_equivalence_check, complex_)
    )
    reports.append(run_check("face poset", cluster.face_poset_check, complex_))
    return reports


def run_acceptance(system, c=None, base_point=None):
    """Every check available for system, for one Coxeter element or for all of them"""
    if c is None:
        c_choices = [CoxeterElementChoice(system, word) for word in system.coxeter_elements()]
    else:
        c_choices = [c]
    if base_point is None:
        base_point = BasePoint.balanced(system)
    logger.info(
        "Verifying {} for {} Coxeter element(s)".format(system.name, len(c_choices))
    )

    perm = polytopes.permutahedron(system, base_point)
    reports = [
        run_check("coxeter fan cosets", fans.coset_check, system),
        run_check("permutahedron", polytopes.permutahedron_check, perm),
        run_check("hv permutahedron", polytopes.hv_consistency, perm),
    ]
    reports += _integer_reports(system, c_choices)
    for choice in c_choices:
        reports += _per_element_reports(system, choice, base_point, perm)

    match = DIHEDRAL_PATTERN.match(system.name)
    if match:
        reports.append(
            run_check("dihedral", dihedral.dihedral_check, int(match.group(1)))
        )
    match = CLASSICAL_PATTERN.match(system.name)
    if match:
        letter, rank = match.group(1).upper(), int(match.group(2))
        if letter == "A":
            reports.append(run_check("type A embedding", embeddings.type_a_embedding, rank))
        elif rank <= 3:
            for choice in c_choices:
                reports.append(
                    run_check(
                        "type B embedding", embeddings.type_b_embedding, rank, choice.word
                    )
                )
    return reports


def summarize(reports):
    counts = {"passed": 0, "failed": 0, "skipped": 0}
    for report in reports:
        counts[report.status] += 1
    return counts
