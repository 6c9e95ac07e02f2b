"""
Celery tasks for corpus verification.
"""
import logging
import random
from typing import Dict, List, Optional

from celery import shared_task

from knotlab.apps.homfly.expansion import substitute
from knotlab.apps.homfly.identities import verify_all_crossings
from knotlab.apps.homfly.skein import homfly
from knotlab.apps.invariants.formulas import EvalOptions
from knotlab.apps.invariants.reports import all_invariants
from knotlab.apps.linkcode.codes import LinkCode, parse_link, rotate
from knotlab.apps.linkcode.descending import ALTERNATE_RULES
from knotlab.apps.matchcount.catalog import cached_catalog, default_catalog
from knotlab.apps.polyalg.assembly import homfly_series, homfly_series_from_kontsevich
from knotlab.core.errors import KnotLabError

logger = logging.getLogger(__name__)


def _failure(check: str, detail) -> Dict:
    return {'check': check, 'detail': detail}


def run_checks(link: LinkCode, options: EvalOptions, seed: int = 0) -> List[Dict]:
    """Every per-diagram check; returns the failures."""
    failures = []
    report = all_invariants(link, options)

    series = homfly_series(link, report)
    expected = substitute(homfly(link))
    if series != expected:
        failures.append(_failure('master_oracle', {
            'invariants': series.to_json(), 'homfly': expected.to_json(),
        }))

    framed = homfly_series_from_kontsevich(link, report)
    if framed != series:
        failures.append(_failure('kontsevich', {
            'kontsevich': framed.to_json(), 'invariants': series.to_json(),
        }))

    for identity in verify_all_crossings(link, options):
        if not identity.ok:
            failures.append(_failure('skein_identities', identity.to_json()))

    for rule in ALTERNATE_RULES:
        alternate = all_invariants(link, EvalOptions(catalog=options.catalog, alpha=rule))
        if alternate != report:
            failures.append(_failure('alpha_choice', {
                'rule': rule.rule, 'reverse': rule.reverse, 'report': alternate.to_json(),
            }))

    rng = random.Random(seed)
    shifts = [rng.randrange(max(len(component), 1)) for component in link.components]
    if all_invariants(rotate(link, shifts), options) != report:
        failures.append(_failure('basepoint', {'shifts': shifts}))
    return failures


@shared_task(bind=True)
def verify_code(self, name: str, code: str, catalog_path: Optional[str] = None, seed: int = 0) -> Dict:
    """
    Verify one diagram.

    Args:
        name: label reported back with the result
        code: SGC v1 text
        catalog_path: configuration catalog; the configured default when None
        seed: seed for the basepoint shifts
    """
    catalog = cached_catalog(catalog_path) if catalog_path else default_catalog()
    try:
        link = parse_link(code)
        failures = run_checks(link, EvalOptions(catalog=catalog), seed)
    except KnotLabError as exc:
        logger.error(f"Verification of {name} raised {exc}")
        failures = [_failure('error', {'type': type(exc).__name__, 'message': exc.message})]
    if failures:
        logger.warning(f"{name}: {len(failures)} failed check(s)")
    else:
        logger.debug(f"{name}: all checks passed")
    return {'name': name, 'code': code, 'ok': not failures, 'failures': failures}
