import logging
from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Tuple

from dlmkit.config import Settings, get_settings
from dlmkit.core.graph import Graph
from dlmkit.core.graph6 import to_graph6
from dlmkit.enumerate import canonical_relabel, enumerate_connected
from dlmkit.errors import EnumerationError
from dlmkit.families import expected_members
from dlmkit.linalg.charpoly import char_poly
from dlmkit.models import CospectralGroup, CospectralReport, Verdict
from dlmkit.spectra import distance_laplacian
from dlmkit.verify.sweep import MIN_SWEEP_N, canonical_code, sweep_records

logger = logging.getLogger(__name__)


def cospectral_groups(records_by_poly: Dict[Tuple[int, ...], List[str]]) -> List[CospectralGroup]:
    groups = [
        CospectralGroup(char_poly=list(poly), members=sorted(codes))
        for poly, codes in records_by_poly.items()
        if len(codes) >= 2
    ]
    return sorted(groups, key=lambda grp: grp.members[0])


def ds_check(
    n: int,
    corpus: Optional[Sequence[Graph]] = None,
    settings: Optional[Settings] = None,
    show_progress: bool = False,
) -> CospectralReport:
    """
    Group all connected graphs on n vertices by distance Laplacian characteristic polynomial
    and check that every member of the multiplicity n-3 class sits alone in its group.

    Raises:
        EnumerationError: as for classification sweeps
    """
    settings = settings or get_settings()
    if n < MIN_SWEEP_N:
        raise EnumerationError(f"Cospectral sweeps start at n = {MIN_SWEEP_N}, got {n}")
    if corpus is None:
        if n > settings.max_enumeration_n:
            raise EnumerationError(f"n={n} is above the built-in enumeration limit; supply a graph6 corpus")
        graphs = list(enumerate_connected(n, show_progress))
    else:
        graphs = [g for g in corpus if g.n == n]

    records = sweep_records(graphs, n, settings, show_progress)
    by_poly: Dict[Tuple[int, ...], List[str]] = defaultdict(list)
    for r in records:
        by_poly[tuple(r.char_poly)].append(canonical_code(r.graph6))

    ds_verdicts = {}
    for spec, g in expected_members(n):
        code = to_graph6(canonical_relabel(g))
        mates = by_poly.get(char_poly(distance_laplacian(g)).coeffs, [])
        others = [c for c in mates if c != code]
        ds_verdicts[code] = not others
        if others:
            logger.warning(f"{spec.label()} ({code}) shares its spectrum with {' '.join(others)}")

    groups = cospectral_groups(by_poly)
    verdict = Verdict.MATCH if all(ds_verdicts.values()) else Verdict.MISMATCH
    logger.info(f"n={n}: {len(groups)} cospectral group(s) among {len(records)} graphs")
    return CospectralReport(n=n, count=len(records), groups=groups, ds_verdicts=ds_verdicts, verdict=verdict)
