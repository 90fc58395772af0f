"""Identity-check reports.

Every verification routine in the library returns
:class:`IdentityReport` records: two independently computed values, the
relative discrepancy between them, and a pass flag at the tolerance the
check was run with.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity check at one parameter point.

    Attributes
    ----------
    identity_id : str
        Stable identifier of the identity being checked.
    point : dict
        The parameter point (plain scalars, suitable for serialization).
    lhs, rhs : float or complex
        The two independently computed sides.
    rel_discrepancy : float
        ``|lhs - rhs| / |rhs|``, falling back to the absolute
        difference when ``|rhs| < rel_tol``.
    passed : bool
        ``rel_discrepancy <= rel_tol``.
    rel_tol : float
        The tolerance the check was run with.
    """

    identity_id: str
    point: dict
    lhs: complex
    rhs: complex
    rel_discrepancy: float
    passed: bool
    rel_tol: float


def make_report(identity_id, point, lhs, rhs, rel_tol):
    """Build an :class:`IdentityReport` from two computed sides.

    The discrepancy is relative to ``|rhs|`` unless ``|rhs|`` is below
    ``rel_tol`` (the identity value is essentially zero), in which case
    the absolute difference is used so that exact zeros compare cleanly.
    """
    scale = abs(rhs)
    diff = abs(lhs - rhs)
    rel = diff if scale < rel_tol else diff / scale
    return IdentityReport(
        identity_id=identity_id,
        point=dict(point),
        lhs=lhs,
        rhs=rhs,
        rel_discrepancy=rel,
        passed=rel <= rel_tol,
        rel_tol=rel_tol,
    )
