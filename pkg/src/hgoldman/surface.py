"""First homology of a compact oriented surface with its intersection form.

Basis convention: a_1, b_1, ..., a_g, b_g followed by the classes of the
first b - 1 boundary circles (the last one is their negated sum).
"""

from __future__ import annotations

from .group import GroupSpec, validate_spec


def surface_spec(genus: int, boundary_components: int) -> GroupSpec:
    if genus < 0 or boundary_components < 0:
        raise ValueError("genus and number of boundary components must be nonnegative")
    extra = max(boundary_components - 1, 0)
    r = 2 * genus + extra
    form = [[0] * r for _ in range(r)]
    for i in range(genus):
        form[2 * i][2 * i + 1] = 1
        form[2 * i + 1][2 * i] = -1
    return validate_spec(GroupSpec(r, (), tuple(tuple(row) for row in form)))
