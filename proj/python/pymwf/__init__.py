"""Python interface to the metaplectic Whittaker engine.

Symbolic results cross the boundary as JSON (terms are coweight/coefficient
lists in the simple-coroot basis); numeric oracle results come back as native
complex numbers.
"""
import json as _json

try:
    from . import _pymwf as _core  # installed wheel layout
except ImportError:
    import _pymwf as _core  # build-tree layout via PYTHONPATH

gauss_table = _core.gauss_table
rank1_whittaker = _core.rank1_whittaker
verify_braid = _core.verify_braid
verify_fg = _core.verify_fg
verify_intertwiner = _core.verify_intertwiner
verify_macdonald = _core.verify_macdonald
verify_symmetrizer = _core.verify_symmetrizer

__all__ = [
    "whittaker",
    "spherical",
    "star_apply",
    "t_apply",
    "verify_braid",
    "verify_symmetrizer",
    "verify_macdonald",
    "verify_fg",
    "verify_intertwiner",
    "gauss_table",
    "rank1_whittaker",
]


def whittaker(cartan, lam, n=1, kappa=1):
    """Iwahori-Whittaker value at a coweight given in coroot coordinates."""
    return _json.loads(_core.whittaker_json(cartan, n, kappa, list(lam)))


def spherical(cartan, lam, n=1, kappa=1):
    """Spherical value at a dominant coweight; rational form when the coset
    sum does not collapse to a polynomial."""
    return _json.loads(_core.spherical_json(cartan, n, kappa, list(lam)))


def star_apply(cartan, a, lam, n=1, kappa=1):
    """Star action of the simple reflection w_a on the monomial e^lam."""
    return _json.loads(_core.star_json(cartan, n, kappa, a, list(lam)))


def t_apply(cartan, a, lam, n=1, kappa=1):
    """Demazure-Lusztig operator T_a on the monomial e^lam."""
    return _json.loads(_core.t_json(cartan, n, kappa, a, list(lam)))
