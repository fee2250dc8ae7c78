"""Exact smoothness obstructions for families of 4-manifolds and finite
cyclic group actions.

Every function returns plain python data (dicts/lists decoded from the core's
JSON reports).  Reports have the shape
``{"verdict": ..., "theorem": ..., "witness": ..., "inputs_echo": ...}`` with
verdict one of ``obstructed``, ``consistent``, ``not_applicable``.
"""

import json as _json

from . import _core

__version__ = _core.__version__


def _loads(s):
    return _json.loads(s)


def invariants(lattice):
    """Rank, signature, b+/b- and parity of a block-sum lattice like "3H+2E8m"."""
    return _loads(_core.invariants(lattice))


def dirac_index(lattice, c2=0, spin=False):
    """d = (c^2 - sigma)/8 for the given characteristic data."""
    return _core.dirac_index(lattice, c2, spin)


def binomial_mod2(n, k):
    return _core.binomial_mod2(n, k)


def check(name, hypothesis):
    """Run a named checker on a hypothesis dict (the CLI's JSON schema)."""
    return _loads(_core.run_check(name, _json.dumps(hypothesis)))


def check_donaldson(lattice, c2=None, spin=False):
    hyp = {"lattice": lattice, "spin": spin}
    if c2 is not None:
        hyp["c2"] = c2
    return check("donaldson", hyp)


def check_furuta(lattice, b_plus=None):
    return _loads(_core.check_furuta(lattice, -1 if b_plus is None else b_plus))


def check_family_euler(hypothesis):
    return check("family-euler", hypothesis)


def check_spin_family(hypothesis):
    return check("spin-family", hypothesis)


def check_z2(hypothesis):
    return check("z2", hypothesis)


def check_zp(hypothesis):
    return check("zp", hypothesis)


def check_even_involution(sigma, inv_dim, type="even"):
    return _loads(_core.check_even_involution(sigma, inv_dim, type))


def check_zp_spin(d0, inv_dim):
    return _loads(_core.check_zp_spin(d0, inv_dim))


def check_ten_eighths(p, hplus, v, vp):
    return _loads(_core.check_ten_eighths(p, list(hplus), list(v), list(vp)))


def scenario_branched_cover(p, g, b):
    return _loads(_core.scenario_branched_cover(p, g, b))


def scenario_spin_family(a, b):
    return _loads(_core.scenario_spin_family(a, b))


def scenario_nonspin_family(a, b, trivialize_bundle=False):
    return _loads(_core.scenario_nonspin_family(a, b, trivialize_bundle))


def catalog():
    """Reproduce every named example and equivalence grid."""
    return _loads(_core.catalog_json())


def lambda_total(p, mult):
    return _loads(_core.lambda_total(p, list(mult)))


def psi2(p, mult):
    return _loads(_core.psi2(p, list(mult)))


def k_euler(p, mult):
    return _loads(_core.k_euler(p, list(mult)))


def character_at(p, mult, k):
    """Character value as coefficients on the basis 1, w, ..., w^{p-2}."""
    return _loads(_core.character_at(p, list(mult), k))


def repring_divide(p, a, b):
    """Exact quotient in R[Z_p], or None when no integral quotient exists."""
    return _loads(_core.repring_divide(p, list(a), list(b)))


def z2_certificate(b_plus, d_plus, d_minus):
    return _loads(_core.z2_certificate(b_plus, d_plus, d_minus))


def zp_certificate(p, d, h):
    return _loads(_core.zp_certificate(p, list(d), list(h)))
