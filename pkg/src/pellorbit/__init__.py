"""Exact-arithmetic toolkit for square-root approximation orbits.

Iterates x -> (d x + k)/(x + d) from infinity, synthesizes the continued
fraction of the associated surd from explicit packets, classifies iterates
as convergents/semiconvergents/Pellian fractions, and decides when the
orbit captures every Pell-equation solution.
"""

from .cf import (Cf, cf_expand_surd, cf_of_rational, concat_tail_lft,
                 convergent, convergents, format_cf, locate_convergent,
                 locate_semiconvergent, normalize_zeros, parse_cf)
from .exact import (INF, Lft, QuadSurd, Rational, lft_apply, lft_compose,
                    lft_pow, surd_floor)
from .orbit import (IterateRecord, OrbitSpec, babylonian_step, classify_orbit,
                    is_seed, iterate, min_integral_power)
from .pattern import (FamilyReport, PacketData, PatternParams, a_sequence,
                      boundary_convergents, classify_regime, f_xi, family_scan,
                      is_pellian_iterate, packet, parametrize, pattern_cf)
from .pell import (NegativePellVerdict, PellReport, QuadInteger,
                   exceptional_divisor, is_pellian, negative_pell_verdict,
                   orbit_pell_coverage, pellian_fractions)

__all__ = [name for name in dir() if not name.startswith("_")]
