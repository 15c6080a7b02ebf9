"""Shared parameter grids for the besselnu test categories."""

from .grids import KINDS, M_GRID, ORACLE_NU, ORACLE_T, T_GRID, rel_residual

__all__ = ['KINDS', 'M_GRID', 'ORACLE_NU', 'ORACLE_T', 'T_GRID', 'rel_residual']
