"""Hecke characters, cylindric characters and the asymmetric six-vertex model.

Modules:

* ``combinatorics``: partitions, Maya diagrams, cores, broken rim hooks, cylindric shapes
* ``coefficient_algebra``: exact Laurent polynomials in ``t``, truncated q-series, symmetric-function oracles
* ``hecke_characters``: broken rim hook characters of the Hecke algebra
* ``six_vertex``: row transfer operators, RTT, transfer matrices, the fermionic layer
* ``cylindric``: cylindric characters (three evaluators) and cylindric Schur functions
* ``quantum_cohomology``: rim hook algorithm, Gromov-Witten invariants, coproduct check
* ``bethe_numeric``: floating-point Bethe-root oracle
* ``cli``: command-line front end
"""

__version__ = "0.1.0"
