"""starextremal: exact star-count extremal bounds for graphs lacking
hamiltonicity-type properties or k-connectivity, with brute-force
verification at small vertex counts.

The package splits into:

* ``counts``      closed-form integer arithmetic on the two families
* ``graphs``      bit-matrix graphs, family construction, graph6
* ``properties``  exact property deciders, closure, degree witness
* ``search``      isomorph-free enumeration and the verification oracle
* ``cli``         the ``starextremal`` command
"""

from . import canon, counts, graphs, properties, search  # noqa: F401

__version__ = "0.1.0"
