"""Default numerical tolerances shared by every module.

Each public function that compares against a threshold takes it as a keyword
argument whose default is read from :data:`TOL`.
"""
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # linalg
    normal_commutator: float = 1e-8    # relative to ||M||^2
    eig_cluster: float = 1e-9          # relative to 1 + ||M||
    # skewsym
    skew: float = 1e-12                # relative to 1 + ||M||_F
    # rotation
    orthogonal: float = 1e-10          # times n
    determinant: float = 1e-8
    # branch locus of the logarithm
    angle_pi_guard: float = 1e-6       # bch_numeric and forms (c)/(d)
    angle_pi_snap: float = 1e-9        # Borel calculus: t within this of -pi is mapped to +pi
    # isometry
    lab_slack: float = 1e-6            # membership slack for the set L_{A,B}
    sample_angle_cap: float = 0.9      # fraction of pi for sampled inputs to forms (c)/(d)


TOL = Tolerances()
