"""Interface-coupling variants shared by the viscous and inviscid analyzers."""

from enum import Enum


class CouplingScheme(str, Enum):
    """Partitioned interface coupling.

    AMP: impedance-weighted averages of velocity and traction.
    TP:  solid velocity drives the fluid (Dirichlet), fluid traction drives
         the solid (traditional partitioned).
    ATP: roles reversed (anti-traditional).
    """

    AMP = "AMP"
    TP = "TP"
    ATP = "ATP"

    def __str__(self):
        return self.value
