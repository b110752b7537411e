#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

from dataclasses import dataclass, field


@dataclass(frozen=True)
class ProjectiveDegrees:
    """projective degrees g_0..g_n, the O(1)-degrees of the polar cycles"""

    g: tuple
    section_degree: int
    trials: int
    seed: int
    disagreement: bool = False

    def to_dict(self):
        return {"g": list(self.g), "section_degree": self.section_degree, "trials": self.trials,
                "seed": self.seed, "disagreement": self.disagreement}


@dataclass(frozen=True)
class VogelData:
    """Vogel degrees together with the projective degrees they came from.

    chain holds the residual ideals B_0, B_1, ... of one accepted run when
    a trace was requested."""

    nu: object
    g: ProjectiveDegrees
    section_degree: int
    chain: tuple = field(default=None, compare=False)

    def to_dict(self):
        result = {"nu": self.nu.to_list(), "g": list(self.g.g), "section_degree": self.section_degree,
                  "trials": self.g.trials}
        if self.chain is not None:
            result["chain"] = [[str(f) for f in b.reduced_gb()] for b in self.chain]
        return result
