from .certificates import (CertificateParseError, VerificationReport, parse_certificate,
                           placement_problems, serialize_certificate, verify_certificate)
from .diamonds import DiamondSpec, audit_diamonds, embed_diamond, embed_diamonds, filled
from .families import (WorstCaseLayout, gen_checkerboard, gen_greedy_adversarial, gen_random,
                       gen_worst_case, packing_capacity, worst_case_layout, worst_case_radius)
from .reductions import (Placement, ReductionCertificate, Relation, arch_colour, arch_rectangle,
                         gen_reduction_3colour, gen_reduction_4colour, gen_reduction_height3,
                         interleave_four_colour, interleave_three_colour)

__all__ = [
    "CertificateParseError", "VerificationReport", "parse_certificate", "placement_problems",
    "serialize_certificate", "verify_certificate", "DiamondSpec", "audit_diamonds",
    "embed_diamond", "embed_diamonds", "filled", "WorstCaseLayout", "gen_checkerboard",
    "gen_greedy_adversarial", "gen_random", "gen_worst_case", "packing_capacity",
    "worst_case_layout", "worst_case_radius", "Placement", "ReductionCertificate", "Relation",
    "arch_colour", "arch_rectangle", "gen_reduction_3colour", "gen_reduction_4colour",
    "gen_reduction_height3", "interleave_four_colour", "interleave_three_colour",
]
