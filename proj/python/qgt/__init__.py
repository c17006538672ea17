from ._core import (
    DecodeOutcome,
    DegreeProfile,
    Design,
    FormatError,
    OutOfRegime,
    Plan,
    SimReport,
    TestPlan,
    analytic_tests,
    decode,
    design,
    encode,
    generate,
    make_plan,
    profile_from_lambda,
    simulate,
)

__all__ = [
    "DecodeOutcome",
    "DegreeProfile",
    "Design",
    "FormatError",
    "OutOfRegime",
    "Plan",
    "SimReport",
    "TestPlan",
    "analytic_tests",
    "decode",
    "design",
    "encode",
    "generate",
    "make_plan",
    "profile_from_lambda",
    "simulate",
]
