"""Evaluation, membership oracles and the equivalence harness."""
from polyrep.verify.equivalence import (
    CLASSES,
    Disagreement,
    EquivalenceConfig,
    EquivalenceReport,
    Sample,
    compare_oracles,
    equivalence_test,
    sample_points,
)
from polyrep.verify.evaluate import (
    MembershipVerdict,
    PolynomialViolation,
    compare_epsilon,
    eval_epsilon,
    eval_product,
    member_hrep,
    member_polyhedron_prep,
    member_prep,
    member_sparse,
)
from polyrep.verify.structural import StructuralReport, structural_checks

__all__ = [
    'MembershipVerdict',
    'PolynomialViolation',
    'eval_product',
    'eval_epsilon',
    'compare_epsilon',
    'member_hrep',
    'member_prep',
    'member_polyhedron_prep',
    'member_sparse',
    'CLASSES',
    'Sample',
    'Disagreement',
    'EquivalenceConfig',
    'EquivalenceReport',
    'sample_points',
    'compare_oracles',
    'equivalence_test',
    'StructuralReport',
    'structural_checks',
]
