"""Executable regret-based preferences and exhaustive axiom audits."""

from regretaudit.audit import (
    AuditOptions,
    AuditReport,
    ConfigError,
    Family,
    FamilyConfig,
    demo_family,
    generate_family,
    run_audit,
)
from regretaudit.measure_space import Event, Interval, Partition, common_refinement, measure
from regretaudit.random_variables import (
    OutcomeSpace,
    SimpleRandomVariable,
    align,
    distribution,
    equal_ae,
    same_distribution,
    statewise_dominates,
)
from regretaudit.regret import RegretLottery, difference_regret, regret_lottery
from regretaudit.representations import (
    constant_negative,
    expected_regret,
    neg_abs_sum,
    prefer,
)

__version__ = "0.1.0"
