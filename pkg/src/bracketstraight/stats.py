"""Instrumentation records for the straightening loops."""

from dataclasses import dataclass, field


@dataclass
class StepStats:
    """Number of terms held after combination at every rewriting step."""

    per_step_terms: list = field(default_factory=list)

    def record(self, count):
        self.per_step_terms.append(count)

    @property
    def steps(self):
        return len(self.per_step_terms)

    @property
    def max_terms(self):
        return max(self.per_step_terms, default=0)

    @property
    def total_terms(self):
        return sum(self.per_step_terms)

    def summary(self):
        return f"{self.per_step_terms}, {self.steps}, {self.max_terms}, {self.total_terms}"


@dataclass
class RotaCost:
    nonzero_matrix_entries: int = 0
    tableau_enumeration_cost: int = 0

    @property
    def total(self):
        return self.nonzero_matrix_entries + self.tableau_enumeration_cost

    @property
    def steps(self):
        return 0

    def summary(self):
        return f"{self.total} ({self.nonzero_matrix_entries} matrix + {self.tableau_enumeration_cost} tableaux)"
