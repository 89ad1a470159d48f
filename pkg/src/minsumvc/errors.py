"""Shared solver exceptions."""


class ParameterExceeded(Exception):
    """The structural parameter (vertex cover / clique modulator size)
    exceeds the requested bound, so the parameterized solver refuses."""


class BudgetExceeded(Exception):
    """The search space exceeds the configured work budget."""
