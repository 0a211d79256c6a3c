from aggparadox.encoders.elections import (
    ballot_disjunction_constraint,
    budget_constraint,
    divided_government_constraint,
)
from aggparadox.encoders.judgment import (
    build_agenda,
    encode_agenda,
    has_median_property,
    judgment_profile,
    judgment_sets,
    mi_sets,
    parse_agenda,
    read_agenda,
)
from aggparadox.encoders.ostrogorski import encode_ostrogorski
from aggparadox.encoders.preferences import (
    OrderKind,
    ballot_to_ranking,
    ballot_to_relation,
    encode_negative_transitivity,
    encode_preferences,
    ranking_to_ballot,
)
from aggparadox.encoders.scenarios import SCENARIOS, builtin_scenario

__all__ = [
    "OrderKind",
    "SCENARIOS",
    "ballot_disjunction_constraint",
    "ballot_to_ranking",
    "ballot_to_relation",
    "budget_constraint",
    "build_agenda",
    "builtin_scenario",
    "divided_government_constraint",
    "encode_agenda",
    "encode_negative_transitivity",
    "encode_ostrogorski",
    "encode_preferences",
    "has_median_property",
    "judgment_profile",
    "judgment_sets",
    "mi_sets",
    "parse_agenda",
    "ranking_to_ballot",
    "read_agenda",
]
