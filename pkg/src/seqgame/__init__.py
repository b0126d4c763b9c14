"""Abstract sequential games with arbitrary preferences over outcomes."""

from .errors import (
    ChoiceCountError,
    CyclicPreference,
    CyclicRelation,
    EmptyCycle,
    EmptyListError,
    EmptyNode,
    GameMismatch,
    MissingPayoff,
    ParseError,
    SeqGameError,
    TooLarge,
    UnknownKind,
)
from .game import Game, Leaf, Node, child_count, node, used_outcomes
from .oracle import all_profiles, find_equilibria
from .prefs_io import parse_prefs
from .relation import (
    CyclePath,
    Relation,
    check_properties,
    find_cycle,
    is_acyclic,
    is_no_succ,
    is_subrelation,
    linear_extension,
    restriction,
    transitive_closure,
)
from .solver import backward_induction, choose_and_split, no_equilibrium_game, solve_spe
from .strategy import (
    PreferenceFamily,
    Profile,
    ProfileLeaf,
    ProfileNode,
    conversions,
    induced_outcome,
    is_convertible,
    is_happy,
    is_nash,
    is_spe,
    strat_pref,
    underlying_game,
)
from .syntax import format_game, format_profile, parse_game, parse_profile

__version__ = "0.1.0"
