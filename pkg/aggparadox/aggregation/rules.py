from abc import ABC, abstractmethod

import numpy as np

from aggparadox.errors import EvenVoterCountError
from aggparadox.models.schemas import Ballot, Profile


class AggregationRule(ABC):
    """Issue-wise aggregation procedure F: profile -> ballot"""

    name: str = "rule"

    def validate_voters(self, voters: int) -> None:
        if voters < 1:
            raise ValueError("a profile needs at least one voter")

    @abstractmethod
    def aggregate_matrix(self, ballots: np.ndarray) -> np.ndarray:
        """Aggregate a (batch, n, m) 0/1 array into a (batch, m) boolean array"""

    def __call__(self, profile: Profile) -> Ballot:
        self.validate_voters(profile.voters)
        matrix = np.array(profile.rows(), dtype=np.int64)[None, :, :]
        outcome = self.aggregate_matrix(matrix)[0]
        return Ballot(bits=tuple(int(bit) for bit in outcome))

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


class MajorityRule(AggregationRule):
    """Accept issue j iff at least (n+1)/2 voters accept it; n must be odd"""

    name = "majority"

    def validate_voters(self, voters: int) -> None:
        super().validate_voters(voters)
        if voters % 2 == 0:
            raise EvenVoterCountError(voters)

    def aggregate_matrix(self, ballots: np.ndarray) -> np.ndarray:
        voters = ballots.shape[1]
        self.validate_voters(voters)
        return ballots.sum(axis=1) >= (voters + 1) // 2


MAJORITY = MajorityRule()


def majority(profile: Profile) -> Ballot:
    return MAJORITY(profile)
