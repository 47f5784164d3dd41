"""
Vector Invariant Configuration - invariants_sl2
Which group acts on how many copies of the natural representation
"""

from typing import Optional

from pydantic import BaseModel, Field, model_validator

from ..actions.group_action import GroupAction, GroupKind, copies_action
from ..poly_core.field import CoefficientField
from ..poly_core.ring import RingContext


class VectorInvariantConfig(BaseModel):
    """
    V = (twisted copy <X0,Y0>) ⊕ <X_i,Y_i> for i = first_index .. first_index + n_copies - 1

    frobenius_p switches on the p-th power action on copy 0 and forces the
    field F_p.
    """
    group: GroupKind
    n_copies: int = Field(ge=1)
    frobenius_p: Optional[int] = None
    field_label: str = "QQ"
    first_index: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _twist_needs_prime_field(self) -> "VectorInvariantConfig":
        fld = CoefficientField.from_label(self.field_label)
        if self.frobenius_p is not None:
            if fld.p == 0:
                self.field_label = f"F{self.frobenius_p}"
            elif fld.p != self.frobenius_p:
                raise ValueError(f"a Frobenius twist by {self.frobenius_p} needs the field F{self.frobenius_p}")
            CoefficientField.prime(self.frobenius_p)
        return self

    @property
    def twisted(self) -> bool:
        return self.frobenius_p is not None

    @property
    def field(self) -> CoefficientField:
        return CoefficientField.from_label(self.field_label)

    @property
    def indices(self) -> list[int]:
        return list(range(self.first_index, self.first_index + self.n_copies))

    def copies(self) -> list[tuple[str, str]]:
        """Natural copies as (X, Y) name pairs"""
        return [(f"X{i}", f"Y{i}") for i in self.indices]

    def ring(self) -> RingContext:
        """X1,Y1,X2,Y2,... with X0,Y0 in front when copy 0 is twisted"""
        pairs = ([("X0", "Y0")] if self.twisted else []) + self.copies()
        return RingContext.create([name for pair in pairs for name in pair], self.field)

    def action(self) -> GroupAction:
        twisted = [("X0", "Y0")] if self.twisted else []
        return copies_action(self.ring(), self.copies(), self.group, twisted, self.frobenius_p or 1)
