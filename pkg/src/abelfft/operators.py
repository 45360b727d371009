"""Black-box operators between function spaces and the reference family.

An operator declares its input and output sides; beyond that the engine only
ever calls ``apply``.  A dense matrix plus a conjugate-input flag is an
optional serialized form: when present, apply(f) = matrix @ f.values, with
f conjugated first if the flag is set.

T-form operators map primal to dual, U-form operators map primal to primal.
The reference family is parameterized by an automorphism psi and a
conjugation flag:

  U-form: f -> f o psi           (conjugated first when the flag is set)
  T-form: f -> forward(f o psi)  (likewise)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import GroupMismatchError, SideMismatchError
from .functions import DUAL, PRIMAL, SIDES, GFunction
from .groups import Automorphism, Group
from .transform import character_matrix, fft_forward

T_FORM = "T"
U_FORM = "U"


@dataclass(eq=False)
class Operator:
    """A map between function spaces, treated as a black box by the engine."""

    group: Group
    input_side: str
    output_side: str
    apply_fn: Callable[[GFunction], GFunction]
    matrix: Optional[np.ndarray] = None
    conjugate_input: bool = False
    label: str = field(default="operator")

    def __post_init__(self):
        if self.input_side not in SIDES or self.output_side not in SIDES:
            raise SideMismatchError(
                f"operator sides must be in {SIDES}, got {self.input_side!r} -> {self.output_side!r}"
            )
        if self.matrix is not None:
            matrix = np.array(self.matrix, dtype=np.complex128, copy=True)
            if matrix.shape != (self.group.size, self.group.size):
                raise GroupMismatchError(
                    f"operator matrix has shape {matrix.shape}, group has size {self.group.size}"
                )
            matrix.setflags(write=False)
            self.matrix = matrix

    @property
    def form(self) -> str:
        if self.input_side == PRIMAL and self.output_side == DUAL:
            return T_FORM
        if self.input_side == PRIMAL and self.output_side == PRIMAL:
            return U_FORM
        return "other"

    def apply(self, f: GFunction) -> GFunction:
        if f.group != self.group:
            raise GroupMismatchError("function and operator live on different groups")
        if f.side != self.input_side:
            raise SideMismatchError(
                f"operator expects {self.input_side}-side input, got {f.side}"
            )
        out = self.apply_fn(f)
        if out.group != self.group or out.side != self.output_side:
            raise SideMismatchError(
                f"operator produced a {out.side}-side output, declared {self.output_side}"
            )
        return out

    @classmethod
    def from_matrix(
        cls,
        group: Group,
        input_side: str,
        output_side: str,
        matrix: np.ndarray,
        conjugate_input: bool = False,
        label: str = "matrix operator",
    ) -> "Operator":
        matrix = np.asarray(matrix, dtype=np.complex128)

        def apply_fn(f: GFunction) -> GFunction:
            vec = np.conj(f.values) if conjugate_input else f.values
            return GFunction(group, output_side, matrix @ vec)

        return cls(group, input_side, output_side, apply_fn, matrix, conjugate_input, label)


def build_reference_operator(
    group: Group,
    psi: Automorphism,
    conjugation: bool = False,
    form: str = U_FORM,
) -> Operator:
    """The model operator for a given automorphism and conjugation flag."""
    if psi.group != group:
        raise GroupMismatchError("automorphism and group do not match")
    if form not in (T_FORM, U_FORM):
        raise ValueError(f"form must be {T_FORM!r} or {U_FORM!r}, got {form!r}")
    perm = psi.perm_array

    def compose(f: GFunction) -> GFunction:
        values = f.values[perm]
        if conjugation:
            values = np.conj(values)
        return GFunction(group, PRIMAL, values)

    if form == U_FORM:
        apply_fn = compose
        output_side = PRIMAL
    else:
        def apply_fn(f: GFunction) -> GFunction:
            return fft_forward(compose(f))

        output_side = DUAL

    return Operator(
        group,
        PRIMAL,
        output_side,
        apply_fn,
        matrix=None,
        conjugate_input=conjugation,
        label=f"reference-{form}",
    )


def reference_operator_matrix(group: Group, psi: Automorphism, form: str) -> np.ndarray:
    """Dense matrix of the reference operator (the conjugation flag is stored separately)."""
    if psi.group != group:
        raise GroupMismatchError("automorphism and group do not match")
    perm = psi.perm_array
    if form == U_FORM:
        return np.eye(group.size, dtype=np.complex128)[perm]
    if form == T_FORM:
        inv = np.empty(group.size, dtype=np.int64)
        inv[perm] = np.arange(group.size, dtype=np.int64)
        return character_matrix(group)[:, inv]
    raise ValueError(f"form must be {T_FORM!r} or {U_FORM!r}, got {form!r}")
