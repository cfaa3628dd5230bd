from typing import Optional, Sequence, Tuple

from sympy.polys.orderings import MonomialOrder as SympyMonomialOrder


class MonomialOrder(SympyMonomialOrder):
    """Degrevlex, or a block elimination order with degrevlex inside each block.

    ``permutation`` lists variable indices from most to least significant; the
    block split is taken on that list. The key is a total order compatible with
    multiplication, so sympy's ring machinery can use it directly.
    """

    is_global = True

    def __init__(self, nvars: int, split: Optional[int] = None, permutation: Optional[Sequence[int]] = None):
        perm = tuple(range(nvars)) if permutation is None else tuple(permutation)
        if sorted(perm) != list(range(nvars)):
            raise ValueError(f"Permutation {perm} is not a permutation of {nvars} variables")
        if split is not None and not 0 < split < nvars:
            raise ValueError(f"Block split {split} out of range for {nvars} variables")
        self.nvars = nvars
        self.split = split
        self.permutation = perm
        if split is None:
            self.blocks: Tuple[Tuple[int, ...], ...] = (perm,)
            self.alias = "degrevlex"
        else:
            self.blocks = (perm[:split], perm[split:])
            self.alias = f"block({split})"

    @classmethod
    def degrevlex(cls, nvars: int) -> "MonomialOrder":
        return cls(nvars)

    @classmethod
    def block(cls, nvars: int, split: int) -> "MonomialOrder":
        return cls(nvars, split=split)

    @property
    def kind(self) -> str:
        return "degrevlex" if self.split is None else "block"

    def __call__(self, monomial):
        key = []
        for block in self.blocks:
            exps = [monomial[i] for i in block]
            key.append((sum(exps), tuple(-e for e in reversed(exps))))
        return tuple(key)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.nvars, self.split, self.permutation) == (
            other.nvars,
            other.split,
            other.permutation,
        )

    def __hash__(self):
        return hash(("MonomialOrder", self.nvars, self.split, self.permutation))

    def __repr__(self):
        return f"MonomialOrder(nvars={self.nvars}, split={self.split}, permutation={self.permutation})"
