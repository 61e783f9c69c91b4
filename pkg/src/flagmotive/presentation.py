"""Free module presentations (basis + grading, no relations)."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class ModulePresentation:
    coefficient_ring: str
    basis: tuple[str, ...] = ()
    grading: tuple[int, ...] = ()
    relations: tuple[str, ...] = ()
    # Symbolic factor tensored on the left, e.g. "K_3(k)_Q"; never computed.
    symbolic_factor: str | None = None
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.grading and len(self.grading) != len(self.basis):
            raise ValueError("grading must give one degree per basis element")
        if len(set(self.basis)) != len(self.basis):
            raise ValueError("basis labels must be distinct")

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_free(self) -> bool:
        return not self.relations

    def higher_tor(self, max_degree: int = 3) -> dict[int, int]:
        """Ranks of Tor_p against any module, p = 1..max_degree; zero for free modules."""
        if not self.is_free:
            raise NotImplementedError("Tor of modules with relations is not computed")
        return {p: 0 for p in range(1, max_degree + 1)}

    def describe(self) -> str:
        if not self.basis:
            return "0"
        free = f"{self.coefficient_ring}^{self.rank}"
        return f"{self.symbolic_factor} (x) {free}" if self.symbolic_factor else free

    def to_json(self) -> dict:
        out = {
            "coefficient_ring": self.coefficient_ring,
            "rank": self.rank,
            "basis": list(self.basis),
            "grading": dict(zip(self.basis, self.grading)),
            "relations": list(self.relations),
        }
        if self.symbolic_factor:
            out["symbolic_factor"] = self.symbolic_factor
        if self.notes:
            out["notes"] = list(self.notes)
        return out
