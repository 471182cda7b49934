# -*- coding: utf-8 -*-
"""GradedFunction 엔티티 - 이산 함수 공간 D(ℤ), D₊(ℤ), D₊₊(ℤ)의 원소"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Mapping, Optional, Tuple, Union

from ..exceptions import InvalidArgument, SpaceMismatch
from ..value_objects.half_power_scalar import HalfPowerScalar

ScalarLike = Union[HalfPowerScalar, int, Fraction]

SPACE_D = "D"
SPACE_D_PLUS = "D_plus"
SPACE_D_PLUS_PLUS = "D_plus_plus"
SPACES = (SPACE_D, SPACE_D_PLUS, SPACE_D_PLUS_PLUS)


@dataclass(frozen=True, eq=False)
class GradedFunction:
    """ℤ 위의 함수 f

    n < threshold 에서는 f(n) = support.get(n, 0),
    n ≥ threshold 에서는 f(n) = tail_a·q^n + tail_b 입니다.

    생성 시 정규화:
    - 꼬리와 같은 값을 가진 support 항이 없도록 threshold를 가능한 만큼 낮춤
    - 꼬리가 0이면 threshold = max(support) + 1 (support가 비면 0)

    공간 라벨은 선언된 공간이며 등호 비교에는 쓰이지 않습니다.
    D는 꼬리 0, D_plus는 tail_a = 0 이어야 합니다.

    Attributes:
        space: "D" | "D_plus" | "D_plus_plus"
        support: (n, f(n)) 튜플 (n < threshold, 0 아님, 오름차순)
        threshold: 꼬리 시작점 n₁
        tail_a: q^n 계수 a
        tail_b: 상수 b
        q: D_plus_plus 꼬리의 밑 (tail_a ≠ 0이면 필수)
    """

    space: str
    support: Tuple[Tuple[int, HalfPowerScalar], ...] = ()
    threshold: int = 0
    tail_a: HalfPowerScalar = HalfPowerScalar.zero()
    tail_b: HalfPowerScalar = HalfPowerScalar.zero()
    q: Optional[int] = None

    def __post_init__(self):
        if self.space not in SPACES:
            raise InvalidArgument(f"unknown space {self.space!r}")
        a = HalfPowerScalar.coerce(self.tail_a)
        b = HalfPowerScalar.coerce(self.tail_b)
        if self.space == SPACE_D and not (a.is_zero() and b.is_zero()):
            raise SpaceMismatch("a function in D must have finite support")
        if self.space == SPACE_D_PLUS and not a.is_zero():
            raise SpaceMismatch("a function in D_plus must have a constant tail")
        if not a.is_zero() and (self.q is None or self.q < 2):
            raise InvalidArgument("a geometric tail needs q >= 2")

        values: Dict[int, HalfPowerScalar] = {}
        for n, c in self.support:
            if n >= self.threshold:
                raise InvalidArgument(f"support entry n={n} is not below threshold {self.threshold}")
            c = HalfPowerScalar.coerce(c)
            if not c.is_zero():
                values[int(n)] = c

        threshold = int(self.threshold)
        if a.is_zero() and b.is_zero():
            threshold = max(values) + 1 if values else 0
        else:
            # 꼬리 값과 같은 support 항을 꼬리로 흡수
            while values.get(threshold - 1, HalfPowerScalar.zero()) == self._tail_value(a, b, threshold - 1):
                values.pop(threshold - 1, None)
                threshold -= 1

        object.__setattr__(self, 'support', tuple(sorted(values.items())))
        object.__setattr__(self, 'threshold', threshold)
        object.__setattr__(self, 'tail_a', a)
        object.__setattr__(self, 'tail_b', b)

    def _tail_value(self, a: HalfPowerScalar, b: HalfPowerScalar, n: int) -> HalfPowerScalar:
        if a.is_zero():
            return b
        return a * Fraction(self.q) ** n + b

    # ------------------------------------------------------------------
    # 팩토리 메서드
    # ------------------------------------------------------------------

    @staticmethod
    def finite(values: Mapping[int, ScalarLike]) -> 'GradedFunction':
        """유한 지지 함수 (D)"""
        support = tuple((n, c) for n, c in values.items())
        threshold = max(values) + 1 if values else 0
        return GradedFunction(SPACE_D, support, threshold)

    @staticmethod
    def delta(m: int, c: ScalarLike = 1) -> 'GradedFunction':
        """c·δ_{(m)}"""
        return GradedFunction.finite({m: c})

    @staticmethod
    def step(m: int, c: ScalarLike = 1) -> 'GradedFunction':
        """c·δ_{(≥m)}"""
        return GradedFunction(SPACE_D_PLUS, (), m, HalfPowerScalar.zero(), c)

    @staticmethod
    def eventually_constant(values: Mapping[int, ScalarLike], threshold: int,
                            constant: ScalarLike) -> 'GradedFunction':
        """D_plus 원소: n < threshold 에서 values, 이후 상수"""
        return GradedFunction(SPACE_D_PLUS, tuple(values.items()), threshold, HalfPowerScalar.zero(), constant)

    @staticmethod
    def eventually_geometric(values: Mapping[int, ScalarLike], threshold: int,
                             a: ScalarLike, b: ScalarLike, q: int) -> 'GradedFunction':
        """D_plus_plus 원소: n ≥ threshold 에서 a·q^n + b"""
        return GradedFunction(SPACE_D_PLUS_PLUS, tuple(values.items()), threshold, a, b, q)

    @staticmethod
    def from_steps(steps: Mapping[int, ScalarLike]) -> 'GradedFunction':
        """Σ c_m δ_{(≥m)} (D_plus)"""
        steps = {m: HalfPowerScalar.coerce(c) for m, c in steps.items()}
        steps = {m: c for m, c in steps.items() if not c.is_zero()}
        if not steps:
            return GradedFunction(SPACE_D_PLUS)
        starts = sorted(steps)
        values = {}
        running = HalfPowerScalar.zero()
        index = 0
        for n in range(starts[0], starts[-1]):
            while index < len(starts) and starts[index] <= n:
                running = running + steps[starts[index]]
                index += 1
            values[n] = running
        total = HalfPowerScalar.zero()
        for c in steps.values():
            total = total + c
        return GradedFunction(SPACE_D_PLUS, tuple(values.items()), starts[-1], HalfPowerScalar.zero(), total)

    # ------------------------------------------------------------------
    # 질의
    # ------------------------------------------------------------------

    def __call__(self, n: int) -> HalfPowerScalar:
        if n >= self.threshold:
            return self._tail_value(self.tail_a, self.tail_b, n)
        for m, c in self.support:
            if m == n:
                return c
        return HalfPowerScalar.zero()

    def has_tail(self) -> bool:
        return not (self.tail_a.is_zero() and self.tail_b.is_zero())

    def has_geometric_tail(self) -> bool:
        return not self.tail_a.is_zero()

    @property
    def lower_cutoff(self) -> int:
        """n < n₀ 에서 f(n) = 0"""
        if self.support:
            return self.support[0][0]
        return self.threshold

    def support_values(self) -> Dict[int, HalfPowerScalar]:
        return dict(self.support)

    def with_space(self, space: str) -> 'GradedFunction':
        """같은 함수를 다른 공간 라벨로 (포함 관계를 벗어나면 SpaceMismatch)"""
        return GradedFunction(space, self.support, self.threshold, self.tail_a, self.tail_b, self.q)

    def step_coefficients(self) -> Dict[int, HalfPowerScalar]:
        """
        D_plus 함수의 δ_{(≥m)} 기저 전개 c_m = f(m) - f(m-1)

        Raises:
            SpaceMismatch: 기하 꼬리가 있는 경우
        """
        if self.has_geometric_tail():
            raise SpaceMismatch("step decomposition requires a function in D_plus")
        coeffs = {}
        for m in range(self.lower_cutoff, self.threshold + 1):
            c = self(m) - self(m - 1)
            if not c.is_zero():
                coeffs[m] = c
        return coeffs

    # ------------------------------------------------------------------
    # 산술 (점별)
    # ------------------------------------------------------------------

    def _widest_space(self, other: 'GradedFunction') -> str:
        return SPACES[max(SPACES.index(self.space), SPACES.index(other.space))]

    def __add__(self, other: 'GradedFunction') -> 'GradedFunction':
        q = self.q if self.has_geometric_tail() else other.q
        if self.has_geometric_tail() and other.has_geometric_tail() and self.q != other.q:
            raise SpaceMismatch(f"tails with different q: {self.q} vs {other.q}")
        threshold = max(self.threshold, other.threshold)
        low = min(self.lower_cutoff, other.lower_cutoff)
        values = {n: self(n) + other(n) for n in range(low, threshold)}
        return GradedFunction(
            self._widest_space(other), tuple(values.items()), threshold,
            self.tail_a + other.tail_a, self.tail_b + other.tail_b,
            q if q is not None else self.q,
        )

    def scale(self, c: ScalarLike) -> 'GradedFunction':
        c = HalfPowerScalar.coerce(c)
        return GradedFunction(
            self.space, tuple((n, v * c) for n, v in self.support), self.threshold,
            self.tail_a * c, self.tail_b * c, self.q,
        )

    def __neg__(self) -> 'GradedFunction':
        return self.scale(-1)

    def __sub__(self, other: 'GradedFunction') -> 'GradedFunction':
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedFunction):
            return NotImplemented
        same = (self.support, self.threshold, self.tail_a, self.tail_b) == \
               (other.support, other.threshold, other.tail_a, other.tail_b)
        if same and self.has_geometric_tail():
            return self.q == other.q
        return same

    def __hash__(self) -> int:
        return hash((self.support, self.threshold, self.tail_a, self.tail_b))

    def values(self, indices: Iterable[int]) -> Dict[int, HalfPowerScalar]:
        return {n: self(n) for n in indices}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "space": self.space,
            "support": {str(n): c.to_dict() for n, c in self.support},
            "threshold": self.threshold,
            "tail": {"a": self.tail_a.to_dict(), "b": self.tail_b.to_dict(), "q": self.q},
        }

    def __repr__(self) -> str:
        support = ", ".join(f"{n}: {c!r}" for n, c in self.support)
        tail = ""
        if self.has_geometric_tail():
            tail = f", n>={self.threshold}: {self.tail_a!r}·{self.q}^n + {self.tail_b!r}"
        elif self.has_tail():
            tail = f", n>={self.threshold}: {self.tail_b!r}"
        return f"GradedFunction({self.space}, {{{support}}}{tail})"
