"""Exact base-b digit arithmetic: digit vectors, carries, witness checking.

A permutiple is a natural number that is an integer multiple of some
rearrangement of its own base-b digits.  Digit vectors here are stored
least-significant digit first, so position j holds the coefficient of b**j
and the carry recurrence of single-digit multiplication runs straight down
the sequence; display output reverses to the familiar most-significant-first
notation.  Everything is plain Python integers, never floating point.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DigitAlignmentError

__all__ = [
    "Params",
    "DigitVec",
    "CarrySeq",
    "PermutipleWitness",
    "WitnessReport",
    "value",
    "digits_of",
    "carry_sequence",
    "verify_witness",
    "find_permutation",
]


@dataclass(frozen=True)
class Params:
    """A multiplier/base pair (n, b) with 1 < n < b."""

    n: int
    b: int

    def __post_init__(self) -> None:
        if self.b < 2:
            raise ValueError(f"base must be at least 2, got {self.b}")
        if not 1 < self.n < self.b:
            raise ValueError(
                f"multiplier must satisfy 1 < n < b, got n={self.n}, b={self.b}"
            )

    def __str__(self) -> str:
        return f"(n={self.n}, b={self.b})"


@dataclass(frozen=True)
class DigitVec:
    """A digit vector in a fixed base, least-significant digit first."""

    digits: tuple[int, ...]
    base: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "digits", tuple(self.digits))
        if self.base < 2:
            raise ValueError(f"base must be at least 2, got {self.base}")
        if not self.digits:
            raise ValueError("digit vector must hold at least one digit")
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} out of range for base {self.base}")

    @classmethod
    def from_msd(cls, digits: Sequence[int], base: int) -> "DigitVec":
        """Build from digits in display order, most significant first."""
        return cls(tuple(reversed(tuple(digits))), base)

    @property
    def msd(self) -> tuple[int, ...]:
        """Digits in display order, most significant first."""
        return tuple(reversed(self.digits))

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return "(%s)_%d" % (",".join(str(d) for d in self.msd), self.base)


@dataclass(frozen=True)
class CarrySeq:
    """Carries c_0 .. c_l of a single-digit multiplication; c_0 is always 0."""

    carries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "carries", tuple(self.carries))
        if not self.carries:
            raise ValueError("carry sequence must not be empty")
        if self.carries[0] != 0:
            raise ValueError(f"initial carry must be 0, got {self.carries[0]}")

    @property
    def final(self) -> int:
        return self.carries[-1]

    def __len__(self) -> int:
        return len(self.carries)

    def __iter__(self):
        return iter(self.carries)


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of checking one claimed permutiple, flag by flag."""

    multisets_equal: bool
    value_relation: bool
    carries_consistent: bool
    final_carry_zero: bool
    carries_bounded: bool
    sigma_consistent: bool

    @property
    def is_permutiple(self) -> bool:
        return (
            self.multisets_equal
            and self.value_relation
            and self.carries_consistent
            and self.final_carry_zero
            and self.carries_bounded
            and self.sigma_consistent
        )


@dataclass(frozen=True)
class PermutipleWitness:
    """A claimed relation digits = n * permuted together with its carries.

    Shape is validated here (matching lengths and bases, one more carry than
    digits, sigma indices in range when given); whether the claim actually
    holds is the job of verify_witness, which reports rather than raises.
    """

    params: Params
    digits: DigitVec
    permuted: DigitVec
    carries: CarrySeq
    sigma: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.sigma is not None:
            object.__setattr__(self, "sigma", tuple(self.sigma))
        ell = len(self.digits)
        if len(self.permuted) != ell:
            raise ValueError("digits and permuted must have the same length")
        if self.digits.base != self.params.b or self.permuted.base != self.params.b:
            raise ValueError("digit vectors must use base b of the parameters")
        if len(self.carries) != ell + 1:
            raise ValueError("need exactly one more carry than digit positions")
        if self.sigma is not None:
            if len(self.sigma) != ell:
                raise ValueError("sigma must assign every digit position")
            for i in self.sigma:
                if not 0 <= i < ell:
                    raise ValueError(f"sigma index {i} out of range")

    @classmethod
    def build(
        cls,
        params: Params,
        digits: DigitVec,
        permuted: DigitVec,
        sigma: Optional[Sequence[int]] = None,
        find_sigma: bool = False,
    ) -> "PermutipleWitness":
        """Assemble a witness, deriving carries by floor division.

        The derived carries satisfy the recurrence exactly when the claim is
        a genuine single-digit multiplication; otherwise verify_witness
        reports which checks fail instead of anything raising here.
        """
        c = 0
        carries = [0]
        for d, q in zip(digits.digits, permuted.digits):
            c = (params.n * q - d + c) // params.b
            carries.append(c)
        if find_sigma and sigma is None:
            sigma = find_permutation(digits, permuted)
        return cls(params, digits, permuted, CarrySeq(tuple(carries)),
                   tuple(sigma) if sigma is not None else None)

    def __str__(self) -> str:
        return f"{self.digits} = {self.params.n}*{self.permuted}"


def value(v: DigitVec) -> int:
    """Numeric value of a digit vector.

    >>> value(DigitVec.from_msd([8, 7, 9, 1, 2], 10))
    87912
    """
    total = 0
    for d in reversed(v.digits):
        total = total * v.base + d
    return total


def digits_of(m: int, base: int, width: int) -> DigitVec:
    """The width-digit vector of m, zero padded at the significant end.

    Raises OverflowError when m needs more than width digits.
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if width < 1:
        raise ValueError(f"width must be at least 1, got {width}")
    if base < 2:
        raise ValueError(f"base must be at least 2, got {base}")
    if m >= base**width:
        raise OverflowError(f"{m} does not fit in {width} base-{base} digits")
    out = []
    for _ in range(width):
        m, d = divmod(m, base)
        out.append(d)
    return DigitVec(tuple(out), base)


def carry_sequence(digits: DigitVec, permuted: DigitVec, p: Params) -> CarrySeq:
    """Carries forced by reading digits as n times permuted, position by position.

    The recurrence b*c[j+1] - c[j] = n*permuted[j] - digits[j] pins down each
    carry exactly.  Raises DigitAlignmentError when a step leaves a remainder
    or pushes a carry outside 0..n-1, meaning the pairing cannot arise from
    multiplying any number by the single digit n.
    """
    if len(digits) != len(permuted):
        raise ValueError("digits and permuted must have the same length")
    if digits.base != p.b or permuted.base != p.b:
        raise ValueError("digit vectors must use base b of the parameters")
    carries = [0]
    c = 0
    for j, (d, q) in enumerate(zip(digits.digits, permuted.digits)):
        c, rem = divmod(p.n * q - d + c, p.b)
        if rem:
            raise DigitAlignmentError(
                f"position {j}: {p.n}*{q} - {d} leaves a non-integral carry"
            )
        if not 0 <= c <= p.n - 1:
            raise DigitAlignmentError(
                f"position {j}: carry {c} escapes the range 0..{p.n - 1}"
            )
        carries.append(c)
    return CarrySeq(tuple(carries))


def verify_witness(w: PermutipleWitness) -> WitnessReport:
    """Check every defining condition of a permutiple; report, never raise."""
    n, b = w.params.n, w.params.b
    ds = w.digits.digits
    qs = w.permuted.digits
    cs = w.carries.carries
    ell = len(ds)
    if w.sigma is None:
        sigma_consistent = True
    else:
        sigma_consistent = len(set(w.sigma)) == ell and all(
            qs[j] == ds[w.sigma[j]] for j in range(ell)
        )
    return WitnessReport(
        multisets_equal=Counter(ds) == Counter(qs),
        value_relation=value(w.digits) == n * value(w.permuted),
        carries_consistent=all(
            b * cs[j + 1] - cs[j] == n * qs[j] - ds[j] for j in range(ell)
        ),
        final_carry_zero=cs[-1] == 0,
        carries_bounded=all(0 <= c <= n - 1 for c in cs),
        sigma_consistent=sigma_consistent,
    )


def find_permutation(digits: DigitVec, permuted: DigitVec) -> Optional[tuple[int, ...]]:
    """One index map sigma with permuted[j] == digits[sigma(j)], if any exists.

    Returns None exactly when the two digit multisets differ.  Positions with
    equal digits are matched greedily, so this is just some witnessing
    permutation, not a canonical one.
    """
    if len(digits) != len(permuted):
        return None
    buckets: dict[int, list[int]] = {}
    for i, d in enumerate(digits.digits):
        buckets.setdefault(d, []).append(i)
    sigma = []
    for q in permuted.digits:
        bucket = buckets.get(q)
        if not bucket:
            return None
        sigma.append(bucket.pop())
    return tuple(sigma)
