"""Exact big-integer matrix arithmetic and characteristic polynomials.

Everything here works over Python's arbitrary-precision integers: walk
counts grow like 2^k (and golden-ratio powers), so 64-bit arithmetic
would overflow near k = 60..90 while callers go to k = 200 and beyond.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ComputationError, InvalidOrderError


class IntMatrix:
    """Immutable square matrix with exact integer entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        frozen = tuple(tuple(int(x) for x in row) for row in rows)
        order = len(frozen)
        if order == 0 or any(len(row) != order for row in frozen):
            raise ValueError("matrix must be square and non-empty")
        object.__setattr__(self, "rows", frozen)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @property
    def order(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, order: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(order)] for i in range(order)])

    @classmethod
    def zero(cls, order: int) -> "IntMatrix":
        return cls([[0] * order for _ in range(order)])

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_order(other)
        return IntMatrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_order(other)
        return IntMatrix(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix([x * other for x in row] for row in self.rows)
        if not isinstance(other, IntMatrix):
            return NotImplemented
        self._check_same_order(other)
        n = self.order
        cols = tuple(zip(*other.rows))
        return IntMatrix(
            [sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows
        )

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, e: int) -> "IntMatrix":
        if e < 0:
            raise ValueError("negative matrix power")
        result = IntMatrix.identity(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.order))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def permuted(self, perm: Sequence[int]) -> "IntMatrix":
        """Simultaneous row/column permutation: entry (i,j) -> (perm[i], perm[j])."""
        if sorted(perm) != list(range(self.order)):
            raise ValueError("not a permutation of 0..order-1")
        return IntMatrix(
            [self.rows[perm[i]][perm[j]] for j in range(self.order)]
            for i in range(self.order)
        )

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)

    def _check_same_order(self, other: "IntMatrix") -> None:
        if self.order != other.order:
            raise ValueError("matrix orders differ")


class IntPolynomial:
    """Dense univariate polynomial with integer coefficients.

    Coefficients are stored lowest degree first with trailing zeros
    stripped; the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "IntPolynomial":
        if exp < 0:
            raise ValueError("negative exponent")
        return cls([0] * exp + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, exp: int) -> int:
        return self.coeffs[exp] if 0 <= exp < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(
            [x + y for x, y in zip(a, b)] + list(a[len(b):])
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def shifted(self, t: int) -> "IntPolynomial":
        """Multiply by the t-th power of the variable."""
        if t < 0:
            raise ValueError("negative shift")
        if self.is_zero:
            return self
        return IntPolynomial((0,) * t + self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


def format_poly(p: IntPolynomial, var: str = "λ") -> str:
    """Human-readable form, highest degree first, e.g. 'λ^4 - 2λ^3'."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for exp in range(p.degree, -1, -1):
        c = p.coefficient(exp)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if exp == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else str(mag)
            body = f"{head}{var}" if exp == 1 else f"{head}{var}^{exp}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def mat_pow(M: IntMatrix, e: int) -> IntMatrix:
    """Exact matrix power via binary exponentiation; M^0 is the identity."""
    if e < 0:
        raise ValueError("exponent must be >= 0")
    return M ** e


def count_order_k(space, k: int) -> int:
    """Number of meaningful k-th-order compositions over the given space.

    Equals the all-ones bilinear form over the (k-1)-th power of the
    space's adjacency matrix, computed here by an iterated vector-matrix
    product in O(k * order^2) exact integer operations.
    """
    if k < 1:
        raise InvalidOrderError(f"composition order must be >= 1, got {k}")
    rows = space.adjacency_rows()
    order = len(rows)
    vec = [1] * order
    for _ in range(k - 1):
        vec = [sum(vec[i] * rows[i][j] for i in range(order)) for j in range(order)]
    return sum(vec)


def count_by_matrix_power(space, k: int) -> int:
    """Same count through the explicit matrix power; cross-check path."""
    if k < 1:
        raise InvalidOrderError(f"composition order must be >= 1, got {k}")
    M = IntMatrix(space.adjacency_rows()) ** (k - 1)
    return sum(x for row in M.rows for x in row)


def char_poly(M: IntMatrix) -> IntPolynomial:
    """Monic characteristic polynomial det(λI - M), exactly.

    Uses the trace recursion (Faddeev-LeVerrier): every intermediate
    matrix stays integral and the only divisions are trace/k, which must
    be exact for an integer matrix. Divisibility is asserted, never
    rounded; a failure means a bug and aborts loudly.
    """
    d = M.order
    coeffs_high = [1]
    Mk = M
    for k in range(1, d + 1):
        t = Mk.trace()
        if t % k != 0:
            raise ComputationError(
                f"non-integral characteristic coefficient at step {k}: trace {t}"
            )
        c = -(t // k)
        coeffs_high.append(c)
        if k < d:
            Mk = M * (Mk + IntMatrix.identity(d) * c)
    return IntPolynomial(reversed(coeffs_high))
