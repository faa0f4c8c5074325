"""Finite q-ary codebooks: enumeration, validation, orbits, complements, file I/O.

A code is an ordered set of non-identical words over {0..q-1}^n. For use on
the gain/offset channel a code must contain no constant word and no pair
x != y with y = a*x + b*1 for a > 0 (such a pair is indistinguishable on a
noiseless channel); validate_pearson_code reports violations of either rule
as data. Codes produced by requiring specific symbols to appear are closed
under coordinate permutation, and when the required set is symmetric under
s -> q-1-s they are closed under complementation as well; both closure
properties are checked explicitly and recorded as flags, since the
accelerated decoder relies on them.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path

import numpy as np

from . import geometry
from .errors import EnumerationTooLarge, NotPermutationClosed

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "Codeword",
    "Code",
    "Orbit",
    "Violation",
    "t_constrained",
    "t_required_symbols",
    "validate_pearson_code",
    "sorted_representatives",
    "complement",
    "save_code",
    "load_code",
]

DEFAULT_ENUMERATION_CAP = 10**7

# A correlation this close to +1 marks two codewords as positive-affine
# duplicates; exact duplicates of integer words land within 1e-15 of 1.
AFFINE_DUPLICATE_TOL = 1e-10


@dataclass(frozen=True)
class Codeword:
    """Integer-alphabet word with its centered form and squared deviation cached."""

    symbols: tuple[int, ...]
    sigma_squared: float = field(compare=False, repr=False)
    centered: np.ndarray = field(compare=False, repr=False)

    @classmethod
    def from_symbols(cls, symbols) -> "Codeword":
        syms = tuple(int(s) for s in symbols)
        centered = geometry.center(syms)
        centered.setflags(write=False)
        return cls(syms, float(centered @ centered), centered)

    @property
    def is_constant(self) -> bool:
        # Integer words have exactly zero deviation iff constant.
        return self.sigma_squared == 0.0

    def __len__(self) -> int:
        return len(self.symbols)


class Code:
    """An immutable, lexicographically ordered set of codewords over {0..q-1}^n.

    Every index reported by a decoder or a distance scan refers to this
    order. Construction precomputes the integer symbol matrix, the centered
    matrix and the squared deviations used by the vectorised decoding and
    distance paths. Instances are safe to share between threads.
    """

    def __init__(self, q: int, n: int, words):
        if q < 2:
            raise ValueError(f"alphabet size q must be at least 2, got {q}")
        if n < 3:
            raise ValueError(f"word length n must be at least 3, got {n}")
        tuples = []
        for w in words:
            syms = tuple(int(s) for s in (w.symbols if isinstance(w, Codeword) else w))
            if len(syms) != n:
                raise ValueError(f"codeword {syms} has length {len(syms)}, expected {n}")
            if any(s < 0 or s >= q for s in syms):
                raise ValueError(f"codeword {syms} has symbols outside 0..{q - 1}")
            tuples.append(syms)
        tuples.sort()
        for a, b in zip(tuples, tuples[1:]):
            if a == b:
                raise ValueError(f"duplicate codeword {a}")
        if not tuples:
            raise ValueError("a code must contain at least one codeword")

        self.q = q
        self.n = n
        self.words: tuple[Codeword, ...] = tuple(Codeword.from_symbols(t) for t in tuples)
        self._index = {w.symbols: i for i, w in enumerate(self.words)}

        self._symbols = np.array(tuples, dtype=np.int64)
        self._centered = np.vstack([w.centered for w in self.words])
        self._centered.setflags(write=False)
        self._sigma2 = np.array([w.sigma_squared for w in self.words])
        self._sigma2.setflags(write=False)

        self.permutation_closed = self._check_permutation_closed()
        self.complement_closed = self._check_complement_closed()
        self._cache: dict = {}

    # -- container protocol -------------------------------------------------

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __getitem__(self, i: int) -> Codeword:
        return self.words[i]

    def __contains__(self, symbols) -> bool:
        key = symbols.symbols if isinstance(symbols, Codeword) else tuple(int(s) for s in symbols)
        return key in self._index

    def index_of(self, symbols) -> int:
        key = symbols.symbols if isinstance(symbols, Codeword) else tuple(int(s) for s in symbols)
        try:
            return self._index[key]
        except KeyError:
            raise ValueError(f"{key} is not a codeword of this code") from None

    # -- precomputed arrays (read-only views) --------------------------------

    @property
    def symbol_matrix(self) -> np.ndarray:
        """(len, n) int64 matrix of symbols, rows in code order."""
        return self._symbols

    @property
    def centered_matrix(self) -> np.ndarray:
        """(len, n) float matrix of centered codewords."""
        return self._centered

    @property
    def sigma_squared_vector(self) -> np.ndarray:
        """(len,) vector of squared deviations."""
        return self._sigma2

    # -- closure checks ------------------------------------------------------

    def _check_permutation_closed(self) -> bool:
        groups = defaultdict(int)
        for w in self.words:
            groups[tuple(sorted(w.symbols))] += 1
        for rep, size in groups.items():
            expected = math.factorial(self.n)
            for count in _symbol_counts(rep).values():
                expected //= math.factorial(count)
            if size != expected:
                return False
        return True

    def _check_complement_closed(self) -> bool:
        return all(
            tuple(self.q - 1 - s for s in w.symbols) in self._index for w in self.words
        )


def _symbol_counts(symbols) -> dict[int, int]:
    counts: dict[int, int] = defaultdict(int)
    for s in symbols:
        counts[s] += 1
    return counts


def t_required_symbols(q: int, t: int) -> frozenset[int]:
    """Conventional required-symbol presets: t=1 -> {0}, t=2 -> {0, q-1}."""
    if t == 1:
        return frozenset({0})
    if t == 2:
        return frozenset({0, q - 1})
    raise ValueError(f"no required-symbol preset for t={t}; pass the set explicitly")


def t_constrained(
    q: int,
    n: int,
    required_symbols,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
    force: bool = False,
) -> Code:
    """All words over {0..q-1}^n containing every required symbol, minus constants.

    Constant words are silently excluded: they are unusable on a channel
    with unknown gain and offset. Enumeration of q^n words is refused above
    `cap` unless force=True.
    """
    required = frozenset(int(s) for s in required_symbols)
    if not required:
        raise ValueError("required_symbols must be non-empty")
    if any(s < 0 or s >= q for s in required):
        raise ValueError(f"required symbols {sorted(required)} outside 0..{q - 1}")
    if q**n > cap and not force:
        raise EnumerationTooLarge(
            f"q^n = {q**n} exceeds the enumeration cap {cap}; pass force=True to override"
        )
    words = []
    for tup in product(range(q), repeat=n):
        present = set(tup)
        if required <= present and len(present) > 1:
            words.append(tup)
    return Code(q, n, words)


@dataclass(frozen=True)
class Violation:
    """One reason a code is unusable on the gain/offset channel."""

    kind: str  # "constant_word" or "affine_pair"
    indices: tuple[int, ...]
    message: str


def validate_pearson_code(code: Code) -> list[Violation]:
    """Check the unique-decoding constraints; an empty list means the code is usable.

    Flags every constant codeword, and every pair (x, y) with x != y whose
    centered forms are positive multiples of each other (equivalently
    y = a*x + b*1 with a > 0). Violations are returned as data, not raised.
    """
    violations: list[Violation] = []
    norms = np.linalg.norm(code.symbol_matrix.astype(float), axis=1)
    sig = np.sqrt(code.sigma_squared_vector)
    constant = sig <= geometry.CONSTANT_REL_TOL * np.maximum(1.0, norms)
    for i in np.flatnonzero(constant):
        i = int(i)
        violations.append(
            Violation(
                "constant_word",
                (i,),
                f"codeword {i} {code[i].symbols} is constant",
            )
        )

    live = np.flatnonzero(~constant)
    if live.size >= 2:
        unit = code.centered_matrix[live] / sig[live, None]
        # Row-chunked Gram scan keeps memory bounded for large codes.
        chunk = max(1, int(2_000_000 // max(1, live.size)))
        for start in range(0, live.size, chunk):
            rows = unit[start : start + chunk]
            gram = rows @ unit.T
            hits = np.argwhere(gram >= 1.0 - AFFINE_DUPLICATE_TOL)
            for a, b in hits:
                i = int(live[start + a])
                j = int(live[b])
                if j <= i:
                    continue
                gain = float(sig[j] / sig[i])
                violations.append(
                    Violation(
                        "affine_pair",
                        (i, j),
                        f"codeword {j} {code[j].symbols} = a*codeword {i} "
                        f"{code[i].symbols} + b*1 with a={gain:.6g}",
                    )
                )
    violations.sort(key=lambda v: (v.kind != "constant_word", v.indices))
    return violations


@dataclass(frozen=True)
class Orbit:
    """All codewords sharing one multiset of symbols."""

    representative: tuple[int, ...]
    member_indices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.member_indices)


def sorted_representatives(code: Code) -> dict[tuple[int, ...], Orbit]:
    """One sorted representative per permutation orbit, with its member indices.

    Requires a permutation-closed code; each representative (the ascending
    arrangement) is itself a codeword, and its orbit reconstructs all
    members under coordinate permutation.
    """
    if not code.permutation_closed:
        raise NotPermutationClosed("code is not closed under coordinate permutations")
    cached = code._cache.get("sorted_representatives")
    if cached is None:
        groups: dict[tuple[int, ...], list[int]] = defaultdict(list)
        for i, w in enumerate(code.words):
            groups[tuple(sorted(w.symbols))].append(i)
        cached = {rep: Orbit(rep, tuple(members)) for rep, members in groups.items()}
        code._cache["sorted_representatives"] = cached
    return cached


def complement(x, q: int) -> Codeword:
    """Symbolwise q-1-x; an involution with centered form -centered(x)."""
    symbols = x.symbols if isinstance(x, Codeword) else tuple(int(s) for s in x)
    return Codeword.from_symbols(tuple(q - 1 - s for s in symbols))


def save_code(code: Code, path) -> None:
    """Write the text format: header 'q n count', then one codeword per line."""
    lines = [f"{code.q} {code.n} {len(code)}"]
    lines.extend(" ".join(str(s) for s in w.symbols) for w in code)
    Path(path).write_text("\n".join(lines) + "\n")


def load_code(path) -> Code:
    """Read the text format written by save_code.

    Words are re-sorted lexicographically on load (the canonical order of a
    Code), so save -> load -> save reproduces a file byte for byte.
    """
    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines:
        raise ValueError(f"{path}: empty code file")
    header = lines[0].split()
    if len(header) != 3:
        raise ValueError(f"{path}: header must be 'q n count', got {lines[0]!r}")
    q, n, count = (int(h) for h in header)
    body = lines[1:]
    if len(body) != count:
        raise ValueError(f"{path}: header promises {count} codewords, file has {len(body)}")
    words = [tuple(int(s) for s in ln.split()) for ln in body]
    return Code(q, n, words)
