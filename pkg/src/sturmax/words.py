"""Binary-word combinatorics: balance testing, mechanical words, alphabet reduction.

Finite words are plain ASCII strings over ``{'0', '1'}``; the empty string is
the empty word.  Eventually periodic infinite words are :class:`PeriodicWord`
values.  Slopes are :class:`fractions.Fraction` values in ``[0, 1]``.

Everything here is exact integer/rational arithmetic; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Optional, Union

__all__ = [
    "PeriodicWord",
    "AlphabetReduction",
    "AmplifierWords",
    "ones",
    "check_word",
    "as_slope",
    "format_slope",
    "parse_slope",
    "is_balanced",
    "unbalance_witness",
    "mechanical_word",
    "christoffel_cycle",
    "cyclic_is_balanced",
    "alphabet_reduce",
    "amplifier_words",
    "sturmian_deviation",
]

Word = str


def check_word(w: str) -> str:
    """Validate that ``w`` is a string over {0, 1} and return it."""
    if not isinstance(w, str) or any(ch not in "01" for ch in w):
        raise ValueError(f"not a binary word: {w!r}")
    return w


def ones(w: str) -> int:
    """Number of 1-letters in a finite word."""
    return w.count("1")


@dataclass(frozen=True)
class PeriodicWord:
    """The eventually periodic infinite word ``preperiod . cycle . cycle ...``.

    A PeriodicWord with empty preperiod is recurrent: every factor occurs
    infinitely often.
    """

    preperiod: str
    cycle: str

    def __post_init__(self) -> None:
        check_word(self.preperiod)
        check_word(self.cycle)
        if not self.cycle:
            raise ValueError("cycle must be non-empty")

    @classmethod
    def cycle_of(cls, cycle: str) -> "PeriodicWord":
        return cls("", cycle)

    @property
    def is_recurrent(self) -> bool:
        return not self.preperiod

    def prefix(self, n: int) -> str:
        """First ``n`` letters of the infinite expansion."""
        if n <= len(self.preperiod):
            return self.preperiod[:n]
        m = n - len(self.preperiod)
        reps = -(-m // len(self.cycle))
        return self.preperiod + (self.cycle * reps)[:m]

    def default_window(self) -> int:
        """Window length for finite balance/witness scans.

        An unbalanced periodic word exhibits a witness among factors no longer
        than its cycle, and every such factor appears within two consecutive
        cycle copies; the preperiod plus four cycles is a safe scan window.
        """
        return len(self.preperiod) + 4 * len(self.cycle)

    def __str__(self) -> str:
        return f"{self.preperiod}({self.cycle})^inf"


WordLike = Union[str, PeriodicWord]


def as_slope(value) -> Fraction:
    """Coerce ``value`` to an exact slope in [0, 1]."""
    f = Fraction(value)
    if not 0 <= f <= 1:
        raise ValueError(f"slope must lie in [0, 1]: {f}")
    return f


def format_slope(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def parse_slope(s: str) -> Fraction:
    return as_slope(Fraction(s))


def _expand(x: WordLike, horizon: Optional[int] = None) -> str:
    """Finite scan window for a word-like input."""
    if isinstance(x, PeriodicWord):
        if horizon is None:
            horizon = x.default_window()
        elif horizon < 2 * len(x.cycle) + len(x.preperiod):
            raise ValueError(
                "horizon too small: need at least preperiod + 2 cycles "
                f"({2 * len(x.cycle) + len(x.preperiod)}), got {horizon}"
            )
        return x.prefix(horizon)
    return check_word(x)


def _prefix_ones(w: str) -> list:
    acc = [0]
    for ch in w:
        acc.append(acc[-1] + (ch == "1"))
    return acc


def _is_balanced_str(w: str) -> bool:
    # Factor scan via per-length min/max of 1-counts; O(n^2) integer work.
    n = len(w)
    pre = _prefix_ones(w)
    for length in range(1, n):
        lo = hi = pre[length]
        for i in range(1, n - length + 1):
            c = pre[i + length] - pre[i]
            if c < lo:
                lo = c
            elif c > hi:
                hi = c
        if hi - lo > 1:
            return False
    return True


def is_balanced(x: WordLike, horizon: Optional[int] = None) -> bool:
    """True iff every two equal-length factors have 1-counts differing by <= 1.

    For a :class:`PeriodicWord` the scan runs over a finite window
    (``horizon`` letters, defaulting to :meth:`PeriodicWord.default_window`),
    which suffices to witness unbalancedness of an eventually periodic word.
    """
    return _is_balanced_str(_expand(x, horizon))


def unbalance_witness(x: WordLike) -> Optional[str]:
    """A word ``w`` with both ``0w0`` and ``1w1`` factors of ``x``, if any.

    Returns ``None`` iff ``x`` is balanced.  Among witnesses, the shortest is
    returned, ties broken lexicographically.
    """
    s = _expand(x)
    if _is_balanced_str(s):
        return None
    n = len(s)
    for wlen in range(0, n - 1):
        flen = wlen + 2
        zero_mid = set()
        one_mid = set()
        for i in range(0, n - flen + 1):
            f = s[i : i + flen]
            if f[0] == "0" and f[-1] == "0":
                zero_mid.add(f[1:-1])
            elif f[0] == "1" and f[-1] == "1":
                one_mid.add(f[1:-1])
        common = zero_mid & one_mid
        if common:
            return min(common)
    raise AssertionError(f"unbalanced word without witness: {s!r}")


def mechanical_word(alpha, n: int) -> str:
    """First ``n`` letters of the mechanical word of slope ``alpha``.

    Letter ``k`` is ``floor(k*alpha) - floor((k-1)*alpha)``, evaluated with
    exact rational arithmetic (floats are converted to their exact binary
    value first).
    """
    a = as_slope(alpha)
    if n < 0:
        raise ValueError("n must be non-negative")
    out = []
    prev = 0
    for k in range(1, n + 1):
        cur = floor(k * a)
        out.append("1" if cur - prev else "0")
        prev = cur
    return "".join(out)


def christoffel_cycle(slope) -> str:
    """The length-q cycle of the mechanical word of rational slope p/q."""
    f = as_slope(slope)
    return mechanical_word(f, f.denominator)


def cyclic_is_balanced(x: str) -> bool:
    """True iff the periodization ``x x x ...`` is balanced.

    Unbalancedness of a periodic word is witnessed by factors no longer than
    one period, so scanning all cyclic factors of length <= len(x) decides.
    """
    check_word(x)
    if not x:
        raise ValueError("x must be non-empty")
    n = len(x)
    pre = _prefix_ones(x + x)
    for length in range(1, n + 1):
        lo = hi = pre[length]
        for i in range(1, n):
            c = pre[i + length] - pre[i]
            if c < lo:
                lo = c
            elif c > hi:
                hi = c
        if hi - lo > 1:
            return False
    return True


@dataclass(frozen=True)
class ReductionStep:
    """One rewriting step {a, b} -> {a, ba} of the alphabet reduction."""

    kept: str      # the letter a whose square occurs
    absorbed: str  # the letter b (square absent) merged into ba
    witness: str   # the witness word before the step, over {0,1}


@dataclass(frozen=True)
class AlphabetReduction:
    """Result of reducing a periodic word to a two-letter super-alphabet.

    ``token_cycle`` spells one period of (a rotation of) the input over the
    new alphabet: '0' stands for ``u`` and '1' for ``v``.  Both ``uu`` and
    ``vv`` occur as cyclic factors of the reduced word.
    """

    u: str
    v: str
    token_cycle: str
    steps: tuple

    @property
    def iterations(self) -> int:
        return len(self.steps)

    def letters(self, tokens: str) -> str:
        """Spell a token string back into letters over {0,1}."""
        return "".join(self.u if t == "0" else self.v for t in tokens)


def _cyclic_contains(cycle: str, pattern: str) -> bool:
    if not pattern:
        return True
    reps = -(-len(pattern) // len(cycle)) + 1
    return pattern in cycle * reps


def _parse_blocks(tokens: str, a: str, b: str) -> str:
    """Parse a token string over {a, b} into blocks [a] and [b a].

    Returns the block string over {'0' -> block a, '1' -> block ba}.  Every b
    must be followed by an a inside ``tokens``.
    """
    out = []
    i = 0
    while i < len(tokens):
        if tokens[i] == a:
            out.append("0")
            i += 1
        else:
            if i + 1 >= len(tokens) or tokens[i + 1] != a:
                raise AssertionError("square-free letter not followed by its partner")
            out.append("1")
            i += 2
    return "".join(out)


def alphabet_reduce(s: PeriodicWord) -> AlphabetReduction:
    """Rewrite an unbalanced purely periodic word over a two-word alphabet.

    Returns distinct factors ``u``, ``v`` of ``s`` such that ``s`` is an
    infinite word over ``{u, v}`` and both ``uu`` and ``vv`` occur as cyclic
    factors.  Each rewriting step keeps the letter whose square occurs and
    absorbs the other, strictly shortening the unbalance witness.
    """
    if not s.is_recurrent:
        raise ValueError("alphabet_reduce needs an empty preperiod")
    x = s.cycle
    if cyclic_is_balanced(x):
        raise ValueError(f"balanced input: {s}")

    # Some rotation of the cycle is unbalanced as a finite word; start there.
    base = None
    for k in range(len(x)):
        rot = x[k:] + x[:k]
        if not _is_balanced_str(rot):
            base = rot
            break
    if base is None:
        raise AssertionError("unbalanced periodization with all rotations balanced")

    witness = unbalance_witness(base)
    assert witness is not None

    u, v = "0", "1"
    tokens = base         # token string over {'0','1'} spelling u/v
    wtokens = witness     # witness over the current tokens
    steps = []

    while True:
        # Token '0' plays u, '1' plays v; check cyclic squares in token space.
        has_uu = _cyclic_contains(tokens, "00")
        has_vv = _cyclic_contains(tokens, "11")
        if has_uu and has_vv:
            return AlphabetReduction(u, v, tokens, tuple(steps))
        if not has_vv:
            a_tok, b_tok = "0", "1"
            a_str, b_str = u, v
        else:
            a_tok, b_tok = "1", "0"
            a_str, b_str = v, u
        # The witness cannot be empty here (that would mean both squares occur)
        # and must start with the kept letter.
        assert wtokens and wtokens[0] == a_tok
        steps.append(ReductionStep(kept=a_str, absorbed=b_str,
                                   witness=_spell(wtokens, u, v)))
        # Rotate a leading kept-letter to the end so the cycle parses cleanly.
        if tokens[0] == a_tok:
            tokens = tokens[1:] + a_tok
        new_tokens = _parse_blocks(tokens, a_tok, b_tok)
        new_w = _parse_blocks(wtokens[1:], a_tok, b_tok)
        u, v = a_str, b_str + a_str
        tokens, wtokens = new_tokens, new_w


def _spell(tokens: str, u: str, v: str) -> str:
    return "".join(u if t == "0" else v for t in tokens)


@dataclass(frozen=True)
class AmplifierWords:
    """A factor ``w0`` of an unbalanced word and two same-weight competitors.

    All three words share length and 1-count; ``w1`` and ``w2`` are the
    swapped variants whose matrix products dominate ``w0`` in trace for every
    balanced pair.  ``u``, ``v`` are the reduced alphabet and ``p, q, m`` the
    block exponents: ``w0 = u v^(q+1) (uv)^m u^(p+1) v`` over {u, v}.
    """

    w0: str
    w1: str
    w2: str
    u: str
    v: str
    p: int
    q: int
    m: int


def _search_pattern(tokens: str, swap: bool):
    """Find minimal-length block exponents (p, q, m) in a cyclic token word."""
    n = len(tokens)
    cap = 4 * n + 8
    for total in range(6, cap + 1):
        for m in range(0, (total - 6) // 2 + 1):
            for p in range(1, total - 2 * m - 4 + 1):
                q = total - 4 - 2 * m - p
                if q < 1:
                    continue
                if swap:
                    pat = "1" + "0" * (q + 1) + "10" * m + "1" * (p + 1) + "0"
                else:
                    pat = "0" + "1" * (q + 1) + "01" * m + "0" * (p + 1) + "1"
                if _cyclic_contains(tokens, pat):
                    return p, q, m
    return None


def amplifier_words(s: PeriodicWord) -> AmplifierWords:
    """Build the trace-amplification word triple for an unbalanced periodic word.

    ``w0`` is a factor of ``s``; ``w1`` and ``w2`` permute its blocks without
    changing length or 1-count.  Raises ``ValueError`` on balanced input.
    """
    red = alphabet_reduce(s)
    u, v = red.u, red.v
    found = _search_pattern(red.token_cycle, swap=False)
    if found is None:
        # Mirrored block pattern: same construction with the roles of the two
        # super-letters exchanged.
        found = _search_pattern(red.token_cycle, swap=True)
        if found is None:
            raise AssertionError("no amplifier pattern in reduced cycle")
        q, p, m = found[0], found[1], found[2]
        u, v = v, u
        p, q = q, p
    else:
        p, q, m = found

    w0 = u + v * (q + 1) + (u + v) * m + u * (p + 1) + v
    w1 = v + u + v * q + (u + v) * m + u * p + v + u
    w2 = u + v + u * p + (v + u) * m + v * q + u + v

    window = s.prefix(s.default_window() + len(w0) + len(s.cycle))
    assert w0 in window, "amplifier root word must be a factor of the input"
    assert len(w0) == len(w1) == len(w2)
    assert ones(w0) == ones(w1) == ones(w2)
    assert 0 < ones(w0) < len(w0)
    return AmplifierWords(w0, w1, w2, u, v, p, q, m)


def sturmian_deviation(w: str, alpha) -> Fraction:
    """Max over factors ``f`` of ``w`` of ``|ones(f) - len(f)*alpha|``, exactly.

    Equals the spread of the drift sequence ``S_k - k*alpha`` over prefix
    1-counts ``S_k``, so the scan is linear in ``len(w)``.  Every factor of a
    mechanical word of slope ``alpha`` deviates by strictly less than 1.
    """
    check_word(w)
    a = Fraction(alpha)
    lo = hi = Fraction(0)
    drift = Fraction(0)
    for ch in w:
        drift += (1 - a) if ch == "1" else -a
        if drift < lo:
            lo = drift
        elif drift > hi:
            hi = drift
    return hi - lo
