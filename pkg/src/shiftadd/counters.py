"""Counter models: binary counter, plain one-hot ring, and block-gated ring.

Clock accounting convention: each flip-flop that receives a clock pulse
raises ``s`` internal transitions whether or not its output changes; output
toggles are counted separately.  Step functions return raw flip-flop clock
event counts, leaving the multiplication by ``s`` to the caller.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bits import Word, get_bit, hamming


@dataclass(frozen=True, slots=True)
class RingCostModel:
    """Clocking cost parameters.

    ``s``: internal transitions per clocked flip-flop per pulse.
    ``g``: transitions in one block's clock-gating logic per pulse.
    ``block_size``: flip-flops per gated block of the low-power ring.
    """

    s: int = 2
    g: int = 1
    block_size: int = 4

    def __post_init__(self) -> None:
        if self.s < 1:
            raise ValueError("s must be >= 1")
        if self.g < 0:
            raise ValueError("g must be >= 0")
        if self.block_size < 1:
            raise ValueError("block_size must be >= 1")


@dataclass(frozen=True, slots=True)
class BinaryCounter:
    """A modulo-``modulus`` up counter over ceil(log2(modulus)) flip-flops."""

    state: Word
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        if self.state.value >= self.modulus:
            raise ValueError(f"state {self.state.value} out of range for modulus {self.modulus}")

    @classmethod
    def start(cls, modulus: int) -> BinaryCounter:
        width = max(1, (modulus - 1).bit_length())
        return cls(Word(0, width), modulus)


def binary_counter_step(c: BinaryCounter) -> tuple[BinaryCounter, int]:
    """Increment (wrapping at the modulus); toggles = changed state bits."""
    nxt = Word((c.state.value + 1) % c.modulus, c.state.width)
    return BinaryCounter(nxt, c.modulus), hamming(c.state, nxt)


@dataclass(frozen=True, slots=True)
class RingState:
    """One-hot ring counter state; exactly one bit is set."""

    state: Word
    position: int

    def __post_init__(self) -> None:
        if self.state.value.bit_count() != 1:
            raise ValueError(f"ring state {self.state.to_bin()} is not one-hot")
        if self.state.value != 1 << self.position:
            raise ValueError(f"position {self.position} does not match state {self.state.to_bin()}")

    @classmethod
    def start(cls, width: int) -> RingState:
        """Reset state: hot bit at position 0."""
        return cls(Word(1, width), 0)


def _rotated(r: RingState) -> RingState:
    n = r.state.width
    nxt = (r.position + 1) % n
    return RingState(Word(1 << nxt, n), nxt)


def ring_conventional_step(r: RingState, cost: RingCostModel) -> tuple[RingState, int, int]:
    """One step of an ungated ring: every flip-flop is clocked.

    Returns ``(next_state, clock_events, output_toggles)`` with
    ``clock_events == n``.  Each event costs ``cost.s`` internal transitions.
    """
    nxt = _rotated(r)
    return nxt, r.state.width, hamming(r.state, nxt.state)


def unnecessary_ring_transitions(width: int, cost: RingCostModel) -> int:
    """Internal transitions per pulse spent on flip-flops that need no clock.

    Only the two flip-flops around the hot bit have to be clocked; the other
    ``width - 2`` are clocked for nothing, at ``s`` transitions apiece.
    """
    return (width - 2) * cost.s


def num_blocks(width: int, block_size: int) -> int:
    return -(-width // block_size)


def _block_ff_count(width: int, block_size: int, block: int) -> int:
    # the trailing block may be smaller when block_size does not divide width
    return min(block_size, width - block * block_size)


def ring_lowpower_step(
    r: RingState, cost: RingCostModel
) -> tuple[RingState, int, int, int]:
    """One step of the block-clock-gated ring.

    Only the block holding the hot bit is clocked; when the hot bit crosses a
    block boundary both source and destination blocks are clocked.  Every
    block's gate re-evaluates each pulse, costing ``g`` apiece.

    Returns ``(next_state, clock_events, gating_transitions, output_toggles)``.
    """
    n = r.state.width
    b = cost.block_size
    if b > n:
        raise ValueError(f"block_size {b} exceeds ring width {n}")
    nxt = _rotated(r)
    src, dst = r.position // b, nxt.position // b
    events = _block_ff_count(n, b, src)
    if dst != src:
        events += _block_ff_count(n, b, dst)
    gating = cost.g * num_blocks(n, b)
    return nxt, events, gating, hamming(r.state, nxt.state)


def hot_one_select(sel: RingState, data: Word) -> int:
    """The data bit at the hot position: one-hot state ``1 << i`` picks bit i."""
    if sel.state.width != data.width:
        raise ValueError(f"width mismatch: sel={sel.state.width} data={data.width}")
    return get_bit(data, sel.position)
