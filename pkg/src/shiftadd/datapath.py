"""Cycle-accurate models of the two shift-and-add multiplier datapaths.

Both datapaths compute the exact product of two n-bit unsigned words and
charge every switching event to a per-block ledger.  Shared accounting
rules:

* a clocked flip-flop costs ``s`` internal transitions per clock pulse,
  whether or not its output changes; removing pulses is what clock gating
  buys, so gated storage pays only for the pulses that get through;
* register data activity is the Hamming distance between consecutive
  register states;
* combinational blocks (adder, multiplexer) cost the Hamming distance
  between consecutive steady-state signal values.

The conventional datapath gates nothing: its multiplier, partial-product
and counter registers all pay the clock cost every cycle, on top of their
data activity.  The low-power datapath keeps the multiplier register
un-clocked, lets a gated ring counter pick the multiplier bit, and clocks
its feeder/bypass storage only on add cycles.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from enum import Enum

from .bits import Word
from .counters import RingCostModel, num_blocks

MAX_OPERAND_WIDTH = 32


class Variant(str, Enum):
    CONVENTIONAL = "conv"
    LOW_POWER = "lowpower"


@dataclass(frozen=True, slots=True)
class ArchConfig:
    """Architecture variant, operand width and cost parameters.

    ``effective_width`` is the number of multiplier bits processed (and thus
    the cycle count); it defaults to the full width.  Truncated runs compute
    ``a * (b mod 2**effective_width)``.
    """

    variant: Variant
    width: int
    cost: RingCostModel = RingCostModel()
    effective_width: int | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.width <= MAX_OPERAND_WIDTH:
            raise ValueError(f"width must be in 1..{MAX_OPERAND_WIDTH}, got {self.width}")
        if self.effective_width is None:
            object.__setattr__(self, "effective_width", self.width)
        if not 1 <= self.effective_width <= self.width:
            raise ValueError(
                f"effective_width {self.effective_width} out of range 1..{self.width}"
            )
        if self.cost.block_size > self.width:
            raise ValueError(
                f"block_size {self.cost.block_size} exceeds width {self.width}"
            )


def make_config(
    variant: Variant | str,
    width: int,
    *,
    s: int = 2,
    g: int = 1,
    block_size: int | None = None,
    effective_width: int | None = None,
) -> ArchConfig:
    """Build an ArchConfig with the default block size clamped to the width."""
    if block_size is None:
        block_size = min(4, width)
    return ArchConfig(
        Variant(variant), width, RingCostModel(s, g, block_size), effective_width
    )


@dataclass(slots=True)
class ToggleLedger:
    """Transition and clock-event counts per structural block."""

    multiplier_shift: int = 0
    partial_product_shift: int = 0
    adder: int = 0
    counter_internal: int = 0
    counter_output: int = 0
    mux_select: int = 0
    mux_data: int = 0
    feeder_bypass_clock: int = 0
    gating: int = 0

    def total(self) -> int:
        return sum(getattr(self, f.name) for f in fields(self))

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def add(self, other: ToggleLedger) -> None:
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))


LEDGER_CATEGORIES: tuple[str, ...] = tuple(f.name for f in fields(ToggleLedger))


@dataclass(frozen=True, slots=True)
class CycleTrace:
    """One simulated cycle: counter state, selected bit, and running values."""

    cycle: int
    counter_state: Word
    selected_bit: int
    adder_fired: bool
    running_sum: Word
    product_so_far: Word


@dataclass(frozen=True, slots=True)
class SimResult:
    product: Word
    ledger: ToggleLedger
    cycles: int
    trace: tuple[CycleTrace, ...] | None = None


def _check_operands(a: Word, b: Word, cfg: ArchConfig) -> None:
    if a.width != cfg.width or b.width != cfg.width:
        raise ValueError(
            f"operand widths ({a.width}, {b.width}) do not match config width {cfg.width}"
        )


def run_conventional(a: Word, b: Word, cfg: ArchConfig, *, trace: bool = False) -> SimResult:
    """Simulate the conventional datapath: shifting B, shifting partial
    product, binary cycle counter, 0/A multiplexer feeding the adder.

    Per cycle: the current LSB of B drives the mux select; the adder sums the
    partial product's high half with the mux output; the 2n+1-bit partial
    product register (carry, sum, low half) captures the result shifted right
    by one; B shifts right; the counter increments.  All three registers are
    clocked every cycle.
    """
    _check_operands(a, b, cfg)
    n = cfg.width
    e = cfg.effective_width
    s = cfg.cost.s
    mask_n = (1 << n) - 1
    counter_ffs = (n - 1).bit_length()

    # per-cycle clock charges for the ungated registers
    b_clock = n * s
    pp_clock = (2 * n + 1) * s
    counter_clock = counter_ffs * s

    reg_p = 0  # 2n+1-bit partial product register (carry : high : low)
    reg_b = b.value
    count = 0
    adder_sum = 0
    adder_carry = 0
    prev_select = 0
    prev_mux = 0

    multiplier_shift = partial_product_shift = adder = counter_internal = 0
    mux_select = mux_data = 0
    rows = [] if trace else None

    for i in range(e):
        select = reg_b & 1
        mux_select += select != prev_select
        prev_select = select
        mux_out = a.value if select else 0
        mux_data += (prev_mux ^ mux_out).bit_count()
        prev_mux = mux_out

        x = (reg_p >> n) & mask_n
        total = x + mux_out
        new_sum = total & mask_n
        cout = total >> n
        carry_ins = x ^ mux_out ^ new_sum
        new_carry = (carry_ins >> 1) | (cout << (n - 1))
        adder += (adder_sum ^ new_sum).bit_count() + (adder_carry ^ new_carry).bit_count()
        adder_sum, adder_carry = new_sum, new_carry

        new_p = ((cout << (2 * n)) | (new_sum << n) | (reg_p & mask_n)) >> 1
        partial_product_shift += (reg_p ^ new_p).bit_count() + pp_clock
        reg_p = new_p

        new_b = reg_b >> 1
        multiplier_shift += (reg_b ^ new_b).bit_count() + b_clock
        reg_b = new_b

        new_count = (count + 1) % n if n > 1 else 0
        counter_internal += (count ^ new_count).bit_count() + counter_clock
        count = new_count

        if trace:
            rows.append(
                CycleTrace(
                    cycle=i,
                    counter_state=Word(i % n, max(1, counter_ffs)),
                    selected_bit=select,
                    adder_fired=bool(select),
                    running_sum=Word((cout << n) | new_sum, n + 1),
                    product_so_far=Word(reg_p >> (n - i - 1), 2 * n),
                )
            )

    ledger = ToggleLedger(
        multiplier_shift=multiplier_shift,
        partial_product_shift=partial_product_shift,
        adder=adder,
        counter_internal=counter_internal,
        mux_select=mux_select,
        mux_data=mux_data,
    )
    product = Word(reg_p >> (n - e), 2 * n)
    return SimResult(product, ledger, e, tuple(rows) if trace else None)


def run_lowpower(a: Word, b: Word, cfg: ArchConfig, *, trace: bool = False) -> SimResult:
    """Simulate the low-power datapath: static B register, block-gated ring
    counter selecting the multiplier bit through a one-hot mux tree, and a
    feeder/bypass pair around the adder.

    Per cycle: the bit at the ring's hot position decides the path.  On a '1'
    the adder sums the running high part with A and the feeder captures
    (carry, sum), clocking n+1 flip-flops; on a '0' the bypass holds and only
    the gating latch switches.  The shift down to the next cycle's adder
    input is fixed wiring, and each cycle latches one product low bit.  B is
    never shifted or clocked, so ``multiplier_shift`` stays zero.
    """
    _check_operands(a, b, cfg)
    n = cfg.width
    e = cfg.effective_width
    s = cfg.cost.s
    g = cfg.cost.g
    bsz = cfg.cost.block_size
    mask_n = (1 << n) - 1
    blocks = num_blocks(n, bsz)
    output_toggles = 2 if n > 1 else 0

    pos = 0  # ring hot-bit position; reset state selects bit 0
    reg_fb = 0  # n+1-bit feeder/bypass storage (carry : sum)
    low_bits = 0
    adder_sum = 0
    adder_carry = 0
    prev_bit = 0

    partial_product_shift = adder = counter_internal = counter_output = 0
    mux_select = mux_data = feeder_bypass_clock = gating = 0
    rows = [] if trace else None

    for i in range(e):
        bit = (b.value >> pos) & 1
        mux_select += output_toggles
        mux_data += bit != prev_bit
        prev_bit = bit

        x = reg_fb >> 1  # wired shift: last cycle's (carry : sum) minus its LSB
        if bit:
            total = x + a.value
            new_sum = total & mask_n
            cout = total >> n
            carry_ins = x ^ a.value ^ new_sum
            new_carry = (carry_ins >> 1) | (cout << (n - 1))
            adder += (adder_sum ^ new_sum).bit_count() + (adder_carry ^ new_carry).bit_count()
            adder_sum, adder_carry = new_sum, new_carry
            pair = (cout << n) | new_sum
            feeder_bypass_clock += (n + 1) * s
        else:
            # adder inputs are frozen: zero transitions, state kept
            pair = x
            feeder_bypass_clock += g

        low_bits |= (pair & 1) << i
        partial_product_shift += (reg_fb ^ pair).bit_count()
        reg_fb = pair

        if trace:
            rows.append(
                CycleTrace(
                    cycle=i,
                    counter_state=Word(1 << pos, n),
                    selected_bit=bit,
                    adder_fired=bool(bit),
                    running_sum=Word(pair, n + 1),
                    product_so_far=Word(((pair >> 1) << (i + 1)) | low_bits, 2 * n),
                )
            )

        # ring advances at the end of the cycle; the reset state serves cycle 0
        nxt = (pos + 1) % n
        src, dst = pos // bsz, nxt // bsz
        events = min(bsz, n - src * bsz)
        if dst != src:
            events += min(bsz, n - dst * bsz)
        counter_internal += events * s
        gating += g * blocks
        counter_output += output_toggles
        pos = nxt

    ledger = ToggleLedger(
        partial_product_shift=partial_product_shift,
        adder=adder,
        counter_internal=counter_internal,
        counter_output=counter_output,
        mux_select=mux_select,
        mux_data=mux_data,
        feeder_bypass_clock=feeder_bypass_clock,
        gating=gating,
    )
    product = Word(((reg_fb >> 1) << e) | low_bits, 2 * n)
    return SimResult(product, ledger, e, tuple(rows) if trace else None)


def simulate(a: Word, b: Word, cfg: ArchConfig, *, trace: bool = False) -> SimResult:
    if cfg.variant is Variant.CONVENTIONAL:
        return run_conventional(a, b, cfg, trace=trace)
    return run_lowpower(a, b, cfg, trace=trace)


def render_trace(a: Word, b: Word, result: SimResult) -> str:
    """Plain-text multiplication table, one row per cycle.

    Each row shows the counter state, the selected multiplier bit, and the
    addend that bit produced (A on an add cycle, zeros on a bypass).
    """
    if result.trace is None:
        raise ValueError("result carries no trace; rerun with trace=True")
    n = a.width
    lines = [
        f"A -> {a.to_bin()}  ({a.value})",
        f"B -> {b.to_bin()}  ({b.value})",
        "-" * 44,
    ]
    for row in result.trace:
        addend = a if row.adder_fired else Word(0, n)
        lines.append(
            f"cycle {row.cycle}  [{row.counter_state.to_bin()}]  "
            f"B({row.cycle})={row.selected_bit}  {addend.to_bin()}"
        )
    lines.append("-" * 44)
    lines.append(f"Answer -> {result.product.to_bin()}  ({result.product.value})")
    return "\n".join(lines)
