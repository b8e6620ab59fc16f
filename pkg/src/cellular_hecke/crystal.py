"""
Crystal on tuples of 01-sequences over a finite integer window.

A vertex is an ell-tuple of bit strings indexed by the window; component i
carries a fixed number of ones. The operators f_j / e_j move a single one
from position j to j+1 (or back) in the component selected by the usual
signature rule: each component contributes '+' when its bits at (j, j+1)
read (1, 0), '-' for (0, 1); opposite adjacent pairs cancel; f_j acts on the
component of the first surviving '+', e_j on the last surviving '-'.

The reading order of the components is a parameter ("ltr" reads component 1
first, "rtl" reads component ell first). The shipped default is the one
whose reachable labels agree with the Gram-rank computation on the algebra
side; that agreement is an executed test, not an assumption.

Bit tuples are stored in the natural-module picture throughout; components
attached to a twist value of 1 are converted through the complement
identification only when translating to and from multipartitions (gamma).
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import Multipartition, is_partition

# pinned by the Gram-rank agreement test at (ell, r, omega) = (2, <=3, (0,1))
DEFAULT_ORIENTATION = "rtl"


@dataclass(frozen=True)
class Window:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty window")

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def positions(self) -> range:
        return range(self.lo, self.hi + 1)


@dataclass(frozen=True)
class ZeroOneTuple:
    window: Window
    bits: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for comp in self.bits:
            if len(comp) != self.window.size:
                raise ValueError("component length does not match window")
            if any(b not in (0, 1) for b in comp):
                raise ValueError("bits must be 0 or 1")

    @property
    def ell(self) -> int:
        return len(self.bits)

    def counts(self) -> tuple[int, ...]:
        return tuple(sum(comp) for comp in self.bits)

    def ones(self, i: int) -> tuple[int, ...]:
        """Window positions of the ones in component i (ascending)."""
        lo = self.window.lo
        return tuple(lo + k for k, b in enumerate(self.bits[i]) if b)

    def zeros(self, i: int) -> tuple[int, ...]:
        lo = self.window.lo
        return tuple(lo + k for k, b in enumerate(self.bits[i]) if not b)


def _component_order(ell: int, orientation: str) -> range:
    if orientation == "ltr":
        return range(ell)
    if orientation == "rtl":
        return range(ell - 1, -1, -1)
    raise ValueError(f"unknown orientation {orientation!r}")


def _signature(v: ZeroOneTuple, j: int,
               orientation: str) -> tuple[int | None, int | None]:
    """
    Indices of the component to lower (f) and to raise (e) for color j,
    after cancellation; None when the operator is undefined.
    """
    k = j - v.window.lo
    plus_stack: list[int] = []
    last_minus: int | None = None
    for i in _component_order(v.ell, orientation):
        a, b = v.bits[i][k], v.bits[i][k + 1]
        if (a, b) == (1, 0):
            plus_stack.append(i)
        elif (a, b) == (0, 1):
            if plus_stack:
                plus_stack.pop()
            else:
                last_minus = i
    f_comp = plus_stack[0] if plus_stack else None
    return f_comp, last_minus


def _flip(v: ZeroOneTuple, i: int, j: int, direction: int) -> ZeroOneTuple:
    k = j - v.window.lo
    comp = list(v.bits[i])
    if direction > 0:          # f: one moves j -> j+1
        comp[k], comp[k + 1] = 0, 1
    else:                      # e: one moves j+1 -> j
        comp[k], comp[k + 1] = 1, 0
    bits = list(v.bits)
    bits[i] = tuple(comp)
    return ZeroOneTuple(v.window, tuple(bits))


def crystal_f(v: ZeroOneTuple, j: int,
              orientation: str = DEFAULT_ORIENTATION) -> ZeroOneTuple | None:
    """Lowering operator of color j; None when undefined."""
    if not v.window.lo <= j < v.window.hi:
        raise ValueError(f"color {j} outside window")
    comp, _ = _signature(v, j, orientation)
    if comp is None:
        return None
    return _flip(v, comp, j, +1)


def crystal_e(v: ZeroOneTuple, j: int,
              orientation: str = DEFAULT_ORIENTATION) -> ZeroOneTuple | None:
    """Raising operator of color j; None when undefined."""
    if not v.window.lo <= j < v.window.hi:
        raise ValueError(f"color {j} outside window")
    _, comp = _signature(v, j, orientation)
    if comp is None:
        return None
    return _flip(v, comp, j, -1)


def ones_counts(omega: tuple[int, ...], window: Window,
                c: tuple[int, ...]) -> tuple[int, ...]:
    """
    Number of ones each component carries in the natural-module picture:
    n_i = omega_i - lo + 1 for twist 0, the complement size for twist 1.
    """
    n = tuple(w - window.lo + 1 for w in omega)
    if any(k < 1 for k in n):
        raise ValueError("window starts above some parameter")
    if any(k > window.size for k in n):
        raise ValueError("window too small for the parameters")
    return tuple(
        ni if ci == 0 else window.size - ni for ni, ci in zip(n, c)
    )


def empty_label(omega: tuple[int, ...], window: Window,
                c: tuple[int, ...]) -> ZeroOneTuple:
    """
    The vertex mapping to the empty multipartition: each component has its
    ones at the lowest window positions.
    """
    counts = ones_counts(omega, window, c)
    bits = tuple(
        tuple(1 if k < cnt else 0 for k in range(window.size))
        for cnt in counts
    )
    return ZeroOneTuple(window, bits)


def gamma(v: ZeroOneTuple, c: tuple[int, ...]) -> Multipartition:
    """
    Multipartition of a vertex: per component, the staircase-normalized
    one-positions (twist 0) or the negated zero-positions recovered through
    the complement identification (twist 1), minus the same data for the
    empty-label vertex.
    """
    if len(c) != v.ell:
        raise ValueError("twist sequence length mismatch")
    lo, size = v.window.lo, v.window.size
    out = []
    for i, ci in enumerate(c):
        if ci == 0:
            pos = v.ones(i)
            avec = tuple(reversed(pos))
            m = len(pos)
            ref = tuple(lo + m - 1 - k for k in range(m))
        else:
            pos = v.zeros(i)
            avec = tuple(-p for p in pos)
            m = len(pos)
            ref = tuple(-(lo + (size - m) + k) for k in range(m))
        part = tuple(a - b for a, b in zip(avec, ref))
        while part and part[-1] == 0:
            part = part[:-1]
        if not is_partition(part):
            raise ValueError(
                f"component {i} does not normalize to a partition: {part}"
            )
        out.append(part)
    return tuple(out)


def default_window(omega: tuple[int, ...], r: int) -> Window:
    """
    lo = min(omega) - r, so every component can host r rows (the label
    classification needs that much room), and hi = max(omega) + r + 1
    enlarged until the window holds at least twice the largest ones count.
    """
    lo = min(omega) - max(r, 1)
    hi = max(omega) + r + 1
    max_n = max(omega) - lo + 1
    hi = max(hi, lo + 2 * max_n - 1)
    return Window(lo, hi)


def component_of_empty(omega: tuple[int, ...], c: tuple[int, ...],
                       r_max: int, window: Window | None = None,
                       orientation: str = DEFAULT_ORIENTATION,
                       ) -> dict[ZeroOneTuple, int]:
    """
    Breadth-first closure of the empty-label vertex under all lowering
    operators, up to depth ``r_max``; maps each vertex to its depth.
    """
    if window is None:
        window = default_window(omega, r_max)
    start = empty_label(omega, window, c)
    seen: dict[ZeroOneTuple, int] = {start: 0}
    frontier = [start]
    for depth in range(1, r_max + 1):
        nxt = []
        for v in frontier:
            for j in range(window.lo, window.hi):
                w = crystal_f(v, j, orientation)
                if w is not None and w not in seen:
                    seen[w] = depth
                    nxt.append(w)
        frontier = nxt
    return seen


def crystal_edges(vertices: dict[ZeroOneTuple, int],
                  orientation: str = DEFAULT_ORIENTATION,
                  ) -> list[tuple[ZeroOneTuple, int, ZeroOneTuple]]:
    """All colored edges of the lowering graph within the given vertex set."""
    out = []
    for v in vertices:
        for j in range(v.window.lo, v.window.hi):
            w = crystal_f(v, j, orientation)
            if w is not None and w in vertices:
                out.append((v, j, w))
    return out


def nonzero_labels(omega: tuple[int, ...], r: int,
                   orientation: str = DEFAULT_ORIENTATION,
                   window: Window | None = None) -> set[Multipartition]:
    """
    Labels of the nonvanishing untwisted simple modules: images of the
    depth-r vertices of the empty-label component under gamma.
    """
    ell = len(omega)
    c0 = (0,) * ell
    seen = component_of_empty(omega, c0, r, window=window,
                              orientation=orientation)
    return {gamma(v, c0) for v, depth in seen.items() if depth == r}
