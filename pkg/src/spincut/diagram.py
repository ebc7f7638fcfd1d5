"""ASCII multiplicity diagrams: signed multiplicities above a ticked axis."""

from __future__ import annotations

from .laurent import VirtualCharacter


def render_diagram(char: VirtualCharacter) -> list[str]:
    """Two rows: multiplicities with explicit signs, then integer tick labels.

    Ticks run from one below the support to one above it (around 0 for the
    zero character, whose multiplicity row is empty).  Columns share a fixed
    width, one space wider than the longest label, so every multiplicity
    lines up over its weight.
    """
    support = char.support()
    if support:
        ticks = list(range(support[0] - 1, support[-1] + 2))
    else:
        ticks = [-1, 0, 1]
    mults = {w: format(char.multiplicity(w), "+d") for w in support}
    labels = [str(t) for t in ticks] + list(mults.values())
    width = 1 + max(len(text) for text in labels)
    mult_row = "".join(mults.get(t, "").rjust(width) for t in ticks).rstrip()
    axis_row = "".join(str(t).rjust(width) for t in ticks)
    return [mult_row, axis_row]
