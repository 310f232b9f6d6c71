"""Reference data: the small worked examples that the library regenerates.

Everything here is plain text so that it can be compared byte for byte with
what the constructions print.
"""
from __future__ import annotations

# Cycles of the length-6 complemented cycling register obtained by lifting
# the two length-3 cycles, grouped by the source they were lifted from.
CCR6_FROM_000111 = ("000000111111", "001001110110", "010010101101", "011011100100")
CCR6_FROM_01 = ("000010111101", "0011")
CCR12_PERIOD8 = ("00001111", "00101101")

# Ternary code of length 3: the three aligned tracks (read as columns), then
# for each track position the rows of the full 9 x 30 array.
TERNARY_TRACKS_ELL = 4
TERNARY_ARRAY = """\
001 001122222112200000220011111
011 011111001122222112200000220
000 000220011111001122222112200
112 112200000220011111001122222
122 122222112200000220011111001
111 111001122222112200000220011
220 220011111001122222112200000
200 200000220011111001122222112
222 222112200000220011111001122
"""

# Quaternary code of length 4: difference words (columns) and the tracks
# they generate (columns), aligned for the single-coordinate transitions.
QUATERNARY_DIFFS = """\
0012232331111100
1111001120021123
0222333322130332
0210033222333000
"""

QUATERNARY_TRACKS = """\
0032211000000000
0000003331111100
1111000011132223
1333333333222111
1103322111111111
1111110002222211
2222111122203330
2000000000333222
2210033222222222
2222221113333322
3333222233310001
3111111111000333
3321100333333333
3333332220000033
0000333300021112
0222222222111000
"""


def columns(table: str) -> list[tuple[int, ...]]:
    """Read a digit table column by column, ignoring whitespace inside rows."""
    rows = ["".join(line.split()) for line in table.splitlines() if line.strip()]
    return [tuple(int(r[c]) for r in rows) for c in range(len(rows[0]))]


def render_columns(cols, group: int | None = None) -> str:
    """Inverse of :func:`columns`; ``group`` inserts a space every ``group`` columns."""
    out = []
    for r in range(len(cols[0])):
        digits = [str(c[r]) for c in cols]
        if group:
            digits = [" " * (j > 0 and j % group == 0) + d for j, d in enumerate(digits)]
        out.append("".join(digits))
    return "\n".join(out) + "\n"
