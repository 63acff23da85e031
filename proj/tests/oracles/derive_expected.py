"""Independent reference computations for the expected values frozen into
the unit tests. Pure Python with exact fractions; shares no code with the
C++ library. Run: python3 derive_expected.py"""

from fractions import Fraction as F
from itertools import product
import math


def path_w(x, dislikes, y):
    if not dislikes:
        return max(x, 1 - x)
    return min(abs(x - y[j]) for j in dislikes)


def cycle_d(a, b):
    t = abs(a - b)
    return min(t, 1 - t)


def cycle_w(x, dislikes, y):
    if not dislikes:
        return F(1, 2)
    return min(cycle_d(x, y[j]) for j in dislikes)


def sw(agents, y, w=path_w):
    return sum(w(x, a, y) for x, a in agents)


def mw(agents, y, w=path_w):
    return min(w(x, a, y) for x, a in agents)


def grid(m):
    return [F(t, m) for t in range(m + 1)]


def phi(d, dp, y):
    """d, dp: dicts x -> gamma."""
    total = F(0)
    for x, g in d.items():
        gp = dp.get(x, F(0))
        total += abs(y - x) * (g - gp) + (1 + abs(x)) * gp
    return total


def brute_beta(d, y):
    """max over D' with gamma' in {0, gamma} and y' in {-1, 1}; inf on 0/0 > 0."""
    xs = sorted(d)
    best = None
    for mask in product([0, 1], repeat=len(xs)):
        dp = {x: d[x] for x, m in zip(xs, mask) if m}
        den = phi(d, dp, y)
        for yy in (-1, 1):
            num = phi(d, dp, F(yy))
            if den == 0:
                r = math.inf if num > 0 else F(1)
            else:
                r = num / den
            if best is None or r > best:
                best = r
    return best if best is not None else F(1)


def show(label, value):
    print(f"{label}: {value}")


if __name__ == "__main__":
    # core
    show("welfare x=1/2 {F1,F2} y=(1/5,3/5)", path_w(F(1, 2), [0, 1], [F(1, 5), F(3, 5)]))
    show("mw 1/5,4/5 at 1/2", mw([(F(1, 5), [0]), (F(4, 5), [0])], [F(1, 2)]))
    show("cycle d(1/10, 9/10)", cycle_d(F(1, 10), F(9, 10)))

    # utilitarian
    three = [(F(1, 10), [0]), (F(1, 2), [0]), (F(9, 10), [0])]
    show("mech2 three agents SW(0), SW(1)", (sw(three, [F(0)]), sw(three, [F(1)])))
    tight = [(F(0), [0]), (F(1), [1])]
    show("tightness SW over {0,1}^2", {y: sw(tight, list(y)) for y in product([F(0), F(1)], repeat=2)})
    show("tightness grid max 1/20", max(sw(tight, [a, b]) for a in grid(20) for b in grid(20)))
    xs = [F(1, 10), F(2, 10)]
    show("mech5 sums to 0 / to 1/2", (sum(cycle_d(x, 0) for x in xs), sum(cycle_d(x, F(1, 2)) for x in xs)))
    corners = [(0, 0), (0, 1), (1, 0), (1, 1)]
    pts = [(0, 0), (0, 1)]
    show("mech6 corner sums", {c: sum(math.dist(c, p) for p in pts) for c in corners})

    # fivethirds
    sym = {F(-1): F(1), F(1): F(1)}
    show("phi sym, {}, 0", phi(sym, {}, F(0)))
    show("phi sym, D>0, 1", phi(sym, {F(1): F(1)}, F(1)))
    show("beta sym at -1,0,1", [brute_beta(sym, F(y)) for y in (-1, 0, 1)])
    half = {F(-1, 2): F(1), F(1, 2): F(1)}
    show("beta half at -1,+1", [brute_beta(half, F(y)) for y in (-1, 1)])
    show("beta trivial (1/2,2) at -1", brute_beta({F(1, 2): F(2)}, F(-1)))
    show("beta {(-1/4,4),(1,1)} at 0", brute_beta({F(-1, 4): F(4), F(1): F(1)}, F(0)))
    show("beta {(-1/4,4),(1,1)} all", [brute_beta({F(-1, 4): F(4), F(1): F(1)}, F(y)) for y in (-1, 0, 1)])
    show("beta {(0,1)} all", [brute_beta({F(0): F(1)}, F(y)) for y in (-1, 0, 1)])
    show("beta {(1/2,3)} all", [brute_beta({F(1, 2): F(3)}, F(y)) for y in (-1, 0, 1)])

    # egalitarian
    show("mech7 haters 1/5,4/5: d1,d2,d3", (F(1, 5), (F(4, 5) - F(1, 5)) / 2, 1 - F(4, 5)))
    show("path mw oracle 1/5,4/5 grid 1/1000", max(mw([(F(1, 5), [0]), (F(4, 5), [0])], [y]) for y in grid(1000)))
    cyc = [(F(1, 4), [0]), (F(3, 4), [0])]
    show("cycle mw oracle 1/4,3/4 grid 1/1000",
         max(mw(cyc, [y], cycle_w) for y in grid(1000)[:-1]))
    show("mech9 midpoint 1/4..3/4", (F(1, 4) + F(3, 4)) / 2)
    show("square (1/2,1/2) best corner dist", math.dist((0, 0), (0.5, 0.5)))
    show("square (1/4,1/4) corner sq dists", {c: (c[0] - F(1, 4)) ** 2 + (c[1] - F(1, 4)) ** 2 for c in corners})
    par = [(F(1, 5), [0]), (F(4, 5), [1])]
    show("parallel single-hater rules", ("y1: hater 1/5 -> d1<d3 -> 1", "y2: hater 4/5 -> d1>=d3 -> 0"))

    # lower bounds, utilitarian: OPT' = max over a fine grid (k = 1)
    for n in (2, 4):
        a = [(F(0), [0]), (F(1), [0])] + [(F(1, 2), [0])] * n
        u = a + [(F(0), [0])] * (n - 1) + [(F(1), [])] * (n - 1)
        v = a + [(F(0), [])] * (n - 1) + [(F(1), [0])] * (n - 1)
        show(f"utilitarian n={n} OPT' OPT''", (max(sw(u, [y]) for y in grid(400)), max(sw(v, [y]) for y in grid(400))))
        show(f"utilitarian n={n} SW(I',y) y=0,1/2,1", [sw(u, [y]) for y in (F(0), F(1, 2), F(1))])
