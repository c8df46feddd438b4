#!/usr/bin/env python3
"""Derive multiplication tables for the catalog presentations.

Bounded congruence closure over all words up to a fixed length, followed by
a check that the classes of the expected normal forms are closed under
multiplication and associative. Writes NAME.table next to each NAME.pres.
The Brandt monoid is computed from 2x2 matrix units.
"""

import itertools
import re
import sys
from pathlib import Path

ZERO = "0"


def parse_word(text, gens):
    out = []
    for tok in text.split():
        m = re.fullmatch(r"([a-z])(?:\^(\d+))?", tok)
        if not m:
            raise ValueError(f"bad token {tok!r}")
        if m.group(1) not in gens:
            raise ValueError(f"unknown generator {m.group(1)!r}")
        out.extend(m.group(1) * int(m.group(2) or 1))
    return "".join(out)


def parse_pres(path):
    gens, rels, expect = [], [], []
    for raw in path.read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("generators"):
            gens = line.split()[1:]
        elif line.startswith("expect"):
            expect = line.split()[1:]
        else:
            lhs, rhs = (s.strip() for s in line.split("="))
            rels.append((parse_word(lhs, gens), ZERO if rhs == "0" else parse_word(rhs, gens)))
    return gens, rels, expect


def label_word(label):
    """Run-length label such as ba2 to the word baa."""
    return "".join(c * int(n or 1) for c, n in re.findall(r"([a-z])(\d*)", label))


class UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)
            return True
        return False


def closure(gens, rels, bound):
    words = [""]
    for n in range(1, bound + 1):
        words.extend("".join(p) for p in itertools.product(gens, repeat=n))
    uf = UnionFind()
    uf.find(ZERO)
    for w in words:
        uf.find(w)
    changed = True
    while changed:
        changed = False
        for w in words:
            for lhs, rhs in rels:
                start = w.find(lhs)
                while start != -1:
                    if rhs == ZERO:
                        changed |= uf.union(w, ZERO)
                    else:
                        v = w[:start] + rhs + w[start + len(lhs):]
                        if len(v) <= bound:
                            changed |= uf.union(w, v)
                    start = w.find(lhs, start + 1)
        classes = {}
        for w in words:
            classes.setdefault(uf.find(w), []).append(w)
        zero_root = uf.find(ZERO)
        for members in classes.values():
            for g in gens:
                images = [m + g for m in members if len(m) < bound]
                images += [g + m for m in members if len(m) < bound]
                if not images:
                    continue
                if uf.find(members[0]) == zero_root:
                    for x in images:
                        changed |= uf.union(x, ZERO)
            for a, b in zip(members, members[1:]):
                if len(a) < bound and len(b) < bound:
                    for g in gens:
                        changed |= uf.union(a + g, b + g)
                        changed |= uf.union(g + a, g + b)
    return uf


def table_from_presentation(path, bound):
    gens, rels, expect = parse_pres(path)
    uf = closure(gens, rels, bound)
    reps = {}
    for label in expect:
        if label == "0":
            reps[label] = ZERO
        elif label == "1":
            reps[label] = ""
        else:
            reps[label] = label_word(label)
    roots = [uf.find(reps[label]) for label in expect]
    if len(set(roots)) != len(roots):
        raise SystemExit(f"{path.name}: expected elements collapse")
    index = {root: i for i, root in enumerate(roots)}
    table = []
    for a in expect:
        row = []
        for b in expect:
            if ZERO in (reps[a], reps[b]):
                product = ZERO
            else:
                product = reps[a] + reps[b]
            root = uf.find(product)
            if root not in index:
                raise SystemExit(f"{path.name}: product {a}*{b} is not an expected element")
            row.append(index[root])
        table.append(row)
    return expect, table


def brandt():
    zero = ((0, 0), (0, 0))
    mats = [zero, ((1, 0), (0, 0)), ((0, 1), (0, 0)), ((0, 0), (1, 0)), ((0, 0), (0, 1)), ((1, 0), (0, 1))]
    names = ["0", "e11", "e12", "e21", "e22", "1"]

    def mul(x, y):
        return tuple(tuple(sum(x[i][k] * y[k][j] for k in range(2)) for j in range(2)) for i in range(2))

    table = [[mats.index(mul(x, y)) for y in mats] for x in mats]
    return names, table


def check(names, table):
    n = len(names)
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise SystemExit(f"not associative at {names[a]} {names[b]} {names[c]}")


def write_table(path, names, table):
    lines = [f"order {len(names)}", f"identity {names.index('1')}", "names " + " ".join(names), "table"]
    lines += [" ".join(str(x) for x in row) for row in table]
    path.write_text("\n".join(lines) + "\n")


def main(argv):
    directory = Path(argv[1]) if len(argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "catalog"
    names, table = brandt()
    check(names, table)
    write_table(directory / "B.table", names, table)
    for pres in sorted(directory.glob("*.pres")):
        names, table = table_from_presentation(pres, bound=7)
        check(names, table)
        write_table(pres.with_suffix(".table"), names, table)
        print(f"{pres.stem}: order {len(names)}")


if __name__ == "__main__":
    main(sys.argv)
