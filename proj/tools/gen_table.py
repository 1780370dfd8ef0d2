#!/usr/bin/env python3
"""Writes data/table.txt: named knots, every signed Gauss code with up to three
crossings (up to rotation), and seeded random codes with four to six crossings."""
import itertools
import random
import sys

NAMED = [
    ("unknot", "-"),
    ("kink", "O1+U1+"),
    ("virtual_trefoil", "O1+O2+U1+U2+"),
    ("trefoil", "O1+U2+O3+U1+O2+U3+"),
    ("figure_eight", "O1-U2-O3+U4+O2-U1-O4+U3+"),
    ("knot_3.7", "O1-U2-O3+U1-O2-U3+"),
]


def render(word, signs):
    return "".join(f"{'O' if o else 'U'}{l}{'+' if signs[l] > 0 else '-'}" for l, o in word)


def canonical(word, signs):
    relabel = {}
    for l, _ in word:
        relabel.setdefault(l, len(relabel) + 1)
    return render([(relabel[l], o) for l, o in word], {relabel[l]: s for l, s in signs.items()})


def rotation_class(word, signs):
    return min(canonical(word[k:] + word[:k], signs) for k in range(len(word)))


def patterns(n):
    def rec(seq, counts, nxt):
        if len(seq) == 2 * n:
            yield tuple(seq)
            return
        for l in range(1, nxt):
            if counts[l] < 2:
                counts[l] += 1
                yield from rec(seq + [l], counts, nxt)
                counts[l] -= 1
        if nxt <= n:
            counts[nxt] = 1
            yield from rec(seq + [nxt], counts, nxt + 1)
            counts[nxt] = 0

    yield from rec([], {}, 1)


def all_codes(n):
    seen = set()
    for pat in patterns(n):
        for overs in itertools.product([True, False], repeat=n):
            for sg in itertools.product([1, -1], repeat=n):
                signs = {l + 1: sg[l] for l in range(n)}
                first = set()
                word = []
                for l in pat:
                    o = overs[l - 1] if l not in first else not overs[l - 1]
                    first.add(l)
                    word.append((l, o))
                key = rotation_class(word, signs)
                if key not in seen:
                    seen.add(key)
                    yield render(word, signs)


def random_code(rng, n):
    labels = [l for l in range(1, n + 1) for _ in range(2)]
    rng.shuffle(labels)
    overs = {l: rng.random() < 0.5 for l in range(1, n + 1)}
    signs = {l: rng.choice([1, -1]) for l in range(1, n + 1)}
    first = set()
    word = []
    for l in labels:
        word.append((l, overs[l] if l not in first else not overs[l]))
        first.add(l)
    return canonical(word, signs)


def main():
    out = sys.stdout
    out.write("# name code\n")
    for name, code in NAMED:
        out.write(f"{name} {code}\n")
    for n in (1, 2, 3):
        for k, code in enumerate(all_codes(n), 1):
            out.write(f"c{n}_{k} {code}\n")
    rng = random.Random(20240607)
    for n in (4, 5, 6):
        for k in range(1, 21):
            out.write(f"r{n}_{k} {random_code(rng, n)}\n")


if __name__ == "__main__":
    main()
