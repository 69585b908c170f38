#!/usr/bin/env python3
"""Brute-force values for the fixtures, computed without the Rust library.

Sets are frozensets of attribute names; output uses canonical set order
(size, then declaration order)."""

from itertools import combinations

def subsets(u):
    for k in range(len(u) + 1):
        for c in combinations(u, k):
            yield frozenset(c)

def canon(u, sets):
    return sorted(sets, key=lambda s: (len(s), [u.index(x) for x in sorted(s, key=u.index)]))

def show(u, s):
    return " ".join(sorted(s, key=u.index)) or "{}"

def closure(pairs, x):
    cur = frozenset(x)
    while True:
        nxt = cur.union(*[r for l, r in pairs if l <= cur])
        if nxt == cur:
            return cur
        cur = nxt

def mu_table(u, pairs):
    return {s: closure(pairs, s) for s in subsets(u)}

def keys(u, t):
    return [s for s in subsets(u) if all(t[s - {p}] != t[s] for p in s)]

def span(sub, ground, x_pairs=None):
    return frozenset(p for p in ground if p[1] <= closure(sub, p[0]))

def independent(sub):
    return all(not (p[1] <= closure([q for q in sub if q != p], p[0])) for p in sub)

def e1():
    u = list("abcd")
    f = [(frozenset("a"), frozenset("b")), (frozenset("b"), frozenset("a")), (frozenset("ac"), frozenset("d"))]
    t = mu_table(u, f)
    print("E1 closed sets:", [show(u, c) for c in canon(u, {c for c in t.values()})])
    print("E1 keys of abcd:", [show(u, k) for k in canon(u, [k for k in keys(u, t) if t[k] == frozenset(u)])])
    print("E1 keys of ab:", [show(u, k) for k in canon(u, [k for k in keys(u, t) if t[k] == frozenset("ab")])])
    print("E1 all keys:", [show(u, k) for k in canon(u, keys(u, t))])
    ground = [(s, t[s]) for s in canon(u, t) if s != t[s]]
    print("E1 non-reflexive pairs of mu:", len(ground))
    bases = []
    for k in range(len(ground) + 1):
        for c in combinations(ground, k):
            if span(list(c), ground) == frozenset(ground) and independent(list(c)):
                bases.append(c)
    print("E1 bases:", [[f"{show(u,l)} -> {show(u,r)}" for l, r in b] for b in bases])
    ky = set(keys(u, t))
    conflicts = [p for p in ground if p[0] not in ky and any(p in b for b in bases)]
    print("E1 key-condition conflicts:", [f"{show(u,l)} -> {show(u,r)}" for l, r in conflicts])
    # span keys and the flat closure over them
    allsubs = [frozenset(c) for k in range(len(ground) + 1) for c in combinations(ground, k)]
    sp = {g: span(list(g), ground) for g in allsubs}
    hstar = {g for g in allsubs if all(sp[g - {p}] != sp[g] for p in g)}
    print("E1 span keys == independent:", hstar == {g for g in allsubs if independent(list(g))})
    full = frozenset(ground)
    images = {g | frozenset(p for p in full - g if (g | {p}) not in hstar) for g in hstar}
    def kap(g):
        out = full
        for d in images:
            if g <= d:
                out = out & d
        return out
    bad = [g for g in allsubs if kap(g) != sp[g]]
    print("E1 flat closure of span keys differs from span on", len(bad), "of", len(allsubs), "functions")
    extendable = {g for g in allsubs if any(g <= frozenset(b) for b in bases)}
    indep = {g for g in allsubs if independent(list(g))}
    print("E1 irredundant but in no basis:", len(indep - extendable), "; in a basis but redundant:", len(extendable - indep))

def flats(name, u, facets):
    h = {s for s in subsets(u) if any(s <= f for f in facets)}
    print(name, "members:", [show(u, s) for s in canon(u, h)])
    delta = {i: i | frozenset(p for p in u if (i | {p}) not in h) for i in h}
    print(name, "delta:", {show(u, i): show(u, d) for i, d in delta.items()})
    full = frozenset(u)
    def top(x):
        out = full
        for d in delta.values():
            if x <= d:
                out &= d
        return out
    dfun = [(i, d) for i, d in delta.items()]
    div = [x for x in canon(u, subsets(u)) if top(x) != closure(dfun, x)]
    print(name, "topdown:", {show(u, x): show(u, top(x)) for x in canon(u, subsets(u))})
    print(name, "bottomup:", {show(u, x): show(u, closure(dfun, x)) for x in canon(u, subsets(u))})
    print(name, "divergent:", [show(u, x) for x in div])
    t = {x: top(x) for x in subsets(u)}
    print(name, "keys of topdown == H:", set(keys(u, t)) == h)
    print(name, "delta != topdown on members:", [show(u, i) for i in canon(u, h) if delta[i] != t[i]])

if __name__ == "__main__":
    e1()
    flats("E3", list("ab"), [frozenset("a"), frozenset("b")])
    flats("E4", list("abc"), [frozenset("ab"), frozenset("c")])
