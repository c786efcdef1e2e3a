"""Permutation group engine.

Groups are given by generator permutations on {0..degree-1}.  Permutations are
numpy arrays (uint8 for degree <= 255, else uint16); composition is fancy
indexing, (p o q)(i) = p[q(i)], so q is applied first.

Provides exact order via a deterministic stabilizer chain, conjugacy class
enumeration by conjugation closure over an exhaustive element stream, p-part
decomposition, class counts, power maps on classes, the Galois fixed-class
count, and quotient groups by coset action.
"""

import hashlib
from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm

import numpy as np

from .numtheory import p_part

DEFAULT_CLASS_CAP = 3_000_000
EXTENDED_CLASS_CAP = 20_000_000
COMPACT_CAP = 400_000  # below this, elements are stored exactly (no hashing)
INDEX_CAP = 3_000_000  # below this, a full element -> class index is kept


class ResourceLimitError(RuntimeError):
    """An enumeration cap was exceeded."""


class ConsistencyError(RuntimeError):
    """An internal exact cross-check failed; results must not be trusted."""


# ---------------------------------------------------------------------------
# permutation primitives
# ---------------------------------------------------------------------------

def perm_dtype(degree: int):
    return np.uint8 if degree <= 255 else np.uint16


def identity_perm(degree: int) -> np.ndarray:
    return np.arange(degree, dtype=perm_dtype(degree))


def as_perm(images, degree: int | None = None) -> np.ndarray:
    arr = np.asarray(images)
    n = degree if degree is not None else len(arr)
    out = np.array(arr, dtype=perm_dtype(n))
    if sorted(out.tolist()) != list(range(n)):
        raise ValueError("not a permutation of 0..n-1")
    return out


def perm_from_cycles(cycles, degree: int) -> np.ndarray:
    p = identity_perm(degree).copy()
    for cycle in cycles:
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            p[a] = b
    if sorted(p.tolist()) != list(range(degree)):
        raise ValueError("cycles overlap or exceed degree")
    return p


def compose(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """p o q: apply q first, then p."""
    return p[q]


def inverse(p: np.ndarray) -> np.ndarray:
    inv = np.empty_like(p)
    inv[p] = np.arange(len(p), dtype=p.dtype)
    return inv


def conjugate(g: np.ndarray, x: np.ndarray, ginv: np.ndarray) -> np.ndarray:
    """g o x o g^-1."""
    return g[x[ginv]]


def perm_power(p: np.ndarray, k: int) -> np.ndarray:
    if k < 0:
        return perm_power(inverse(p), -k)
    result = identity_perm(len(p))
    base = p
    while k:
        if k & 1:
            result = base[result]
        base = base[base]
        k >>= 1
    return result


def perm_order(p: np.ndarray) -> int:
    order = 1
    seen = np.zeros(len(p), dtype=bool)
    images = p.tolist()
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = images[j]
            length += 1
        order = lcm(order, length)
    return order


def is_identity(p: np.ndarray) -> bool:
    return bool((p == np.arange(len(p), dtype=p.dtype)).all())


def perm_key(p: np.ndarray) -> bytes:
    """Dedup/dictionary key (byte string, dtype-native)."""
    return p.tobytes()


def lex_key(p: np.ndarray) -> bytes:
    """Byte string whose lexicographic order equals image-tuple order."""
    if p.dtype == np.uint8:
        return p.tobytes()
    return p.astype(">u2").tobytes()


def hash128(key: bytes) -> int:
    return int.from_bytes(hashlib.blake2b(key, digest_size=16).digest(), "little")


# ---------------------------------------------------------------------------
# stabilizer chain (deterministic Schreier-Sims)
# ---------------------------------------------------------------------------

class StabilizerChain:
    """Base, strong generators and transversals; base points are always the
    smallest moved points available, so the chain is deterministic."""

    def __init__(self, generators, degree: int):
        self.degree = degree
        self.base: list[int] = []
        self.level_gens: list[list[np.ndarray]] = []
        self._gen_keys: set[bytes] = set()
        self.transversals: list[dict[int, np.ndarray]] = []
        for g in generators:
            if not is_identity(g):
                self._register(g, 0)
        # close all levels to a fixpoint: at the end every orbit is closed
        # under all applicable strong generators and every Schreier generator
        # sifts to the identity, which is exactly the chain condition
        changed = True
        while changed:
            changed = False
            for level in range(len(self.base)):
                changed |= self._close_level(level)

    def strip(self, g: np.ndarray):
        for i, b in enumerate(self.base):
            x = int(g[b])
            t = self.transversals[i].get(x)
            if t is None:
                return g, i
            g = compose(inverse(t), g)
        return g, len(self.base)

    def _fixed_level(self, g: np.ndarray) -> int:
        """Number of leading base points fixed by g."""
        for i, b in enumerate(self.base):
            if int(g[b]) != b:
                return i
        return len(self.base)

    def _register(self, g: np.ndarray, level: int) -> bool:
        """Record g as a strong generator at the deepest level whose leading
        base points it fixes (creating a new level if it fixes all of them)."""
        key = perm_key(g)
        if key in self._gen_keys:
            return False
        self._gen_keys.add(key)
        at = self._fixed_level(g)
        if at < level:
            raise ConsistencyError("sifted element moves an earlier base point")
        if at == len(self.base):
            moved = np.nonzero(g != np.arange(self.degree, dtype=g.dtype))[0]
            b = int(moved[0])
            self.base.append(b)
            self.level_gens.append([])
            self.transversals.append({b: identity_perm(self.degree)})
        self.level_gens[at].append(g)
        return True

    def _gens_from(self, level: int):
        """All strong generators fixing base[:level]."""
        return [g for lvl in range(level, len(self.base))
                for g in self.level_gens[lvl]]

    def _close_level(self, level: int) -> bool:
        """Recompute the orbit at `level` and sift all Schreier generators.
        Returns True if anything changed."""
        b = self.base[level]
        gens = self._gens_from(level)
        transversal = {b: identity_perm(self.degree)}
        frontier = [b]
        while frontier:
            new_frontier = []
            for x in frontier:
                tx = transversal[x]
                for s in gens:
                    y = int(s[x])
                    if y not in transversal:
                        transversal[y] = compose(s, tx)
                        new_frontier.append(y)
            frontier = new_frontier
        changed = len(transversal) != len(self.transversals[level])
        self.transversals[level] = transversal
        # Schreier generators: t_{s(x)}^-1 s t_x, all of which fix base[:level+1]
        for x in sorted(transversal):
            tx = transversal[x]
            for s in gens:
                sg = compose(inverse(transversal[int(s[x])]), compose(s, tx))
                residue, _ = self.strip(sg)
                if not is_identity(residue):
                    changed |= self._register(residue, level + 1)
        return changed

    @property
    def order(self) -> int:
        return reduce(lambda a, t: a * len(t), self.transversals, 1)

    def contains(self, g: np.ndarray) -> bool:
        if len(g) != self.degree:
            return False
        residue, level = self.strip(g)
        return level == len(self.base) and is_identity(residue)

    def elements(self):
        """Every group element exactly once, deterministically."""
        sorted_transversals = [
            [t for _, t in sorted(tr.items())] for tr in self.transversals
        ]

        def rec(level):
            if level == len(sorted_transversals):
                yield identity_perm(self.degree)
                return
            for h in rec(level + 1):
                for t in sorted_transversals[level]:
                    yield compose(t, h)

        if not sorted_transversals:
            yield identity_perm(self.degree)
            return
        yield from rec(0)

    def random_element(self, rng) -> np.ndarray:
        g = identity_perm(self.degree)
        for tr in self.transversals:
            keys = sorted(tr)
            g = compose(g, tr[keys[rng.randrange(len(keys))]])
        return g


# ---------------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------------

class PermGroup:
    def __init__(self, degree: int, generators, name: str | None = None):
        if degree < 1 or degree > 1 << 16:
            raise ValueError("degree out of range")
        self.degree = degree
        gens = []
        seen = set()
        for g in generators:
            arr = as_perm(g, degree)
            k = perm_key(arr)
            if k not in seen and not is_identity(arr):
                seen.add(k)
                gens.append(arr)
        self.generators = gens
        self.name = name or f"group(deg={degree})"
        self._chain: StabilizerChain | None = None

    def __repr__(self):
        return f"PermGroup({self.name}, degree={self.degree})"

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.generators, self.degree)
        return self._chain

    @property
    def order(self) -> int:
        return self.chain.order

    def contains(self, g) -> bool:
        return self.chain.contains(as_perm(g, self.degree))

    def elements(self):
        return self.chain.elements()

    def random_element(self, rng) -> np.ndarray:
        return self.chain.random_element(rng)

    def identity(self) -> np.ndarray:
        return identity_perm(self.degree)

    def normalized_by(self, c) -> bool:
        """True iff conjugation by c maps every generator into the group."""
        c = as_perm(c, self.degree)
        cinv = inverse(c)
        return all(self.contains(conjugate(c, g, cinv)) for g in self.generators)

    def orbits_on_points(self) -> list[list[int]]:
        seen = [False] * self.degree
        orbits = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            frontier = [start]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in self.generators:
                        y = int(g[x])
                        if not seen[y]:
                            seen[y] = True
                            orbit.append(y)
                            nxt.append(y)
                frontier = nxt
            orbits.append(sorted(orbit))
        return orbits


# ---------------------------------------------------------------------------
# conjugacy classes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConjugacyClass:
    rep: np.ndarray  # lexicographically least member
    size: int
    order: int


class ClassTable:
    """Canonical conjugacy class list.

    Classes sorted by (element order, class size, lex-least representative);
    the identity class is index 0.  `class_of` locates the class of an
    arbitrary group element; the lookup strategy depends on group size
    (exact map, hashed map, or closure search).
    """

    def __init__(self, group: PermGroup, classes: list[ConjugacyClass],
                 index: dict | None, index_kind: str):
        self.group = group
        self.classes = classes
        self.exponent = reduce(lcm, (c.order for c in classes), 1)
        self._index = index
        self._index_kind = index_kind  # 'exact' | 'hashed' | 'search'
        self._lexrep_to_id = {lex_key(c.rep): i for i, c in enumerate(classes)}
        self._gen_pairs = [(g, inverse(g)) for g in group.generators]

    def __len__(self):
        return len(self.classes)

    @property
    def sizes(self):
        return [c.size for c in self.classes]

    @property
    def orders(self):
        return [c.order for c in self.classes]

    def class_of(self, x) -> int:
        if not isinstance(x, np.ndarray):
            x = as_perm(x, self.group.degree)
        if self._index_kind == "exact":
            cid = self._index.get(perm_key(x))
        elif self._index_kind == "hashed":
            cid = self._index.get(hash128(perm_key(x)))
        else:
            cid = self._search_class(x)
        if cid is None:
            raise ValueError("element not in the enumerated group")
        return cid

    def _search_class(self, x: np.ndarray) -> int | None:
        """Conjugation closure from x, tracking the lex-least member, until
        the closure completes; match against the canonical representatives."""
        best = lex_key(x)
        seen = {hash128(perm_key(x))}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g, ginv in self._gen_pairs:
                    z = conjugate(g, y, ginv)
                    h = hash128(perm_key(z))
                    if h not in seen:
                        seen.add(h)
                        nxt.append(z)
                        k = lex_key(z)
                        if k < best:
                            best = k
            frontier = nxt
        return self._lexrep_to_id.get(best)


def conjugacy_classes(group: PermGroup, cap: int = DEFAULT_CLASS_CAP) -> ClassTable:
    """Enumerate the conjugacy classes of `group`.

    Every element is streamed exactly once from the stabilizer chain; each
    yet-unclassified element seeds a breadth-first conjugation closure that
    collects its whole class.  Below COMPACT_CAP elements are stored exactly;
    above it only 128-bit hashes are kept, and the exact class equation
    (sizes summing to |G|) is verified at the end, which detects any hash
    collision (a collision can only lose elements, never add them).
    """
    n = group.order
    if n > cap:
        raise ResourceLimitError(
            f"group order {n} exceeds enumeration cap {cap}")
    compact = n <= COMPACT_CAP
    keep_index = n <= INDEX_CAP
    key_of = perm_key if compact else (lambda p: hash128(perm_key(p)))

    assigned: dict = {}  # key -> provisional class id (dict even in set-mode)
    found = []  # (lex-min rep array, size, order)
    gen_pairs = [(g, inverse(g)) for g in group.generators]

    for g in group.elements():
        k = key_of(g)
        if k in assigned:
            continue
        cid = len(found)
        assigned[k] = cid
        best = g
        best_key = lex_key(g)
        size = 1
        frontier = [g]
        while frontier:
            nxt = []
            for x in frontier:
                for s, sinv in gen_pairs:
                    y = conjugate(s, x, sinv)
                    ky = key_of(y)
                    if ky not in assigned:
                        assigned[ky] = cid
                        size += 1
                        nxt.append(y)
                        lk = lex_key(y)
                        if lk < best_key:
                            best_key = lk
                            best = y
            frontier = nxt
        found.append((best, size, perm_order(best)))

    total = sum(size for _, size, _ in found)
    if total != n:
        raise ConsistencyError(
            f"class sizes sum to {total}, group order is {n} "
            "(possible hash collision); aborting")
    for _, size, _ in found:
        if n % size:
            raise ConsistencyError("class size does not divide group order")

    # canonical order: (element order, class size, lex-least representative)
    perm_sort = sorted(range(len(found)),
                       key=lambda i: (found[i][2], found[i][1], lex_key(found[i][0])))
    classes = [ConjugacyClass(rep=found[i][0], size=found[i][1], order=found[i][2])
               for i in perm_sort]
    if classes[0].order != 1 or classes[0].size != 1:
        raise ConsistencyError("identity class is not first")

    if keep_index:
        remap = {old: new for new, old in enumerate(perm_sort)}
        index = {k: remap[v] for k, v in assigned.items()}
        kind = "exact" if compact else "hashed"
    else:
        index = None
        kind = "search"
    return ClassTable(group, classes, index, kind)


# ---------------------------------------------------------------------------
# p-parts, class counts, power maps
# ---------------------------------------------------------------------------

def p_part_split(g: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Write g = g_p o g_{p'} with commuting factors of p-power and
    p'-order; both are powers of g (CRT on the exponent)."""
    m = perm_order(g)
    mp = p_part(m, p)
    mpp = m // mp
    if mp == 1:
        return identity_perm(len(g)), g
    if mpp == 1:
        return g, identity_perm(len(g))
    a = pow(mpp, -1, mp)
    b = pow(mp, -1, mpp)
    return perm_power(g, a * mpp), perm_power(g, b * mp)


@dataclass(frozen=True)
class ClassCounts:
    p: int
    k: int
    k_p: int
    k_p_prime: int


def class_counts(table: ClassTable, p: int) -> ClassCounts:
    """k_p = classes of nontrivial p-elements, k_{p'} = p-regular classes."""
    k_p = 0
    k_pp = 0
    for c in table.classes:
        if c.order % p == 0:
            if p_part(c.order, p) == c.order and c.order > 1:
                k_p += 1
        else:
            k_pp += 1
    return ClassCounts(p=p, k=len(table.classes), k_p=k_p, k_p_prime=k_pp)


def power_class_map(table: ClassTable, k: int) -> list[int]:
    """The permutation of class indices induced by g -> g^k."""
    e = table.exponent
    if gcd(k, e) != 1:
        raise ValueError(f"k={k} is not coprime to the exponent {e}")
    return [table.class_of(perm_power(c.rep, k)) for c in table.classes]


def galois_fixed_class_count(table: ClassTable, p: int) -> int:
    """Number of classes fixed by a Galois element sigma_k with k = 1 mod the
    p'-part of the exponent and k generating the units mod the p-part.

    Odd p only (the unit group mod 2^a is not cyclic)."""
    if p == 2:
        raise ValueError("p = 2 not supported; use the character table instead")
    e = table.exponent
    e_p = p_part(e, p)
    if e_p == 1:
        raise ValueError(f"p={p} does not divide the group exponent")
    e_pp = e // e_p
    g0 = _primitive_root(e_p)
    # CRT: k = g0 mod e_p, k = 1 mod e_pp
    if e_pp == 1:
        k = g0
    else:
        k = (g0 * e_pp * pow(e_pp, -1, e_p) + e_p * pow(e_p, -1, e_pp)) % e
    mapping = power_class_map(table, k)
    return sum(1 for i, j in enumerate(mapping) if i == j)


def _primitive_root(m: int) -> int:
    """Least primitive root modulo m = p^a, p odd."""
    from .numtheory import euler_phi, factorize
    phi = euler_phi(m)
    prime_divs = factorize(phi).primes()
    for g in range(2, m):
        if gcd(g, m) != 1:
            continue
        if all(pow(g, phi // q, m) != 1 for q in prime_divs):
            return g
    raise ValueError(f"no primitive root mod {m}")


# ---------------------------------------------------------------------------
# quotient groups
# ---------------------------------------------------------------------------

def quotient_group(group: PermGroup, normal_gens, name: str | None = None,
                   index_cap: int = 1 << 16) -> PermGroup:
    """The quotient G/N as a faithful permutation group on the cosets of N.

    Normality is verified exhaustively on generators; a failing conjugate is
    reported as a witness.  Cosets are identified by exact membership tests
    (left cosets gN, identified via r^-1 x in N)."""
    n_group = PermGroup(group.degree, normal_gens, name="N")
    for ng in n_group.generators:
        for g in group.generators:
            conj = conjugate(g, ng, inverse(g))
            if not n_group.contains(conj):
                raise ValueError(
                    f"subgroup is not normal: conjugate {conj.tolist()} "
                    "of a subgroup generator lies outside the subgroup")
    index = group.order // n_group.order
    if index > index_cap:
        raise ResourceLimitError(f"index {index} exceeds coset cap {index_cap}")

    # orbit fingerprint of a coset gN: the image of each N-orbit under g
    n_orbits = n_group.orbits_on_points()
    point_orbit = [0] * group.degree
    for oid, orb in enumerate(n_orbits):
        for x in orb:
            point_orbit[x] = oid

    def fingerprint(g):
        return tuple(frozenset(int(g[x]) for x in orb) for orb in n_orbits)

    reps = [group.identity()]
    rep_invs = [group.identity()]
    buckets = {fingerprint(reps[0]): [0]}

    def coset_id(x):
        fp = fingerprint(x)
        for i in buckets.get(fp, ()):
            if n_group.contains(compose(rep_invs[i], x)):
                return i
        i = len(reps)
        reps.append(x)
        rep_invs.append(inverse(x))
        buckets.setdefault(fp, []).append(i)
        return i

    # worklist enumeration of cosets, recording the generator actions
    actions: list[list[int]] = [[] for _ in group.generators]
    i = 0
    while i < len(reps):
        for gi, g in enumerate(group.generators):
            actions[gi].append(coset_id(compose(g, reps[i])))
        i += 1
    if len(reps) != index:
        raise ConsistencyError(
            f"coset enumeration found {len(reps)} cosets, expected {index}")
    images = actions
    quotient = PermGroup(index, images, name=name or f"{group.name}/N")
    if quotient.order != index:
        raise ConsistencyError("quotient action is not faithful of full size")
    return quotient


# ---------------------------------------------------------------------------
# Burnside cross-check
# ---------------------------------------------------------------------------

def burnside_class_count(group: PermGroup, cap: int = 10_000) -> int:
    """Number of classes as the average number of fixed points of the
    conjugation action, computed exhaustively (an independent oracle)."""
    n = group.order
    if n > cap:
        raise ResourceLimitError(f"group order {n} exceeds Burnside cap {cap}")
    elements = np.stack(list(group.elements()))
    total = 0
    for i in range(n):
        g = elements[i]
        ginv = inverse(g)
        conj_all = g[elements[:, ginv]]
        total += int((conj_all == elements).all(axis=1).sum())
    if total % n:
        raise ConsistencyError("fixed-point total not divisible by |G|")
    return total // n


# ---------------------------------------------------------------------------
# class table cache files
# ---------------------------------------------------------------------------

CACHE_FORMAT_VERSION = 1


def save_class_table(table: ClassTable, path):
    lines = [
        f"regclass-classtable {CACHE_FORMAT_VERSION}",
        f"degree {table.group.degree}",
        f"order {table.group.order}",
        f"generators {';'.join(','.join(map(str, g.tolist())) for g in table.group.generators)}",
        f"classes {len(table.classes)}",
    ]
    for c in table.classes:
        rep = ",".join(map(str, c.rep.tolist()))
        lines.append(f"{c.size} {c.order} {rep}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_class_table(group: PermGroup, path, spot_checks: int = 10) -> ClassTable:
    """Reread a cached table and verify it against `group`.

    Recomputes the class-equation sum and spot-checks that random conjugates
    of representatives stay inside their stated class (via closure search)."""
    import random

    with open(path) as fh:
        lines = [ln.rstrip("\n") for ln in fh]
    head, ver = lines[0].split()
    if head != "regclass-classtable" or int(ver) != CACHE_FORMAT_VERSION:
        raise ValueError("unrecognized cache file format")
    degree = int(lines[1].split()[1])
    order = int(lines[2].split()[1])
    gen_field = lines[3].split(" ", 1)[1] if " " in lines[3] else ""
    gens = [tuple(map(int, part.split(","))) for part in gen_field.split(";") if part]
    count = int(lines[4].split()[1])
    if degree != group.degree or order != group.order:
        raise ConsistencyError("cache does not match the group")
    if sorted(map(tuple, (g.tolist() for g in group.generators))) != sorted(gens):
        raise ConsistencyError("cache generator list does not match the group")
    classes = []
    for line in lines[5:5 + count]:
        size_s, order_s, rep_s = line.split(" ", 2)
        rep = as_perm(tuple(map(int, rep_s.split(","))), degree)
        classes.append(ConjugacyClass(rep=rep, size=int(size_s), order=int(order_s)))
    if sum(c.size for c in classes) != order:
        raise ConsistencyError("cached class sizes do not sum to the group order")
    table = ClassTable(group, classes, None, "search")
    rng = random.Random(0)
    for _ in range(min(spot_checks, len(classes))):
        i = rng.randrange(len(classes))
        conj_by = group.random_element(rng)
        moved = conjugate(conj_by, classes[i].rep, inverse(conj_by))
        if table.class_of(moved) != i:
            raise ConsistencyError("cached class failed the conjugacy spot check")
    return table


__all__ = [
    "PermGroup", "StabilizerChain", "ClassTable", "ConjugacyClass",
    "ClassCounts", "ResourceLimitError", "ConsistencyError",
    "identity_perm", "as_perm", "perm_from_cycles", "compose", "inverse",
    "conjugate", "perm_power", "perm_order", "is_identity", "perm_key",
    "lex_key", "conjugacy_classes", "p_part_split", "class_counts",
    "power_class_map", "galois_fixed_class_count", "quotient_group",
    "burnside_class_count", "save_class_table", "load_class_table",
    "DEFAULT_CLASS_CAP", "EXTENDED_CLASS_CAP",
]
