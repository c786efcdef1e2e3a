"""Exact ordinary character tables via the Burnside-Dixon method.

Class-multiplication matrices are simultaneously diagonalized over GF(P) for
a deterministic prime P = 1 (mod exponent), P > 2*sqrt(|G|); eigenvector rows
are lifted to exact cyclotomic integers (multiplicity vectors over e-th roots
of unity) by the discrete Fourier lift over power maps.  Row and column
orthogonality are verified exactly before a table is returned: inner products
are evaluated at every primitive e-th root of unity modulo independent
auxiliary primes whose product exceeds a rigorous coefficient bound, which
pins the cyclotomic-integer values down exactly.

Galois-theoretic classification (rational, p-rational, p'-rational,
Q_p-valued characters) acts on multiplicity vectors by index multiplication.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

import numpy as np

from .numtheory import divisors, factorize, is_prime, p_part
from .permgroup import (ClassTable, ConsistencyError, PermGroup,
                        ResourceLimitError, class_counts, conjugate, inverse,
                        perm_key, power_class_map)

MAX_CLASSES = 80
MAX_ORDER = 3_000_000


# ---------------------------------------------------------------------------
# cyclotomic integers as multiplicity vectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CycValue:
    """sum_s m_s zeta^s with zeta a fixed primitive e-th root of unity.

    Multiplicities are nonnegative (they count character eigenvalues); the
    support holds the indices with m_s > 0, strictly increasing."""

    e: int
    support: tuple[int, ...]
    mults: tuple[int, ...]

    def galois(self, k: int) -> "CycValue":
        """sigma_k: zeta -> zeta^k, i.e. index multiplication by k."""
        pairs = sorted((s * k % self.e, m) for s, m in zip(self.support, self.mults))
        return CycValue(self.e, tuple(s for s, _ in pairs),
                        tuple(m for _, m in pairs))

    def conjugate(self) -> "CycValue":
        return self.galois(self.e - 1 if self.e > 1 else 0)

    def is_rational_integer(self) -> bool:
        return all(s == 0 for s in self.support)

    def as_integer(self) -> int:
        if not self.is_rational_integer():
            raise ValueError("value is not a rational integer")
        return sum(self.mults)

    def total_mass(self) -> int:
        return sum(self.mults)

    def eval_mod(self, root_powers: np.ndarray, q: int) -> int:
        """Evaluate at the root whose power table (length e) is given."""
        acc = 0
        for s, m in zip(self.support, self.mults):
            acc = (acc + m * int(root_powers[s])) % q
        return acc


def _lex_dense_key_cmp(a: CycValue, b: CycValue) -> int:
    """Compare as dense length-e vectors, lexicographically."""
    ia = dict(zip(a.support, a.mults))
    ib = dict(zip(b.support, b.mults))
    for s in sorted(set(ia) | set(ib)):
        va, vb = ia.get(s, 0), ib.get(s, 0)
        if va != vb:
            return 1 if va > vb else -1
    return 0


# ---------------------------------------------------------------------------
# cyclotomic polynomial coefficients (for the exact zero test bound)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n(x), constant term first."""
    if n == 1:
        return (-1, 1)
    # divide x^n - 1 by the product of all lower cyclotomic factors
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d < n:
            num = _exact_poly_div(num, list(cyclotomic_coeffs(d)))
    return tuple(num)


def _exact_poly_div(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (monic-leading denominators of
    the cyclotomic kind have leading coefficient +-1)."""
    num = list(num)
    lead = den[-1]
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % lead:
            raise ArithmeticError("non-exact polynomial division")
        c //= lead
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def _reduction_height(e: int) -> int:
    """max over t < e of the coefficient height of x^t mod Phi_e."""
    phi = cyclotomic_coeffs(e)
    deg = len(phi) - 1
    if deg == 0:
        return 1
    rest = np.array(phi[:-1], dtype=np.int64)  # Phi_e is monic
    r = np.zeros(deg, dtype=np.int64)
    r[0] = 1
    height = 1
    for _ in range(e - 1):
        top = r[deg - 1]
        r[1:] = r[:-1]
        r[0] = 0
        if top:
            r -= top * rest
        m = int(np.abs(r).max())
        if m > height:
            height = m
        if height > 1 << 31:
            raise ConsistencyError("cyclotomic reduction height overflow")
    return height


# ---------------------------------------------------------------------------
# modular primes and roots
# ---------------------------------------------------------------------------

def dixon_prime(e: int, group_order: int) -> int:
    """Least prime P = 1 (mod e) with P^2 > 4|G|."""
    p = e + 1
    while True:
        if p * p > 4 * group_order and is_prime(p):
            return p
        p += e if e > 1 else 1


def _primitive_root_mod(p: int) -> int:
    phi = p - 1
    prime_divs = factorize(phi).primes()
    for g in range(2, p):
        if all(pow(g, phi // q, p) != 1 for q in prime_divs):
            return g
    raise ArithmeticError(f"no primitive root mod {p}")


def _root_of_unity(p: int, e: int) -> int:
    """A primitive e-th root of unity mod p (requires e | p-1)."""
    g = _primitive_root_mod(p)
    return pow(g, (p - 1) // e, p)


def _aux_primes(e: int, needed_product: int) -> list[int]:
    """Primes = 1 (mod e) near 2**26 whose product exceeds needed_product."""
    primes = []
    prod = 1
    p = ((1 << 26) // max(e, 1)) * max(e, 1) + 1
    while prod <= needed_product:
        if is_prime(p):
            primes.append(p)
            prod *= p
        p += e if e > 1 else 1
    return primes


# ---------------------------------------------------------------------------
# class algebra
# ---------------------------------------------------------------------------

def class_members(table: ClassTable, i: int):
    """All members of class i by conjugation closure from the representative."""
    rep = table.classes[i].rep
    seen = {perm_key(rep)}
    members = [rep]
    frontier = [rep]
    while frontier:
        nxt = []
        for x in frontier:
            for g, ginv in table._gen_pairs:
                y = conjugate(g, x, ginv)
                k = perm_key(y)
                if k not in seen:
                    seen.add(k)
                    members.append(y)
                    nxt.append(y)
        frontier = nxt
    if len(members) != table.classes[i].size:
        raise ConsistencyError("class closure size mismatch")
    return members


def class_matrix(table: ClassTable, i: int) -> np.ndarray:
    """M_i with (M_i)[j][k] = #{(x, y) in C_i x C_j : x y = z_k}.

    Computed by streaming x over C_i and locating j = class(x^-1 z_k)."""
    K = len(table.classes)
    M = np.zeros((K, K), dtype=np.int64)
    reps = [c.rep for c in table.classes]
    for x in class_members(table, i):
        xinv = inverse(x)
        for k in range(K):
            j = table.class_of(xinv[reps[k]])
            M[j][k] += 1
    return M


def class_algebra_constants(table: ClassTable) -> np.ndarray:
    """The full tensor a[i][j][k]; subject to the class-count cap."""
    K = len(table.classes)
    n = table.group.order
    if K > MAX_CLASSES:
        raise ResourceLimitError(f"{K} classes exceeds cap {MAX_CLASSES}")
    if n > MAX_ORDER:
        raise ResourceLimitError(f"group order {n} exceeds cap {MAX_ORDER}")
    a = np.zeros((K, K, K), dtype=np.int64)
    for i in range(K):
        a[i] = class_matrix(table, i)
    return a


# ---------------------------------------------------------------------------
# mod-P linear algebra
# ---------------------------------------------------------------------------

def _solve_coords(B: np.ndarray, Y: np.ndarray, p: int) -> np.ndarray:
    """X with B X = Y (mod p); B is K x m with full column rank."""
    K, m = B.shape
    aug = np.concatenate([B % p, Y % p], axis=1).astype(np.int64)
    row = 0
    pivots = []
    for col in range(m):
        piv = next((r for r in range(row, K) if aug[r][col] % p), None)
        if piv is None:
            raise ConsistencyError("basis matrix is column-rank deficient")
        aug[[row, piv]] = aug[[piv, row]]
        aug[row] = aug[row] * pow(int(aug[row][col]), -1, p) % p
        for r in range(K):
            if r != row and aug[r][col]:
                aug[r] = (aug[r] - aug[r][col] * aug[row]) % p
        pivots.append(col)
        row += 1
    X = aug[:m, m:]
    if K > m and np.any(aug[m:, m:] % p):
        raise ConsistencyError("inconsistent linear system (not invariant)")
    return X % p


def _charpoly_mod(A: np.ndarray, p: int) -> list[int]:
    """Characteristic polynomial mod p (Hessenberg method), constant first."""
    m = len(A)
    H = A.copy() % p
    # reduce to upper Hessenberg by similarity transformations
    for col in range(m - 2):
        piv = next((r for r in range(col + 1, m) if H[r][col] % p), None)
        if piv is None:
            continue
        if piv != col + 1:
            H[[col + 1, piv]] = H[[piv, col + 1]]
            H[:, [col + 1, piv]] = H[:, [piv, col + 1]]
        inv = pow(int(H[col + 1][col]), -1, p)
        for r in range(col + 2, m):
            factor = int(H[r][col]) * inv % p
            if factor:
                H[r] = (H[r] - factor * H[col + 1]) % p
                H[:, col + 1] = (H[:, col + 1] + factor * H[:, r]) % p
    # p_k(x) = charpoly of leading k x k block, by the Hessenberg recurrence
    polys = [np.array([1], dtype=np.int64)]
    for k in range(1, m + 1):
        # p_k = (x - H[k-1][k-1]) p_{k-1} - sum over trailing products
        prev = polys[k - 1]
        term = np.zeros(k + 1, dtype=np.int64)
        term[1:] = prev
        term[:-1] = (term[:-1] - int(H[k - 1][k - 1]) * prev) % p
        prod = 1
        for i in range(k - 2, -1, -1):
            prod = prod * int(H[i + 1][i]) % p
            coef = prod * int(H[i][k - 1]) % p
            if coef:
                term[: len(polys[i])] = (term[: len(polys[i])]
                                         - coef * polys[i]) % p
        polys.append(term % p)
    return [int(c) for c in polys[m]]


def _poly_roots_mod(coeffs: list[int], p: int) -> dict[int, int]:
    """All roots in GF(p) with multiplicities, by vectorized scan."""
    xs = np.arange(p, dtype=np.int64)
    vals = np.zeros(p, dtype=np.int64)
    for c in reversed(coeffs):
        vals = (vals * xs + c) % p
    roots = {}
    for r in np.nonzero(vals == 0)[0]:
        r = int(r)
        mult = 0
        cur = list(coeffs)
        while len(cur) > 1 and _poly_eval_mod(cur, r, p) == 0:
            cur = _deflate(cur, r, p)
            mult += 1
        roots[r] = mult
    return roots


def _poly_eval_mod(coeffs, x, p):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def _deflate(coeffs, r, p):
    out = [0] * (len(coeffs) - 1)
    acc = 0
    for i in range(len(coeffs) - 1, 0, -1):
        acc = (acc * r + coeffs[i]) % p
        out[i - 1] = acc
    return out


def _nullspace_mod(A: np.ndarray, p: int) -> np.ndarray:
    """Columns spanning ker(A) mod p."""
    m = len(A)
    M = A.copy() % p
    pivots = {}
    row = 0
    for col in range(m):
        piv = next((r for r in range(row, m) if M[r][col] % p), None)
        if piv is None:
            continue
        M[[row, piv]] = M[[piv, row]]
        M[row] = M[row] * pow(int(M[row][col]), -1, p) % p
        for r in range(m):
            if r != row and M[r][col]:
                M[r] = (M[r] - M[r][col] * M[row]) % p
        pivots[col] = row
        row += 1
    free = [c for c in range(m) if c not in pivots]
    basis = np.zeros((m, len(free)), dtype=np.int64)
    for idx, fc in enumerate(free):
        basis[fc][idx] = 1
        for col, prow in pivots.items():
            basis[col][idx] = (-int(M[prow][fc])) % p
    return basis


# ---------------------------------------------------------------------------
# the character table
# ---------------------------------------------------------------------------

@dataclass
class CharacterTable:
    table: ClassTable
    degrees: list[int]
    values: list[list[CycValue]]  # [character][class]
    exponent: int
    modular_prime: int
    mod_values: np.ndarray  # [character][class] mod P

    def __len__(self):
        return len(self.degrees)

    def galois_fixed(self, char_index: int, k: int) -> bool:
        row = self.values[char_index]
        return all(v.galois(k) == v for v in row)

    def fixed_count(self, k: int) -> int:
        return sum(1 for i in range(len(self)) if self.galois_fixed(i, k))


def character_table(group: PermGroup, table: ClassTable) -> CharacterTable:
    K = len(table.classes)
    n = group.order
    if K > MAX_CLASSES:
        raise ResourceLimitError(f"{K} classes exceeds cap {MAX_CLASSES}")
    if n > MAX_ORDER:
        raise ResourceLimitError(f"group order {n} exceeds cap {MAX_ORDER}")
    e = table.exponent
    P = dixon_prime(e, n)

    # --- simultaneous eigenvectors of the class matrices over GF(P) --------
    subspaces = [np.eye(K, dtype=np.int64)]
    by_size = sorted(range(1, K), key=lambda i: (table.classes[i].size, i))
    for i in by_size:
        if all(B.shape[1] == 1 for B in subspaces):
            break
        M = class_matrix(table, i) % P
        refined = []
        for B in subspaces:
            m = B.shape[1]
            if m == 1:
                refined.append(B)
                continue
            X = _solve_coords(B, M @ B % P, P)
            roots = _poly_roots_mod(_charpoly_mod(X, P), P)
            if sum(roots.values()) != m:
                raise ConsistencyError("class matrix not split over GF(P)")
            for lam in sorted(roots):
                ns = _nullspace_mod((X - lam * np.eye(m, dtype=np.int64)) % P, P)
                if ns.shape[1] != roots[lam]:
                    raise ConsistencyError("eigenspace dimension mismatch")
                refined.append(B @ ns % P)
        subspaces = refined
    if any(B.shape[1] != 1 for B in subspaces):
        raise ConsistencyError("class matrices failed to separate characters")

    # --- normalize, recover degrees and mod-P character values -------------
    inv_class = [table.class_of(inverse(c.rep)) for c in table.classes]
    sizes = np.array([c.size for c in table.classes], dtype=np.int64)
    group_divisors = divisors(n)
    rows_mod = []
    degrees = []
    for B in subspaces:
        w = B[:, 0] % P
        if w[0] % P == 0:
            raise ConsistencyError("eigenvector vanishes on the identity class")
        w = w * pow(int(w[0]), -1, P) % P
        s = 0
        for j in range(K):
            s = (s + int(w[j]) * int(w[inv_class[j]])
                 * pow(int(sizes[j]), -1, P)) % P
        d_sq = n * pow(s, -1, P) % P
        d = next((x for x in group_divisors
                  if x * x <= n and x * x % P == d_sq), None)
        if d is None:
            raise ConsistencyError("no degree matches the eigenvector")
        chi = np.array([d * int(w[j]) * pow(int(sizes[j]), -1, P) % P
                        for j in range(K)], dtype=np.int64)
        rows_mod.append(chi)
        degrees.append(d)
    if sum(d * d for d in degrees) != n:
        raise ConsistencyError("degree squares do not sum to the group order")

    mod_values = np.stack(rows_mod)
    _check_mod_orthogonality(mod_values, sizes, inv_class, n, P)

    # --- exact lift: discrete Fourier transform over power maps ------------
    z = _root_of_unity(P, e)
    z_pows = np.zeros(e, dtype=np.int64)
    acc = 1
    for t in range(e):
        z_pows[t] = acc
        acc = acc * z % P
    power_class = []
    for c in table.classes:
        o = c.order
        cls = [0] * o
        g = group.identity()
        for u in range(o):
            cls[u] = table.class_of(g)
            g = c.rep[g]
        power_class.append(cls)

    values: list[list[CycValue]] = []
    for r in range(K):
        row = []
        for j in range(K):
            o = table.classes[j].order
            step = e // o
            f = [int(mod_values[r][power_class[j][u]]) for u in range(o)]
            o_inv = pow(o, -1, P)
            support = []
            mults = []
            for sig in range(o):
                m_val = 0
                for u in range(o):
                    m_val = (m_val + f[u] * int(z_pows[(e - step * sig) * u % e])) % P
                m_val = m_val * o_inv % P
                if m_val:
                    if m_val > degrees[r]:
                        raise ConsistencyError("lifted multiplicity out of range")
                    support.append(step * sig)
                    mults.append(m_val)
            v = CycValue(e, tuple(support), tuple(mults))
            if v.total_mass() != degrees[r]:
                raise ConsistencyError("eigenvalue multiplicities do not sum to the degree")
            if v.eval_mod(z_pows, P) != int(mod_values[r][j]):
                raise ConsistencyError("lift does not reproduce the modular value")
            row.append(v)
        values.append(row)

    # --- canonical ordering by (degree, lexicographic value vector) --------
    def row_cmp(a: int, b: int) -> int:
        if degrees[a] != degrees[b]:
            return 1 if degrees[a] > degrees[b] else -1
        for j in range(K):
            c = _lex_dense_key_cmp(values[a][j], values[b][j])
            if c:
                return c
        return 0

    import functools
    order = sorted(range(K), key=functools.cmp_to_key(row_cmp))
    values = [values[i] for i in order]
    degrees = [degrees[i] for i in order]
    mod_values = mod_values[order]

    result = CharacterTable(table=table, degrees=degrees, values=values,
                            exponent=e, modular_prime=P, mod_values=mod_values)
    _verify_exact_orthogonality(result, sizes, inv_class, n)
    return result


def _check_mod_orthogonality(chi: np.ndarray, sizes, inv_class, n, P):
    K = len(chi)
    conj = chi[:, inv_class]
    gram = chi * sizes[None, :] @ conj.T % P
    if not np.array_equal(gram % P, (n % P) * np.eye(K, dtype=np.int64) % P):
        raise ConsistencyError("mod-P row orthogonality failed")


def _verify_exact_orthogonality(ct: CharacterTable, sizes, inv_class, n):
    """Exact row and column orthogonality over the cyclotomic integers.

    Each inner product is a cyclotomic integer B; B equals the asserted
    rational constant iff B - c reduces to zero mod Phi_e.  We evaluate B at
    every primitive e-th root of unity modulo auxiliary primes Q_i = 1 mod e;
    that forces the reduced coefficients to vanish mod prod(Q_i), and
    prod(Q_i) is chosen to exceed twice a rigorous bound on those
    coefficients, so they vanish exactly."""
    e = ct.exponent
    K = len(ct.degrees)
    max_d = max(ct.degrees)
    height = _reduction_height(e)
    # coefficient mass of any inner product vector, before reduction
    mass_row = int(np.sum(sizes)) * max_d * max_d
    mass_col = sum(d * d for d in ct.degrees)
    bound = 2 * (max(mass_row, mass_col) + n) * height
    units = [k for k in range(1, e) if gcd(k, e) == 1] or [1]
    for Q in _aux_primes(e, bound):
        zq = _root_of_unity(Q, e) if e > 1 else 1
        zq_pows = np.zeros(e, dtype=np.int64)
        acc = 1
        for t in range(e):
            zq_pows[t] = acc
            acc = acc * zq % Q
        # value matrices at each embedding zeta -> zq^k, vectorized over k
        karr = np.array(units, dtype=np.int64)
        stacked = np.zeros((len(units), K, K), dtype=np.int64)
        for r in range(K):
            for j in range(K):
                v = ct.values[r][j]
                s = np.array(v.support, dtype=np.int64)
                m = np.array(v.mults, dtype=np.int64)
                stacked[:, r, j] = zq_pows[karr[:, None] * s[None, :] % e] @ m % Q
        V = {k: stacked[idx] for idx, k in enumerate(units)}
        eye = np.eye(K, dtype=np.int64)
        size_inv = np.array([pow(int(s), -1, Q) for s in sizes], dtype=np.int64)
        for k in units:
            A = V[k]
            B = V[(-k) % e] if e > 1 else V[k]
            gram = (A * np.asarray(sizes)[None, :] % Q) @ B.T % Q
            if not np.array_equal(gram, (n % Q) * eye % Q):
                raise ConsistencyError("exact row orthogonality failed")
            colgram = A.T @ B % Q
            expected = (n % Q) * size_inv % Q * eye % Q
            if not np.array_equal(colgram % Q, expected):
                raise ConsistencyError("exact column orthogonality failed")


# ---------------------------------------------------------------------------
# rationality classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalityFlags:
    is_rational: bool
    is_p_rational: bool
    is_p_prime_rational: bool
    is_Qp_valued: bool


def _congruence_subgroup_generators(e: int, m: int) -> list[int]:
    """Generators of {k in U(e) : k = 1 (mod m)} for m | e."""
    if e == 1:
        return []
    gens = []
    comps = factorize(e).pairs
    for p, a in comps:
        pa = p**a
        b = 0
        mm = m
        while mm % p == 0:
            mm //= p
            b += 1
        local = _local_unit_gens(p, a, b)
        rest = e // pa
        for g in local:
            if rest == 1:
                gens.append(g % e)
            else:
                # CRT: g mod p^a, 1 mod rest
                k = (g * rest * pow(rest, -1, pa) + pa * pow(pa, -1, rest)) % e
                gens.append(k)
    return [g for g in gens if g != 1 % e]


def _local_unit_gens(p: int, a: int, b: int) -> list[int]:
    """Generators of {u in U(p^a) : u = 1 (mod p^b)}."""
    pa = p**a
    if b >= a:
        return []
    if p == 2:
        if b >= 2:
            return [(1 + 2**b) % pa] if a > b else []
        # b in {0, 1}: the full unit group U(2^a)
        if a == 1:
            return []
        if a == 2:
            return [3]
        return [pa - 1, 5]
    if b == 0:
        from .permgroup import _primitive_root
        return [_primitive_root(pa)]
    return [(1 + p**b) % pa]


def classify_rationality(ct: CharacterTable, p: int) -> list[RationalityFlags]:
    e = ct.exponent
    e_p = p_part(e, p)
    e_pp = e // e_p
    gens_all = _congruence_subgroup_generators(e, 1)
    gens_p_rat = _congruence_subgroup_generators(e, e_pp)
    gens_pp_rat = _congruence_subgroup_generators(e, e_p)
    gens_qp = _congruence_subgroup_generators(e, gcd(e, p))
    flags = []
    for i in range(len(ct.degrees)):
        fixed = lambda gens: all(ct.galois_fixed(i, k) for k in gens)
        r = fixed(gens_all)
        rp = fixed(gens_p_rat)
        rpp = fixed(gens_pp_rat)
        qp = fixed(gens_qp)
        if r != (rp and rpp):
            raise ConsistencyError("rationality flags are inconsistent")
        flags.append(RationalityFlags(is_rational=r, is_p_rational=rp,
                                      is_p_prime_rational=rpp, is_Qp_valued=qp))
    return flags


@dataclass(frozen=True)
class CharacterCounts:
    p: int
    n_p_rational: int
    n_p_prime_rational: int
    n_union: int
    n_rational: int
    n_qp_union: int  # |Irr_p-rat union Irr_{Q_p}|
    union_vs_bound: int  # cmp of n_union against 2*sqrt(p-1)
    qp_union_vs_bound: int  # cmp of n_qp_union against 2*sqrt(p-1)


def character_count_report(ct: CharacterTable, p: int) -> CharacterCounts:
    from fractions import Fraction

    from .numtheory import cmp_threshold
    half = Fraction(1, 2)
    flags = classify_rationality(ct, p)
    n_union = sum(f.is_p_rational or f.is_p_prime_rational for f in flags)
    n_qp_union = sum(f.is_p_rational or f.is_Qp_valued for f in flags)
    return CharacterCounts(
        p=p,
        n_p_rational=sum(f.is_p_rational for f in flags),
        n_p_prime_rational=sum(f.is_p_prime_rational for f in flags),
        n_union=n_union,
        n_rational=sum(f.is_rational for f in flags),
        n_qp_union=n_qp_union,
        union_vs_bound=cmp_threshold(n_union, p, half),
        qp_union_vs_bound=cmp_threshold(n_qp_union, p, half),
    )


# ---------------------------------------------------------------------------
# Brauer cross-check
# ---------------------------------------------------------------------------

def brauer_cross_check(table: ClassTable, ct: CharacterTable) -> None:
    """For every Galois element sigma_k: the number of fixed characters must
    equal the number of classes fixed by g -> g^k; for odd p dividing |G|,
    the p-rational character count must match the permutation-side count and
    dominate k_{p'}.  Any mismatch is a hard engine failure."""
    from .permgroup import galois_fixed_class_count
    e = ct.exponent
    for k in range(1, e + 1 if e == 1 else e):
        if gcd(k, e) != 1:
            continue
        chars_fixed = ct.fixed_count(k)
        mapping = power_class_map(table, k)
        classes_fixed = sum(1 for i, j in enumerate(mapping) if i == j)
        if chars_fixed != classes_fixed:
            raise ConsistencyError(
                f"Brauer count mismatch at k={k}: {chars_fixed} characters "
                f"vs {classes_fixed} classes")
    n = table.group.order
    for p in factorize(n).primes():
        if p == 2 or table.exponent % p:
            continue
        table_count = character_count_report(ct, p).n_p_rational
        class_count = galois_fixed_class_count(table, p)
        if table_count != class_count:
            raise ConsistencyError(
                f"p-rational count mismatch at p={p}: table {table_count} "
                f"vs classes {class_count}")
        if table_count < class_counts(table, p).k_p_prime:
            raise ConsistencyError(
                f"p-rational count below k_p' at p={p}")


# ---------------------------------------------------------------------------
# cache files
# ---------------------------------------------------------------------------

_CACHE_MAGIC = "chartable-cache"
_CACHE_VERSION = 1


def save_character_table(ct: CharacterTable, path) -> None:
    """Text cache: header (group id, exponent, modular prime), then one line
    per character: degree, then per-class multiplicity vectors in sparse
    "index:mult" form ('-' for a zero value)."""
    lines = [f"{_CACHE_MAGIC} {_CACHE_VERSION}",
             f"group {ct.table.group.name or 'anonymous'}",
             f"order {ct.table.group.order}",
             f"exponent {ct.exponent}",
             f"prime {ct.modular_prime}",
             f"characters {len(ct.degrees)}"]
    for d, row in zip(ct.degrees, ct.values):
        cells = []
        for v in row:
            if not v.support:
                cells.append("-")
            else:
                cells.append(",".join(f"{s}:{m}"
                                      for s, m in zip(v.support, v.mults)))
        lines.append(f"{d} " + " ".join(cells))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_character_table(table: ClassTable, path) -> CharacterTable:
    """Load and re-verify a cached table against the given class table.

    Degrees, mass sums, the degree-square identity and mod-P row
    orthogonality are all re-checked; mismatches raise ConsistencyError."""
    with open(path) as fh:
        lines = [ln.rstrip("\n") for ln in fh]
    head = dict(ln.split(" ", 1) for ln in lines[1:6])
    if lines[0] != f"{_CACHE_MAGIC} {_CACHE_VERSION}":
        raise ConsistencyError("unrecognized cache header")
    n = table.group.order
    e = table.exponent
    if int(head["order"]) != n or int(head["exponent"]) != e:
        raise ConsistencyError("cache does not match the class table")
    P = int(head["prime"])
    K = int(head["characters"])
    if K != len(table.classes):
        raise ConsistencyError("character count does not match class count")
    degrees = []
    values = []
    for ln in lines[6:6 + K]:
        parts = ln.split(" ")
        d = int(parts[0])
        if len(parts) != K + 1:
            raise ConsistencyError("malformed cache row")
        row = []
        for cell in parts[1:]:
            if cell == "-":
                row.append(CycValue(e, (), ()))
                continue
            pairs = sorted(tuple(map(int, sm.split(":")))
                           for sm in cell.split(","))
            v = CycValue(e, tuple(s for s, _ in pairs),
                         tuple(m for _, m in pairs))
            if v.total_mass() != d or any(m <= 0 for m in v.mults) \
                    or any(not 0 <= s < e for s in v.support):
                raise ConsistencyError("malformed cached value")
            row.append(v)
        if row[0].support != (0,) or row[0].mults != (d,):
            raise ConsistencyError("cached identity column disagrees with degree")
        degrees.append(d)
        values.append(row)
    if sum(d * d for d in degrees) != n:
        raise ConsistencyError("cached degree squares do not sum to the order")
    z = _root_of_unity(P, e)
    z_pows = np.zeros(e, dtype=np.int64)
    acc = 1
    for t in range(e):
        z_pows[t] = acc
        acc = acc * z % P
    mod_values = np.array([[v.eval_mod(z_pows, P) for v in row]
                           for row in values], dtype=np.int64)
    sizes = np.array([c.size for c in table.classes], dtype=np.int64)
    inv_class = [table.class_of(inverse(c.rep)) for c in table.classes]
    _check_mod_orthogonality(mod_values, sizes, inv_class, n, P)
    return CharacterTable(table=table, degrees=degrees, values=values,
                          exponent=e, modular_prime=P, mod_values=mod_values)


__all__ = [
    "CycValue", "CharacterTable", "RationalityFlags", "CharacterCounts",
    "MAX_CLASSES", "MAX_ORDER", "cyclotomic_coeffs", "dixon_prime",
    "class_members", "class_matrix", "class_algebra_constants",
    "character_table", "classify_rationality", "character_count_report",
    "brauer_cross_check", "save_character_table", "load_character_table",
]
