"""Finite groups on dense element indices.

Elements of a group of order ``n`` are the integers ``0..n-1``. Cyclic groups
and direct products compute their operation arithmetically; symmetric and
dihedral groups carry a precomputed multiplication table.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from functools import cached_property

from bicayley.errors import InvalidConnectionSet, InvalidParameter

GROUP_CAP = 5000

ROLES = ("S1", "S2", "S3")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _check_cap(order, cap):
    cap = GROUP_CAP if cap is None else cap
    if order > cap:
        raise InvalidParameter(f"group order {order} exceeds cap {cap}")


class FiniteGroup:
    """Base class: subclasses provide ``multiply`` and ``inverse``."""

    order: int
    identity: int = 0
    description: str

    def multiply(self, x: int, y: int) -> int:
        raise NotImplementedError

    def inverse(self, x: int) -> int:
        raise NotImplementedError

    def elements(self) -> range:
        return range(self.order)

    def power(self, x: int, m: int) -> int:
        out = self.identity
        for _ in range(m):
            out = self.multiply(out, x)
        return out

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for x in self.elements():
            m, y = 1, x
            while y != self.identity:
                y = self.multiply(y, x)
                m += 1
            orders.append(m)
        return tuple(orders)

    def is_abelian(self) -> bool:
        return all(self.multiply(x, y) == self.multiply(y, x)
                   for x in self.elements() for y in range(x))

    def is_associative(self, sample: int = 4000, seed: int = 0) -> bool:
        """Exhaustive for order <= 64, otherwise checks random triples."""
        n = self.order
        if n <= 64:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(seed)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(sample))
        mul = self.multiply
        return all(mul(mul(x, y), z) == mul(x, mul(y, z)) for x, y, z in triples)

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"<{type(self).__name__} {self.description}>"


class CyclicGroup(FiniteGroup):
    def __init__(self, n: int):
        self.order = n
        self.description = f"cyclic:{n}"

    def multiply(self, x, y):
        return (x + y) % self.order

    def inverse(self, x):
        return (-x) % self.order

    def power(self, x, m):
        return (x * m) % self.order

    @cached_property
    def element_orders(self):
        n = self.order
        return tuple(n // math.gcd(n, x) for x in range(n))


class TableGroup(FiniteGroup):
    """Group given by an explicit Cayley table (list of rows)."""

    def __init__(self, table, description: str, identity: int = 0):
        self.order = len(table)
        self.description = description
        self.identity = identity
        self._table = tuple(tuple(row) for row in table)
        inv = [0] * self.order
        for x, row in enumerate(self._table):
            inv[x] = row.index(identity)
        self._inverse = tuple(inv)

    def multiply(self, x, y):
        return self._table[x][y]

    def inverse(self, x):
        return self._inverse[x]


class ProductGroup(FiniteGroup):
    """Direct product; element ``(a, b)`` has index ``a*|B| + b``."""

    def __init__(self, a: FiniteGroup, b: FiniteGroup):
        self.left = a
        self.right = b
        self.order = a.order * b.order
        self.identity = a.identity * b.order + b.identity
        self.description = "product:" + "x".join(_flat_descriptions(a) + _flat_descriptions(b))

    def split(self, x):
        return divmod(x, self.right.order)

    def multiply(self, x, y):
        xa, xb = divmod(x, self.right.order)
        ya, yb = divmod(y, self.right.order)
        return self.left.multiply(xa, ya) * self.right.order + self.right.multiply(xb, yb)

    def inverse(self, x):
        xa, xb = divmod(x, self.right.order)
        return self.left.inverse(xa) * self.right.order + self.right.inverse(xb)


def _flat_descriptions(g):
    if isinstance(g, ProductGroup):
        return _flat_descriptions(g.left) + _flat_descriptions(g.right)
    return [g.description]


def make_cyclic(n: int, cap: int | None = None) -> CyclicGroup:
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"cyclic group order must be a positive integer, got {n!r}")
    _check_cap(n, cap)
    return CyclicGroup(n)


def make_symmetric(k: int, cap: int | None = None) -> TableGroup:
    """Sym(k) with elements indexed by lexicographic one-line notation.

    Product is composition ``(s*t)(i) = s(t(i))``.
    """
    if not isinstance(k, int) or k < 1:
        raise InvalidParameter(f"symmetric degree must be a positive integer, got {k!r}")
    _check_cap(math.factorial(k), cap)
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(s[t[i]] for i in range(k))] for t in perms] for s in perms]
    g = TableGroup(table, f"sym:{k}")
    g.permutations = [tuple(i + 1 for i in p) for p in perms]
    return g


def make_dihedral(n: int, cap: int | None = None) -> TableGroup:
    """Dihedral group of order ``n`` (``n`` even), symmetries of an n/2-gon.

    Element ``r^a s^b`` has index ``a + (n/2)*b``; the table comes from
    ``s r = r^-1 s``.
    """
    if not isinstance(n, int) or n < 2 or n % 2:
        raise InvalidParameter(f"dihedral order must be an even integer >= 2, got {n!r}")
    _check_cap(n, cap)
    m = n // 2
    table = []
    for x in range(n):
        a, b = x % m, x // m
        row = []
        for y in range(n):
            c, d = y % m, y // m
            row.append((a + (c if b == 0 else -c)) % m + m * ((b + d) % 2))
        table.append(row)
    return TableGroup(table, f"dihedral:{n}")


def direct_product(a: FiniteGroup, b: FiniteGroup, cap: int | None = None) -> ProductGroup:
    _check_cap(a.order * b.order, cap)
    return ProductGroup(a, b)


def element_order(g: FiniteGroup, x: int) -> int:
    return g.element_orders[x]


def elements_of_order(g: FiniteGroup, orders) -> frozenset[int]:
    wanted = set(orders)
    return frozenset(x for x, o in enumerate(g.element_orders) if o in wanted)


def involutions(g: FiniteGroup) -> frozenset[int]:
    return elements_of_order(g, {2})


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self._set

    def __iter__(self):
        return iter(self.members)

    @cached_property
    def _set(self):
        return frozenset(self.members)


def subgroup_closure(g: FiniteGroup, gens) -> Subgroup:
    gens = sorted(set(gens))
    for x in gens:
        if not 0 <= x < g.order:
            raise InvalidParameter(f"{x} is not an element of {g.description}")
    seen = {g.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = g.multiply(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(g, tuple(sorted(seen)))


def left_cosets(g: FiniteGroup, h: Subgroup) -> list[tuple[int, ...]]:
    """Blocks ``x*H``, each sorted, listed by least element."""
    return _cosets(g, h, lambda x, s: g.multiply(x, s))


def right_cosets(g: FiniteGroup, h: Subgroup) -> list[tuple[int, ...]]:
    """Blocks ``H*x``, each sorted, listed by least element."""
    return _cosets(g, h, lambda x, s: g.multiply(s, x))


def _cosets(g, h, act):
    assigned = [False] * g.order
    blocks = []
    for x in g.elements():
        if assigned[x]:
            continue
        block = sorted({act(x, s) for s in h.members})
        for y in block:
            assigned[y] = True
        blocks.append(tuple(block))
    return blocks


@dataclass(frozen=True)
class CrtCoordinates:
    p: int
    q: int
    p_part: int
    q_part: int


def _check_primes(p, q):
    if not (is_prime(p) and is_prime(q)):
        raise InvalidParameter(f"p and q must be primes, got {p}, {q}")
    if p == q:
        raise InvalidParameter(f"p and q must be distinct, got {p} twice")


def crt_split(p: int, q: int, k: int) -> CrtCoordinates:
    _check_primes(p, q)
    n = p * p * q * q
    if not 0 <= k < n:
        raise InvalidParameter(f"{k} is not a residue mod {n}")
    return CrtCoordinates(p, q, k % (p * p), k % (q * q))


def crt_merge(c: CrtCoordinates) -> int:
    _check_primes(c.p, c.q)
    a, b = c.p * c.p, c.q * c.q
    # a and b are coprime, so pow(a, -1, b) exists
    t = ((c.q_part - c.p_part) * pow(a, -1, b)) % b
    return (c.p_part + a * t) % (a * b)


@dataclass(frozen=True)
class ConnectionSet:
    elements: frozenset[int]
    role: str

    def __post_init__(self):
        if self.role not in ROLES:
            raise InvalidConnectionSet(f"unknown role {self.role!r}")
        object.__setattr__(self, "elements", frozenset(self.elements))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements))

    def __contains__(self, x):
        return x in self.elements

    def validate(self, g: FiniteGroup) -> None:
        """Raise InvalidConnectionSet unless the set is usable in ``g``."""
        bad = [x for x in self.elements if not 0 <= x < g.order]
        if bad:
            raise InvalidConnectionSet(f"{self.role}: {sorted(bad)} not elements of {g.description}")
        if self.role == "S3":
            return
        if g.identity in self.elements:
            raise InvalidConnectionSet(f"{self.role} contains the identity")
        missing = sorted(x for x in self.elements if g.inverse(x) not in self.elements)
        if missing:
            raise InvalidConnectionSet(f"{self.role} is not inverse-closed: inverses of {missing} missing")

    def is_inverse_closed(self, g: FiniteGroup) -> bool:
        return all(g.inverse(x) in self.elements for x in self.elements)


def preset_connection_sets(p: int, q: int, cap: int | None = None):
    """Order-defined sets on Z_{p^2 q^2}: orders {p,q}, orders {p^2,q^2}, {0}."""
    _check_primes(p, q)
    g = make_cyclic(p * p * q * q, cap)
    s1 = ConnectionSet(elements_of_order(g, {p, q}), "S1")
    s2 = ConnectionSet(elements_of_order(g, {p * p, q * q}), "S2")
    s3 = ConnectionSet(frozenset({g.identity}), "S3")
    return s1, s2, s3


_KINDS = ("cyclic", "sym", "dihedral", "product")


def parse_group(descriptor: str, cap: int | None = None) -> FiniteGroup:
    """Build a group from ``cyclic:<n>``, ``sym:<k>``, ``dihedral:<n>`` or
    ``product:<desc>x<desc>[x...]`` (products fold left)."""
    text = descriptor.strip()
    kind, sep, arg = text.partition(":")
    if not sep:
        raise InvalidParameter(f"bad group descriptor {descriptor!r}")
    if kind == "product":
        parts = _split_product(arg)
        if len(parts) < 2:
            raise InvalidParameter(f"product needs at least two factors: {descriptor!r}")
        factors = [parse_group(part, cap) for part in parts]
        out = factors[0]
        for f in factors[1:]:
            out = direct_product(out, f, cap)
        return out
    try:
        value = int(arg)
    except ValueError:
        raise InvalidParameter(f"bad group descriptor {descriptor!r}") from None
    if kind == "cyclic":
        return make_cyclic(value, cap)
    if kind == "sym":
        return make_symmetric(value, cap)
    if kind == "dihedral":
        return make_dihedral(value, cap)
    raise InvalidParameter(f"unknown group kind {kind!r} in {descriptor!r}")


def _split_product(arg):
    parts, start = [], 0
    for i, ch in enumerate(arg):
        if ch == "x" and any(arg.startswith(k + ":", i + 1) for k in _KINDS):
            parts.append(arg[start:i])
            start = i + 1
    parts.append(arg[start:])
    return parts


def parse_elements(text: str, g: FiniteGroup) -> frozenset[int]:
    """Comma-separated element indices, e.g. ``"1,2"``; empty text is the empty set."""
    text = text.strip()
    if not text:
        return frozenset()
    out = set()
    for tok in text.split(","):
        tok = tok.strip()
        try:
            x = int(tok)
        except ValueError:
            raise InvalidParameter(f"bad element {tok!r}") from None
        if not 0 <= x < g.order:
            raise InvalidParameter(f"{x} is not an element of {g.description}")
        out.add(x)
    return frozenset(out)
