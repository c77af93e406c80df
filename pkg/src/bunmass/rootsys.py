"""Root data of split simply connected simple groups.

Positive roots are generated from the Cartan matrix by root-string closure;
exponents then come from the height distribution of the positive roots
(the conjugate-partition theorem), so no table of exponents is consulted.

>>> inv = invariants(build_root_datum("G2"))
>>> inv.exponents, inv.degrees, inv.weyl_order
((1, 5), (2, 6), 12)
>>> chevalley_order(invariants(build_root_datum("A1")), 3)
24
"""

import re
from collections import Counter
from dataclasses import dataclass
from math import prod

from .arith import check_prime_power
from .errors import SpecParseError, ValidationError

FAMILIES = "ABCDEFG"

_LABEL_RE = re.compile(r"([A-Ga-g])([0-9]+)$")


@dataclass(frozen=True)
class CartanLabel:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValidationError(f"unknown Cartan family {self.family!r}")
        if not is_admissible(self.family, self.rank):
            raise ValidationError(f"{self.family}{self.rank} is not an admissible Cartan type")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text):
        """Parse ``"A1"``, ``"d4"``, ``"E8"`` and the like."""
        s = text.strip()
        if not s:
            raise SpecParseError(text, 0, "a Cartan family letter A-G")
        if s[0].upper() not in FAMILIES:
            raise SpecParseError(text, 0, "a Cartan family letter A-G")
        m = _LABEL_RE.match(s)
        if m is None:
            raise SpecParseError(text, 1, "a decimal rank")
        return cls(m.group(1).upper(), int(m.group(2)))


def is_admissible(family, rank):
    if not isinstance(rank, int) or rank < 1:
        return False
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 3,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family, False)


def all_labels(max_rank=8):
    """Every admissible label of rank at most ``max_rank``."""
    out = []
    for family in FAMILIES:
        for rank in range(1, max_rank + 1):
            if is_admissible(family, rank):
                out.append(CartanLabel(family, rank))
    return out


def cartan_matrix(label):
    """Cartan matrix with entries ``a[i][j] = <alpha_i^vee, alpha_j>``.

    Bourbaki numbering of the simple roots throughout.
    """
    f, n = label.family, label.rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2

    def link(i, j):
        a[i][j] = a[j][i] = -1

    if f in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if f == "B":
            a[n - 1][n - 2] = -2
        elif f == "C":
            a[n - 2][n - 1] = -2
    elif f == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif f == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif f == "F":
        link(0, 1)
        link(1, 2)
        link(2, 3)
        a[2][1] = -2
    elif f == "G":
        a[0][1] = -3
        a[1][0] = -1
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class RootDatum:
    label: CartanLabel
    cartan_matrix: tuple
    positive_roots: tuple

    @property
    def rank(self):
        return self.label.rank

    def pairing(self, root, i):
        """``<root, alpha_i^vee>`` for a root given in the simple-root basis."""
        row = self.cartan_matrix[i]
        return sum(row[j] * root[j] for j in range(self.rank))

    def heights(self):
        return Counter(sum(r) for r in self.positive_roots)


def build_root_datum(label):
    """Generate the positive roots of ``label`` by root-string closure.

    Roots are processed by height. For a root ``beta`` and simple root
    ``alpha_i`` the string through ``beta`` runs from ``beta - p alpha_i``
    to ``beta + q alpha_i`` with ``p - q = <beta, alpha_i^vee>``; since all
    lower roots are already known, p is read off directly and ``beta +
    alpha_i`` is a root exactly when q > 0.
    """
    if isinstance(label, str):
        label = CartanLabel.parse(label)
    a = cartan_matrix(label)
    n = label.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                pair = sum(a[i][j] * beta[j] for j in range(n))
                if p - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        nxt.sort(reverse=True)
        ordered.extend(nxt)
        layer = nxt
    return RootDatum(label, a, tuple(ordered))


@dataclass(frozen=True)
class GroupInvariants:
    label: CartanLabel
    exponents: tuple
    degrees: tuple
    num_pos_roots: int
    dim_g: int
    weyl_order: int

    @property
    def rank(self):
        return len(self.exponents)

    @property
    def coxeter_number(self):
        return self.exponents[-1] + 1

    @property
    def exponent_module(self):
        """Multiplicity of each exponent; ``{e: count}``."""
        return dict(Counter(self.exponents))


def invariants(datum):
    """Exponents, degrees, dimension and Weyl group order of a root datum.

    The exponents are the column lengths of the Young diagram whose k-th row
    has one box per positive root of height k.
    """
    if isinstance(datum, (str, CartanLabel)):
        datum = build_root_datum(datum)
    h = datum.heights()
    rows = [h[k] for k in range(1, max(h) + 1)]
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        raise ValidationError("height distribution is not a partition")
    r = datum.rank
    exponents = tuple(sorted(sum(1 for row in rows if row >= j) for j in range(1, r + 1)))
    degrees = tuple(e + 1 for e in exponents)
    n_pos = len(datum.positive_roots)
    return GroupInvariants(
        label=datum.label,
        exponents=exponents,
        degrees=degrees,
        num_pos_roots=n_pos,
        dim_g=2 * n_pos + r,
        weyl_order=prod(degrees),
    )


def chevalley_order(inv, q):
    """``|G(F_q)| = q^N * prod_i (q^{d_i} - 1)`` for the split simply connected G."""
    check_prime_power(q)
    return q ** inv.num_pos_roots * prod(q**d - 1 for d in inv.degrees)


def reflection_group_order(datum):
    """Order of the group generated by simple reflections acting on all roots.

    Brute-force closure over permutations of the full root set; only sensible
    for small rank.
    """
    roots = list(datum.positive_roots) + [tuple(-x for x in r) for r in datum.positive_roots]
    index = {r: k for k, r in enumerate(roots)}
    gens = []
    for i in range(datum.rank):
        perm = []
        for r in roots:
            c = datum.pairing(r, i)
            img = list(r)
            img[i] -= c
            perm.append(index[tuple(img)])
        gens.append(tuple(perm))
    identity = tuple(range(len(roots)))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = tuple(s[k] for k in g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return len(seen)
