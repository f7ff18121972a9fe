"""From a function into a BCK-algebra to a binary block code.

A function f from a finite label set A into a BCK-algebra X determines,
for every element r of X, the cut subset {a in A : r * f(a) = 0}.
Elements with equal cut subsets collapse into one class, each class
contributes one codeword (bit i set iff r * f(a_i) = 0), and the code
is reported with its words in descending lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import CayleyAlgebra, check_axioms
from .codes import BlockCode, Codeword, lex_sort_desc
from .errors import InputError, NotBckError


@dataclass(frozen=True)
class BckFunction:
    """A map from distinct labels into the carrier of an algebra."""

    domain: tuple[str, ...]
    algebra: CayleyAlgebra
    values: tuple[int, ...]

    def __post_init__(self):
        domain = tuple(str(s) for s in self.domain)
        values = tuple(int(v) for v in self.values)
        if not domain:
            raise InputError("function domain is empty")
        if len(set(domain)) != len(domain):
            raise InputError("duplicate label in function domain")
        if len(values) != len(domain):
            raise InputError("need exactly one value per label")
        n = self.algebra.order
        if any(not 0 <= v < n for v in values):
            raise InputError("function value outside the carrier")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "values", values)

    @classmethod
    def identity(cls, alg: CayleyAlgebra) -> "BckFunction":
        """The identity self-map; labels reuse element names when usable."""
        names = alg.names
        if names is None or len(set(names)) != len(names):
            names = tuple(str(i) for i in range(alg.order))
        return cls(names, alg, tuple(range(alg.order)))


def cut_subset(f: BckFunction, r: int) -> tuple[str, ...]:
    """Labels whose image sits above r in the induced order sense."""
    n = f.algebra.order
    if not 0 <= r < n:
        raise InputError(f"element {r} outside the carrier 0..{n - 1}")
    t = f.algebra.table
    return tuple(a for a, v in zip(f.domain, f.values) if t[r][v] == 0)


@dataclass(frozen=True)
class EquivalenceClasses:
    """Partition of the carrier by equal cut subsets.

    Classes are sorted by their smallest member, members ascending;
    ``cuts[k]`` is the common cut subset of ``classes[k]``.
    """

    classes: tuple[tuple[int, ...], ...]
    cuts: tuple[tuple[str, ...], ...]

    @property
    def count(self) -> int:
        return len(self.classes)


def equivalence_classes(f: BckFunction) -> EquivalenceClasses:
    groups: dict[tuple[str, ...], list[int]] = {}
    for r in range(f.algebra.order):
        groups.setdefault(cut_subset(f, r), []).append(r)
    ordered = sorted(groups.items(), key=lambda item: item[1][0])
    return EquivalenceClasses(
        classes=tuple(tuple(members) for _, members in ordered),
        cuts=tuple(cut for cut, _ in ordered),
    )


def generate_code(f: BckFunction) -> BlockCode:
    """The block code of f, one codeword per cut-equivalence class.

    Bit i of the word for class representative r is 1 exactly when
    r * f(a_i) = 0.  Distinct classes give distinct words, so the code
    is duplicate-free; words are returned lex-descending.
    """
    if not check_axioms(f.algebra).is_bck:
        raise NotBckError("generate_code requires a BCK-algebra")
    t = f.algebra.table
    classes = equivalence_classes(f)
    words = []
    for members in classes.classes:
        r = members[0]
        words.append(Codeword(tuple(int(t[r][v] == 0) for v in f.values)))
    return lex_sort_desc(BlockCode(tuple(words)))


def canonical_code(alg: CayleyAlgebra) -> BlockCode:
    """The code of the identity self-map: one word per element."""
    return generate_code(BckFunction.identity(alg))


def code_similar(a: CayleyAlgebra, b: CayleyAlgebra) -> bool:
    """Do two BCK-algebras generate the same canonical code?"""
    return canonical_code(a) == canonical_code(b)
