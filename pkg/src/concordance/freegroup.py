"""Free groups, Stallings foldings, and the curve-image membership check.

Words are reduced sequences of (generator index, sign). A finitely
generated subgroup is represented by its folded core graph, on which
membership is path tracing. The module also houses the specific
inclusion-induced map from the surface group F<z,y> to the complement
group F<alpha,delta> (z maps to a^4 d^2, y maps to d' a d) and two
independent verifications that a^2, hence the curve eta_1 = phi(x) a'^2,
is not in its image: graph membership, and exhaustive classification of
the reduced suffixes of image words.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from collections.abc import Iterable, Iterator, Sequence

from .errors import ClassificationFailure, ParseError


def reduce(letters: Iterable[tuple[int, int]]) -> "Word":
    """Freely reduce a raw letter sequence into normal form."""
    stack: list[tuple[int, int]] = []
    for gen, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +-1, got {sign}")
        if stack and stack[-1] == (gen, -sign):
            stack.pop()
        else:
            stack.append((gen, sign))
    return Word(tuple(stack))


@dataclass(frozen=True)
class Word:
    """A reduced word; equality and hashing are structural."""

    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for i, (gen, sign) in enumerate(self.letters):
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +-1, got {sign}")
            if i and self.letters[i - 1] == (gen, -sign):
                raise ValueError("word is not reduced")

    @classmethod
    def identity(cls) -> "Word":
        return cls(())

    @classmethod
    def generator(cls, index: int, sign: int = 1) -> "Word":
        return cls(((index, sign),))

    @classmethod
    def from_text(cls, text: str, alphabet: str) -> "Word":
        """Parse letters named by `alphabet` chars, with ' for inverses.

        ``a a a a d d`` and ``aaaadd`` both parse; ``d' a d`` is d^-1 a d;
        ``1`` is the identity.
        """
        if text.strip() == "1":
            return cls.identity()
        letters: list[tuple[int, int]] = []
        for pos, ch in enumerate(text):
            if ch.isspace():
                continue
            if ch == "'":
                if not letters:
                    raise ParseError("' with no preceding letter", pos)
                gen, sign = letters[-1]
                letters[-1] = (gen, -sign)
            elif ch in alphabet:
                letters.append((alphabet.index(ch), 1))
            else:
                raise ParseError(f"unknown letter {ch!r}", pos)
        return reduce(letters)

    def display(self, alphabet: str = "ad") -> str:
        if not self.letters:
            return "1"
        return " ".join(alphabet[g] + ("" if s > 0 else "'")
                        for g, s in self.letters)

    def __str__(self) -> str:
        return self.display()

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return reduce(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        result = Word.identity()
        for _ in range(n):
            result = result * self
        return result


def word(text: str, alphabet: str = "ad") -> Word:
    return Word.from_text(text, alphabet)


@dataclass(frozen=True)
class Endomorphism:
    """A homomorphism between free groups, one image word per generator."""

    images: tuple[Word, ...]

    def apply(self, w: Word) -> Word:
        pieces: list[tuple[int, int]] = []
        for gen, sign in w.letters:
            if gen >= len(self.images):
                raise IndexError(f"generator {gen} outside source rank "
                                 f"{len(self.images)}")
            image = self.images[gen] if sign > 0 else self.images[gen].inverse()
            pieces.extend(image.letters)
        return reduce(pieces)


def apply(phi: Endomorphism, w: Word) -> Word:
    return phi.apply(w)


class FoldedGraph:
    """Folded core graph of a finitely generated subgroup, base vertex 0.

    Vertices are renumbered by breadth-first traversal from the base, so
    two runs of the folding produce identical tables exactly when the
    graphs are isomorphic as based labeled graphs.
    """

    def __init__(self, out: Sequence[dict[int, int]],
                 inc: Sequence[dict[int, int]]):
        self.out = tuple(dict(d) for d in out)
        self.inc = tuple(dict(d) for d in inc)
        self.base = 0

    @property
    def num_vertices(self) -> int:
        return len(self.out)

    def num_edges(self) -> int:
        return sum(len(d) for d in self.out)

    def member(self, w: Word) -> bool:
        """True iff w traces a closed path at the base vertex."""
        cur = self.base
        for gen, sign in w.letters:
            table = self.out[cur] if sign > 0 else self.inc[cur]
            nxt = table.get(gen)
            if nxt is None:
                return False
            cur = nxt
        return cur == self.base

    def canonical_form(self) -> tuple:
        return tuple(tuple(sorted(d.items())) for d in self.out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FoldedGraph):
            return NotImplemented
        return self.canonical_form() == other.canonical_form()

    def __hash__(self) -> int:
        return hash(self.canonical_form())


def subgroup_graph(generators: Sequence[Word]) -> FoldedGraph:
    """Fold the wedge of generator loops into the core membership graph."""
    edges: list[list[int]] = []  # [tail, label, head], mutated by folding
    next_vertex = 1
    for gen_word in generators:
        cur = 0
        for i, (g, s) in enumerate(gen_word.letters):
            last = i == len(gen_word.letters) - 1
            nxt = 0 if last else next_vertex
            if not last:
                next_vertex += 1
            if s > 0:
                edges.append([cur, g, nxt])
            else:
                edges.append([nxt, g, cur])
            cur = nxt

    parent = list(range(next_vertex))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    # fold until no vertex has two equal-label edges in the same direction
    changed = True
    while changed:
        changed = False
        out_seen: dict[tuple[int, int], int] = {}
        in_seen: dict[tuple[int, int], int] = {}
        for tail, label, head in edges:
            tail, head = find(tail), find(head)
            prior = out_seen.get((tail, label))
            if prior is not None and prior != head:
                parent[find(prior)] = head
                changed = True
                break
            out_seen[(tail, label)] = head
            prior = in_seen.get((head, label))
            if prior is not None and prior != tail:
                parent[find(prior)] = tail
                changed = True
                break
            in_seen[(head, label)] = tail

    edge_set = {(find(t), l, find(h)) for t, l, h in edges}

    # trim hair: non-base vertices incident to a single edge endpoint
    base = find(0)
    while True:
        degree: dict[int, int] = {}
        for t, l, h in edge_set:
            degree[t] = degree.get(t, 0) + 1
            degree[h] = degree.get(h, 0) + 1
        hair = [v for v, d in degree.items() if d == 1 and v != base]
        if not hair:
            break
        victims = set(hair)
        edge_set = {e for e in edge_set
                    if e[0] not in victims and e[2] not in victims}

    # canonical breadth-first renumbering from the base
    out_raw: dict[int, dict[int, int]] = {}
    in_raw: dict[int, dict[int, int]] = {}
    vertices = {base}
    for t, l, h in edge_set:
        out_raw.setdefault(t, {})[l] = h
        in_raw.setdefault(h, {})[l] = t
        vertices.add(t)
        vertices.add(h)
    order = {base: 0}
    queue = [base]
    while queue:
        v = queue.pop(0)
        for label in sorted(out_raw.get(v, {})):
            w = out_raw[v][label]
            if w not in order:
                order[w] = len(order)
                queue.append(w)
        for label in sorted(in_raw.get(v, {})):
            w = in_raw[v][label]
            if w not in order:
                order[w] = len(order)
                queue.append(w)
    if len(order) != len(vertices):
        raise AssertionError("folded graph is not connected")

    out = [dict() for _ in range(len(order))]
    inc = [dict() for _ in range(len(order))]
    for t, l, h in edge_set:
        out[order[t]][l] = order[h]
        inc[order[h]][l] = order[t]
    return FoldedGraph(out, inc)


def member(graph: FoldedGraph, w: Word) -> bool:
    return graph.member(w)


# the inclusion-induced map and its companions, target alphabet "ad"
ALPHA = Word.generator(0)
DELTA = Word.generator(1)


def standard_map() -> Endomorphism:
    """The surface-to-complement map: z -> a^4 d^2, y -> d' a d."""
    return Endomorphism((word("a a a a d d"), word("d' a d")))


def phi_x() -> Word:
    """Image of the other surface basis curve x = z y^-1: a^4 d a' d."""
    phi = standard_map()
    return phi.images[0] * phi.images[1].inverse()


def eta1_word() -> Word:
    """The obstruction curve in the complement group: phi(x) a'^2."""
    return phi_x() * (ALPHA.inverse() ** 2)


def epsilon_word() -> Word:
    """Derived constant: the based loop with a^3 d epsilon = phi(x)."""
    return word("d' a d a' d")


def eta1_membership_check() -> bool:
    """Whether a^2 (equivalently eta_1) lies in the image subgroup.

    Returns the folded-graph membership verdict for a^2 in
    <a^4 d^2, d' a d>; the expected answer is False.
    """
    phi = standard_map()
    graph = subgroup_graph(list(phi.images))
    return graph.member(ALPHA * ALPHA)


class SuffixKind(Enum):
    DELTA_BAR_ALPHA_BAR_4 = "ends d' a'^4"
    ALPHA_4_DELTA_2 = "ends a^4 d^2"
    ALPHA_N_DELTA = "ends a^n d"


@dataclass(frozen=True)
class SuffixClass:
    kind: SuffixKind
    alpha_exponent: int | None = None  # the nonzero n for ALPHA_N_DELTA


# int-encoded letters: +-1 is a/a', +-2 is d/d'
def _encode(w: Word) -> list[int]:
    return [(g + 1) * s for g, s in w.letters]


def _classify_encoded(img: list[int]) -> tuple[SuffixKind, int | None]:
    n = len(img)
    if n == 0:
        raise ClassificationFailure("image reduced to the empty word")
    last = img[-1]
    if last == 2:
        prev = img[-2] if n >= 2 else 0
        if prev == 1 or prev == -1:
            j = n - 2
            while j >= 0 and img[j] == prev:
                j -= 1
            return SuffixKind.ALPHA_N_DELTA, (n - 2 - j) * (1 if prev > 0 else -1)
        if (n >= 6 and prev == 2 and img[-3] == 1 and img[-4] == 1
                and img[-5] == 1 and img[-6] == 1):
            return SuffixKind.ALPHA_4_DELTA_2, None
    elif last == -1:
        if (n >= 5 and img[-2] == -1 and img[-3] == -1 and img[-4] == -1
                and img[-5] == -2):
            return SuffixKind.DELTA_BAR_ALPHA_BAR_4, None
    raise ClassificationFailure(
        f"image suffix matches no expected shape: ...{img[-8:]}")


def suffix_class(w: Word, phi: Endomorphism | None = None) -> SuffixClass:
    """Classify the reduced image of a nonempty word under the map.

    The image of any word ending in a z-syllable must end in d' a'^4 or
    a^4 d^2; a word ending in a y-syllable must end in a^n d with n != 0.
    Raises ClassificationFailure if the image fits no class, which would
    disprove the suffix induction and must never happen.
    """
    if not w.letters:
        raise ValueError("suffix class of the empty word is undefined")
    if phi is None:
        phi = standard_map()
    kind, exponent = _classify_encoded(_encode(phi.apply(w)))
    return SuffixClass(kind, exponent)


def scan_suffix_classes(max_length: int,
                        phi: Endomorphism | None = None) -> dict[SuffixKind, int]:
    """Classify images of every reduced source word up to a letter length.

    Walks the tree of reduced words in the rank-2 source group depth
    first, maintaining the reduced image incrementally, and classifies
    the image suffix at every node. Raises ClassificationFailure (with
    the offending word) if any image escapes the three classes; otherwise
    returns how often each class occurred.
    """
    if phi is None:
        phi = standard_map()
    if len(phi.images) != 2:
        raise ValueError("scan assumes a rank-2 source group")
    images = {}
    for letter in (1, -1, 2, -2):
        src = phi.images[abs(letter) - 1]
        images[letter] = tuple(_encode(src if letter > 0 else src.inverse()))

    counts = {kind: 0 for kind in SuffixKind}
    n_dbab4 = 0
    n_a4d2 = 0
    n_and = 0
    img: list[int] = []
    trail: list[int] = []

    def visit(depth: int, banned: int) -> None:
        nonlocal n_dbab4, n_a4d2, n_and
        for letter in (1, -1, 2, -2):
            if letter == banned:
                continue
            seq = images[letter]
            trail.append(letter)
            # append the image of `letter`, cancelling at the boundary;
            # both sides are reduced so all pops precede all pushes
            i = 0
            total = len(seq)
            popped = []
            while i < total and img and img[-1] == -seq[i]:
                popped.append(img.pop())
                i += 1
            pushed = total - i
            while i < total:
                img.append(seq[i])
                i += 1

            n = len(img)
            last = img[-1] if n else 0
            if last == 2:
                prev = img[-2] if n >= 2 else 0
                if prev == 1 or prev == -1:
                    n_and += 1
                elif (n >= 6 and prev == 2 and img[-3] == 1 and img[-4] == 1
                        and img[-5] == 1 and img[-6] == 1):
                    n_a4d2 += 1
                else:
                    raise ClassificationFailure(
                        f"no class for word {_trail_text(trail)}")
            elif (last == -1 and n >= 5 and img[-2] == -1 and img[-3] == -1
                    and img[-4] == -1 and img[-5] == -2):
                n_dbab4 += 1
            else:
                raise ClassificationFailure(
                    f"no class for word {_trail_text(trail)}")

            if depth < max_length:
                visit(depth + 1, -letter)

            if pushed:
                del img[-pushed:]
            img.extend(reversed(popped))
            trail.pop()

    visit(1, 0)
    counts[SuffixKind.DELTA_BAR_ALPHA_BAR_4] = n_dbab4
    counts[SuffixKind.ALPHA_4_DELTA_2] = n_a4d2
    counts[SuffixKind.ALPHA_N_DELTA] = n_and
    return counts


def _trail_text(trail: list[int]) -> str:
    return " ".join("zy"[abs(v) - 1] + ("" if v > 0 else "'") for v in trail)


def syllable_words(max_syllables: int, max_exponent: int) -> Iterator[Word]:
    """All nonempty reduced words with bounded syllable count and exponents.

    Words alternate z- and y-syllables (generators 0 and 1), each with a
    nonzero exponent of magnitude at most max_exponent.
    """
    exponents = [e for e in range(-max_exponent, max_exponent + 1) if e != 0]
    for count in range(1, max_syllables + 1):
        for start in (0, 1):
            gens = [(start + i) % 2 for i in range(count)]
            for exps in itertools.product(exponents, repeat=count):
                letters = []
                for g, e in zip(gens, exps):
                    sign = 1 if e > 0 else -1
                    letters.extend([(g, sign)] * abs(e))
                yield reduce(letters)
