"""Finite sets of naturals and injections between them.

Worlds model the set of names allocated so far; injections model renaming
plus weakening by unused names.  Everything here is immutable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import CodomainMismatch, DomainMismatch, NotAPullback, NotCommuting


class World(frozenset):
    """A finite set of natural numbers."""

    def __new__(cls, names: Iterable[int] = ()):
        names = tuple(names)
        for n in names:
            if isinstance(n, bool) or not isinstance(n, int) or n < 0:
                raise ValueError(f"world elements must be naturals, got {n!r}")
        return super().__new__(cls, names)

    def max(self) -> int:
        """Largest name, with ``max(∅) = -1`` so that allocation starts at 0."""
        return max(self, default=-1)

    def fresh(self, k: int = 1) -> list[int]:
        """The ``k`` smallest naturals above ``max(self)``."""
        top = self.max()
        return [top + 1 + i for i in range(k)]

    def extend(self, k: int = 1) -> "World":
        return World(self | set(self.fresh(k)))

    def sorted(self) -> list[int]:
        return sorted(self)

    def to_json(self) -> list[int]:
        return sorted(self)

    def __repr__(self):
        return "{" + ",".join(map(str, sorted(self))) + "}"

    # set operators on frozenset return frozenset; keep the World type
    def __or__(self, other):
        return World(frozenset.__or__(self, other))

    def __and__(self, other):
        return World(frozenset.__and__(self, other))

    def __sub__(self, other):
        return World(frozenset.__sub__(self, other))


EMPTY = World()


def world(*names: int) -> World:
    return World(names)


class Injection:
    """An injective map ``dom -> cod`` between worlds."""

    __slots__ = ("dom", "cod", "_map", "_key")

    def __init__(self, dom: Iterable[int], cod: Iterable[int], mapping: Mapping[int, int] | Iterable[tuple[int, int]]):
        dom = dom if isinstance(dom, World) else World(dom)
        cod = cod if isinstance(cod, World) else World(cod)
        table = dict(mapping)
        if set(table) != set(dom):
            raise DomainMismatch(f"map is defined on {sorted(table)}, domain is {dom!r}")
        images = set(table.values())
        if not images <= cod:
            raise CodomainMismatch(f"images {sorted(images - cod)} not in codomain {cod!r}")
        if len(images) != len(table):
            raise ValueError("map is not injective")
        self.dom = dom
        self.cod = cod
        self._map = table
        self._key = (dom, cod, tuple(sorted(table.items())))

    @classmethod
    def identity(cls, w: Iterable[int]) -> "Injection":
        w = World(w)
        return cls(w, w, {n: n for n in w})

    @classmethod
    def inclusion(cls, small: Iterable[int], big: Iterable[int]) -> "Injection":
        small = World(small)
        return cls(small, big, {n: n for n in small})

    def __call__(self, n: int) -> int:
        return self._map[n]

    def items(self):
        return self._key[2]

    def image(self, names: Iterable[int] | None = None) -> World:
        if names is None:
            return World(self._map.values())
        return World(self._map[n] for n in names)

    def preimage(self, names: Iterable[int]) -> World:
        wanted = set(names)
        return World(n for n, m in self._map.items() if m in wanted)

    @property
    def is_inclusion(self) -> bool:
        return all(n == m for n, m in self._map.items())

    @property
    def is_iso(self) -> bool:
        return len(self.dom) == len(self.cod)

    def inverse(self) -> "Injection":
        if not self.is_iso:
            raise ValueError("only isomorphisms have inverses")
        return Injection(self.cod, self.dom, {m: n for n, m in self._map.items()})

    def partial_inverse(self) -> dict[int, int]:
        return {m: n for n, m in self._map.items()}

    def then(self, other: "Injection") -> "Injection":
        """Diagrammatic composition: first ``self``, then ``other``."""
        return compose(other, self)

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self._key[2]]

    @classmethod
    def from_json(cls, dom, cod, pairs) -> "Injection":
        return cls(dom, cod, [tuple(p) for p in pairs])

    def __eq__(self, other):
        return isinstance(other, Injection) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        body = ",".join(f"{n}↦{m}" for n, m in self._key[2])
        return f"Injection({body} : {self.dom!r}→{self.cod!r})"


def compose(v: Injection, u: Injection) -> Injection:
    """``v ∘ u``: apply ``u`` first."""
    if u.cod != v.dom:
        raise DomainMismatch(f"cannot compose: {u.cod!r} is not {v.dom!r}")
    return Injection(u.dom, v.cod, {n: v(u(n)) for n in u.dom})


@dataclass(frozen=True)
class PullbackSquare:
    """A square ``left_up ∘ left_down = right_up ∘ right_down``.

    ``low`` is the low point, ``apex`` the common codomain of the upper legs.
    Construction does not check commutation; :func:`is_pullback` does.
    """

    low: World
    apex: World
    left_up: Injection
    right_up: Injection
    left_down: Injection
    right_down: Injection

    def __post_init__(self):
        if self.left_up.cod != self.apex or self.right_up.cod != self.apex:
            raise CodomainMismatch("upper legs must land in the apex")
        if self.left_down.dom != self.low or self.right_down.dom != self.low:
            raise DomainMismatch("lower legs must start at the low point")
        if self.left_down.cod != self.left_up.dom or self.right_down.cod != self.right_up.dom:
            raise DomainMismatch("legs do not meet at the corners")

    @property
    def left(self) -> World:
        return self.left_up.dom

    @property
    def right(self) -> World:
        return self.right_up.dom

    def commutes(self) -> bool:
        return all(self.left_up(self.left_down(n)) == self.right_up(self.right_down(n)) for n in self.low)

    def to_json(self) -> dict:
        return {
            "low": self.low.to_json(),
            "apex": self.apex.to_json(),
            "left": self.left.to_json(),
            "right": self.right.to_json(),
            "x": self.left_up.to_json(),
            "x'": self.right_up.to_json(),
            "u": self.left_down.to_json(),
            "u'": self.right_down.to_json(),
        }


def pullback_cospan(f: Injection, g: Injection) -> PullbackSquare:
    """Pullback of the co-span ``f: X -> Z <- Y :g``.

    The low point is ``f⁻¹(fX ∩ gY) ⊆ X`` so the left lower leg is an inclusion.
    """
    if f.cod != g.cod:
        raise CodomainMismatch(f"co-span legs land in {f.cod!r} and {g.cod!r}")
    common = f.image() & g.image()
    low = f.preimage(common)
    back = g.partial_inverse()
    return PullbackSquare(
        low=low,
        apex=f.cod,
        left_up=f,
        right_up=g,
        left_down=Injection.inclusion(low, f.dom),
        right_down=Injection(low, g.dom, {n: back[f(n)] for n in low}),
    )


def complete_span_minimal(u: Injection, u2: Injection) -> PullbackSquare:
    """Complete the span ``W1 <-u- W -u2-> W1'`` to a minimal pullback.

    The left upper leg is the inclusion of ``W1`` into the apex.  Names of
    ``W1'`` outside ``u2(W)`` are sent, in ascending order, to the smallest
    naturals above ``max(W1)``.
    """
    if u.dom != u2.dom:
        raise DomainMismatch(f"span legs start at {u.dom!r} and {u2.dom!r}")
    back = u2.partial_inverse()
    extra = sorted(set(u2.cod) - set(back))
    fresh = u.cod.fresh(len(extra))
    right = {m: u(back[m]) for m in back}
    right.update(zip(extra, fresh))
    apex = World(u.cod | set(fresh))
    return PullbackSquare(
        low=u.dom,
        apex=apex,
        left_up=Injection.inclusion(u.cod, apex),
        right_up=Injection(u2.cod, apex, right),
        left_down=u,
        right_down=u2,
    )


def is_pullback(sq: PullbackSquare) -> bool:
    """Image-intersection criterion: ``x(W1) ∩ x'(W1') = x(u(low))``."""
    if not sq.commutes():
        raise NotCommuting("square does not commute")
    meet = sq.left_up.image() & sq.right_up.image()
    return meet == sq.left_up.image(sq.left_down.image())


def is_minimal_pullback(sq: PullbackSquare) -> bool:
    if not is_pullback(sq):
        raise NotAPullback("square is not a pullback")
    return (sq.left_up.image() | sq.right_up.image()) == sq.apex


def mediating_map(sq: PullbackSquare, v: Injection, v2: Injection) -> Injection | None:
    """The unique ``t`` with ``left_down∘t = v`` and ``right_down∘t = v2``, if any.

    ``v``/``v2`` must form a cone (``x∘v = x'∘v2``); ``None`` means the
    universal property fails for this cone.
    """
    if v.dom != v2.dom:
        raise DomainMismatch("cone legs must share a domain")
    if any(sq.left_up(v(c)) != sq.right_up(v2(c)) for c in v.dom):
        raise NotCommuting("not a cone over the co-span")
    back = sq.left_down.partial_inverse()
    table = {}
    for c in v.dom:
        t = back.get(v(c))
        if t is None or sq.right_down(t) != v2(c):
            return None
        table[c] = t
    if len(set(table.values())) != len(table):
        return None
    return Injection(v.dom, sq.low, table)


def apex_isomorphism(sq1: PullbackSquare, sq2: PullbackSquare) -> Injection | None:
    """Iso ``t: apex1 -> apex2`` with ``t∘x1 = x2`` and ``t∘x1' = x2'``, if one exists.

    Both squares must sit over the same span.  ``t`` is forced on the leg images.
    """
    if (sq1.left_down, sq1.right_down) != (sq2.left_down, sq2.right_down):
        raise DomainMismatch("squares are over different spans")
    table: dict[int, int] = {}
    for a, b in ((sq1.left_up, sq2.left_up), (sq1.right_up, sq2.right_up)):
        for n in a.dom:
            if table.setdefault(a(n), b(n)) != b(n):
                return None
    if set(table) != set(sq1.apex) or set(table.values()) != set(sq2.apex):
        return None
    if len(set(table.values())) != len(table):
        return None
    return Injection(sq1.apex, sq2.apex, table)


def factorize(u: Injection) -> tuple[tuple[Injection, Injection], tuple[Injection, Injection]]:
    """Both factorizations of ``u`` through inclusions and isomorphisms.

    Returns ``((i1, u1), (u2, i2))`` with ``u = u1∘i1`` and ``u = i2∘u2``,
    ``i1, i2`` inclusions and ``u1, u2`` isomorphisms.
    """
    img = u.image()
    u2 = Injection(u.dom, img, u.items())
    i2 = Injection.inclusion(img, u.cod)

    extra = sorted(set(u.cod) - set(img))
    if set(extra).isdisjoint(u.dom):
        carrier_extra = extra
    else:
        carrier_extra = World(set(u.dom) | set(u.cod)).fresh(len(extra))
    carrier = World(set(u.dom) | set(carrier_extra))
    i1 = Injection.inclusion(u.dom, carrier)
    table = dict(u.items())
    table.update(zip(carrier_extra, extra))
    u1 = Injection(carrier, u.cod, table)
    return (i1, u1), (u2, i2)
