"""Constacyclic codes as defining sets.

A code is identified with the set of exponents i (inside one residue class
mod r) where its generator vanishes at beta^i.  Everything else follows:
g = product of minimal polynomials over the set's coset leaders, h the
cofactor, duals and complements by set algebra, matrices in shift-register
form, membership by divisibility.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (BadParams, LengthMismatch, NotCosetClosed, ShiftMismatch)
from .galois import ONE, ZERO, build_tower
from .polyring import Poly, minimal_polynomial
from .qadic import cyclotomic_coset, index_universe


@dataclass(frozen=True)
class DefiningSet:
    """A union of q-cyclotomic cosets inside one residue-class universe."""

    universe: object              # IndexUniverse (cached singleton; identity eq)
    leaders: tuple
    members: frozenset = field(compare=False, repr=False)

    def __len__(self):
        return len(self.members)

    def _check_same(self, other):
        if self.universe is not other.universe:
            raise ShiftMismatch("defining sets live in different universes")

    def union(self, other):
        self._check_same(other)
        return defining_set(self.universe,
                            leaders=sorted(set(self.leaders) | set(other.leaders)))

    def intersection(self, other):
        self._check_same(other)
        return defining_set(self.universe,
                            leaders=sorted(set(self.leaders) & set(other.leaders)))

    def complement(self):
        """Omega \\ members, still coset-closed."""
        rest = [l for l in self.universe.gamma1 if l not in set(self.leaders)]
        return defining_set(self.universe, leaders=rest)

    def reflect(self):
        """{N - z : z in members}, landing in the residue class -residue."""
        uni = self.universe
        other = index_universe(uni.q, uni.r, uni.N, (-uni.residue) % uni.r)
        return defining_set(other, members={(uni.N - z) % uni.N for z in self.members})

    def issubset(self, other):
        self._check_same(other)
        return self.members <= other.members


def defining_set(universe, leaders=None, members=None):
    """Build a DefiningSet from coset leaders or from a closed member set."""
    if (leaders is None) == (members is None):
        raise BadParams("give exactly one of leaders= or members=")
    if leaders is not None:
        leaders = tuple(sorted(set(int(x) for x in leaders)))
        valid = set(universe.gamma1)
        for l in leaders:
            if l not in valid:
                raise NotCosetClosed(
                    f"{l} is not a coset leader in this residue class")
        mem = set()
        for l in leaders:
            mem.update(universe.coset(l))
        return DefiningSet(universe=universe, leaders=leaders,
                           members=frozenset(mem))
    members = {int(x) % universe.N for x in members}
    lead = set()
    for x in members:
        if not universe.contains(x):
            raise NotCosetClosed(
                f"{x} is outside the residue class {universe.residue} mod {universe.r}")
        lead.add(universe.leader_of(x))
    closure = set()
    for l in lead:
        closure.update(universe.coset(l))
    if closure != members:
        raise NotCosetClosed("member set is not a union of q-cyclotomic cosets")
    return DefiningSet(universe=universe, leaders=tuple(sorted(lead)),
                       members=frozenset(members))


class ConstacyclicCode:
    """A lambda-constacyclic code of length n over GF(q).

    lambda = beta^(residue * n); the defining set fixes the code completely.
    Instances are immutable; matrices are cached lazily.
    """

    def __init__(self, tower, dset):
        uni = dset.universe
        if (uni.q, uni.r, uni.N) != (tower.q, tower.r, tower.N):
            raise ShiftMismatch("defining set universe does not match the tower")
        self.tower = tower
        self.defining_set = dset
        self.residue = uni.residue
        self.n = tower.n
        self.lambda_log = (uni.residue * tower.n) % tower.N
        self.g = self._generator()
        self.h = self._cofactor()
        self.k = self.n - len(dset)
        self._G = None
        self._H = None

    # -- construction --

    def _generator(self):
        t = self.tower
        g = Poly.one(t)
        for leader in self.defining_set.leaders:
            g = g * minimal_polynomial(cyclotomic_coset(leader, t.q, t.N), t)
        return g

    def _cofactor(self):
        t = self.tower
        lam = self.lambda_log
        target = Poly(t, [t.neg(lam)] + [ZERO] * (self.n - 1) + [ONE])
        quo, rem = target.divmod(self.g)
        if not rem.is_zero():
            raise ArithmeticError("generator does not divide x^n - lambda; "
                                  "internal inconsistency")
        return quo

    @property
    def lambda_code(self):
        return self.tower.subfield_code(self.lambda_log)

    @property
    def params(self):
        return (self.n, self.k)

    # -- derived codes --

    def dual(self):
        """lambda^{-1}-constacyclic, generator = reciprocal of h."""
        comp = self.defining_set.complement()
        return ConstacyclicCode(self.tower, comp.reflect())

    def complement(self):
        """Same lambda, generator h."""
        return ConstacyclicCode(self.tower, self.defining_set.complement())

    def reverse(self):
        """lambda^{-1}-constacyclic, generator = reciprocal of g."""
        return ConstacyclicCode(self.tower, self.defining_set.reflect())

    def intersect(self, other):
        self._check_compatible(other)
        return ConstacyclicCode(self.tower,
                                self.defining_set.union(other.defining_set))

    def sum(self, other):
        self._check_compatible(other)
        return ConstacyclicCode(self.tower,
                                self.defining_set.intersection(other.defining_set))

    def is_subcode(self, other):
        """self <= other iff Z(other) <= Z(self)."""
        self._check_compatible(other)
        return other.defining_set.issubset(self.defining_set)

    def _check_compatible(self, other):
        if self.tower is not other.tower:
            raise ShiftMismatch("codes live over different towers")
        if self.residue != other.residue:
            raise ShiftMismatch("codes have different shift constants")

    # -- vectors --

    def encode(self, message):
        message = tuple(int(c) for c in message)
        if len(message) != self.k:
            raise LengthMismatch(f"message length {len(message)} != k = {self.k}")
        word = (Poly.from_codes(self.tower, message) * self.g).codes()
        return word + (0,) * (self.n - len(word))

    def contains(self, word):
        word = tuple(int(c) for c in word)
        if len(word) != self.n:
            raise LengthMismatch(f"word length {len(word)} != n = {self.n}")
        if self.k == 0:
            return not any(word)
        return (Poly.from_codes(self.tower, word) % self.g).is_zero()

    def twisted_shift(self, word):
        """(lambda * c_{n-1}, c_0, ..., c_{n-2})"""
        word = tuple(int(c) for c in word)
        if len(word) != self.n:
            raise LengthMismatch(f"word length {len(word)} != n = {self.n}")
        tab = self.tower.subfield_tables()
        return (int(tab.mul[self.lambda_code, word[-1]]),) + word[:-1]

    def generator_matrix(self):
        """k x n shift-register form: row j holds x^j * g(x)."""
        if self._G is None:
            gc = self.g.codes()
            G = np.zeros((self.k, self.n), dtype=np.uint8)
            for j in range(self.k):
                G[j, j:j + len(gc)] = gc
            self._G = G
        return self._G

    def parity_check_matrix(self):
        """(n-k) x n matrix whose rows generate the dual (shifts of h-hat)."""
        if self._H is None:
            if self.k == self.n:
                self._H = np.zeros((0, self.n), dtype=np.uint8)
            else:
                hc = self.h.reciprocal().codes()
                H = np.zeros((self.n - self.k, self.n), dtype=np.uint8)
                for j in range(self.n - self.k):
                    H[j, j:j + len(hc)] = hc
                self._H = H
        return self._H

    # -- self-duality --

    def _gram_is_zero(self):
        G = self.generator_matrix().astype(np.int64)
        tab = self.tower.subfield_tables()
        if tab.s == 1:
            return not ((G @ G.T) % tab.p).any()
        mul = tab.mul
        for t in range(tab.s):
            digmul = tab.dig[t][mul].astype(np.int64)  # (q, q) digit-t of products
            for i in range(self.k):
                row = digmul[G[i][None, :], G]          # (k, n)
                if (row.sum(axis=1) % tab.p).any():
                    return False
        return True

    def is_self_dual(self):
        """C == C^perp, decided by G G^T = 0 with k = n/2.

        When lambda is self-inverse the defining-set criterion
        (Z and -Z partition the class) is computed too and must agree.
        """
        method_b = (2 * self.k == self.n) and self._gram_is_zero()
        if (2 * self.lambda_log) % self.tower.N == 0:
            z = self.defining_set
            neg = z.reflect()
            method_a = (not (z.members & neg.members)
                        and (z.members | neg.members) == set(z.universe.omega1))
            if method_a != method_b:
                raise ArithmeticError(
                    "self-duality criteria disagree; internal inconsistency")
        return method_b

    # -- serialization --

    def descriptor(self, family_tag=None):
        return {
            "tower": self.tower.descriptor(),
            "residue": self.residue,
            "r": self.tower.r,
            "n": self.n,
            "k": self.k,
            "leaders": list(self.defining_set.leaders),
            "g": list(self.g.codes()),
            "family_tag": family_tag,
        }

    def __repr__(self):
        lam = self.lambda_code
        kind = "negacyclic" if (self.tower.r == 2 and self.residue == 1) else \
            f"lambda={lam}-constacyclic"
        return f"ConstacyclicCode([{self.n},{self.k}] {kind} over GF({self.tower.q}))"


def code_from_defining_set(tower, dset):
    return ConstacyclicCode(tower, dset)


def code_from_descriptor(obj):
    td = obj["tower"]
    tower = build_tower(td["p"], td["s"], td["m"], td["r"],
                        modulus=tuple(td["modulus"]))
    uni = index_universe(tower.q, tower.r, tower.N, obj.get("residue", 1))
    code = ConstacyclicCode(tower, defining_set(uni, leaders=obj["leaders"]))
    if list(code.g.codes()) != list(obj["g"]):
        raise BadParams("descriptor generator polynomial does not match "
                        "the reconstructed code")
    return code
