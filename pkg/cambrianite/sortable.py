import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache

import networkx as nx

from cambrianite.exceptions import CommutationClassTooLarge, JobSpecError, NotSortable
from cambrianite.extensions import logger
from cambrianite.functions import format_word, get_setting, parse_generators
from cambrianite.models.Report import Report


@dataclass(frozen=True)
class CoxeterElementChoice:
    """A word for c using every generator exactly once"""

    system: object
    word: tuple

    def __post_init__(self):
        if sorted(self.word) != list(range(self.system.rank)):
            raise JobSpecError(
                "A Coxeter element must use each of {} exactly once, got {}".format(
                    ",".join(self.system.generators), format_word(self.word)
                )
            )

    @classmethod
    def parse(cls, system, text):
        return cls(system, parse_generators(text, system.rank))

    @classmethod
    def default(cls, system):
        return cls(system, tuple(range(system.rank)))

    @cached_property
    def element(self):
        return self.system.element_from_word(self.word)

    def inverse(self):
        return CoxeterElementChoice(self.system, tuple(reversed(self.word)))

    def position(self, s):
        return self.word.index(s)

    def is_initial(self, s):
        """s can be moved to the front of some reduced word for c"""
        before = self.word[: self.position(s)]
        return all(self.system.matrix.m(r, s) == 2 for r in before)

    def __str__(self):
        return format_word(self.word)


@dataclass(frozen=True)
class CFactorization:
    blocks: tuple
    block_words: tuple

    @property
    def word(self):
        return tuple(itertools.chain.from_iterable(self.block_words))

    @property
    def nested(self):
        return all(a >= b for a, b in zip(self.blocks, self.blocks[1:]))

    def __len__(self):
        return sum(len(block) for block in self.blocks)

    def __str__(self):
        return format_word(self.word, self.block_words)


def c_sorting_word(w, c):
    """Greedy scan of c c c ...: take each letter that is a left descent of the remainder"""
    remainder = w
    blocks, block_words = [], []
    while remainder.length:
        block = []
        for s in c.word:
            if remainder.has_left_descent(s):
                block.append(s)
                remainder = remainder.left_multiply(s)
        blocks.append(frozenset(block))
        block_words.append(tuple(block))
    return CFactorization(tuple(blocks), tuple(block_words))


def is_c_sortable(w, c):
    return lattice_for(c).is_sortable(w)


class CambrianLattice:
    """Write-once caches for one (system, c): sorting words, sortables, projections, fibers"""

    def __init__(self, c):
        self.c = c
        self.system = c.system
        self._factorizations = {}
        self._pi_down = {}
        self._pi_up = {}

    def factorization(self, w):
        if w not in self._factorizations:
            self._factorizations[w] = c_sorting_word(w, self.c)
        return self._factorizations[w]

    def is_sortable(self, w):
        return self.factorization(w).nested

    def order_key(self, w):
        return (w.length, self.factorization(w).word)

    def format(self, w):
        return str(self.factorization(w))

    @cached_property
    def elements(self):
        return self.system.enumerate_group()

    @cached_property
    def longest(self):
        return self.system.longest_element()

    @cached_property
    def sortables(self):
        found = [w for w in self.elements if self.is_sortable(w)]
        logger.debug("{} {}-sortable elements in {}".format(len(found), self.c, self.system.name))
        return sorted(found, key=self.order_key)

    @cached_property
    def sortable_set(self):
        return frozenset(self.sortables)

    def is_antisortable(self, w):
        return lattice_for(self.c.inverse()).is_sortable(w * self.longest)

    @cached_property
    def antisortables(self):
        return [w for w in self.elements if self.is_antisortable(w)]

    def pi_down(self, w):
        if w not in self._pi_down:
            below = [u for u in self.sortables if u.weak_leq(w)]
            best = max(below, key=lambda u: u.length)
            if not all(u.weak_leq(best) for u in below):
                raise ArithmeticError("No maximum sortable element below {}".format(w))
            self._pi_down[w] = best
        return self._pi_down[w]

    def pi_up(self, w):
        if w not in self._pi_up:
            above = [u for u in self.antisortables if w.weak_leq(u)]
            best = min(above, key=lambda u: u.length)
            if not all(best.weak_leq(u) for u in above):
                raise ArithmeticError("No minimum antisortable element above {}".format(w))
            self._pi_up[w] = best
        return self._pi_up[w]

    def pi_up_via_duality(self, w):
        """pi_up for c computed as pi_down for c^-1 through x -> x w0"""
        return lattice_for(self.c.inverse()).pi_down(w * self.longest) * self.longest

    @cached_property
    def fibers(self):
        fibers = {w: [] for w in self.sortables}
        for u in self.elements:
            fibers[self.pi_down(u)].append(u)
        return fibers

    def fiber(self, w):
        if not self.is_sortable(w):
            raise NotSortable("{} is not {}-sortable".format(self.format(w), self.c))
        return self.fibers[w]

    def is_singleton(self, w):
        if not self.is_sortable(w):
            return False
        return all(
            self.is_sortable(w.right_multiply(s))
            for s in range(self.system.rank)
            if not w.has_right_descent(s)
        )

    @cached_property
    def singletons(self):
        return [w for w in self.sortables if self.is_singleton(w)]

    @cached_property
    def singletons_via_antisortable(self):
        return [w for w in self.sortables if self.is_antisortable(w)]

    @cached_property
    def singletons_via_prefixes(self):
        max_words = get_setting("CAMBRIANITE_MAX_COMMUTATION_WORDS", 10**6)
        word = self.factorization(self.longest).word
        prefixes = {(): self.system.identity()}
        for variant in commutation_class(self.system, word, max_words):
            for k in range(1, len(variant) + 1):
                prefix = variant[:k]
                if prefix not in prefixes:
                    prefixes[prefix] = prefixes[variant[: k - 1]].right_multiply(variant[k - 1])
        found = set(prefixes.values())
        return sorted(found, key=self.order_key)

    @cached_property
    def cover_graph(self):
        """Hasse diagram of the c-sortables under weak order, edges pointing upward"""
        order = nx.DiGraph()
        order.add_nodes_from(self.sortables)
        for u, v in itertools.permutations(self.sortables, 2):
            if u.length < v.length and u.weak_leq(v):
                order.add_edge(u, v)
        return nx.transitive_reduction(order)

    def is_cover(self, lower, upper):
        return self.cover_graph.has_edge(lower, upper)


@lru_cache(maxsize=None)
def lattice_for(c):
    return CambrianLattice(c)


def commutation_class(system, word, max_words=10**6):
    """All words reachable from word by swapping adjacent commuting letters"""
    word = tuple(word)
    seen = {word}
    queue = deque([word])
    while queue:
        current = queue.popleft()
        yield current
        for i in range(len(current) - 1):
            a, b = current[i], current[i + 1]
            if a != b and system.matrix.m(a, b) == 2:
                swapped = current[:i] + (b, a) + current[i + 2 :]
                if swapped not in seen:
                    seen.add(swapped)
                    if len(seen) > max_words:
                        raise CommutationClassTooLarge(
                            "Commutation class of {} exceeds {} words".format(
                                format_word(word), max_words
                            )
                        )
                    queue.append(swapped)


def enumerate_c_sortables(system, c):
    return lattice_for(c).sortables


def pi_down(w, c):
    return lattice_for(c).pi_down(w)


def pi_up(w, c):
    return lattice_for(c).pi_up(w)


def is_c_singleton(w, c, method="covers"):
    """method "covers": w and every ws above it are sortable; "antisortable": both sortable
    and antisortable"""
    lattice = lattice_for(c)
    if method == "covers":
        return lattice.is_singleton(w)
    if method == "antisortable":
        return lattice.is_sortable(w) and lattice.is_antisortable(w)
    raise ValueError("Unknown singleton test {}".format(method))


def singletons_via_prefixes(system, c):
    return lattice_for(c).singletons_via_prefixes


def cambrian_fiber(w, c):
    return lattice_for(c).fiber(w)


def singleton_agreement_check(system, c):
    lattice = lattice_for(c)
    report = Report("singleton agreement {} {}".format(system.name, c))
    by_covers = set(lattice.singletons)
    by_antisortable = set(lattice.singletons_via_antisortable)
    by_prefixes = set(lattice.singletons_via_prefixes)
    for w in sorted(by_covers ^ by_antisortable, key=lattice.order_key):
        report.fail("covers and antisortable tests disagree on {}".format(lattice.format(w)))
    for w in sorted(by_covers ^ by_prefixes, key=lattice.order_key):
        report.fail("covers and prefix tests disagree on {}".format(lattice.format(w)))
    report.details = {
        "count": len(by_covers),
        "singletons": [lattice.format(w) for w in lattice.singletons],
    }
    return report


def singleton_lattice_check(system, c):
    """Meet/join closure and distributivity of the singletons inside the weak order of W"""
    lattice = lattice_for(c)
    elements = lattice.elements
    singletons = lattice.singletons
    members = set(singletons)
    report = Report("singleton distributive lattice {} {}".format(system.name, c))

    joins, meets = {}, {}

    def join(u, v):
        key = frozenset((u, v))
        if key not in joins:
            needed = u.inversions | v.inversions
            above = [x for x in elements if needed <= x.inversions]
            best = min(above, key=lambda x: x.length)
            report.check(
                all(best.weak_leq(x) for x in above),
                "no join of {} and {}".format(lattice.format(u), lattice.format(v)),
            )
            joins[key] = best
        return joins[key]

    def meet(u, v):
        key = frozenset((u, v))
        if key not in meets:
            allowed = u.inversions & v.inversions
            below = [x for x in elements if x.inversions <= allowed]
            best = max(below, key=lambda x: x.length)
            report.check(
                all(x.weak_leq(best) for x in below),
                "no meet of {} and {}".format(lattice.format(u), lattice.format(v)),
            )
            meets[key] = best
        return meets[key]

    for u, v in itertools.combinations(singletons, 2):
        if join(u, v) not in members:
            report.fail(
                "join of {} and {} is not a singleton".format(lattice.format(u), lattice.format(v))
            )
        if meet(u, v) not in members:
            report.fail(
                "meet of {} and {} is not a singleton".format(lattice.format(u), lattice.format(v))
            )

    if report.passed:
        for x, y, z in itertools.product(singletons, repeat=3):
            if join(x, meet(y, z)) != meet(join(x, y), join(x, z)):
                report.fail(
                    "distributivity fails at {}, {}, {}".format(
                        lattice.format(x), lattice.format(y), lattice.format(z)
                    )
                )
                break

    report.check(system.identity() in members, "identity is not a singleton")
    report.check(lattice.longest in members, "longest element is not a singleton")

    order = nx.DiGraph()
    order.add_nodes_from(singletons)
    for u, v in itertools.permutations(singletons, 2):
        if u.length < v.length and u.weak_leq(v):
            order.add_edge(u, v)
    hasse = nx.transitive_reduction(order)
    report.details = {
        "size": len(singletons),
        "hasse": sorted(
            [lattice.format(u), lattice.format(v)]
            for u, v in hasse.edges()
        ),
    }
    return report


def singleton_cover_factorization_check(system, c):
    """For a singleton w and s not in D(w), the c-factorization of ws either gains a new block
    {s} or gains s in exactly one existing block"""
    lattice = lattice_for(c)
    report = Report("singleton cover factorizations {} {}".format(system.name, c))
    for w in lattice.singletons:
        blocks = lattice.factorization(w).blocks
        for s in range(system.rank):
            if w.has_right_descent(s):
                continue
            grown = lattice.factorization(w.right_multiply(s)).blocks
            appended = grown == blocks + (frozenset([s]),)
            inserted = len(grown) == len(blocks) and sum(
                1 for old, new in zip(blocks, grown) if old != new
            ) == 1 and all(
                new == old or (s not in old and new == old | {s})
                for old, new in zip(blocks, grown)
            )
            report.check(
                appended or inserted,
                "{} * s{} has factorization {}".format(
                    lattice.format(w), s + 1, lattice.format(w.right_multiply(s))
                ),
            )
    return report


def prefix_closure_check(system, c):
    """Every prefix, up to commutations, of a singleton's sorting word is a singleton"""
    lattice = lattice_for(c)
    report = Report("singleton prefix closure {} {}".format(system.name, c))
    members = set(lattice.singletons)
    max_words = get_setting("CAMBRIANITE_MAX_COMMUTATION_WORDS", 10**6)
    for w in lattice.singletons:
        for variant in commutation_class(system, lattice.factorization(w).word, max_words):
            element = system.identity()
            for s in variant:
                element = element.right_multiply(s)
                if element not in members:
                    report.fail(
                        "prefix {} of {} is not a singleton".format(
                            lattice.format(element), lattice.format(w)
                        )
                    )
    return report


def sorting_word_check(system, c):
    """Sorting words are reduced, evaluate to w, and nestedness matches the sortable count"""
    lattice = lattice_for(c)
    report = Report("sorting words {} {}".format(system.name, c))
    for w in lattice.elements:
        factorization = lattice.factorization(w)
        word = factorization.word
        report.check(len(factorization) == w.length, "{} has a word of wrong length".format(w))
        report.check(
            system.element_from_word(word) == w,
            "sorting word {} does not evaluate to its element".format(format_word(word)),
        )
    report.check(
        lattice.is_sortable(system.identity()) and lattice.is_sortable(lattice.longest),
        "identity or longest element is not sortable",
    )
    report.details = {
        "sortables": len(lattice.sortables),
        "longest": lattice.format(lattice.longest),
    }
    return report


def factorization_independence_check(system, c):
    """Words for the same Coxeter element give the same factorizations"""
    report = Report("factorization independence {} {}".format(system.name, c))
    lattice = lattice_for(c)
    for variant in commutation_class(system, c.word):
        if variant == c.word:
            continue
        other = lattice_for(CoxeterElementChoice(system, variant))
        for w in lattice.elements:
            report.check(
                lattice.factorization(w).blocks == other.factorization(w).blocks,
                "{} factors differently for c = {}".format(lattice.format(w), format_word(variant)),
            )
    return report


def projection_check(system, c):
    """pi_down lands on sortables below w, is idempotent, and fibers are intervals
    [pi_down(w), pi_up(w)]; pi_up agrees with its dual computation"""
    lattice = lattice_for(c)
    report = Report("projections {} {}".format(system.name, c))
    for w in lattice.elements:
        down = lattice.pi_down(w)
        report.check(lattice.is_sortable(down), "pi_down({}) is not sortable".format(w))
        report.check(down.weak_leq(w), "pi_down({}) is not below it".format(w))
        report.check(lattice.pi_down(down) == down, "pi_down is not idempotent at {}".format(w))
        up = lattice.pi_up(w)
        report.check(
            up == lattice.pi_up_via_duality(w),
            "pi_up({}) disagrees with its dual computation".format(lattice.format(w)),
        )
        report.check(
            lattice.pi_up(down) == up,
            "pi_up and pi_down fibers differ at {}".format(lattice.format(w)),
        )
    covered = 0
    for w in lattice.sortables:
        fiber = set(lattice.fiber(w))
        covered += len(fiber)
        top = lattice.pi_up(w)
        interval = {u for u in lattice.elements if w.weak_leq(u) and u.weak_leq(top)}
        report.check(
            fiber == interval, "fiber of {} is not an interval".format(lattice.format(w))
        )
    report.check(covered == len(lattice.elements), "fibers do not partition W")
    return report
