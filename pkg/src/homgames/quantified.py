"""Quantified instances and exact game-tree evaluation.

Covers quantified CNF (QBF), quantified not-all-equal triples, quantified
conjunctive formulas over the triangle with optional unary lists, and the
sequential colouring construction game.  All evaluators are exact searches
over the quantifier prefix / playing order.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

FORALL = "A"
EXISTS = "E"

EXISTENTIAL = "Existential"
UNIVERSAL = "Universal"

CONST_FALSE = "F"  # distinguished constant term in NAE triples

QBF_VAR_CAP = 20
QCSP_VAR_CAP = 40


class InstanceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Prefix:
    entries: tuple  # of (quantifier, variable id)

    def __post_init__(self):
        vs = [v for _, v in self.entries]
        if len(vs) != len(set(vs)):
            raise ValueError("prefix variables must be distinct")
        for q, _ in self.entries:
            if q not in (FORALL, EXISTS):
                raise ValueError(f"bad quantifier {q!r}")

    def variables(self):
        return tuple(v for _, v in self.entries)

    def __len__(self):
        return len(self.entries)


def prefix(*entries):
    return Prefix(tuple(entries))


@dataclass(frozen=True)
class QbfInstance:
    prefix: Prefix
    clauses: tuple  # of frozensets of (var, positive) literals

    def __post_init__(self):
        vs = set(self.prefix.variables())
        for clause in self.clauses:
            for var, _pos in clause:
                if var not in vs:
                    raise ValueError(f"literal variable {var} not quantified")


def qbf(pfx, clauses):
    return QbfInstance(pfx, tuple(frozenset(c) for c in clauses))


@dataclass(frozen=True)
class QnaeInstance:
    prefix: Prefix
    triples: tuple  # of 3-tuples, each term a (var, positive) literal or CONST_FALSE

    def __post_init__(self):
        vs = set(self.prefix.variables())
        for t in self.triples:
            if len(t) != 3:
                raise ValueError("NAE constraints take exactly three terms")
            for term in t:
                if term != CONST_FALSE and term[0] not in vs:
                    raise ValueError(f"term variable {term[0]} not quantified")


@dataclass(frozen=True)
class QcspInstance:
    prefix: Prefix
    edge_atoms: tuple  # of (u, v) variable pairs
    list_atoms: tuple = ()  # of (var, frozenset)
    allow_any_lists: bool = False  # lists beyond {1,2}/{1,3} need the flag

    def __post_init__(self):
        vs = set(self.prefix.variables())
        for u, v in self.edge_atoms:
            if u not in vs or v not in vs:
                raise ValueError("edge atom references unquantified variable")
        for v, lst in self.list_atoms:
            if v not in vs:
                raise ValueError("list atom references unquantified variable")
            if not self.allow_any_lists and frozenset(lst) not in ({1, 2}, {1, 3}):
                raise ValueError("only lists {1,2} and {1,3} are allowed here")


# ---------------------------------------------------------------------------
# QBF evaluation


def qbf_eval(i, cap=QBF_VAR_CAP):
    """Game-semantics truth of a quantified CNF."""
    if len(i.prefix) > cap:
        raise InstanceTooLarge(f"{len(i.prefix)} variables exceeds cap {cap}")

    def rec(pos, clauses):
        if any(not c for c in clauses):
            return False
        if not clauses:
            return True
        if pos == len(i.prefix.entries):
            return not clauses
        q, var = i.prefix.entries[pos]
        results = []
        for val in (False, True):
            nxt = []
            dead = False
            for c in clauses:
                if (var, val) in c:
                    continue  # satisfied
                reduced = frozenset(l for l in c if l[0] != var)
                if not reduced:
                    dead = True
                    break
                nxt.append(reduced)
            results.append(False if dead else rec(pos + 1, nxt))
        a, b = results
        return (a and b) if q == FORALL else (a or b)

    return rec(0, list(i.clauses))


# ---------------------------------------------------------------------------
# QNAE evaluation


def _nae(a, b, c):
    return not (a == b == c)


def qnae_eval(i, cap=QBF_VAR_CAP):
    """True iff Existential wins with every NAE triple satisfied.

    Triples are conjoined; CONST_FALSE is fixed to false.
    """
    if len(i.prefix) > cap:
        raise InstanceTooLarge(f"{len(i.prefix)} variables exceeds cap {cap}")
    entries = i.prefix.entries

    def term_value(term, assignment):
        if term == CONST_FALSE:
            return False
        var, pos = term
        val = assignment.get(var)
        return None if val is None else (val if pos else not val)

    def rec(pos, assignment):
        # prune triples that are already fully assigned and violated
        for t in i.triples:
            vals = [term_value(term, assignment) for term in t]
            if None not in vals and not _nae(*vals):
                return False
        if pos == len(entries):
            return True
        q, var = entries[pos]
        results = (rec(pos + 1, {**assignment, var: False}),
                   rec(pos + 1, {**assignment, var: True}))
        return all(results) if q == FORALL else any(results)

    return rec(0, {})


# ---------------------------------------------------------------------------
# QCSP(K3) evaluation

DOMAIN = (1, 2, 3)


def _qcsp_plan(i):
    """Static evaluation order: prefix blocks kept intact, variables inside
    a block reordered so each one touches already-assigned atoms early."""
    entries = i.prefix.entries
    nbrs = {v: set() for v in i.prefix.variables()}
    for u, v in i.edge_atoms:
        if u != v:
            nbrs[u].add(v)
            nbrs[v].add(u)
    order = []
    placed = set()
    pos = 0
    while pos < len(entries):
        q = entries[pos][0]
        block = []
        while pos < len(entries) and entries[pos][0] == q:
            block.append(entries[pos][1])
            pos += 1
        remaining = list(block)
        while remaining:
            # prefer a variable adjacent to something already placed
            pick = None
            for v in remaining:
                if nbrs[v] & placed:
                    pick = v
                    break
            if pick is None:
                pick = remaining[0]
            remaining.remove(pick)
            placed.add(pick)
            order.append((q, pick))
    return order, nbrs


def qcsp_eval(i, cap=QCSP_VAR_CAP):
    """Exact alternating evaluation over the triangle domain {1,2,3}."""
    if len(i.prefix) > cap:
        raise InstanceTooLarge(f"{len(i.prefix)} variables exceeds cap {cap}")
    if any(u == v for u, v in i.edge_atoms):
        return False  # a loop atom is unsatisfiable on K3
    order, nbrs = _qcsp_plan(i)
    lists = {}
    for v, lst in i.list_atoms:
        lists[v] = lists.get(v, frozenset(DOMAIN)) & frozenset(lst)
    value = {}
    # without list atoms the instance is invariant under K3 automorphisms,
    # so the first two assigned variables can be symmetry-reduced
    symmetric = not i.list_atoms

    def rec(pos):
        if pos == len(order):
            return True
        q, var = order[pos]
        allowed = lists.get(var, DOMAIN)
        if symmetric and pos == 0:
            candidates = (1,)
        elif symmetric and pos == 1:
            candidates = (1, 2)
        else:
            candidates = allowed
        ok_all = True
        ok_any = False
        for val in candidates:
            if val not in allowed:
                ok_all = False
                continue
            if any(value.get(w) == val for w in nbrs[var]):
                ok_all = False
                continue
            value[var] = val
            r = rec(pos + 1)
            del value[var]
            if r:
                ok_any = True
                if q == EXISTS:
                    return True
            else:
                ok_all = False
                if q == FORALL:
                    return False
        return ok_all if q == FORALL else ok_any

    return rec(0)


# ---------------------------------------------------------------------------
# prefix shape helpers


def alternation_blocks(p):
    """Maximal constant-quantifier blocks as (quantifier, count) pairs."""
    blocks = []
    for q, _ in p.entries:
        if blocks and blocks[-1][0] == q:
            blocks[-1] = (q, blocks[-1][1] + 1)
        else:
            blocks.append((q, 1))
    return blocks


def is_pi2k(p, k):
    """True iff the prefix fits the Pi_{2k} pattern: leading block universal,
    at most 2k alternating blocks."""
    if k < 1:
        raise ValueError("k must be positive")
    blocks = alternation_blocks(p)
    if not blocks:
        return True
    if blocks[0][0] != FORALL:
        return False
    return len(blocks) <= 2 * k


def pad_to_strict_alternation(i):
    """Insert fresh atom-free variables so quantifiers strictly alternate."""
    if not i.prefix.entries:
        return i
    used = set(i.prefix.variables())
    nxt = (max(v for v in used if isinstance(v, int)) + 1
           if any(isinstance(v, int) for v in used) else 0)
    out = []
    for q, v in i.prefix.entries:
        if out and out[-1][0] == q:
            while nxt in used:
                nxt += 1
            out.append((FORALL if q == EXISTS else EXISTS, nxt))
            used.add(nxt)
            nxt += 1
        out.append((q, v))
    return replace(i, prefix=Prefix(tuple(out)))


# ---------------------------------------------------------------------------
# sequential colouring construction game


@dataclass(frozen=True)
class GameState:
    """Immutable position: vertices of ``graph`` are coloured along ``order``;
    ``colours`` is the colour sequence of the played prefix."""

    graph: object
    order: tuple
    k: int
    roles: tuple  # player per position
    colours: tuple = ()

    def __post_init__(self):
        if sorted(self.order) != list(range(self.graph.n)):
            raise ValueError("order must cover all vertices exactly once")
        if len(self.roles) != len(self.order):
            raise ValueError("roles must cover every position")
        if len(self.colours) > len(self.order):
            raise ValueError("more moves than vertices")
        colour_of = dict(zip(self.order, self.colours))
        for v, c in colour_of.items():
            if not 1 <= c <= self.k or c not in self.graph.vertex_list(v):
                raise ValueError(f"colour {c} illegal for vertex {v}")
            if any(colour_of.get(w) == c for w in self.graph.adj[v]):
                raise ValueError("partial colouring is not proper")

    @property
    def position(self):
        return len(self.colours)

    @property
    def finished(self):
        return self.position == len(self.order) or not legal_moves(self)

    @property
    def turn(self):
        if self.position == len(self.order):
            return None
        return self.roles[self.position]


def strict_alternation_roles(n, first=EXISTENTIAL):
    other = UNIVERSAL if first == EXISTENTIAL else EXISTENTIAL
    return tuple(first if i % 2 == 0 else other for i in range(n))


def initial_state(g, order, k, roles=None):
    order = tuple(order.order if hasattr(order, "order") else order)
    if roles is None:
        roles = strict_alternation_roles(len(order))
    return GameState(g, order, k, tuple(roles))


def legal_moves(state):
    """Colours the mover may play on the next vertex in order."""
    if state.position == len(state.order):
        return frozenset()
    v = state.order[state.position]
    colour_of = dict(zip(state.order, state.colours))
    banned = {colour_of[w] for w in state.graph.adj[v] if w in colour_of}
    allowed = state.graph.vertex_list(v) & set(range(1, state.k + 1))
    return frozenset(allowed - banned)


def apply_move(state, colour):
    if colour not in legal_moves(state):
        raise ValueError(f"colour {colour} is not a legal move")
    return replace(state, colours=state.colours + (colour,))


def _live_key(state):
    """Coloured vertices that still have an uncoloured neighbour, with their
    colours; positions with equal live frontiers are game-equivalent."""
    coloured = dict(zip(state.order, state.colours))
    uncoloured = set(state.order[state.position:])
    return frozenset((v, c) for v, c in coloured.items()
                     if state.graph.adj[v] & uncoloured)


def game_value(state, memo=None):
    """Winner under optimal play from this position.

    Existential wins iff every vertex ends up coloured; a stuck mover ends
    the game with an Existential loss.
    """
    if memo is None:
        memo = {}
    if state.position == len(state.order):
        return EXISTENTIAL
    key = (state.position, _live_key(state))
    if key in memo:
        return memo[key]
    moves = legal_moves(state)
    if not moves:
        memo[key] = UNIVERSAL
        return UNIVERSAL
    mover = state.roles[state.position]
    other = UNIVERSAL if mover == EXISTENTIAL else EXISTENTIAL
    result = other
    for c in sorted(moves):
        if game_value(apply_move(state, c), memo) == mover:
            result = mover
            break
    memo[key] = result
    return result


def non_losing_moves(state, memo=None):
    """Colours after which the mover still wins under optimal play."""
    if memo is None:
        memo = {}
    mover = state.turn
    if mover is None:
        return frozenset()
    return frozenset(c for c in legal_moves(state)
                     if game_value(apply_move(state, c), memo) == mover)


def game_winner(g, order, k, roles=None):
    """Exact minimax winner of the sequential colouring game."""
    return game_value(initial_state(g, order, k, roles))


def game_qcsp_equivalent(g, order, universal_vertices):
    """True iff no universal vertex has an earlier neighbour in the order,
    so the mover is never constrained and the game equals QCSP semantics."""
    order = tuple(order.order if hasattr(order, "order") else order)
    pos = {v: i for i, v in enumerate(order)}
    for v in universal_vertices:
        if any(pos[w] < pos[v] for w in g.adj[v]):
            return False
    return True
