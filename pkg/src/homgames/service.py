"""In-memory HTTP session API for the sequential colouring game.

Every rule decision (legality, outcome, analysis) goes through the game
functions in :mod:`homgames.quantified`; the service holds sessions and
plays the engine side, never duplicating rules.  Sessions live in memory;
operations on one session are serialized by a per-session lock.
"""

from __future__ import annotations

import threading
import uuid

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .formats import FormatError, parse_graph
from .quantified import (EXISTENTIAL, UNIVERSAL, apply_move, game_value,
                         initial_state, legal_moves, non_losing_moves,
                         strict_alternation_roles)

IN_PROGRESS = "InProgress"
EXISTENTIAL_WON = "ExistentialWon"
UNIVERSAL_WON = "UniversalWon"


class CreateSession(BaseModel):
    graph: str  # canonical graph text (may carry l lines)
    k: int = 3
    human_role: str = EXISTENTIAL
    order: list[int] | None = None  # defaults to 0..n-1
    roles: list[str] | None = None  # defaults to strict alternation


class PostMove(BaseModel):
    colour: int


class _Session:
    def __init__(self, sid, g, order, k, roles, human_role):
        self.id = sid
        self.graph = g
        self.order = order
        self.k = k
        self.roles = roles
        self.human_role = human_role
        self.state = initial_state(g, order, k, roles)
        self.history = []  # colours in play order
        self.lock = threading.Lock()

    @property
    def status(self):
        if not self.state.finished:
            return IN_PROGRESS
        if self.state.position == len(self.order):
            return EXISTENTIAL_WON
        return UNIVERSAL_WON

    def engine_turn(self):
        return (self.status == IN_PROGRESS
                and self.state.turn != self.human_role)

    def play(self, colour):
        self.state = apply_move(self.state, colour)
        self.history.append(colour)

    def engine_reply(self):
        """Engine moves while it is its turn: a non-losing colour when one
        exists, otherwise the smallest legal colour."""
        while self.engine_turn():
            good = non_losing_moves(self.state)
            pool = good or legal_moves(self.state)
            self.play(min(pool))

    def view(self):
        st = self.state
        coloured = [[v, c] for v, c in zip(st.order, st.colours)]
        nxt = st.order[st.position] if st.position < len(st.order) else None
        return {
            "id": self.id,
            "status": self.status,
            "k": self.k,
            "order": list(self.order),
            "roles": list(self.roles),
            "human_role": self.human_role,
            "coloured": coloured,
            "position": st.position,
            "next_vertex": nxt,
            "turn": st.turn if self.status == IN_PROGRESS else None,
            "legal_colours": sorted(legal_moves(st)),
            "history": list(self.history),
        }


def create_app():
    app = FastAPI(title="homgames session API")
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    sessions = {}
    registry_lock = threading.Lock()

    def get_session(sid):
        with registry_lock:
            s = sessions.get(sid)
        if s is None:
            raise HTTPException(status_code=404, detail="unknown session")
        return s

    @app.post("/sessions")
    def create(req: CreateSession):
        try:
            g = parse_graph(req.graph)
        except FormatError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        if req.human_role not in (EXISTENTIAL, UNIVERSAL):
            raise HTTPException(status_code=422,
                                detail=f"unknown role {req.human_role!r}")
        order = tuple(req.order) if req.order is not None else tuple(range(g.n))
        roles = (tuple(req.roles) if req.roles is not None
                 else strict_alternation_roles(g.n))
        try:
            s = _Session(uuid.uuid4().hex, g, order, req.k, roles,
                         req.human_role)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        s.engine_reply()
        with registry_lock:
            sessions[s.id] = s
        return s.view()

    @app.get("/sessions/{sid}")
    def get_state(sid: str):
        s = get_session(sid)
        with s.lock:
            return s.view()

    @app.post("/sessions/{sid}/moves")
    def post_move(sid: str, req: PostMove):
        s = get_session(sid)
        with s.lock:
            if s.status != IN_PROGRESS:
                raise HTTPException(status_code=409, detail="game is over")
            if s.state.turn != s.human_role:
                raise HTTPException(status_code=409, detail="not your turn")
            if req.colour not in legal_moves(s.state):
                v = s.order[s.state.position]
                if req.colour not in s.graph.vertex_list(v) or \
                        not 1 <= req.colour <= s.k:
                    detail = f"colour {req.colour} violates the list of vertex {v}"
                else:
                    detail = (f"colour {req.colour} already used by a "
                              f"neighbour of vertex {v}")
                raise HTTPException(status_code=422, detail=detail)
            s.play(req.colour)
            s.engine_reply()
            return s.view()

    @app.get("/sessions/{sid}/analysis")
    def analysis(sid: str):
        s = get_session(sid)
        with s.lock:
            return {
                "winner": (s.status.removesuffix("Won")
                           if s.status != IN_PROGRESS
                           else game_value(s.state)),
                "non_losing_colours": sorted(non_losing_moves(s.state)),
                "turn": s.state.turn,
                "status": s.status,
            }

    @app.post("/sessions/{sid}/undo")
    def undo(sid: str):
        s = get_session(sid)
        with s.lock:
            # drop trailing engine moves, then the human's last move
            hist = list(s.history)
            while hist and s.roles[len(hist) - 1] != s.human_role:
                hist.pop()
            if not hist:
                raise HTTPException(status_code=409, detail="nothing to undo")
            hist.pop()
            s.state = initial_state(s.graph, s.order, s.k, s.roles)
            s.history = []
            for c in hist:
                s.play(c)
            return s.view()

    return app


app = create_app()
