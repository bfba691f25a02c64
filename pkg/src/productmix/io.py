"""JSON instance files and reports with exact rationals.

Rationals are written as ``"p/q"`` strings (``"p"`` when integral) and
``-inf`` as the string ``"-inf"``; integers are also accepted on input.
"""

import json
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from .equilibrium import Auction
from .lattice import LatticeError
from .matching import GameError, TUGame
from .tropical import NEG_INF, UtilityFunction


class FormatError(ValueError):
    """Malformed input; the message names the offending field."""


def format_rational(x) -> str:
    if x == NEG_INF:
        return "-inf"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s, field: str = "value"):
    if isinstance(s, bool):
        raise FormatError(f"{field}: expected a rational, got {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        t = s.strip()
        if t == "-inf":
            return NEG_INF
        num, sep, den = t.partition("/")
        try:
            p = int(num)
            q = int(den) if sep else 1
        except ValueError:
            raise FormatError(f"{field}: {s!r} is not an integer or 'p/q' string") from None
        if q <= 0:
            raise FormatError(f"{field}: denominator must be positive in {s!r}")
        return Fraction(p, q)
    raise FormatError(f"{field}: expected an integer or 'p/q' string, got {s!r}")


def _int_vector(v, field: str, n: Optional[int] = None) -> Tuple[int, ...]:
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise FormatError(f"{field}: expected an integer array")
    if n is not None and len(v) != n:
        raise FormatError(f"{field}: expected {n} entries, got {len(v)}")
    return tuple(v)


def _require(obj: Dict[str, Any], key: str, where: str):
    if not isinstance(obj, dict):
        raise FormatError(f"{where}: expected an object")
    if key not in obj:
        raise FormatError(f"{where}.{key}: missing field" if where else f"{key}: missing field")
    return obj[key]


def parse_vectors(text: str) -> Tuple[Tuple[int, ...], ...]:
    """``"1,0;1,2"`` -> ``((1, 0), (1, 2))``."""
    try:
        vecs = tuple(tuple(int(x) for x in part.split(",")) for part in text.split(";") if part.strip())
    except ValueError:
        raise FormatError(f"vectors: cannot parse {text!r}") from None
    if not vecs or len({len(v) for v in vecs}) != 1:
        raise FormatError("vectors: need at least one vector, all of one length")
    return vecs


def parse_supply(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise FormatError(f"supply: cannot parse {text!r}") from None


def instance_from_dict(data) -> Tuple[Auction, Optional[Tuple[int, ...]], Tuple[str, ...]]:
    """(auction, supply or None, agent names) from a decoded instance file."""
    n = _require(data, "n", "")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError("n: expected a positive integer")
    agents = _require(data, "agents", "")
    if not isinstance(agents, list) or not agents:
        raise FormatError("agents: expected a nonempty list")
    utilities, names = [], []
    for j, agent in enumerate(agents):
        where = f"agents[{j}]"
        bids = _require(agent, "bids", where)
        if not isinstance(bids, list) or not bids:
            raise FormatError(f"{where}.bids: expected a nonempty list")
        values = {}
        for k, bid in enumerate(bids):
            bw = f"{where}.bids[{k}]"
            a = _int_vector(_require(bid, "bundle", bw), f"{bw}.bundle", n)
            if a in values:
                raise FormatError(f"{bw}.bundle: duplicate bundle {list(a)}")
            v = parse_rational(_require(bid, "value", bw), f"{bw}.value")
            if v == NEG_INF:
                continue
            values[a] = v
        if not values:
            raise FormatError(f"{where}.bids: every bid is -inf")
        utilities.append(UtilityFunction(values, n))
        names.append(str(agent.get("name", f"agent{j + 1}")))
    supply = None
    if "supply" in data and data["supply"] is not None:
        supply = _int_vector(data["supply"], "supply", n)
    return Auction(tuple(utilities)), supply, tuple(names)


def game_from_dict(data) -> TUGame:
    n = _require(data, "n", "")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError("n: expected a positive integer")
    coalitions = _require(data, "coalitions", "")
    if not isinstance(coalitions, list):
        raise FormatError("coalitions: expected a list")
    vals = {}
    for k, c in enumerate(coalitions):
        where = f"coalitions[{k}]"
        members = frozenset(_int_vector(_require(c, "members", where), f"{where}.members"))
        v = parse_rational(_require(c, "value", where), f"{where}.value")
        if v == NEG_INF:
            raise FormatError(f"{where}.value: must be finite")
        if members in vals:
            raise FormatError(f"{where}.members: duplicate coalition {sorted(members)}")
        vals[members] = v
    try:
        return TUGame.of(n, vals)
    except GameError as exc:
        raise FormatError(f"coalitions: {exc}") from None


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_instance(path: str):
    try:
        return instance_from_dict(_load(path))
    except LatticeError as exc:
        raise FormatError(f"agents: {exc}") from None


def load_game(path: str) -> TUGame:
    return game_from_dict(_load(path))


def instance_to_dict(auction: Auction, supply=None, names=None) -> Dict[str, Any]:
    names = names or [f"agent{j + 1}" for j in range(len(auction))]
    out: Dict[str, Any] = {
        "n": auction.dimension,
        "agents": [{"name": name,
                    "bids": [{"bundle": list(a), "value": format_rational(v)} for a, v in u.items()]}
                   for name, u in zip(names, auction.agents)],
    }
    if supply is not None:
        out["supply"] = list(supply)
    return out


def game_to_dict(game: TUGame) -> Dict[str, Any]:
    return {"n": game.n,
            "coalitions": [{"members": sorted(c), "value": format_rational(v)}
                           for c, v in game.valuations]}


def to_json(obj) -> Any:
    """Recursively convert report payloads to JSON-ready values.

    Fractions and -inf become strings, tuples become lists, frozensets
    become sorted lists.  Dict key order is preserved.
    """
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, (Fraction, float)):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, (frozenset, set)):
        return [to_json(x) for x in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [to_json(x) for x in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(report) -> str:
    return json.dumps(to_json(report), indent=2)


def rational_vector(values, field: str = "price") -> Tuple:
    return tuple(parse_rational(v, f"{field}[{i}]") for i, v in enumerate(values))
