"""
Serialization of polynomial representations.

JSON documents carry every rational as a string; the text form lists the
factored products the way they are usually written by hand, one polynomial
per line.
"""
import json
import logging
from fractions import Fraction
from typing import Any, Dict, List

from polyrep.construction.epsilon import EpsilonPoly, EpsilonTerm
from polyrep.construction.forms import LinearForm, ProductPoly
from polyrep.construction.prep import CONVENTION, PRepMetadata, PRepresentation
from polyrep.exact.rational import format_rat, format_vec, to_rat
from polyrep.utils.errors import ConstructionError, ParseError

logger = logging.getLogger(__name__)

FORMATS = ("json", "text")
DOCUMENT_KIND = "polyrep-prep"
DOCUMENT_VERSION = 1


def _rats(values) -> List[str]:
    return [format_rat(v) for v in values]


def prep_to_dict(prep: PRepresentation) -> Dict[str, Any]:
    meta = prep.metadata
    return {
        "kind": DOCUMENT_KIND,
        "version": DOCUMENT_VERSION,
        "convention": CONVENTION,
        "dimension": prep.dim,
        "shift": _rats(prep.shift),
        "metadata": {
            "mu": meta.mu,
            "source_sha256": meta.source_hash,
            "rho_mode": meta.rho_mode,
            "eps_bar": format_rat(meta.eps_bar) if meta.eps_bar is not None else None,
            "exponent_p": meta.exponent_p,
            "f_vector": list(meta.f_vector),
        },
        "products": [
            {
                "id": p.id,
                "k": p.k,
                "w": list(p.w),
                "faces": [list(f) for f in p.faces],
                "factors": [{"c0": format_rat(f.c0), "coeffs": _rats(f.coeffs)} for f in p.factors],
            }
            for p in prep.products
        ],
        "epsilon": {
            "id": prep.epsilon.id,
            "weight": format_rat(prep.epsilon.weight),
            "two_p": prep.epsilon.two_p,
            "shift": _rats(prep.epsilon.shift),
            "terms": [
                {"a": _rats(t.a), "b": format_rat(t.b), "h_minus": format_rat(t.h_minus)}
                for t in prep.epsilon.terms
            ],
        },
    }


def emit_prep_text(prep: PRepresentation) -> str:
    meta = prep.metadata
    lines = [
        "# polyrep P-representation",
        f"# dimension {prep.dim}, {prep.count} polynomials, convention {CONVENTION}",
        f"# shift {format_vec(prep.shift)}",
    ]
    if meta.eps_bar is not None:
        lines.append(f"# eps_bar {format_rat(meta.eps_bar)}, p {meta.exponent_p}, rho {meta.rho_mode}")
    for p in prep.products:
        lines.append(f"{p.id}: {p.render()} >= 0")
    lines.append(f"{prep.epsilon.id}: {prep.epsilon.render()} <= 1")
    return "\n".join(lines) + "\n"


def emit_prep(prep: PRepresentation, fmt: str = "json") -> str:
    """
    Serialize a representation.

    Args:
        prep: The representation.
        fmt: ``"json"`` or ``"text"``.

    Raises:
        ValueError: On an unknown format.
    """
    if fmt == "json":
        return json.dumps(prep_to_dict(prep), indent=2) + "\n"
    if fmt == "text":
        return emit_prep_text(prep)
    raise ValueError(f"unknown format: {fmt}")


def _vector(values, where: str):
    if not isinstance(values, list):
        raise ParseError(f"{where}: expected a list of rationals")
    try:
        return tuple(to_rat(v) for v in values)
    except ValueError as e:
        raise ParseError(f"{where}: {e}") from e


def _scalar(value, where: str) -> Fraction:
    try:
        return to_rat(value)
    except ValueError as e:
        raise ParseError(f"{where}: {e}") from e


def prep_from_dict(data: Dict[str, Any]) -> PRepresentation:
    """Rebuild a PRepresentation from its JSON dictionary."""
    try:
        if data.get("convention") != CONVENTION:
            raise ParseError(f"unsupported convention {data.get('convention')!r}")
        d = int(data["dimension"])
        products = []
        for n, entry in enumerate(data["products"]):
            where = f"products[{n}]"
            factors = tuple(
                LinearForm(_scalar(f["c0"], where), _vector(f["coeffs"], where)) for f in entry["factors"]
            )
            products.append(ProductPoly(
                k=int(entry["k"]),
                w=tuple(int(x) for x in entry["w"]),
                factors=factors,
                faces=tuple(tuple(int(i) for i in face) for face in entry.get("faces", [])),
            ))
        eps = data["epsilon"]
        terms = tuple(
            EpsilonTerm(_vector(t["a"], "epsilon"), _scalar(t["b"], "epsilon"), _scalar(t["h_minus"], "epsilon"))
            for t in eps["terms"]
        )
        epsilon = EpsilonPoly(
            terms=terms,
            weight=_scalar(eps["weight"], "epsilon.weight"),
            two_p=int(eps["two_p"]),
            shift=_vector(eps["shift"], "epsilon.shift"),
        )
        meta = data.get("metadata", {})
        metadata = PRepMetadata(
            mu=int(meta.get("mu", len(products) + 1)),
            source_hash=str(meta.get("source_sha256", "")),
            rho_mode=str(meta.get("rho_mode", "")),
            eps_bar=_scalar(meta["eps_bar"], "metadata.eps_bar") if meta.get("eps_bar") is not None else None,
            exponent_p=int(meta["exponent_p"]) if meta.get("exponent_p") is not None else None,
            f_vector=tuple(int(f) for f in meta.get("f_vector", [])),
        )
        shift = _vector(data["shift"], "shift")
    except (KeyError, TypeError, ValueError, ConstructionError) as e:
        raise ParseError(f"malformed P-representation document: {e!r}") from e
    return PRepresentation(dim=d, products=tuple(products), epsilon=epsilon, shift=shift, metadata=metadata)


def parse_prep(text: str) -> PRepresentation:
    """
    Parse a JSON P-representation document.

    Raises:
        ParseError: On invalid JSON (with line and column) or a malformed document.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from e
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object")
    prep = prep_from_dict(data)
    logger.debug(f"Parsed P-representation with {prep.count} polynomials")
    return prep
