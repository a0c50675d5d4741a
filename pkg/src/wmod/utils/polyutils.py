from functools import lru_cache
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.rings import PolyElement, PolyRing, ring


def variable_name(weight: int, prefix: str = "X") -> str:
    return f"{prefix}{weight}"


@lru_cache(maxsize=256)
def polynomial_ring(weights: Tuple[int, ...], prefix: str = "X") -> PolyRing:
    """Integer polynomial ring with one variable per weight, named ``X<weight>``."""
    assert len(weights) > 0, "a polynomial ring needs at least one variable"
    assert len(set(weights)) == len(weights), f"variable weights must be distinct, got {weights}"
    return ring([variable_name(w, prefix) for w in weights], ZZ)[0]


def monomial(R: PolyRing, exponents: Sequence[int], coeff: int = 1) -> PolyElement:
    return R.from_dict({tuple(int(e) for e in exponents): ZZ(coeff)})


def render_monomial(exponents: Sequence[int], weights: Sequence[int], prefix: str = "X") -> str:
    factors = []
    for e, w in zip(exponents, weights):
        if e == 0:
            continue
        name = variable_name(w, prefix)
        factors.append(name if e == 1 else f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def render_signed(terms: Iterable[Tuple[int, str]]) -> str:
    """Join ``(coefficient, monomial-string)`` pairs as ``a - b + 2*c``."""
    out = []
    for coeff, mono in terms:
        if coeff == 0:
            continue
        mag = abs(coeff)
        body = mono if mag == 1 else (str(mag) if mono == "1" else f"{mag}*{mono}")
        if not out:
            out.append(body if coeff > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(out) if out else "0"


def render_polynomial(poly: PolyElement, weights: Sequence[int], prefix: str = "X") -> str:
    terms = sorted(poly.terms(), key=lambda t: (-sum(e * w for e, w in zip(t[0], weights)), tuple(-e for e in t[0])))
    return render_signed((int(c), render_monomial(m, weights, prefix)) for m, c in terms)


def exponents_to_json(exponents: Sequence[int], weights: Sequence[int]) -> Dict[str, int]:
    return {str(w): int(e) for w, e in zip(weights, exponents)}


def exponents_from_json(data: Mapping[str, int], weights: Sequence[int]) -> Tuple[int, ...]:
    return tuple(int(data.get(str(w), 0)) for w in weights)
