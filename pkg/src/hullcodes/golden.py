"""Golden worked examples with their expected facts.

Each fact is tagged ``stated`` (the value is asserted by the source the
example comes from) or ``derived`` (computed independently, for instance from
the MDS property).  ``run_examples`` evaluates them without raising, so a
wrong expectation shows up as a failed row.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Callable

import numpy as np

from . import codes as cd
from . import constructions as cs
from .errors import HullCodesError
from .gf import GF, Field
from .matgf import MatGF, det, diag, gram, rank
from .textio import parse_code_text, parse_vector


@dataclass
class Fact:
    name: str
    expected: str
    actual: str
    source: str = "stated"

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass
class Example:
    id: str
    title: str
    run: Callable[[], list[Fact]]


def load(name: str) -> cd.LinearCode:
    text = resources.files("hullcodes").joinpath("data", name).read_text()
    return parse_code_text(text)


def _params(C: cd.LinearCode, with_d: bool = True) -> str:
    if not with_d:
        return f"[{C.n},{C.k}]"
    return f"[{C.n},{C.k},{cd.minimum_distance(C)}]"


def _attempt(fn: Callable[[], str]) -> str:
    try:
        return fn()
    except HullCodesError as exc:
        return f"error: {exc}"


def vec(field: Field, text: str) -> list:
    return parse_vector(field, text)


def power_rows(field: Field, exponents) -> list[list]:
    """Rows (w^{e*i})_{i=0..q-2} for each exponent e."""
    return [[field.w ** (e * i) for i in range(field.q - 1)] for e in exponents]


def gs_exponents(s: int) -> list[int]:
    return [0] + [x for j in range(1, s + 1) for x in (j, -j)]


# --- individual examples -----------------------------------------------------------

def _lcd_gf8() -> list[Fact]:
    C = load("gf8-10-3-7.code")
    f = C.field
    w = f.w
    target = diag(f, [f.one + w ** 3, f.one + w ** 2, f.one])
    facts = [
        Fact("parameters", "[10,3,7]", _params(C)),
        Fact("lcd", "True", str(cd.is_lcd(C))),
        Fact("GG^T = diag(1+w^3, 1+w^2, 1)", "True", str(gram(C.G) == target)),
    ]

    def thm31() -> str:
        rep = cs.theorem31_construct(C)
        return " ".join(map(str, rep.scaling_original()))
    facts.append(Fact("construct thm31 scaling", "w^5 1 1 1 1 1 1 1 1 1", _attempt(thm31)))
    a = cd.ScalingVector(f, vec(f, "w^5 1 1 1 1 1 1 1 1 1"))
    facts.append(Fact("hull of C scaled by (w^5,1,...,1)", "1", str(cs.verify_hull(cd.scale(C, a)))))
    return facts


def _hull1_gf4() -> list[Fact]:
    C = load("gf4-6-3-3.code")
    f = C.field
    P = MatGF(f, C.G.data[:, 3:])
    ones = MatGF(f, np.ones((3, 3), dtype=np.int64))
    return [
        Fact("parameters", "[6,3,3]", _params(C)),
        Fact("PP^T = all-ones", "True", str(gram(P) == ones)),
        Fact("rank(GG^T)", "2", str(rank(gram(C.G)))),
        Fact("hull dimension", "1", str(cd.hull(C).dim)),
        Fact("orthogonal codewords", "4 of 64", f"{cd.orthogonal_count(C)} of {f.q ** C.k}", "derived"),
        Fact("mds", "False", str(cd.is_mds(C))),
    ]


def _cor_gf4() -> list[Fact]:
    C = load("gf4-4-2-2.code")
    f = C.field
    facts = [
        Fact("parameters", "[4,2,2]", _params(C)),
        Fact("det(GG^T) = 1 + w^2", str(f.one + f.w ** 2), str(det(gram(C.G)))),
    ]

    def cor() -> str:
        rep = cs.corollary_lcd_to_one(C)
        return str(rep.verified_hull)
    facts.append(Fact("corollary output hull", "1", _attempt(cor)))
    G_lam = load("gf4-4-2-2-lambda.code")
    a = cd.ScalingVector(f, vec(f, "1 w^2 1 1"))
    facts.append(Fact("hull of G_lambda scaled by (1,w^2,1,1)", "2", str(cs.verify_hull(cd.scale(G_lam, a)))))
    return facts


def _con1_facts(label: str, base: cd.LinearCode, top: str, det_expected: str,
                base_params: str | None, ext_params: str | None,
                source: str = "stated") -> list[Fact]:
    f = base.field
    t = vec(f, top)
    facts = []
    if base_params is not None:
        facts.append(Fact(f"{label} parameters", base_params, _params(base), source))
    ext = cd.LinearCode(cs.extension_matrix(base, t[0], t[1:]))
    facts.append(Fact(f"{label} det(G~G~^T)", det_expected, str(det(gram(ext.G)))))
    if ext_params is not None:
        facts.append(Fact(f"{label} extended parameters", ext_params, _params(ext)))

    def certify() -> str:
        rep = cs.construction1_extend(base, t[0], t[1:])
        witness = " ".join(map(str, rep.scaling))
        return f"hull {rep.verified_hull} via ({witness})" if rep.ok else "unverified"
    got = _attempt(certify)
    facts.append(Fact(f"{label} certified one-dimensional hull", "True", str(got.startswith("hull 1 "))))
    return facts


def _con1_gf4() -> list[Fact]:
    f = GF(4)
    base = cd.make_code(f, [[1, 1, 1]])
    return _con1_facts("C", base, "w^2 w 1 0", "w", "[3,1,3]", "[4,2,3]")


_TOP8 = "w^5 w^6 w^3 w^4 w w^2 1 0"
_TOP16 = "w^10 w^9 1 w^5 w^3 w^8 w w^2 w^7 w^13 w^4 w^14 w^12 w^11 w^6 0"


def _con1_gf8() -> list[Fact]:
    f = GF(8)
    facts = []
    # The third base code is MDS, so its distance is 3.
    expected = [("[7,1,7]", "[8,2,7]", "stated"), ("[7,3,5]", "[8,4,4]", "stated"),
                ("[7,5,3]", "[8,6,2]", "derived")]
    for s, (bp, ep, src) in enumerate(expected):
        base = cd.make_code(f, power_rows(f, gs_exponents(s)))
        facts += _con1_facts(f"C{s + 1}", base, _TOP8, "w^3", bp, ep, src)
    return facts


def con1_gf16_codes() -> list[cd.LinearCode]:
    f = GF(16)
    return [cd.make_code(f, power_rows(f, gs_exponents(s))) for s in range(7)]


def _con1_gf16() -> list[Fact]:
    facts = []
    ext_params = ["[16,2,15]", "[16,4,11]", "[16,6,9]"]
    for i, base in enumerate(con1_gf16_codes()):
        bp = f"[15,{base.k},{16 - base.k}]" if base.k <= 5 else None
        ep = ext_params[i] if i < len(ext_params) else None
        facts += _con1_facts(f"C{i + 1}", base, _TOP16, "w^5", bp, ep)
    return facts


def _con1_gs() -> list[Fact]:
    facts = []
    for q in (4, 8, 16):
        f = GF(q)
        for s in range(q // 2):
            G = cd.make_code(f, power_rows(f, gs_exponents(s)))
            facts.append(Fact(f"q={q} s={s} det(G_sG_s^T)", "1", str(det(gram(G.G)))))

            def search(G=G) -> str:
                rep = cs.construction1_search(G)
                return str(rep.verified_hull == 1 and rep.ok)
            facts.append(Fact(f"q={q} s={s} extension certified", "True", _attempt(search)))
    return facts


def _sum_lcd() -> list[Fact]:
    C1, C2 = load("gf4-sum-lcd-1.code"), load("gf4-sum-lcd-2.code")
    S = cd.code_sum(C1, C2)
    return [
        Fact("C1 lcd", "True", str(cd.is_lcd(C1))),
        Fact("C2 lcd", "True", str(cd.is_lcd(C2))),
        Fact("sum parameters", "[4,3,2]", _params(S)),
        Fact("sum lcd", "True", str(cd.is_lcd(S))),
    ]


def _sum_hull() -> list[Fact]:
    C1, C2 = load("gf4-sum-hull-1.code"), load("gf4-sum-hull-2.code")
    S = cd.code_sum(C1, C2)
    return [
        Fact("C1 lcd", "True", str(cd.is_lcd(C1))),
        Fact("C2 hull dimension", "1", str(cd.hull(C2).dim)),
        Fact("sum parameters", "[5,3,2]", _params(S)),
        Fact("sum hull dimension", "1", str(cd.hull(S).dim)),
    ]


def _extend_lcd() -> list[Fact]:
    C = load("gf8-5-2-4.code")
    d = vec(C.field, "0 0 1 w^5 w^5")
    E = cd.extend_with_dual_word(C, d)
    return [
        Fact("parameters", "[5,2,4]", _params(C)),
        Fact("lcd", "True", str(cd.is_lcd(C))),
        Fact("extended parameters", "[6,3,3]", _params(E)),
        Fact("extended hull dimension", "1", str(cd.hull(E).dim)),
    ]


def _extend_hull() -> list[Fact]:
    C = load("gf8-6-4-3.code")
    d = vec(C.field, "1 0 w^5 w^3 1 w^6")
    E = cd.extend_with_dual_word(C, d)
    return [
        Fact("parameters", "[6,4,3]", _params(C)),
        Fact("mds", "True", str(cd.is_mds(C))),
        Fact("hull dimension", "1", str(cd.hull(C).dim)),
        Fact("extended parameters", "[7,5,3]", _params(E)),
        Fact("extended hull dimension", "2", str(cd.hull(E).dim)),
    ]


EXAMPLES: list[Example] = [
    Example("lcd-gf8-10-3", "LCD [10,3,7] over GF(8) to a one-dimensional hull", _lcd_gf8),
    Example("hull1-gf4-6-3", "[6,3,3] over GF(4) with a one-dimensional hull", _hull1_gf4),
    Example("cor-gf4-4-2", "[4,2,2] over GF(4): LCD to hull 1, then hull 2", _cor_gf4),
    Example("con1-gf4", "extension of the [3,1,3] repetition code over GF(4)", _con1_gf4),
    Example("con1-gf8", "extensions of three Reed-Solomon codes over GF(8)", _con1_gf8),
    Example("con1-gf16", "extensions of seven Reed-Solomon codes over GF(16)", _con1_gf16),
    Example("con1-gs", "the G_s family over GF(4), GF(8), GF(16)", _con1_gs),
    Example("sum-lcd-gf4", "sum of two LCD codes over GF(4)", _sum_lcd),
    Example("sum-hull1-gf4", "sum of an LCD code and a hull-1 code over GF(4)", _sum_hull),
    Example("extend-gf8-5-2", "LCD [5,2,4] over GF(8) extended by a dual word", _extend_lcd),
    Example("extend-gf8-6-4", "MDS [6,4,3] over GF(8) extended by a dual word", _extend_hull),
]


def example_ids() -> list[str]:
    return [e.id for e in EXAMPLES]


def run_examples(only: str | None = None) -> list[tuple[Example, list[Fact]]]:
    chosen = [e for e in EXAMPLES if only is None or e.id == only]
    if only is not None and not chosen:
        raise KeyError(f"unknown example {only!r}; known: {', '.join(example_ids())}")
    return [(e, e.run()) for e in chosen]
