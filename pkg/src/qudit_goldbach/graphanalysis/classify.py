"""Closed-form spectra of projective dual graphs, keyed by the shape of q.

Shapes and spectra (q is the dimension, r < s < t distinct primes):

* type1  q = r prime:          the complete graph K_{r+1}, {r, (-1)^r}
* type2  q = r s:              {q, 1^q, (-r)^s, (-s)^r}
* type3  q = r s t:            {q, t^{rs}, s^{rt}, r^{st}, (-1)^q, (-rs)^t, (-rt)^s, (-st)^r}
* type4  q = 4 r, r odd prime: {q, 2^{2r}, 0^{psi/2}, (-4)^r, (-2r)^2}
* type5  q = p^l, l > 1:       {q, 0^{psi-(p+1)}, (-q/p)^p}
* type6-listed: the tabulated spectra for q = 18, 24, 36

For type1 the K_{r+1} spectrum is used.  The form {(r+1)^1, (-1)^{r+1}}
sometimes quoted for it has r + 2 eigenvalues on r + 1 vertices and
cannot be an adjacency spectrum.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from qudit_goldbach.graphanalysis.spectrum import IntegerSpectrum
from qudit_goldbach.numtheory import dedekind_psi, factorize

TYPE6_LISTED: dict[int, dict[int, int]] = {
    18: {18: 1, 3: 6, 0: 24, -6: 3, -9: 2},
    24: {24: 1, 4: 6, 0: 36, -8: 3, -12: 2},
    36: {36: 1, 6: 6, 0: 60, -12: 3, -18: 2},
}


@dataclass(frozen=True)
class SpectrumClass:
    tag: str
    parameters: dict[str, int] = field(default_factory=dict)

    def __str__(self) -> str:
        if not self.parameters:
            return self.tag
        inner = ",".join(f"{k}={v}" for k, v in self.parameters.items())
        return f"{self.tag}({inner})"


UNCLASSIFIED = SpectrumClass("unclassified")


def _merge(pairs: list[tuple[int, int]]) -> dict[int, int]:
    out: Counter[int] = Counter()
    for lam, mult in pairs:
        out[lam] += mult
    return dict(out)


def closed_form(q: int) -> tuple[SpectrumClass, dict[int, int]] | None:
    """The predicted spectrum for q, or None when q fits no listed shape."""
    if q in TYPE6_LISTED:
        return SpectrumClass("type6-listed", {"q": q}), dict(TYPE6_LISTED[q])
    f = factorize(q)
    primes = f.primes
    exps = [e for _, e in f.factors]
    psi = dedekind_psi(q)
    if exps == [1]:
        r = primes[0]
        return SpectrumClass("type1", {"r": r}), _merge([(r, 1), (-1, r)])
    if exps == [1, 1]:
        r, s = primes
        return SpectrumClass("type2", {"r": r, "s": s}), _merge([(q, 1), (1, q), (-r, s), (-s, r)])
    if exps == [1, 1, 1]:
        r, s, t = primes
        return SpectrumClass("type3", {"r": r, "s": s, "t": t}), _merge(
            [
                (q, 1),
                (t, r * s),
                (s, r * t),
                (r, s * t),
                (-1, q),
                (-r * s, t),
                (-r * t, s),
                (-s * t, r),
            ]
        )
    if f.factors[0] == (2, 2) and len(primes) == 2 and exps[1] == 1:
        r = primes[1]
        return SpectrumClass("type4", {"r": r}), _merge(
            [(q, 1), (2, 2 * r), (0, psi // 2), (-4, r), (-2 * r, 2)]
        )
    if len(primes) == 1 and exps[0] > 1:
        p, l = f.factors[0]
        return SpectrumClass("type5", {"p": p, "l": l}), _merge(
            [(q, 1), (0, psi - (p + 1)), (-(q // p), p)]
        )
    return None


def classify_spectrum(q: int, spectrum: IntegerSpectrum) -> SpectrumClass:
    """Tag ``spectrum`` with the closed form it matches exactly, if any."""
    if not spectrum.certified:
        return UNCLASSIFIED
    predicted = closed_form(q)
    if predicted is None:
        return UNCLASSIFIED
    cls, counts = predicted
    return cls if spectrum.as_dict() == {k: v for k, v in counts.items() if v} else UNCLASSIFIED
