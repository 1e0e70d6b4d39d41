"""The free unital noncommutative algebra on d generators.

Elements are finite linear combinations of words (tuples of generator
indices); the empty word is the unit. Words of length at most D span the
degree-D piece of the word-length filtration, and all coordinate vectors in
the package use one fixed basis order: by length, then lexicographically.
"""

import itertools

from .errors import ResourceLimitError, SchemaError
from .scalars import ONE, ZERO, CycScalar, scalar_from_json, scalar_to_json

DEFAULT_WORD_CAP = 10**6

NEG_INF = float("-inf")


def word_key(w):
    return (len(w), w)


def filtration_dim(d, degree):
    """Number of words of length <= degree over a d-letter alphabet."""
    if d == 0:
        return 1
    if d == 1:
        return degree + 1
    return (d ** (degree + 1) - 1) // (d - 1)


class FreeElement:
    """Sparse element of the free algebra on `d` generators.

    `terms` maps words to nonzero scalars; iteration is always in
    length-lex order.
    """

    __slots__ = ("d", "terms")

    def __init__(self, d, terms=None):
        self.d = d
        self.terms = {}
        if terms:
            for w, c in terms.items():
                c = CycScalar._coerce(c)
                if c is None:
                    raise TypeError("coefficients must be scalars")
                if not c.is_zero():
                    self.terms[tuple(w)] = c

    @classmethod
    def _raw(cls, d, terms):
        x = object.__new__(cls)
        x.d = d
        x.terms = terms
        return x

    @classmethod
    def zero(cls, d):
        return cls._raw(d, {})

    @classmethod
    def unit(cls, d):
        return cls._raw(d, {(): ONE})

    @classmethod
    def generator(cls, d, k):
        if not 0 <= k < d:
            raise ValueError(f"generator index {k} out of range for alphabet {d}")
        return cls._raw(d, {(k,): ONE})

    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        """Max word length, with -inf for the zero element."""
        if not self.terms:
            return NEG_INF
        return max(len(w) for w in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]))

    def _check_alphabet(self, other):
        if self.d != other.d:
            raise ValueError(f"alphabet mismatch: {self.d} vs {other.d}")

    def __add__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        self._check_alphabet(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            cur = terms.get(w)
            nv = c if cur is None else cur + c
            if nv.is_zero():
                if cur is not None:
                    del terms[w]
            else:
                terms[w] = nv
        return FreeElement._raw(self.d, terms)

    def __neg__(self):
        return FreeElement._raw(self.d, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        self._check_alphabet(other)
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                cur = terms.get(w)
                nv = c if cur is None else cur + c
                if nv.is_zero():
                    if cur is not None:
                        del terms[w]
                else:
                    terms[w] = nv
        return FreeElement._raw(self.d, terms)

    def scale(self, c):
        c = CycScalar._coerce(c)
        if c.is_zero():
            return FreeElement.zero(self.d)
        return FreeElement._raw(self.d, {w: c * v for w, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self.d == other.d and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            word = "*".join(f"e{k}" for k in w) if w else "1"
            cs = str(c)
            if cs == "1":
                text = word
            elif cs == "-1":
                text = f"-{word}" if w else "-1"
            elif w:
                text = f"({cs})*{word}" if (" " in cs) else f"{cs}*{word}"
            else:
                text = f"({cs})" if (" " in cs) else cs
            parts.append(text)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"FreeElement<d={self.d}: {self}>"


class FiltrationBasis:
    """All words of length <= degree over a d-letter alphabet, length-lex ordered."""

    __slots__ = ("d", "degree", "words", "_index")

    def __init__(self, d, degree, words):
        self.d = d
        self.degree = degree
        self.words = tuple(words)
        self._index = {w: i for i, w in enumerate(self.words)}

    def __len__(self):
        return len(self.words)

    def index_of(self, w):
        return self._index[w]

    def coords_sparse(self, x):
        if x.d != self.d:
            raise ValueError(f"alphabet mismatch: {x.d} vs {self.d}")
        out = {}
        for w, c in x.terms.items():
            idx = self._index.get(w)
            if idx is None:
                raise ValueError(
                    f"element of degree {len(w)} exceeds basis degree {self.degree}"
                )
            out[idx] = c
        return out

    def coords(self, x):
        sparse = self.coords_sparse(x)
        return tuple(sparse.get(i, ZERO) for i in range(len(self.words)))

    def element(self, coords):
        if len(coords) != len(self.words):
            raise ValueError(
                f"coordinate length {len(coords)} does not match basis size {len(self.words)}"
            )
        terms = {}
        for w, c in zip(self.words, coords):
            c = CycScalar._coerce(c)
            if not c.is_zero():
                terms[w] = c
        return FreeElement._raw(self.d, terms)

    def element_sparse(self, coord_map):
        terms = {}
        for i in sorted(coord_map):
            c = coord_map[i]
            if not c.is_zero():
                terms[self.words[i]] = c
        return FreeElement._raw(self.d, terms)


def enumerate_words(d, degree, cap=DEFAULT_WORD_CAP):
    """The filtration basis at `degree`, guarded by a word-count cap."""
    if d < 0 or degree < 0:
        raise ValueError("alphabet size and degree must be nonnegative")
    size = filtration_dim(d, degree)
    if size > cap:
        raise ResourceLimitError(
            f"word space dimension {size} exceeds cap {cap} "
            f"(alphabet {d}, degree {degree})"
        )
    words = []
    for length in range(degree + 1):
        words.extend(itertools.product(range(d), repeat=length))
    return FiltrationBasis(d, degree, words)


def to_coordinates(x, basis):
    return basis.coords(x)


def from_coordinates(coords, basis):
    return basis.element(coords)


def substitute(x, images, d_out=None):
    """Apply the unital algebra homomorphism sending generator k to images[k]."""
    if len(images) != x.d:
        raise ValueError(f"need {x.d} images, got {len(images)}")
    if images:
        d_out = images[0].d
        if any(img.d != d_out for img in images):
            raise ValueError("images live over different alphabets")
    elif d_out is None:
        raise ValueError("d_out required when the source alphabet is empty")
    cache = {(): FreeElement.unit(d_out)}

    def image_of(w):
        got = cache.get(w)
        if got is None:
            got = image_of(w[:-1]) * images[w[-1]]
            cache[w] = got
        return got

    result = FreeElement.zero(d_out)
    for w, c in sorted(x.terms.items(), key=word_key):
        result = result + image_of(w).scale(c)
    return result


def induced_endomorphism(lin, x):
    """The algebra endomorphism induced by a linear map on generators.

    Column convention: generator k maps to sum_p lin[p, k] * e_p.
    """
    if not lin.is_square() or lin.rows != x.d:
        raise ValueError(
            f"linear map must be {x.d}x{x.d}, got {lin.rows}x{lin.cols}"
        )
    images = []
    for k in range(x.d):
        terms = {}
        for p in range(x.d):
            c = lin.entry(p, k)
            if not c.is_zero():
                terms[(p,)] = c
        images.append(FreeElement._raw(x.d, terms))
    return substitute(x, images, d_out=x.d)


def derivation(gen_map, x):
    """The unique derivation with D(e_k) = sum_p gen_map[p, k] * e_p and D(1) = 0.

    Satisfies the Leibniz rule, so it is the infinitesimal form of the
    induced endomorphism family of I + t*gen_map.
    """
    if not gen_map.is_square() or gen_map.rows != x.d:
        raise ValueError(
            f"linear map must be {x.d}x{x.d}, got {gen_map.rows}x{gen_map.cols}"
        )
    d = x.d
    terms = {}
    for w, c in x.terms.items():
        for pos, letter in enumerate(w):
            for q in range(d):
                coeff = gen_map.entry(q, letter)
                if coeff.is_zero():
                    continue
                nw = w[:pos] + (q,) + w[pos + 1 :]
                add = c * coeff
                cur = terms.get(nw)
                nv = add if cur is None else cur + add
                if nv.is_zero():
                    if cur is not None:
                        del terms[nw]
                else:
                    terms[nw] = nv
    return FreeElement._raw(d, terms)


def element_to_json(x):
    return {
        "d": x.d,
        "terms": [
            {"w": list(w), "c": scalar_to_json(c)} for w, c in x.sorted_terms()
        ],
    }


def element_from_json(doc, path, expect_d=None):
    if not isinstance(doc, dict):
        raise SchemaError(path, "element must be an object")
    unknown = set(doc) - {"d", "terms"}
    if unknown:
        raise SchemaError(path, f"unknown fields: {sorted(unknown)}")
    if "d" not in doc or "terms" not in doc:
        raise SchemaError(path, "element requires fields 'd' and 'terms'")
    d = doc["d"]
    if not isinstance(d, int) or d < 0:
        raise SchemaError(f"{path}.d", "alphabet size must be a nonnegative integer")
    if expect_d is not None and d != expect_d:
        raise SchemaError(f"{path}.d", f"expected alphabet {expect_d}, got {d}")
    raw = doc["terms"]
    if not isinstance(raw, list):
        raise SchemaError(f"{path}.terms", "terms must be a list")
    terms = {}
    prev_key = None
    for i, item in enumerate(raw):
        tpath = f"{path}.terms[{i}]"
        if not isinstance(item, dict) or set(item) != {"w", "c"}:
            raise SchemaError(tpath, "term must be an object with fields 'w' and 'c'")
        w = item["w"]
        if not isinstance(w, list) or not all(
            isinstance(k, int) and 0 <= k < d for k in w
        ):
            raise SchemaError(f"{tpath}.w", f"word letters must be integers in [0, {d})")
        w = tuple(w)
        if w in terms:
            raise SchemaError(f"{tpath}.w", "duplicate word")
        key = word_key(w)
        if prev_key is not None and key <= prev_key:
            raise SchemaError(f"{tpath}.w", "terms not in length-lex order")
        prev_key = key
        c = scalar_from_json(item["c"], f"{tpath}.c")
        if c.is_zero():
            raise SchemaError(f"{tpath}.c", "zero coefficients may not be stored")
        terms[w] = c
    return FreeElement._raw(d, terms)
