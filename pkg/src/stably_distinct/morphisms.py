"""Ring endomorphisms and derivations of the polynomial rings.

An endomorphism is stored by its images on the generators; applying it is
simultaneous substitution.  A derivation is likewise stored by its values on
the generators and extended to the whole ring by the Leibniz rule.  Both
serialize to JSON as ``{generator name: polynomial text}`` so that every
witness map produced by this package can be persisted and re-checked.
"""

from __future__ import annotations

import json
from typing import Mapping, Union

from .errors import SignatureMismatch, UnknownVariable
from .exactfield import Scalar
from .polyring import Polynomial, RingSignature, parse_polynomial

PolyLike = Union[Polynomial, Scalar, int]


def _lift(sig: RingSignature, value: PolyLike) -> Polynomial:
    if isinstance(value, Polynomial):
        if value.sig != sig:
            raise SignatureMismatch(
                f"image lives in {value.sig.names}, expected {sig.names}")
        return value
    return Polynomial.constant(sig, value)


def _normalize_images(sig: RingSignature,
                      images: Mapping[str, PolyLike]) -> dict[str, Polynomial]:
    out: dict[str, Polynomial] = {}
    for name, value in images.items():
        sig.index(name)  # raises UnknownVariable for names outside the ring
        out[name] = _lift(sig, value)
    return out


def _infer_signature(keys) -> RingSignature:
    """Recover a ring signature from the set of generator names."""
    n = sum(1 for k in keys if k.startswith("x"))
    sig = RingSignature(n, has_w="w" in keys)
    missing = set(sig.names) - set(keys)
    extra = set(keys) - set(sig.names)
    if missing or extra:
        raise UnknownVariable(
            f"generator set does not form a ring: missing {sorted(missing)}, "
            f"unexpected {sorted(extra)}")
    return sig


class RingEndomorphism:
    """A ring map determined by where it sends each generator."""

    __slots__ = ("sig", "images")

    def __init__(self, sig: RingSignature,
                 images: Mapping[str, PolyLike] | None = None):
        self.sig = sig
        self.images = _normalize_images(sig, images or {})

    @classmethod
    def identity(cls, sig: RingSignature) -> "RingEndomorphism":
        return cls(sig)

    def image(self, name: str) -> Polynomial:
        got = self.images.get(name)
        if got is None:
            self.sig.index(name)
            return Polynomial.variable(self.sig, name)
        return got

    def apply(self, p: Polynomial) -> Polynomial:
        if p.sig != self.sig:
            raise SignatureMismatch(
                f"argument lives in {p.sig.names}, expected {self.sig.names}")
        return p.substitute(self.images)

    def __call__(self, p: Polynomial) -> Polynomial:
        return self.apply(p)

    def compose(self, other: "RingEndomorphism") -> "RingEndomorphism":
        """Return self after other: the map sending v to self(other(v))."""
        if other.sig != self.sig:
            raise SignatureMismatch("cannot compose maps of different rings")
        images = {name: self.apply(other.image(name))
                  for name in self.sig.names}
        return RingEndomorphism(self.sig, images)

    def is_identity(self) -> bool:
        return all(self.image(name) == Polynomial.variable(self.sig, name)
                   for name in self.sig.names)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingEndomorphism):
            return NotImplemented
        return self.sig == other.sig and all(
            self.image(name) == other.image(name) for name in self.sig.names)

    __hash__ = None  # type: ignore[assignment]

    def to_dict(self) -> dict[str, str]:
        return {name: str(self.image(name)) for name in self.sig.names}

    def to_json(self, **kwargs) -> str:
        kwargs.setdefault("sort_keys", True)
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: Mapping[str, str]) -> "RingEndomorphism":
        sig = _infer_signature(data.keys())
        images = {name: parse_polynomial(sig, text)
                  for name, text in data.items()}
        return cls(sig, images)

    @classmethod
    def from_json(cls, text: str) -> "RingEndomorphism":
        return cls.from_dict(json.loads(text))

    def __repr__(self) -> str:
        moved = {name: str(img) for name, img in self.images.items()
                 if img != Polynomial.variable(self.sig, name)}
        return f"RingEndomorphism({moved or 'identity'})"


class Derivation:
    """A derivation determined by its values on the generators.

    Extended to arbitrary polynomials by linearity and the Leibniz rule:
    delta(p) = sum over generators v of (dp/dv) * delta(v).
    """

    __slots__ = ("sig", "images")

    def __init__(self, sig: RingSignature,
                 images: Mapping[str, PolyLike] | None = None):
        self.sig = sig
        self.images = _normalize_images(sig, images or {})

    def image(self, name: str) -> Polynomial:
        got = self.images.get(name)
        if got is None:
            self.sig.index(name)
            return Polynomial.zero(self.sig)
        return got

    def apply(self, p: Polynomial) -> Polynomial:
        if p.sig != self.sig:
            raise SignatureMismatch(
                f"argument lives in {p.sig.names}, expected {self.sig.names}")
        total = Polynomial.zero(self.sig)
        for name, value in self.images.items():
            if value.is_zero():
                continue
            total = total + p.partial_derivative(name) * value
        return total

    def __call__(self, p: Polynomial) -> Polynomial:
        return self.apply(p)

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.images.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.sig == other.sig and all(
            self.image(name) == other.image(name) for name in self.sig.names)

    __hash__ = None  # type: ignore[assignment]

    def to_dict(self) -> dict[str, str]:
        return {name: str(self.image(name)) for name in self.sig.names}

    def to_json(self, **kwargs) -> str:
        kwargs.setdefault("sort_keys", True)
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: Mapping[str, str]) -> "Derivation":
        sig = _infer_signature(data.keys())
        images = {name: parse_polynomial(sig, text)
                  for name, text in data.items()}
        return cls(sig, images)

    @classmethod
    def from_json(cls, text: str) -> "Derivation":
        return cls.from_dict(json.loads(text))

    def __repr__(self) -> str:
        moved = {name: str(img) for name, img in self.images.items()
                 if not img.is_zero()}
        return f"Derivation({moved or 'zero'})"
