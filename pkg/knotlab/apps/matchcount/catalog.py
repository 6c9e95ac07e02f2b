"""
Chord configurations with multiplicities and the catalog file they live in.

Catalog entries look like::

    key: v3.1.D1
    circles: 1
    chords: 1:1 2:1 3:1           # chord_id:multiplicity
    circle1: 1 2 3 1 2 3          # cyclic endpoint word

Entries are separated by blank lines; ``#`` starts a comment.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from django.conf import settings

from knotlab.core.errors import CodeSyntaxError, MissingKey, ValidationError

logger = logging.getLogger(__name__)

REQUIRED_KEYS = (
    'v1.D1',
    'v2.D1',
    'v3.1.D1', 'v3.1.D2', 'v3.1.D3',
    'v3.2.D1', 'v3.2.D2',
    'v4.1.D1', 'v4.1.D2', 'v4.1.D3', 'v4.1.D4', 'v4.1.D5', 'v4.1.D6',
    'v4.1.E1', 'v4.1.E2', 'v4.1.E3',
    'v4.3.A1', 'v4.3.A2', 'v4.3.A3', 'v4.3.A4',
    'v4.3.A5', 'v4.3.A6', 'v4.3.A7', 'v4.3.A8',
    'v4.4.B1', 'v4.4.B2', 'v4.4.B3',
    'pat.1chord', 'pat.join', 'pat.pair.X', 'pat.pair.P',
    'pat.2join', 'pat.I432', 'pat.3chain',
)


@dataclass(frozen=True)
class Configuration:
    """
    Chord diagram on 1-4 oriented circles; each chord has multiplicity 1 or 2.

    Attributes:
        key: catalog key
        circles: per circle, the cyclic word of chord ids at its endpoints
        multiplicities: sorted (chord_id, m) pairs
    """

    key: str
    circles: Tuple[Tuple[int, ...], ...]
    multiplicities: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if not 1 <= len(self.circles) <= 4:
            raise ValidationError(f"{self.key}: 1-4 circles expected, got {len(self.circles)}")
        counts = Counter(chord for circle in self.circles for chord in circle)
        declared = dict(self.multiplicities)
        if set(counts) != set(declared):
            raise ValidationError(f"{self.key}: circle words and chord list disagree")
        for chord, count in counts.items():
            if count != 2:
                raise ValidationError(f"{self.key}: chord {chord} has {count} endpoints")
            if declared[chord] not in (1, 2):
                raise ValidationError(f"{self.key}: chord {chord} multiplicity must be 1 or 2")

    @classmethod
    def from_words(cls, key: str, words: Sequence[Sequence[int]],
                   doubled: Iterable[int] = ()) -> 'Configuration':
        doubled = set(doubled)
        chords = sorted({chord for word in words for chord in word})
        return cls(
            key,
            tuple(tuple(word) for word in words),
            tuple((chord, 2 if chord in doubled else 1) for chord in chords),
        )

    @property
    def multiplicity(self) -> Dict[int, int]:
        return dict(self.multiplicities)

    @property
    def n_chords(self) -> int:
        return len(self.multiplicities)


@dataclass(frozen=True)
class ConfigCombo:
    terms: Tuple[Tuple[Fraction, Configuration], ...] = ()


class Catalog(Mapping):
    """Validated mapping from key to Configuration."""

    def __init__(self, entries: Dict[str, Configuration], source: str = ''):
        self._entries = dict(entries)
        self.source = source

    def __getitem__(self, key: str) -> Configuration:
        try:
            return self._entries[key]
        except KeyError:
            raise MissingKey(f"catalog has no entry {key!r}", details={'key': key}) from None

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __hash__(self):
        return id(self)

    def __eq__(self, other):
        return self is other

    def combo(self, terms: Iterable[Tuple[object, str]]) -> ConfigCombo:
        """Build a ConfigCombo from (coefficient, key) pairs."""
        return ConfigCombo(tuple((Fraction(c), self[key]) for c, key in terms))


# ============================================================================
# File format
# ============================================================================

def _parse_entry(lines: Sequence[Tuple[int, str]], path: str) -> Configuration:
    fields: Dict[str, str] = {}
    for lineno, line in lines:
        if ':' not in line:
            raise CodeSyntaxError(f"{path}:{lineno}: expected 'field: value'")
        name, value = line.split(':', 1)
        name = name.strip()
        if name in fields:
            raise CodeSyntaxError(f"{path}:{lineno}: duplicate field {name!r}")
        fields[name] = value.strip()

    first = lines[0][0]
    for name in ('key', 'circles', 'chords'):
        if name not in fields:
            raise CodeSyntaxError(f"{path}:{first}: entry lacks {name!r}")
    key = fields['key']
    try:
        n_circles = int(fields['circles'])
        multiplicities = []
        for token in fields['chords'].split():
            chord, m = token.split(':')
            multiplicities.append((int(chord), int(m)))
        words = []
        for c in range(1, n_circles + 1):
            raw = fields.get(f'circle{c}')
            if raw is None:
                raise CodeSyntaxError(f"{path}:{first}: {key} lacks circle{c}")
            words.append(tuple(int(tok) for tok in raw.split()))
    except ValueError as exc:
        raise CodeSyntaxError(f"{path}:{first}: {key}: {exc}") from exc
    extra = set(fields) - {'key', 'circles', 'chords'} - {f'circle{c}' for c in range(1, n_circles + 1)}
    if extra:
        raise CodeSyntaxError(f"{path}:{first}: {key} has unknown fields {sorted(extra)}")
    return Configuration(key, tuple(words), tuple(sorted(multiplicities)))


def parse_catalog(text: str, path: str = '<string>') -> Catalog:
    entries: Dict[str, Configuration] = {}
    block = []
    for lineno, raw in enumerate(text.splitlines() + [''], start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            block.append((lineno, line))
            continue
        if block:
            config = _parse_entry(block, path)
            if config.key in entries:
                raise CodeSyntaxError(f"{path}: duplicate key {config.key!r}")
            entries[config.key] = config
            block = []
    missing = [key for key in REQUIRED_KEYS if key not in entries]
    if missing:
        raise MissingKey(f"{path}: missing keys {', '.join(missing)}", details={'missing': missing})
    return Catalog(entries, source=path)


def catalog_load(path: str) -> Catalog:
    """
    Load and validate a configuration catalog.

    Raises:
        CodeSyntaxError: malformed entry
        MissingKey: a required key is absent
    """
    with open(path, encoding='utf-8') as handle:
        catalog = parse_catalog(handle.read(), path)
    logger.debug(f"Loaded {len(catalog)} configurations from {path}")
    return catalog


@lru_cache(maxsize=8)
def cached_catalog(path: str) -> Catalog:
    return catalog_load(path)


def default_catalog() -> Catalog:
    return cached_catalog(settings.KNOTLAB_CATALOG_PATH)
