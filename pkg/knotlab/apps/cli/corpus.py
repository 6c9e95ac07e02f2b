"""
Diagrams the verification commands run over: the curated fixtures shipped
with the app plus random braid closures.
"""
import logging
import random
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from django.conf import settings

from knotlab.apps.linkcode.braids import from_braid, random_braid_word
from knotlab.apps.linkcode.codes import LinkCode, parse_link, serialize

logger = logging.getLogger(__name__)

FIXTURE_SUFFIX = '.sgc'
MIN_STRANDS = 2
MAX_STRANDS = 4


def read_code(path: str) -> LinkCode:
    """
    Raises:
        CodeSyntaxError, ValidationError: the file is not a valid link code
    """
    with open(path, encoding='utf-8') as handle:
        return parse_link(handle.read())


def load_fixtures(directory: Optional[str] = None) -> Dict[str, LinkCode]:
    """Fixture name (file stem) -> diagram, sorted by name."""
    root = Path(directory or settings.KNOTLAB_FIXTURES_DIR)
    fixtures = {path.stem: read_code(str(path)) for path in sorted(root.glob(f'*{FIXTURE_SUFFIX}'))}
    logger.debug(f"Loaded {len(fixtures)} fixtures from {root}")
    return fixtures


def random_corpus(seed: int, size: int, max_crossings: Optional[int] = None,
                  max_components: Optional[int] = None) -> List[Tuple[str, LinkCode]]:
    """
    ``size`` closures of random braid words, each with at most
    ``max_crossings`` letters and ``max_components`` components. The same
    seed always yields the same corpus.
    """
    max_crossings = max_crossings or settings.KNOTLAB_MAX_CROSSINGS
    max_components = max_components or settings.KNOTLAB_MAX_COMPONENTS
    rng = random.Random(seed)
    corpus = []
    while len(corpus) < size:
        strands = rng.randint(MIN_STRANDS, MAX_STRANDS)
        word = random_braid_word(rng, strands, rng.randint(1, max_crossings))
        link = from_braid(word, strands)
        if link.n_components > max_components:
            continue
        corpus.append((f"braid{len(corpus)}:{word}", link))
    return corpus


def full_corpus(seed: int, size: int) -> List[Tuple[str, str]]:
    """Curated fixtures followed by the random corpus, as (name, code text) pairs."""
    entries = [(name, serialize(link)) for name, link in load_fixtures().items()]
    entries.extend((name, serialize(link)) for name, link in random_corpus(seed, size))
    logger.info(f"Corpus: {len(entries) - size} fixtures + {size} random diagrams (seed {seed})")
    return entries
