"""Access to the bundled figure transcriptions."""

from importlib import resources

from .braid import BraidWord, parse_braid_word
from .gauss import TwistedGaussCode, parse_gauss_code


def fixture_text(name: str) -> str:
    return resources.files(__package__).joinpath("fixtures", name).read_text()


def fixture_names() -> list[str]:
    root = resources.files(__package__).joinpath("fixtures")
    return sorted(p.name for p in root.iterdir() if p.name != "README")


def load_braid(name: str) -> BraidWord:
    return parse_braid_word(fixture_text(name if "." in name else name + ".braid"))


def load_code(name: str) -> TwistedGaussCode:
    return parse_gauss_code(fixture_text(name if "." in name else name + ".gauss"))
