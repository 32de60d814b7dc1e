"""Every ideal shipped under fixtures/, loaded once."""

from functools import lru_cache

from fsing.inputfile import load_input

from conftest import FIXTURES


@lru_cache(maxsize=None)
def load(name):
    return load_input(FIXTURES / name)


def all_ideals():
    out = []
    for path in sorted(FIXTURES.glob("*.fsg")):
        inp = load(path.name)
        for name, I in sorted(inp.ideals.items()):
            out.append((f"{path.stem}:{name}", I))
    return out


IDEALS = all_ideals()
IDS = [name for name, _ in IDEALS]
