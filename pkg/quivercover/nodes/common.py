"""Helpers shared by the command nodes: name lookup and text formatting."""

from ..errors import UsageError
from ..quiver import render
from ..settings import Settings
from ..vectors import format_scalar
from ..workspace import parse_element, parse_word

CATEGORY = "QuiverCover"

WORKSPACE = ("WORKSPACE",)
SETTINGS_INPUT = {"settings": "SETTINGS"}


def settings_or_default(settings):
    return settings if isinstance(settings, Settings) else Settings.from_env()


def lookup_ideal(ws, name):
    if name not in ws.ideals:
        known = ", ".join(ws.ideals) or "none"
        raise UsageError(f"unknown ideal {name!r} (known: {known})")
    return ws.ideals[name]


def lookup_word(ws, name):
    if name not in ws.words:
        known = ", ".join(ws.words) or "none"
        raise UsageError(f"unknown word {name!r} (known: {known})")
    return ws.words[name]


def read_element(ws, text):
    return parse_element(ws.quiver, text)


def word_or_text(ws, value):
    """A word block name, or an inline ``T a (c e f g) 1 ; ...`` word."""
    if value in ws.words:
        return ws.words[value]
    if value.lstrip().startswith("T "):
        return parse_word(ws.quiver, value)
    return lookup_word(ws, value)


def path_text(p):
    return render(p)


def factor_data(f):
    return {"arrow": f.arrow, "path": render(f.path), "scalar": format_scalar(f.scalar)}


def substitution_lines(psi):
    return [f"  {label} -> {img}" for label, img in psi.images]


def yes_no(flag):
    return "yes" if flag else "no"
