import re
from fractions import Fraction

from flask import current_app as app
from flask import has_app_context

from cambrianite.defaultconfig import DefaultConfig
from cambrianite.exceptions import JobSpecError

GENERATOR_PATTERN = re.compile(r"^\s*s?(\d+)\s*$")


def get_setting(name, default=None):
    """Read a setting from the running app, falling back to DefaultConfig outside of one."""
    if has_app_context():
        value = app.config.get(name)
        if value is not None:
            return value
    return getattr(DefaultConfig, name, default)


def generator_name(index):
    return "s{}".format(index + 1)


def format_word(letters, blocks=None):
    """Render a word as "s1s2s3", optionally with "|" between c-factorization blocks"""
    if not letters:
        return "e"
    if blocks is None:
        return "".join(generator_name(s) for s in letters)
    return "|".join("".join(generator_name(s) for s in block) for block in blocks)


def parse_generators(text, rank):
    """Parse "s1,s2,s3", "1,2,3" or "s1s2s3" into zero-based generator indices"""
    if isinstance(text, (list, tuple)):
        tokens = [str(token) for token in text]
    elif "," in text:
        tokens = text.split(",")
    else:
        tokens = [token for token in re.split(r"(?=s)", text.strip()) if token]

    letters = []
    for token in tokens:
        match = GENERATOR_PATTERN.match(token)
        if not match:
            raise JobSpecError("Invalid generator name: {}".format(token))
        index = int(match.group(1)) - 1
        if index < 0 or index >= rank:
            raise JobSpecError("Generator {} out of range for rank {}".format(token.strip(), rank))
        letters.append(index)
    return tuple(letters)


def parse_fraction(value):
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise JobSpecError("Invalid rational number {}: {}".format(value, e))


def parse_fractions(text):
    if isinstance(text, (list, tuple)):
        return [parse_fraction(value) for value in text]
    return [parse_fraction(value) for value in str(text).split(",") if value.strip()]


def format_root(coefficients):
    """Render a root given by simple-root coefficients, e.g. "a1+a2" or "-a2" """
    terms = []
    for index, coefficient in enumerate(coefficients):
        if coefficient == 0:
            continue
        text = str(coefficient)
        negative = coefficient < 0
        if negative:
            text = str(-coefficient)
        if text == "1":
            term = "a{}".format(index + 1)
        elif "+" in text or "-" in text:
            term = "({})*a{}".format(text, index + 1)
        else:
            term = "{}*a{}".format(text, index + 1)
        if negative:
            terms.append("-" + term)
        elif terms:
            terms.append("+" + term)
        else:
            terms.append(term)
    return "".join(terms) if terms else "0"
