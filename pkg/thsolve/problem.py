########################################################################
#
#       License: BSD
#       Created: October 16, 2026
#       Author:  The thsolve developers
#
########################################################################

"""Problem and solution files.

A problem file is a JSON object::

    {"a": symbol, "b": symbol, "f": symbol,
     "options": {"tolerance": 1e-8, "circle_tolerance": 1e-8,
                 "oracle": 32, "format": "json"}}

where every symbol is ``{"num": poly, "den": poly}`` (``den`` optional)
and every poly maps exponents, written as strings, to ``[re, im]``
pairs.  Files are written as ASCII with a trailing newline.
"""

from __future__ import absolute_import

import json

from thsolve.defaults import defaults
from thsolve.errors import ProblemFileError
from thsolve.symbol import RationalSymbol


KEYS = ("a", "b", "f", "options")
OPTIONS = ("tolerance", "circle_tolerance", "oracle", "format")


def dumps(obj):
    """Serialize `obj` with a deterministic key order and a newline."""
    return json.dumps(obj, ensure_ascii=True, sort_keys=True) + "\n"


def write_json(obj, path):
    """Write `obj` to `path` as ASCII JSON."""
    with open(path, 'wb') as wfile:
        wfile.write(dumps(obj).encode('ascii'))


def read_json(path):
    """Read a JSON document, turning any failure into ProblemFileError."""
    try:
        with open(path, 'rb') as rfile:
            return json.loads(rfile.read().decode('ascii'))
    except (IOError, OSError) as exc:
        raise ProblemFileError("cannot read %s: %s" % (path, exc))
    except (ValueError, UnicodeDecodeError) as exc:
        raise ProblemFileError("%s is not a valid JSON file: %s"
                               % (path, exc))


class ProblemFile(object):
    """The contents of a problem file.

    Parameters
    ----------
    a, b, f : RationalSymbol
        The symbols and the right-hand side.
    options : dict, optional
        Any of 'tolerance' (residual tolerance), 'circle_tolerance',
        'oracle' (finite section order) and 'format' ('json' or 'text').

    """

    def __init__(self, a, b, f, options=None):
        self.a = a
        self.b = b
        self.f = f
        self.options = check_options(options or {})

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict):
            raise ProblemFileError("a problem must be a JSON object")
        unknown = set(data) - set(KEYS)
        if unknown:
            raise ProblemFileError(
                "unknown keys in problem: %s" % ", ".join(sorted(unknown)))
        missing = [k for k in ("a", "b", "f") if k not in data]
        if missing:
            raise ProblemFileError(
                "missing keys in problem: %s" % ", ".join(missing))
        symbols = [RationalSymbol.from_json(data[k]) for k in ("a", "b", "f")]
        return cls(*symbols, options=data.get("options"))

    @classmethod
    def load(cls, path):
        return cls.from_json(read_json(path))

    def to_json(self):
        out = {"a": self.a.to_json(), "b": self.b.to_json(),
               "f": self.f.to_json()}
        if self.options:
            out["options"] = dict(self.options)
        return out

    def save(self, path):
        write_json(self.to_json(), path)

    def defaults_overrides(self):
        """Keyword arguments for `defaults_ctx` taken from the options."""
        return {"residual_tolerance": self.options.get("tolerance"),
                "circle_tolerance": self.options.get("circle_tolerance"),
                "out_format": self.options.get("format")}


def check_options(options):
    """Validate the 'options' entry of a problem file."""
    if not isinstance(options, dict):
        raise ProblemFileError("'options' must be a JSON object")
    unknown = set(options) - set(OPTIONS)
    if unknown:
        raise ProblemFileError(
            "unknown options: %s" % ", ".join(sorted(unknown)))
    out = dict(options)
    for name in ("tolerance", "circle_tolerance"):
        if name in out:
            try:
                defaults.check_tolerance(name, out[name])
            except ValueError as exc:
                raise ProblemFileError(str(exc))
            out[name] = float(out[name])
    if "oracle" in out:
        order = out["oracle"]
        if isinstance(order, bool) or not isinstance(order, int) or order < 1:
            raise ProblemFileError(
                "'oracle' must be a positive integer, got %r" % (order,))
    if "format" in out and out["format"] not in \
            defaults.choices['out_format']:
        raise ProblemFileError("'format' must be one of %s, got %r"
                               % (defaults.choices['out_format'],
                                  out["format"]))
    return out
