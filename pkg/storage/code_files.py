"""Code files: a small header naming the channel, then one codeword per line.

    #channel=<family>
    #params=<k=v,...>
    #t=<t|all>
    <canonical encoding>
    ...
"""
import logging
import os
from typing import Dict, List, Optional, Tuple

from channels import build_channel, spec_from_params
from codes import ALL, Code, code_from, identity_params
from posets import GradedChannel
from utils.errors import DomainError

logger = logging.getLogger(__name__)

HEADER_KEYS = ("channel", "params", "t")


class CodeFileError(ValueError):
    """A code file line could not be parsed."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


def render_t(t) -> str:
    return ALL if t == ALL else str(t)


def parse_t(text: str):
    text = text.strip()
    if text == ALL:
        return ALL
    if not (text.isascii() and text.isdigit()):
        raise DomainError(f"t must be a non-negative integer or '{ALL}', got {text!r}")
    return int(text)


def render_params(params: Dict[str, int]) -> str:
    return ",".join(f"{k}={v}" for k, v in params.items())


def parse_params(text: str) -> Dict[str, int]:
    params = {}
    for item in filter(None, text.split(",")):
        key, sep, value = item.partition("=")
        if not sep or not (value.strip().isascii() and value.strip().isdigit()):
            raise DomainError(f"malformed parameter {item!r}")
        params[key.strip()] = int(value)
    return params


def render_code_file(code: Code) -> str:
    ch = code.channel
    lines = [
        f"#channel={ch.family}",
        f"#params={render_params(identity_params(ch))}",
        f"#t={render_t(code.t)}",
    ]
    lines.extend(ch.render(x) for x in code.sorted_codewords())
    return "\n".join(lines) + "\n"


def write_code_file(code: Code, path: str) -> str:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(render_code_file(code))
    logger.info(f"wrote {len(code)} codewords to {path}")
    return path


def _channel_from_header(header: Dict[str, Tuple[int, str]]) -> GradedChannel:
    if "channel" not in header or "params" not in header:
        raise CodeFileError(1, "missing #channel or #params header and no channel given")
    line_number, params_text = header["params"]
    try:
        params = parse_params(params_text)
        is_dual = bool(params.pop("dual", 0))
        return build_channel(spec_from_params(header["channel"][1], params, is_dual))
    except DomainError as e:
        raise CodeFileError(line_number, str(e)) from e


def parse_code_file(text: str, channel: Optional[GradedChannel] = None, t=None) -> Code:
    """Parse code-file text. An explicit channel or t overrides the header."""
    header: Dict[str, Tuple[int, str]] = {}
    body: List[Tuple[int, str]] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if body:
                raise CodeFileError(line_number, "header line after the first codeword")
            key, sep, value = line[1:].partition("=")
            if not sep or key not in HEADER_KEYS:
                raise CodeFileError(line_number, f"unknown header {line!r}")
            header[key] = (line_number, value.strip())
        else:
            body.append((line_number, line))

    ch = channel if channel is not None else _channel_from_header(header)
    if channel is not None and "channel" in header and header["channel"][1] != ch.family:
        raise CodeFileError(
            header["channel"][0], f"file is for the {header['channel'][1]} channel, not {ch.family}"
        )

    if t is None:
        if "t" not in header:
            raise CodeFileError(1, "missing #t header and no t given")
        try:
            t = parse_t(header["t"][1])
        except DomainError as e:
            raise CodeFileError(header["t"][0], str(e)) from e

    codewords = []
    for line_number, line in body:
        try:
            x = ch.parse(line)
            ch.validate(x)
        except DomainError as e:
            raise CodeFileError(line_number, str(e)) from e
        codewords.append(x)
    return code_from(ch, codewords, t)


def read_code_file(path: str, channel: Optional[GradedChannel] = None, t=None) -> Code:
    with open(path, "r", encoding="utf-8") as f:
        return parse_code_file(f.read(), channel, t)
