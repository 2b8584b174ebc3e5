import argparse
import logging
import sys

from channels import FAMILIES, ChannelSpecArgs, build_channel
from codes import ALL, construct_code, optimal_code_size, verify_code
from config import OUTPUT_FORMATS, config, load_config, print_config
from interface.render import render_oracle, render_size, render_table, render_verify
from oracle import brute_force_optimal
from storage.code_files import parse_t, read_code_file, render_code_file, write_code_file
from utils.errors import DomainError, ResourceError

MODES = ("size", "generate", "verify", "oracle", "table")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def channel_args(args):
    if not args.family:
        raise DomainError(f"--family is required for {args.mode}")
    return ChannelSpecArgs(
        family=args.family, n=args.n, a=args.a, p=args.p, w=args.w,
        lo=args.lo, hi=args.hi, dual=args.dual,
    )


def radius(args):
    return 0 if args.t is None else parse_t(args.t)


def parse_t_range(text, span):
    """'lo..hi' (inclusive), a single t, or None for 0..span."""
    if text is None:
        return range(0, span + 1)
    lo, sep, hi = text.partition("..")
    if not sep:
        t = parse_t(text)
        return range(span, span + 1) if t == ALL else range(t, t + 1)
    lo, hi = parse_t(lo), parse_t(hi)
    if ALL in (lo, hi) or lo > hi:
        raise DomainError(f"--t range must be lo..hi with lo <= hi, got {text!r}")
    return range(lo, hi + 1)


def cmd_size(args, fmt):
    ch = build_channel(channel_args(args))
    report = optimal_code_size(ch, t=radius(args))
    print(render_size(report, fmt))
    return EXIT_OK


def cmd_generate(args, fmt):
    ch = build_channel(channel_args(args))
    code = construct_code(ch, t=radius(args))
    if args.out in (None, "-"):
        sys.stdout.write(render_code_file(code))
        print(f"codewords: {len(code)}", file=sys.stderr)
    else:
        write_code_file(code, args.out)
        print(f"codewords: {len(code)}")
    return EXIT_OK


def cmd_verify(args, fmt):
    if not args.input:
        raise DomainError("verify needs --in <code file>")
    ch = build_channel(channel_args(args)) if args.family else None
    t = None if args.t is None else parse_t(args.t)
    code = read_code_file(args.input, channel=ch, t=t)
    report = verify_code(code)
    print(render_verify(report, code.channel, fmt))
    if not report.passed:
        logging.error(f"{args.input}: {len(report.violations)} violating pair(s)")
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_oracle(args, fmt):
    ch = build_channel(channel_args(args))
    result = brute_force_optimal(ch, t=radius(args), guard=args.guard)
    print(render_oracle(result, ch, fmt))
    return EXIT_OK


def cmd_table(args, fmt):
    ch = build_channel(channel_args(args))
    r = ch.rank_range
    guard = args.guard if args.guard is not None else config.oracle_guard
    feasible = ch.element_count(r) <= guard
    if not feasible:
        logging.info(f"{ch.describe()} has {ch.element_count(r)} elements; skipping the oracle column")

    rows = []
    for t in parse_t_range(args.t, r.span):
        report = optimal_code_size(ch, t=t)
        oracle = brute_force_optimal(ch, t=t, guard=guard).optimum if feasible else None
        rows.append((t, report.generic_total, report.closed_form_total, oracle))
    print(render_table(rows, fmt))
    return EXIT_OK


COMMANDS = {
    "size": cmd_size,
    "generate": cmd_generate,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "table": cmd_table,
}


def build_parser():
    parser = argparse.ArgumentParser(
        description="Optimal error-detecting codes for asymmetric channels"
    )
    parser.add_argument('mode', choices=MODES,
                        help='size, generate, verify, oracle or table')
    parser.add_argument('--family', type=str, choices=list(FAMILIES),
                        help='Channel family')
    for name, meaning in (('n', 'length or dimension'), ('a', 'alphabet size'),
                          ('p', 'prime field size'), ('w', 'weight (shift channel)'),
                          ('lo', 'lowest allowed rank'), ('hi', 'highest allowed rank')):
        parser.add_argument(f'--{name}', type=int, help=meaning.capitalize())
    parser.add_argument('--dual', action='store_true',
                        help='Use the dual channel (insertions instead of deletions)')
    parser.add_argument('--t', type=str,
                        help="Errors to detect: an integer, 'all', or lo..hi for table (default: 0)")
    parser.add_argument('--format', type=str, choices=OUTPUT_FORMATS,
                        help='Output format (default: from config)')
    parser.add_argument('--out', type=str, default='-',
                        help="Code file to write for generate ('-' for stdout)")
    parser.add_argument('--in', '--input', dest='input', type=str,
                        help='Code file to read for verify')
    parser.add_argument('--guard', type=int,
                        help='Oracle element guard for this invocation')
    parser.add_argument('--config', type=str, help='JSON configuration file')
    parser.add_argument('--debug', action='store_true', help='Enable debug logging')
    parser.add_argument('--show-config', action='store_true',
                        help='Print the effective configuration before running')
    return parser


def setup_logging():
    options = {
        'level': getattr(logging, config.log_level.upper()),
        'format': '%(asctime)s - %(levelname)s - %(message)s',
    }
    if config.log_file:
        options['filename'] = config.log_file
    else:
        options['stream'] = sys.stderr
    logging.basicConfig(**options)


def main(argv=None):
    args = build_parser().parse_args(argv)

    try:
        load_config(args.config)
    except (ValueError, OSError) as e:
        print(f"❌ Configuration error: {e}", file=sys.stderr)
        return EXIT_USAGE
    config.update_from_args(args)
    setup_logging()
    if args.show_config:
        print_config()

    if args.guard is not None and args.guard < 1:
        print("❌ --guard must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    fmt = args.format or config.output_format

    try:
        return COMMANDS[args.mode](args, fmt)
    except ResourceError as e:
        logging.error(f"{args.mode} stopped: {e}")
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, OSError) as e:
        # DomainError and CodeFileError are ValueErrors
        logging.error(f"{args.mode} failed: {e}")
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
