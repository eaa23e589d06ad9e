"""dualsig command-line interface.

Exit codes: 0 success/accept, 1 signature rejected, 2 usage error,
3 runtime or file-format error.
"""

from __future__ import annotations

import argparse
import math
import random
import sys
from pathlib import Path

from . import keyfile
from .attack import MAX_BITS, run_reduction
from .scheme import GenerationError, gen_params, keygen, sign, verify
from .vectors import run_selftest

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_USAGE = 2
EXIT_RUNTIME = 3


class CommandError(Exception):
    def __init__(self, message: str, code: int = EXIT_RUNTIME):
        super().__init__(message)
        self.code = code


def _rng(seed: str | None, salt: bytes = b"") -> random.Random:
    if seed is None:
        return random.SystemRandom()
    try:
        return random.Random(bytes.fromhex(seed) + salt)
    except ValueError:
        raise CommandError(f"--seed must be hex, got {seed!r}", EXIT_USAGE) from None


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise CommandError(f"cannot read {path}: {exc}") from None


def _read_message(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc}") from None


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CommandError(f"cannot write {path}: {exc}") from None


def _load(loader, path: str, *args):
    text = _read_text(path)
    try:
        return loader(text, *args)
    except ValueError as exc:
        raise CommandError(f"{path}: {exc}") from None


def cmd_params(args) -> int:
    if args.bits < 3:
        raise CommandError("--bits must be at least 3", EXIT_USAGE)
    try:
        params, p1, p2 = gen_params(args.bits, _rng(args.seed))
    except GenerationError as exc:
        raise CommandError(f"parameter generation failed: {exc}") from None
    _write(f"{args.out}.params", keyfile.dump_params(params))
    _write(f"{args.out}.primes", keyfile.dump_primes(p1, p2))
    return EXIT_OK


def cmd_keygen(args) -> int:
    params = _load(keyfile.load_params, args.params)
    p1, p2 = _load(keyfile.load_primes, args.primes, params)
    pub, priv = keygen(params, p1, p2, _rng(args.seed))
    _write(f"{args.out}.pub", keyfile.dump_public(pub))
    _write(f"{args.out}.priv", keyfile.dump_private(priv))
    return EXIT_OK


def cmd_sign(args) -> int:
    pub = _load(keyfile.load_public, args.pub)
    priv = _load(keyfile.load_private, args.priv)
    try:
        keyfile.check_key_pair(pub, priv)
    except keyfile.ValidationError as exc:
        raise CommandError(f"inconsistent keys: {exc}") from None
    message = _read_message(args.infile)
    text = keyfile.dump_signature(sign(priv, pub, message))
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    pub_text = _read_text(args.pub)
    sig_text = _read_text(args.sig)
    message = _read_message(args.infile)
    try:
        sig = keyfile.load_signature(sig_text)
    except keyfile.FormatError as exc:
        raise CommandError(f"{args.sig}: {exc}") from None
    try:
        pub = keyfile.load_public(pub_text)
    except keyfile.FormatError as exc:
        raise CommandError(f"{args.pub}: {exc}") from None
    except keyfile.ValidationError as exc:
        print(f"reject: invalid public key ({exc})", file=sys.stderr)
        return EXIT_REJECT
    verdict = verify(pub, message, sig)
    if verdict:
        print("accept", file=sys.stderr)
        return EXIT_OK
    print(f"reject: {verdict.reason}", file=sys.stderr)
    return EXIT_REJECT


def cmd_attack(args) -> int:
    if args.bits > MAX_BITS or args.bits < 3:
        raise CommandError(f"--bits must lie in [3, {MAX_BITS}]", EXIT_USAGE)
    if args.sigs < 1 or args.trials < 1:
        raise CommandError("--sigs and --trials must be positive", EXIT_USAGE)
    successes = 0
    for trial in range(args.trials):
        rng = _rng(args.seed, trial.to_bytes(4, "big"))
        try:
            report = run_reduction(args.bits, args.sigs, rng)
        except GenerationError as exc:
            raise CommandError(f"trial {trial}: {exc}") from None
        successes += report.success
        if args.format == "text":
            print(f"trial {trial}: {report.text()}")
        else:
            print(f"trial = {trial}")
            for line in report.lines():
                print(line)
    print(f"successes = {successes}")
    print(f"trials = {args.trials}")
    if args.sigs >= 4 and args.bits <= 24 and successes < math.ceil(0.9 * args.trials):
        print(f"only {successes}/{args.trials} trials factored n", file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


def cmd_selftest(args) -> int:
    failed = []
    for name, ok in run_selftest():
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        if not ok:
            failed.append(name)
    if failed:
        print("selftest failed: " + "; ".join(failed), file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dualsig", description="Factoring + elliptic-curve dual-hardness signatures")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="generate curve parameters")
    p.add_argument("--bits", type=int, required=True, help="bit size of each prime factor of n")
    p.add_argument("--seed", help="hex seed for reproducible output")
    p.add_argument("--out", required=True, help="output prefix; writes <out>.params and <out>.primes")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("keygen", help="generate a key pair")
    p.add_argument("--params", required=True)
    p.add_argument("--primes", required=True)
    p.add_argument("--seed")
    p.add_argument("--out", required=True, help="output prefix; writes <out>.pub and <out>.priv")
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("sign", help="sign a message")
    p.add_argument("--priv", required=True)
    p.add_argument("--pub", required=True)
    p.add_argument("--in", dest="infile", default="-", help="message file, '-' for stdin")
    p.add_argument("--out", help="signature file (default: stdout)")
    p.set_defaults(func=cmd_sign)

    p = sub.add_parser("verify", help="verify a signature")
    p.add_argument("--pub", required=True)
    p.add_argument("--in", dest="infile", default="-", help="message file, '-' for stdin")
    p.add_argument("--sig", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("attack", help="factor n from oracle signatures (toy sizes)")
    p.add_argument("--bits", type=int, required=True)
    p.add_argument("--sigs", type=int, default=4)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed")
    p.add_argument("--format", choices=("lines", "text"), default="lines")
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("selftest", help="run the built-in known-answer tests")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"dualsig {args.command}: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
