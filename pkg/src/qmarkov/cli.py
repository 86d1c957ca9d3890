"""``qmarkov`` command line: simulate, compare, calibrate, export-qasm, closed-form.

Tables go to stdout as TSV, diagnostics to stderr. Exit status 0 on success,
1 for usage or parse errors, 2 for config validation errors, 3 when a
quantum/classical comparison exceeds the tolerance.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import chain, classical
from .chain import ChainSpec
from .qasm import chain_to_qasm
from .statevector import StateVector, init_basis, probabilities, run_circuit, sample_counts

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_MISMATCH = 3

DEFAULT_TOLERANCE = 1e-9


class ConfigParseError(Exception):
    exit_code = EXIT_USAGE


class ConfigValidationError(Exception):
    exit_code = EXIT_INVALID


@dataclass(frozen=True)
class ChainConfig:
    spec: ChainSpec
    initial_basis: Optional[int] = None
    shots: Optional[int] = None
    seed: Optional[int] = None


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ConfigValidationError(msg)


def _number(value, where: str) -> float:
    _require(
        isinstance(value, (int, float)) and not isinstance(value, bool) and math.isfinite(value),
        f"{where} must be a finite number",
    )
    return float(value)


def _probability(value, where: str) -> float:
    p = _number(value, where)
    _require(0.0 <= p <= 1.0, f"{where} = {p!r} is outside [0, 1]")
    return p


def _int_field(doc: dict, key: str, minimum: int) -> Optional[int]:
    if key not in doc:
        return None
    v = doc[key]
    _require(isinstance(v, int) and not isinstance(v, bool) and v >= minimum,
             f"{key} must be an integer >= {minimum}")
    return v


def parse_config(doc) -> ChainConfig:
    """Validate a decoded JSON config and calibrate probabilities if given."""
    _require(isinstance(doc, dict), "config must be a JSON object")
    L = doc.get("length")
    _require(isinstance(L, int) and not isinstance(L, bool) and L >= 1, "length must be an integer >= 1")
    has_exp, has_prob = "exponents" in doc, "probabilities" in doc
    _require(has_exp != has_prob, "config needs exactly one of 'exponents' or 'probabilities'")

    basis = None
    if "initial_basis" in doc:
        bits = doc["initial_basis"]
        _require(isinstance(bits, str) and len(bits) == L and set(bits) <= {"0", "1"},
                 f"initial_basis must be a bit string of length {L}")
        basis = int(bits, 2)

    if has_exp:
        block = doc["exponents"]
        _require(isinstance(block, dict), "exponents must be an object")
        cond = block.get("cond", [] if L == 1 else None)
        _require(isinstance(cond, list) and len(cond) == L - 1, f"exponents.cond must list {L - 1} numbers")
        cond = [_number(u, f"exponents.cond[{i}]") for i, u in enumerate(cond)]
        if "init" in block or basis is None:
            init = block.get("init")
            _require(isinstance(init, list) and len(init) == L, f"exponents.init must list {L} numbers")
            init = [_number(t, f"exponents.init[{i}]") for i, t in enumerate(init)]
        else:
            # controls-only variant: stage-1 exponents are never used
            init = [0.0] * L
        spec = ChainSpec(tuple(init), tuple(cond))
    else:
        _require(basis is None, "initial_basis can only be combined with 'exponents'")
        block = doc["probabilities"]
        _require(isinstance(block, dict), "probabilities must be an object")
        p0 = _probability(block.get("initial_p1"), "probabilities.initial_p1")
        steps = block.get("transitions", [] if L == 1 else None)
        _require(isinstance(steps, list) and len(steps) == L - 1,
                 f"probabilities.transitions must list {L - 1} entries")
        pairs = []
        for i, s in enumerate(steps):
            _require(isinstance(s, dict), f"probabilities.transitions[{i}] must be an object")
            pairs.append((
                _probability(s.get("p1_given_0"), f"probabilities.transitions[{i}].p1_given_0"),
                _probability(s.get("p1_given_1"), f"probabilities.transitions[{i}].p1_given_1"),
            ))
        spec = chain.spec_from_probabilities(p0, pairs)

    return ChainConfig(spec, basis, _int_field(doc, "shots", 0), _int_field(doc, "seed", 0))


def load_config(path: str) -> ChainConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigParseError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigParseError(f"{path} is not valid JSON: {exc}") from exc
    return parse_config(doc)


def effective_spec(cfg: ChainConfig) -> ChainSpec:
    """Full-chain spec with the same amplitudes as the configured circuit."""
    if cfg.initial_basis is None:
        return cfg.spec
    return chain.basis_as_init(cfg.spec, cfg.initial_basis)


def simulate(cfg: ChainConfig) -> StateVector:
    if cfg.initial_basis is None:
        return run_circuit(chain.compile_chain(cfg.spec), init_basis(cfg.spec.length, 0))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", chain.IdleControlsWarning)
        circuit, start = chain.compile_chain_no_init(cfg.spec, cfg.initial_basis)
    return run_circuit(circuit, start)


def _fmt(x: float) -> str:
    return f"{x + 0.0:.12f}"


def _bits(i: int, L: int) -> str:
    return format(i, f"0{L}b")


def _warn_idle(cfg: ChainConfig) -> None:
    if cfg.initial_basis is not None and chain.controls_idle(cfg.initial_basis):
        print("qmarkov: warning: no control qubit starts in |1>; the circuit is the identity",
              file=sys.stderr)


def cmd_simulate(args, cfg: ChainConfig, out) -> int:
    _warn_idle(cfg)
    state = simulate(cfg)
    probs = probabilities(state)
    shots = args.shots if args.shots is not None else cfg.shots
    counts = None
    if shots is not None:
        seed = args.seed if args.seed is not None else cfg.seed
        if seed is None:
            seed = np.random.SeedSequence().entropy
            print(f"qmarkov: seed {seed}", file=sys.stderr)
        counts = sample_counts(state, shots, np.random.default_rng(seed))
    L = state.num_qubits
    out.write("path\tprobability" + ("\tcount" if counts is not None else "") + "\n")
    for i, p in enumerate(probs):
        row = f"{_bits(i, L)}\t{_fmt(p)}"
        if counts is not None:
            row += f"\t{counts[i]}"
        out.write(row + "\n")
    return EXIT_OK


def cmd_compare(args, cfg: ChainConfig, out) -> int:
    _warn_idle(cfg)
    quantum = probabilities(simulate(cfg))
    dtmc = chain.chain_to_dtmc(effective_spec(cfg))
    classic = classical.path_distribution(dtmc.initial, dtmc.transitions).probs
    diff = np.abs(quantum - classic)
    L = cfg.spec.length
    out.write("path\tquantum\tclassical\tabs_diff\n")
    for i in range(quantum.size):
        out.write(f"{_bits(i, L)}\t{_fmt(quantum[i])}\t{_fmt(classic[i])}\t{diff[i]:.3e}\n")
    worst = float(diff.max())
    out.write(f"max_abs_diff\t{worst:.3e}\n")
    if not worst < args.tolerance:
        print(f"qmarkov: distributions differ by {worst:.3e} >= {args.tolerance:g}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_closed_form(args, cfg: ChainConfig, out) -> int:
    closed = chain.closed_form_state(effective_spec(cfg)).amplitudes
    simulated = simulate(cfg).amplitudes
    worst = float(np.abs(closed - simulated).max())
    L = cfg.spec.length
    out.write("path\tre\tim\tprobability\n")
    for i, a in enumerate(closed):
        out.write(f"{_bits(i, L)}\t{_fmt(a.real)}\t{_fmt(a.imag)}\t{_fmt(abs(a) ** 2)}\n")
    if not worst < args.tolerance:
        out.write(f"MISMATCH\t{worst:.3e}\n")
        print(f"qmarkov: closed form differs from simulation by {worst:.3e}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_export_qasm(args, cfg: ChainConfig, out) -> int:
    out.write(chain_to_qasm(cfg.spec, cfg.initial_basis))
    return EXIT_OK


def _root_index(x: float) -> str:
    return "identity" if x == 0 else _fmt(1.0 / x)


def cmd_calibrate(args, out) -> int:
    for name, p in (("p", args.p), ("--conditional", args.conditional)):
        if p is not None and not 0.0 <= p <= 1.0:
            print(f"qmarkov: {name} = {p!r} is outside [0, 1]", file=sys.stderr)
            return EXIT_INVALID
    t = chain.calibrate_root(args.p)
    out.write(f"t\t{_fmt(t)}\nn\t{_root_index(t)}\n")
    if args.conditional is not None:
        t_init = t if args.t_init is None else args.t_init
        u = chain.calibrate_conditional(args.conditional, t_init)
        out.write(f"u\t{_fmt(u)}\nm\t{_root_index(u)}\n")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qmarkov", description="Binary Markov chains as root-of-X quantum circuits.")
    # accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    for p, default in ((parser, None), (common, argparse.SUPPRESS)):
        p.add_argument("--shots", type=int, default=default, help="sample this many measurement shots")
        p.add_argument("--seed", type=int, default=default, help="seed for shot sampling")
        p.add_argument("--tolerance", type=float, default=default if default is argparse.SUPPRESS
                       else DEFAULT_TOLERANCE, help="comparison tolerance (default 1e-9)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, fn, help_ in (
        ("simulate", cmd_simulate, "print the exact path distribution"),
        ("compare", cmd_compare, "compare the circuit against the classical chain"),
        ("export-qasm", cmd_export_qasm, "print the circuit as OpenQASM 2.0"),
        ("closed-form", cmd_closed_form, "print product-formula amplitudes"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("config", help="JSON chain config")
        p.set_defaults(func=fn)

    p = sub.add_parser("calibrate", parents=[common], help="exponents for target probabilities")
    p.add_argument("p", type=float, help="P(1) from |0>, or P(1 | 0) for a link")
    p.add_argument("--conditional", type=float, metavar="P1_GIVEN_1")
    p.add_argument("--t-init", type=float, dest="t_init", metavar="T")
    p.set_defaults(func=None)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    if args.shots is not None and args.shots < 0:
        print("qmarkov: --shots must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "calibrate":
        return cmd_calibrate(args, out)
    try:
        cfg = load_config(args.config)
    except (ConfigParseError, ConfigValidationError) as exc:
        print(f"qmarkov: {exc}", file=sys.stderr)
        return exc.exit_code
    return args.func(args, cfg, out)


if __name__ == "__main__":
    sys.exit(main())
