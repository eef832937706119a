"""Command-line harness: config parsing, experiment dispatch, CSV output.

Config resolution is layered: built-in defaults, then the optional flat
JSON config file, then per-key command-line flags (flags win).  Every run
writes one CSV whose commented header echoes the resolved config, the
tool version, and the seed; reruns with the same resolved config are
byte-identical, so the header is sufficient provenance to reproduce a
file.  Timestamps are deliberately absent.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from . import __version__
from .channel import SystemParams, draw_realizations
from .experiments import benchmark_gains, sweep_alpha, sweep_snr
from .feasibility import order_feasibility, secure_set
from .optimizer import optimize
from .rates import DecodingOrder, RiMatrix


class CliError(Exception):
    """Invalid configuration or arguments; maps to exit status 2."""


def _as_int(value: Any) -> int:
    if isinstance(value, bool):
        raise CliError(f"expected an integer, got {value!r}")
    try:
        return int(str(value))
    except ValueError as exc:
        raise CliError(f"expected an integer, got {value!r}") from exc


def _as_float(value: Any) -> float:
    try:
        return float(value)
    except (TypeError, ValueError) as exc:
        raise CliError(f"expected a number, got {value!r}") from exc


def _as_str(value: Any) -> str:
    return str(value)


@dataclass(frozen=True)
class _Key:
    convert: Callable[[Any], Any]
    default: Any
    help: str


_COMMON_KEYS: dict[str, _Key] = {
    "d1": _Key(_as_float, 50.0, "distance of device 1 (m)"),
    "d2": _Key(_as_float, 100.0, "distance of device 2 (m)"),
    "lp": _Key(_as_float, 1.0, "path-loss constant"),
    "e": _Key(_as_float, 3.0, "path-loss exponent"),
    "rho_t_db": _Key(_as_float, 60.0, "transmit SNR (dB)"),
    "b11": _Key(_as_float, 0.2, "residual fraction of signal 1 at receiver 1"),
    "b12": _Key(_as_float, 0.2, "residual fraction of signal 1 at receiver 2"),
    "b21": _Key(_as_float, 0.2, "residual fraction of signal 2 at receiver 1"),
    "b22": _Key(_as_float, 0.2, "residual fraction of signal 2 at receiver 2"),
    "seed": _Key(_as_int, None, "RNG seed (required; no wall-clock default)"),
    "realizations": _Key(_as_int, 1000, "Monte Carlo realization count"),
    "out": _Key(_as_str, None, "output CSV path (default <command>.csv)"),
}

_COMMAND_KEYS: dict[str, dict[str, _Key]] = {
    "sweep-alpha": {
        "alpha_step": _Key(_as_float, 0.01, "power-split grid step"),
        "orders": _Key(_as_str, "d1,d2,d3,d4",
                       "comma-separated decoding orders to sweep"),
    },
    "sweep-snr": {
        "rho_start_db": _Key(_as_float, 40.0, "SNR grid start (dB)"),
        "rho_stop_db": _Key(_as_float, 80.0, "SNR grid stop (dB), inclusive"),
        "rho_step_db": _Key(_as_float, 5.0, "SNR grid step (dB)"),
        "d2_list": _Key(_as_str, "100,150,200",
                        "comma-separated far-device distances (m)"),
    },
    "benchmark": {
        "rho_start_db": _Key(_as_float, 40.0, "SNR grid start (dB)"),
        "rho_stop_db": _Key(_as_float, 80.0, "SNR grid stop (dB), inclusive"),
        "rho_step_db": _Key(_as_float, 5.0, "SNR grid step (dB)"),
    },
    "optimize-one": {
        "g1": _Key(_as_float, None, "device-1 gain (default: draw from seed)"),
        "g2": _Key(_as_float, None, "device-2 gain (default: draw from seed)"),
    },
    "feasibility": {
        "g1": _Key(_as_float, None, "device-1 gain (default: draw from seed)"),
        "g2": _Key(_as_float, None, "device-2 gain (default: draw from seed)"),
    },
}

_COMMANDS = tuple(_COMMAND_KEYS)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noma-secrecy",
        description="Secrecy-fairness experiments for a two-device "
                    "untrusted NOMA downlink under imperfect SIC.",
    )
    parser.add_argument("--version", action="version",
                        version=f"noma-secrecy {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for command in _COMMANDS:
        cp = sub.add_parser(command)
        cp.add_argument("--config", default=None,
                        help="flat JSON config file; flags override it")
        for key, spec in {**_COMMON_KEYS, **_COMMAND_KEYS[command]}.items():
            cp.add_argument(f"--{key}", default=None, help=spec.help)
    return parser


def _resolve_config(command: str, ns: argparse.Namespace) -> dict[str, Any]:
    keys = {**_COMMON_KEYS, **_COMMAND_KEYS[command]}
    config = {key: spec.default for key, spec in keys.items()}
    if ns.config is not None:
        try:
            with open(ns.config) as fh:
                loaded = json.load(fh)
        except OSError as exc:
            raise CliError(f"cannot read config file: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise CliError(f"config file is not valid JSON: {exc}") from exc
        if not isinstance(loaded, dict):
            raise CliError("config file must hold a flat JSON object")
        for key, value in loaded.items():
            if key not in keys:
                raise CliError(f"unknown config key {key!r} for {command}")
            config[key] = keys[key].convert(value)
    for key, spec in keys.items():
        value = getattr(ns, key)
        if value is not None:
            config[key] = spec.convert(value)
    if config["seed"] is None:
        raise CliError("seed is required (set --seed or the config key)")
    if config["realizations"] < 1:
        raise CliError("realizations must be a positive integer")
    if config["out"] is None:
        config["out"] = f"{command}.csv"
    return config


def _system_params(config: dict[str, Any]) -> SystemParams:
    try:
        params = SystemParams(d1=config["d1"], d2=config["d2"],
                              lp=config["lp"], e=config["e"],
                              rho_t_db=config["rho_t_db"])
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if params.d2 <= params.d1:
        raise CliError("d2 must exceed d1 (device 2 is the far, weak one)")
    return params


def _ri_matrix(config: dict[str, Any]) -> RiMatrix:
    try:
        return RiMatrix(b11=config["b11"], b12=config["b12"],
                        b21=config["b21"], b22=config["b22"])
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _parse_orders(text: str) -> list[DecodingOrder]:
    orders = []
    for token in text.split(","):
        token = token.strip()
        try:
            orders.append(DecodingOrder[token.upper()])
        except KeyError:
            valid = ",".join(o.name.lower() for o in DecodingOrder)
            raise CliError(f"unknown decoding order {token!r} (one of {valid})")
    if not orders:
        raise CliError("order list must be nonempty")
    return orders


def _parse_floats(text: str, what: str) -> list[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise CliError(f"{what} must be comma-separated numbers") from exc
    if not values:
        raise CliError(f"{what} must be nonempty")
    return values


def _rho_grid(config: dict[str, Any]) -> np.ndarray:
    start, stop = config["rho_start_db"], config["rho_stop_db"]
    step = config["rho_step_db"]
    if step <= 0.0:
        raise CliError("rho_step_db must be positive")
    if stop < start:
        raise CliError("rho_stop_db must be >= rho_start_db")
    return np.arange(start, stop + step / 2.0, step)


def _unit_grid(step: float) -> np.ndarray:
    if not 0.0 < step < 1.0:
        raise CliError("alpha_step must lie in (0, 1)")
    n = round(1.0 / step)
    return np.arange(n + 1) / n


def _gains(config: dict[str, Any]) -> tuple[float, float]:
    g1, g2 = config["g1"], config["g2"]
    if (g1 is None) != (g2 is None):
        raise CliError("g1 and g2 must be given together")
    if g1 is None:
        params = _system_params(config)
        draws = draw_realizations(params, config["seed"], 1)
        return float(draws.g1[0]), float(draws.g2[0])
    if not g1 > g2 > 0:
        raise CliError("explicit gains must satisfy g1 > g2 > 0")
    return g1, g2


def _fmt(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, str):
        return value
    return repr(float(value))


def _write_csv(path: str, command: str, config: dict[str, Any],
               columns: list[str], rows: list[list[Any]],
               extra_meta: list[tuple[str, str]] = ()) -> None:
    lines = [
        f"# tool: noma-secrecy {__version__}",
        f"# command: {command}",
        f"# config: {json.dumps(config, sort_keys=True)}",
    ]
    lines.extend(f"# {key}: {value}" for key, value in extra_meta)
    lines.append(",".join(columns))
    lines.extend(",".join(_fmt(cell) for cell in row) for row in rows)
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _run_sweep_alpha(config: dict[str, Any]) -> None:
    params = _system_params(config)
    ri = _ri_matrix(config)
    orders = _parse_orders(config["orders"])
    grid = _unit_grid(config["alpha_step"])
    result = sweep_alpha(orders, grid, params, ri,
                         config["realizations"], config["seed"])
    columns = ["alpha"] + list(result.series)
    rows = [[a] + [result.series[name][i] for name in result.series]
            for i, a in enumerate(result.axis)]
    _write_csv(config["out"], "sweep-alpha", config, columns, rows)


def _run_sweep_snr(config: dict[str, Any]) -> None:
    params = _system_params(config)
    ri = _ri_matrix(config)
    d2_values = _parse_floats(config["d2_list"], "d2_list")
    if any(d <= config["d1"] for d in d2_values):
        raise CliError("every d2_list entry must exceed d1")
    result = sweep_snr(params, ri, _rho_grid(config), d2_values,
                       config["realizations"], config["seed"])
    columns = ["rho_t_db"] + list(result.series)
    rows = [[db] + [result.series[name][i] for name in result.series]
            for i, db in enumerate(result.axis)]
    _write_csv(config["out"], "sweep-snr", config, columns, rows)


def _run_benchmark(config: dict[str, Any]) -> None:
    params = _system_params(config)
    ri = _ri_matrix(config)
    result = benchmark_gains(params, ri, _rho_grid(config),
                             config["realizations"], config["seed"])
    sweep = result.sweep
    columns = ["rho_t_db"] + list(sweep.series)
    rows = [[db] + [sweep.series[name][i] for name in sweep.series]
            for i, db in enumerate(sweep.axis)]
    meta = [("gain_convention",
             "(mean_joint - mean_scheme) / mean_joint * 100; "
             "means over the rho_t grid and realizations")]
    meta.extend((f"mean_{name}", _fmt(value))
                for name, value in result.means.items())
    meta.extend((f"gain_{name}", _fmt(value))
                for name, value in result.gains.items())
    meta.append(("winning_cases", json.dumps(result.winning_cases)))
    _write_csv(config["out"], "benchmark", config, columns, rows, meta)


def _run_optimize_one(config: dict[str, Any]) -> None:
    ri = _ri_matrix(config)
    g1, g2 = _gains(config)
    rho_t = 10.0 ** (config["rho_t_db"] / 10.0)
    result = optimize(g1, g2, rho_t, ri)
    print(f"order: {result.order.name.lower()}")
    print(f"alpha_hat: {_fmt(result.alpha_hat)}")
    print(f"value: {_fmt(result.value)}")
    print(f"winning_case: {result.winning_case}")
    columns = ["g1", "g2", "rho_t_db", "alpha_hat", "value", "order",
               "winning_case"]
    rows = [[g1, g2, config["rho_t_db"], result.alpha_hat, result.value,
             result.order.name.lower(), result.winning_case]]
    _write_csv(config["out"], "optimize-one", config, columns, rows)


def _run_feasibility(config: dict[str, Any]) -> None:
    ri = _ri_matrix(config)
    g1, g2 = _gains(config)
    rho_t = 10.0 ** (config["rho_t_db"] / 10.0)
    rows = []
    for order in DecodingOrder:
        fz = order_feasibility(order, g1, g2, rho_t, ri)
        u1, u2, joint = fz.interval_u1, fz.interval_u2, fz.joint
        print(f"{order.name.lower()}: "
              f"u1={_interval_text(u1)}, u2={_interval_text(u2)}, "
              f"joint={_interval_text(joint)}, secure={fz.secure}")
        rows.append([order.name.lower(), u1.lower, u1.upper, u2.lower,
                     u2.upper, joint.lower, joint.upper, fz.secure])
    secure = secure_set(g1, g2, rho_t, ri)
    print("secure set: " + (",".join(o.name.lower() for o in secure) or "-"))
    columns = ["order", "u1_lower", "u1_upper", "u2_lower", "u2_upper",
               "joint_lower", "joint_upper", "secure"]
    _write_csv(config["out"], "feasibility", config, columns, rows)


def _interval_text(interval) -> str:
    if interval.empty:
        return "empty"
    return f"({_fmt(interval.lower)}, {_fmt(interval.upper)})"


_RUNNERS = {
    "sweep-alpha": _run_sweep_alpha,
    "sweep-snr": _run_sweep_snr,
    "benchmark": _run_benchmark,
    "optimize-one": _run_optimize_one,
    "feasibility": _run_feasibility,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        config = _resolve_config(ns.command, ns)
        _RUNNERS[ns.command](config)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
