# -*- coding: utf-8 -*-
"""
Arquivo principal da linha de comando do compilador zonado.

Subcomandos:
- compile: compila um circuito e grava o programa (e, opcionalmente, o trace
  de animação, o escalonamento e os grupos de movimentos). `--initial` troca a
  colocação de partida no armazenamento por uma lida de arquivo.
- compare: compara o posicionador ciente de roteamento com o de base.
- paramscan: varre uma grade de α/β/γ/δ.
- gen: gera circuitos sintéticos.

A saída padrão é reservada para JSON (ou para a tabela do `compare`); logs vão
para stderr. Códigos de saída: 0 ok, 1 erro do pipeline, 2 uso/E-S.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

from analysis.benchmark import compare, format_table, load_circuit_set, paramscan, report_frame
from architecture.zones import load_architecture
from circuits.circuit import load_circuit
from circuits.generators import FAMILIES, generate
from compilation.pipeline import PLACERS, ZonedCompiler
from optimization.options import PROFILES, PlacerParams, parse_window
from optimization.placement import load_placement
from utils.exceptions import CompilerError
from utils.helpers import configure_logging, read_text, write_json

__version__ = "0.1.0"

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PIPELINE = 1
EXIT_USAGE = 2


def _float_list(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--arch", required=True, help="Arquivo JSON da arquitetura.")
    common.add_argument("--profile", choices=sorted(PROFILES), default="qasmbench", help="Perfil de parâmetros.")
    common.add_argument("--alpha", type=float, help="Peso dos custos de antecipação.")
    common.add_argument("--beta", type=float, help="Constante de prioridade por profundidade.")
    common.add_argument("--gamma", type=float, help="Bônus de reuso.")
    common.add_argument("--delta", type=float, help="Peso da heurística aceleradora.")
    common.add_argument("--window", type=parse_window, help="Janela de poda RxC (ex.: 6x6).")
    common.add_argument("--max-nodes", type=int, help="Limite de nós expandidos por camada.")
    common.add_argument("--log-level", default="WARNING", help="Nível de log (stderr).")

    parser = argparse.ArgumentParser(description="Compilador para arquiteturas zonadas de átomos neutros.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compile", parents=[common], help="Compila um circuito.")
    p.add_argument("circuit", help="Circuito (.qasm ou .json).")
    p.add_argument("--placer", choices=PLACERS, default="aware")
    p.add_argument("--out", help="Arquivo do programa JSON.")
    p.add_argument("--trace", help="Arquivo do trace de animação.")
    p.add_argument("--dump-schedule", help="Arquivo com o escalonamento e as marcas de reuso.")
    p.add_argument("--dump-groups", help="Arquivo com os grupos de movimentos de cada transição.")
    p.add_argument("--initial", help="Colocação de partida em JSON (formato de Placement.to_json).")

    p = sub.add_parser("compare", parents=[common], help="Compara os posicionadores.")
    p.add_argument("circuits", help="Arquivo de circuito ou diretório com circuitos.")
    p.add_argument("--json", action="store_true", help="Imprime o relatório em JSON em vez da tabela.")
    p.add_argument("--out", help="Grava o relatório JSON neste arquivo.")
    p.add_argument("--no-timing", action="store_true", help="Omite os campos de tempo de relógio do JSON.")

    p = sub.add_parser("paramscan", parents=[common], help="Varre uma grade de parâmetros.")
    p.add_argument("circuits", help="Arquivo de circuito ou diretório com circuitos.")
    p.add_argument("--alphas", type=_float_list, default=[])
    p.add_argument("--betas", type=_float_list, default=[])
    p.add_argument("--gammas", type=_float_list, default=[])
    p.add_argument("--deltas", type=_float_list, default=[])
    p.add_argument("--out", help="Grava as linhas JSON neste arquivo.")

    p = sub.add_parser("gen", help="Gera um circuito sintético.")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("qubits", type=int)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=("qasm", "json"), default="qasm")
    p.add_argument("--out", help="Arquivo de saída (stdout se omitido).")
    p.add_argument("--log-level", default="WARNING")
    return parser


def _params(args) -> PlacerParams:
    return PlacerParams.from_profile(
        args.profile,
        alpha=args.alpha,
        beta=args.beta,
        gamma=args.gamma,
        delta=args.delta,
        window=args.window,
        max_nodes=args.max_nodes,
    )


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def cmd_compile(args) -> int:
    arch = load_architecture(read_text(args.arch))
    circuit = load_circuit(args.circuit)
    initial = load_placement(read_text(args.initial), arch) if args.initial else None
    result = ZonedCompiler(arch, _params(args), args.placer).compile(circuit, initial=initial)
    if args.out:
        write_json(args.out, result.program.to_json())
    if args.trace:
        write_json(args.trace, result.program.animation_trace())
    if args.dump_schedule:
        write_json(args.dump_schedule, {"schedule": result.schedule.to_json(), "reuse": result.reuse.to_json()})
    if args.dump_groups:
        write_json(args.dump_groups, result.groups_dump())
    _print_json(result.metrics.to_dict())
    return EXIT_OK


def cmd_compare(args) -> int:
    arch = load_architecture(read_text(args.arch))
    reports = compare(load_circuit_set(args.circuits), arch, _params(args))
    payload = [r.to_dict(include_wall_clock=not args.no_timing) for r in reports]
    if args.out:
        write_json(args.out, payload)
    if args.json:
        _print_json(payload)
    else:
        print(format_table(report_frame(reports)))
    return EXIT_OK


def cmd_paramscan(args) -> int:
    arch = load_architecture(read_text(args.arch))
    grid = {"alpha": args.alphas, "beta": args.betas, "gamma": args.gammas, "delta": args.deltas}
    frame = paramscan(load_circuit_set(args.circuits), arch, grid, _params(args))
    rows = frame.to_dict(orient="records")
    if args.out:
        write_json(args.out, rows)
    _print_json(rows)
    return EXIT_OK


def cmd_gen(args) -> int:
    circuit = generate(args.family, args.qubits, seed=args.seed)
    text = circuit.to_qasm() if args.format == "qasm" else json.dumps(circuit.to_json(), indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {"compile": cmd_compile, "compare": cmd_compare, "paramscan": cmd_paramscan, "gen": cmd_gen}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        return COMMANDS[args.command](args)
    except OSError as e:
        _print_json({"error": {"kind": "io", "message": str(e)}})
        return EXIT_USAGE
    except CompilerError as e:
        logger.error(f"Falha no comando '{args.command}': {e}")
        _print_json({"error": e.to_dict()})
        return EXIT_PIPELINE


if __name__ == "__main__":
    sys.exit(main())
