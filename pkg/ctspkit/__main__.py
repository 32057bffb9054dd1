#    Copyright 2026 The ctspkit Authors
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.
import json
import os
import sys

import click
from tqdm import tqdm

from ctspkit.bench.archive import load_results, save_results
from ctspkit.bench.manifest import read_manifest
from ctspkit.bench.profiles import (
    COST,
    METRICS,
    emit_normalized_data,
    emit_profile_plot_data,
    metric_matrix,
    normalized_results,
    performance_profile,
)
from ctspkit.bench.stats import fill_missing_references
from ctspkit.bench.tables import render_csv, render_table
from ctspkit.bench.trials import AlgoSpec, run_trials, solve_ctsp
from ctspkit.exact.brute_force import brute_force_ctsp
from ctspkit.exact.lp_models import FORMULATIONS, MTZ, export_model
from ctspkit.exact.mip import solve_lp
from ctspkit.instances.generator import GeneratorConfig, generate_clustered
from ctspkit.instances.tsplib import read_instance, save_instance
from ctspkit.meta import metadata
from ctspkit.solvers.solvers import solver_names
from ctspkit.tours.tour_file import read_tour, save_tour, validate_tour
from ctspkit.transform.big_m import (
    feasible_crossings,
    lift_tour,
    read_transform_header,
    recover_cost,
    to_tsp,
    write_tsplib,
)
from ctspkit.utils import cli as ctspcli
from ctspkit.utils.exceptions import CtspError
from ctspkit.utils.log import logger


def _fail(error: Exception):
    logger.error("%s", error)
    ctspcli.exit_with(error)


def _write(text: str, output: str):
    """Writes to a file, or to stdout when no file is given"""
    if output is None:
        click.echo(text, nl=False)
        return
    parent_dir = os.path.dirname(os.path.abspath(output))
    os.makedirs(parent_dir, exist_ok=True)
    with open(output, "w", encoding="utf-8") as out:
        out.write(text)
    ctspcli.success(f"✅  Written: {output}")


def _run_log(log_file, name: str, seed: int):
    """Appends one JSON line per GA generation"""

    def progress(record):
        entry = {"instance": name, "seed": seed}
        entry.update(record.to_dict())
        log_file.write(json.dumps(entry) + "\n")
        log_file.flush()

    return progress


def _algo_spec(
    algo: str,
    pop: int,
    offspring: int,
    strategy: str,
    max_generations: int,
    neighbours: int,
    restarts: int,
) -> AlgoSpec:
    params = {}
    if algo == "eax":
        params = {
            "p": pop,
            "r": offspring,
            "strategy": strategy,
            "max_generations": max_generations,
            "k": neighbours,
        }
    elif algo == "ls":
        params = {"k": neighbours, "restarts": restarts}
    return AlgoSpec(name=algo, params=params)


def solver_options(command):
    """Options shared by solve and bench"""
    options = [
        click.option("--algo", type=click.Choice(solver_names()), default="eax"),
        click.option("--pop", type=int, default=300, help="GA population size"),
        click.option("--offspring", type=int, default=30, help="Offspring per pair"),
        click.option("--strategy", type=str, default="single", help="single or k-multiple:<k>"),
        click.option("--max-generations", type=int, default=3000),
        click.option("--neighbours", type=int, default=10, help="Candidate list size"),
        click.option("--restarts", type=int, default=1, help="Local search restarts"),
        click.option("--seed", type=int, default=0, help="Seed of the first run"),
        click.option("--runs", type=int, default=1),
    ]
    for option in reversed(options):
        command = option(command)
    return command


@click.group()
def instance_commands():
    pass


@click.group()
def solver_commands():
    pass


@click.group()
def exact_commands():
    pass


@click.group()
def bench_commands():
    pass


@instance_commands.command()
@click.option("--n", "n", type=int, required=True, help="Number of vertices")
@click.option("--m", "m", type=int, required=True, help="Number of clusters")
@click.option("--spread", type=float, default=20.0)
@click.option("--field", type=float, default=1000.0)
@click.option("--seed", type=int, default=0)
@click.option("--output", type=click.Path(), default=None)
def gen(n: int, m: int, spread: float, field: float, seed: int, output: str):
    """Generate a clustered instance. Usage:\n
    ❯ python -m ctspkit gen --n 60 --m 4 --seed 1 --output gen.gtsp
    """
    try:
        cfg = GeneratorConfig(n=n, m=m, cluster_spread=spread, field_size=field, seed=seed)
        inst = generate_clustered(cfg)
        if output is None:
            output = f"{inst.name}.gtsp"
        save_instance(inst, output)
        ctspcli.success(f"✅  Generated: {inst.name} to {output}")
    except CtspError as exc:
        _fail(exc)


@instance_commands.command()
@click.argument("instance", type=click.Path(exists=True))
@click.option("--output", type=click.Path(), default=None)
def transform(instance: str, output: str):
    """Write the big-M transformed instance as a TSPLIB file. Usage:\n
    ❯ python -m ctspkit transform <instance> --output out.tsp
    """
    try:
        tsp = to_tsp(read_instance(instance))
        ctspcli.info(f"M={tsp.big_m} m={tsp.m}")
        _write(write_tsplib(tsp), output)
    except CtspError as exc:
        _fail(exc)


@instance_commands.command()
@click.argument("instance", type=click.Path(exists=True))
@click.argument("tour", type=click.Path(exists=True))
def validate(instance: str, tour: str):
    """Check a tour file against an instance. Usage:\n
    ❯ python -m ctspkit validate <instance> <tour>
    """
    try:
        report = validate_tour(read_instance(instance), read_tour(tour))
        click.echo(
            json.dumps(
                {
                    "permutation": report.permutation_ok,
                    "cost_ok": report.cost_ok,
                    "contiguous": report.contiguous,
                    "crossings": report.crossings,
                    "cost": report.cost,
                }
            )
        )
        if not report.valid:
            ctspcli.failure("❌  Tour is not valid")
            sys.exit(ctspcli.EXIT_INFEASIBLE)
        ctspcli.success("✅  Tour is valid")
    except CtspError as exc:
        _fail(exc)


@instance_commands.command()
@click.argument("transformed", type=click.Path(exists=True))
@click.argument("tour", type=click.Path(exists=True))
@click.option("--instance", type=click.Path(exists=True), default=None)
def recover(transformed: str, tour: str, instance: str):
    """Map the cost of a tour of a transformed instance back to the
    clustered instance. Usage:\n
    ❯ python -m ctspkit recover <transformed.tsp> <tour> [--instance <instance>]
    """
    try:
        with open(transformed, "r", encoding="ascii") as lines:
            big_m, m = read_transform_header(lines.read())
        tsp_tour = read_tour(tour)
        cost = recover_cost(tsp_tour.cost, feasible_crossings(m), big_m)
        if instance is not None:
            lifted, contiguous = lift_tour(tsp_tour, read_instance(instance))
            if not contiguous or lifted.cost != cost:
                ctspcli.failure(
                    f"❌  Lifted tour: contiguous={contiguous} cost={lifted.cost}"
                )
                sys.exit(ctspcli.EXIT_INFEASIBLE)
        click.echo(cost)
    except CtspError as exc:
        _fail(exc)


@solver_commands.command()
@click.argument("instance", type=click.Path(exists=True))
@solver_options
@click.option("--output-dir", type=click.Path(), default=None, help="Where tours go")
@click.option("--log", "log_path", type=click.Path(), default=None, help="JSON-lines run log")
def solve(instance, algo, pop, offspring, strategy, max_generations, neighbours,
          restarts, seed, runs, output_dir, log_path):
    """Solve an instance through the big-M transformation. Usage:\n
    ❯ python -m ctspkit solve <instance> --algo eax --pop 300 --offspring 30 --runs 10
    """
    # pylint: disable=too-many-arguments,too-many-locals
    try:
        inst = read_instance(instance)
        spec = _algo_spec(algo, pop, offspring, strategy, max_generations, neighbours, restarts)
        log_file = open(log_path, "a", encoding="utf-8") if log_path else None
        try:
            for run in range(runs):
                run_seed = seed + run
                progress = None
                if log_file is not None and algo == "eax":
                    progress = _run_log(log_file, inst.name, run_seed)
                solution = solve_ctsp(inst, spec, run_seed, progress=progress)
                if output_dir is not None:
                    path = os.path.join(output_dir, f"{inst.name}.{algo}.s{run_seed}.tour")
                    save_tour(solution.tour, path)
                click.echo(
                    f"{inst.name} {algo} seed={run_seed} cost={solution.cost} "
                    f"generations={solution.result.generations} "
                    f"time={solution.result.wall_time:.1f}"
                )
        finally:
            if log_file is not None:
                log_file.close()
    except CtspError as exc:
        _fail(exc)


@exact_commands.command()
@click.argument("instance", type=click.Path(exists=True))
@click.option("--mip", is_flag=True, help="Also solve the model with an external MIP solver")
@click.option("--formulation", type=click.Choice(FORMULATIONS), default=MTZ)
@click.option("--solver", type=str, default=None, help="highs or cbc executable")
@click.option("--output", type=click.Path(), default=None, help="Where the tour goes")
def exact(instance: str, mip: bool, formulation: str, solver: str, output: str):
    """Solve a tiny instance to optimality by enumeration. Usage:\n
    ❯ python -m ctspkit exact <instance> [--mip --formulation mcf]
    """
    try:
        inst = read_instance(instance)
        tour, cost = brute_force_ctsp(inst)
        if output is not None:
            save_tour(tour, output)
        click.echo(f"{inst.name} brute-force cost={cost}")
        if mip:
            objective = solve_lp(export_model(inst, formulation), solver)
            click.echo(f"{inst.name} {formulation} objective={objective:g}")
    except CtspError as exc:
        _fail(exc)


@exact_commands.command(name="export-model")
@click.argument("instance", type=click.Path(exists=True))
@click.option("--formulation", type=click.Choice(FORMULATIONS), default=MTZ)
@click.option("--relax", is_flag=True, help="Write the LP relaxation")
@click.option("--output", type=click.Path(), default=None)
def export_model_command(instance: str, formulation: str, relax: bool, output: str):
    """Write an integer programming model in LP format. Usage:\n
    ❯ python -m ctspkit export-model <instance> --formulation mtz --output model.lp
    """
    try:
        _write(export_model(read_instance(instance), formulation, relax=relax), output)
    except CtspError as exc:
        _fail(exc)


@bench_commands.command()
@click.argument("manifest", type=click.Path(exists=True))
@solver_options
@click.option("--jobs", type=int, default=1, help="Runs executed in parallel")
@click.option("--table", type=click.Path(), default=None)
@click.option("--csv", "csv_path", type=click.Path(), default=None)
@click.option("--archive", type=click.Path(), default=None)
def bench(manifest, algo, pop, offspring, strategy, max_generations, neighbours,
          restarts, seed, runs, jobs, table, csv_path, archive):
    """Run every instance of a manifest several times. Usage:\n
    ❯ python -m ctspkit bench <manifest> --algo eax --runs 10 --archive results.json
    """
    # pylint: disable=too-many-arguments,too-many-locals
    try:
        spec = _algo_spec(algo, pop, offspring, strategy, max_generations, neighbours, restarts)
        stats = []
        for entry in tqdm(read_manifest(manifest), desc="instances"):
            inst = read_instance(entry.path)
            stats.append(run_trials(inst, spec, runs, seed, entry.reference, n_jobs=jobs))
        stats = fill_missing_references(stats)
        _write(render_table(stats), table)
        if csv_path is not None:
            _write(render_csv(stats), csv_path)
        if archive is not None:
            run_meta = metadata.generate_for_run(spec.name, spec.params, runs, seed)
            save_results(archive, stats, run_meta)
    except CtspError as exc:
        _fail(exc)


@bench_commands.command()
@click.argument("archives", type=click.Path(exists=True), nargs=-1, required=True)
@click.option("--metric", type=click.Choice(METRICS), default=COST)
@click.option("--normalized", is_flag=True, help="Emit per-algorithm gaps instead")
@click.option("--output", type=click.Path(), default=None)
def profile(archives, metric: str, normalized: bool, output: str):
    """Performance profile data from one or more results archives. Usage:\n
    ❯ python -m ctspkit profile eax.json ls.json --metric time
    """
    try:
        stats = []
        for path in tqdm(archives, desc="archives"):
            stats.extend(load_results(path)[0])
        stats = fill_missing_references(stats)
        if normalized:
            _write(emit_normalized_data(normalized_results(stats)), output)
            return
        algorithms, instances, matrix = metric_matrix(stats, metric)
        result = performance_profile(matrix, algorithms, instances)
        _write(emit_profile_plot_data(result), output)
    except CtspError as exc:
        _fail(exc)


class CommandLine(click.CommandCollection):

    """Maps click usage errors and unreadable inputs to exit code 1"""

    def main(self, *args, **kwargs):
        kwargs.pop("standalone_mode", None)
        try:
            return super().main(*args, standalone_mode=False, **kwargs)
        except click.ClickException as exc:
            exc.show()
            sys.exit(ctspcli.EXIT_USAGE)
        except click.exceptions.Abort:
            sys.exit(ctspcli.EXIT_USAGE)
        except (OSError, ValueError) as exc:
            _fail(exc)


cli = CommandLine(
    sources=[instance_commands, solver_commands, exact_commands, bench_commands]
)

if __name__ == "__main__":
    cli()
