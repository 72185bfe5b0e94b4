"""
Command implementations.

Each run_* function takes a validated RunConfig, evaluates the requested
quantity over the grid (or integrates the requested problem) and returns
a CommandResult: the CSV table plus any scalar metrics. Grid points are
independent and evaluated through GridExecutor in input order, so the
output does not depend on the worker count.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np
import pandas as pd

from varfrac.cli.cases import FdeCase, OperatorCase, VarminCase, get_case
from varfrac.config import ConfigError, ConfigManager, ParallelConfig
from varfrac.execution import GridExecutor
from varfrac.expansion import (
    ExpansionParams,
    Side,
    approx_left_integral,
    approx_left_marchaud,
    approx_left_rl_derivative,
    approx_right_marchaud,
    approx_right_rl_derivative,
    bound_e1,
    bound_e2,
    bound_en_integral,
)
from varfrac.metrics import error_norm, error_window
from varfrac.operators import (
    oracle_left_integral,
    oracle_left_marchaud,
    oracle_left_rl_derivative,
    oracle_right_integral,
    oracle_right_marchaud,
    oracle_right_rl_derivative,
    power_left_integral,
    power_left_marchaud,
    power_left_rl_derivative,
)
from varfrac.solvers import (
    TrackingVariationalProblem,
    build_pontryagin,
    evaluate_functional,
    reduce,
    shoot,
    solve_ivp,
)

logger = logging.getLogger(__name__)

DEFAULT_CASES = {
    'exact': 'power4',
    'oracle': 'power4',
    'approx': 'power4',
    'compare': 'power4',
    'fde': 'fde-manufactured',
    'varmin': 'varmin-tracking',
}


@dataclass(frozen=True)
class OperatorSpec:
    """How to evaluate one operator three ways."""
    side: Side
    oracle: Callable
    approx: Optional[Callable] = None
    exact: Optional[Callable] = None
    integral: bool = False
    log_term: bool = False


OPERATOR_TABLE: Dict[str, OperatorSpec] = {
    'ileft': OperatorSpec(Side.LEFT, oracle_left_integral, approx_left_integral,
                          power_left_integral, integral=True),
    # No expansion is provided for the right integral
    'iright': OperatorSpec(Side.RIGHT, oracle_right_integral, integral=True),
    'dleft-rl': OperatorSpec(Side.LEFT, oracle_left_rl_derivative, approx_left_rl_derivative,
                             power_left_rl_derivative, log_term=True),
    'dright-rl': OperatorSpec(Side.RIGHT, oracle_right_rl_derivative, approx_right_rl_derivative,
                              log_term=True),
    'dleft-marchaud': OperatorSpec(Side.LEFT, oracle_left_marchaud, approx_left_marchaud,
                                   power_left_marchaud),
    'dright-marchaud': OperatorSpec(Side.RIGHT, oracle_right_marchaud, approx_right_marchaud),
}


@dataclass
class RunConfig:
    """
    Fully resolved settings of one command invocation.
    """
    command: str
    operator: str
    case: str
    n: int
    N: List[int]
    t_min: float
    t_max: float
    points: int
    delta: float
    tol: float
    bound_samples: int
    start_eps: float
    step: float
    start_ratio: float
    newton_tol: float
    max_iter: int
    fd_perturbation: float
    parallel: ParallelConfig
    progress: bool = False
    out: Optional[str] = None

    @property
    def grid(self) -> np.ndarray:
        return np.linspace(self.t_min, self.t_max, self.points)

    def validate(self, case) -> None:
        """
        Check the settings against the case they run on.

        Raises:
            ConfigError: On any inconsistency
        """
        if self.points < 2:
            raise ConfigError(f"Grid needs at least 2 points, got {self.points}")
        if not self.t_min < self.t_max:
            raise ConfigError(f"Grid requires MIN < MAX, got {self.t_min}:{self.t_max}")

        if self.command in ('fde', 'varmin'):
            expected = FdeCase if self.command == 'fde' else VarminCase
            if not isinstance(case, expected):
                raise ConfigError(f"Case '{self.case}' cannot be used with the '{self.command}' command")
            if min(self.N) < 2:
                raise ConfigError(f"The '{self.command}' command requires N >= 2, got {self.N[0]}")
            a, b = _problem_interval(case)
            if self.t_min < a + self.start_eps or self.t_max > b:
                raise ConfigError(f"Grid must lie in [a + eps, b] = [{a + self.start_eps}, {b}]")
            return

        if not isinstance(case, OperatorCase):
            raise ConfigError(f"Case '{self.case}' cannot be used with the '{self.command}' command")
        if min(self.N) < self.n + 1:
            raise ConfigError(f"N must be >= n + 1, got n={self.n}, N={self.N}")
        a, b = case.function.domain
        spec = OPERATOR_TABLE[self.operator]
        if spec.side is Side.LEFT and not (a < self.t_min and self.t_max <= b):
            raise ConfigError(f"Left operators need a < MIN and MAX <= b on [{a}, {b}]")
        if spec.side is Side.RIGHT and not (a <= self.t_min and self.t_max < b):
            raise ConfigError(f"Right operators need a <= MIN and MAX < b on [{a}, {b}]")
        if self.command in ('approx', 'compare'):
            if spec.approx is None:
                raise ConfigError(f"No expansion is available for operator '{self.operator}'")
            case.function.require_order(self.n + 1)
        if self.command == 'exact' and (spec.exact is None or case.power is None):
            raise ConfigError(f"No closed form for operator '{self.operator}' on case '{self.case}'; "
                              f"use the 'oracle' command")


@dataclass
class CommandResult:
    """Output table and scalar metrics of a command."""
    table: pd.DataFrame
    metrics: Dict[str, float] = field(default_factory=dict)


def _problem_interval(case):
    if isinstance(case, FdeCase):
        return case.problem.a, case.problem.horizon
    return case.problem.a, case.problem.b


def build_run_config(args, manager: ConfigManager) -> RunConfig:
    """
    Merge command-line flags into the configuration and resolve a RunConfig.

    Flags override YAML values; the merged configuration is re-validated.

    Raises:
        ConfigError: If the merged configuration is invalid
    """
    overrides: Dict[str, Dict] = {}
    if args.n is not None:
        overrides.setdefault('operators', {})['n'] = args.n
    if args.sizes:
        if args.command in ('fde', 'varmin'):
            overrides.setdefault('solvers', {})[f'{args.command}_N'] = args.sizes[0]
        else:
            overrides.setdefault('operators', {})['N'] = list(args.sizes)
    if args.grid is not None:
        t_min, t_max, points = args.grid
        overrides.setdefault('grid', {}).update(t_min=t_min, t_max=t_max, points=points)
    if args.delta is not None:
        overrides.setdefault('grid', {})['delta'] = args.delta
    if args.eps is not None:
        overrides.setdefault('solvers', {})['start_eps'] = args.eps
    if args.step is not None:
        overrides.setdefault('solvers', {})['step'] = args.step
    if args.workers is not None:
        overrides['parallel'] = {'mode': 'manual', 'max_workers': args.workers}
    if overrides:
        manager.apply_overrides(overrides)

    operators = manager.get_operator_config()
    grid = manager.get_grid_config()
    solvers = manager.get_solver_config()
    runtime = manager.get_runtime_config()

    sizes = list(operators.N)
    n = operators.n
    if args.command == 'fde':
        sizes, n = [solvers.fde_N], 1
    elif args.command == 'varmin':
        sizes, n = [solvers.varmin_N], 1

    return RunConfig(
        command=args.command,
        operator=args.operator,
        case=args.case or DEFAULT_CASES[args.command],
        n=n,
        N=sizes,
        t_min=grid.t_min,
        t_max=grid.t_max,
        points=grid.points,
        delta=grid.delta,
        tol=operators.tol,
        bound_samples=operators.bound_samples,
        start_eps=solvers.start_eps,
        step=solvers.step,
        start_ratio=solvers.start_ratio,
        newton_tol=solvers.newton_tol,
        max_iter=solvers.max_iter,
        fd_perturbation=solvers.fd_perturbation,
        parallel=manager.get_parallel_config(),
        progress=runtime.progress,
        out=args.out,
    )


def _executor(config: RunConfig, num_tasks: int) -> GridExecutor:
    return GridExecutor.from_config(config.parallel, num_tasks, progress=config.progress)


def _load_case(config: RunConfig):
    case = get_case(config.case)
    config.validate(case)
    if isinstance(case, OperatorCase):
        case.order.validate()
    else:
        case.problem.order.validate()
    return case


def _bounds(spec: OperatorSpec, case: OperatorCase, params: ExpansionParams, t: float,
            samples: int) -> Dict[str, float]:
    if spec.integral:
        return {'bound_e1': bound_en_integral(case.function, case.order, params, t, samples)}
    e1 = bound_e1(case.function, case.order, params, t, spec.side, samples)
    e2 = bound_e2(case.function, case.order, params, t, spec.side, samples) if spec.log_term else 0.0
    return {'bound_e1': e1, 'bound_e2': e2}


def run_exact(config: RunConfig) -> CommandResult:
    """Closed-form operator values of a power-function case over the grid."""
    case = _load_case(config)
    spec = OPERATOR_TABLE[config.operator]
    grid = config.grid
    values = _executor(config, len(grid)).map_ordered(
        lambda t: spec.exact(case.power, case.order, float(t)), grid)
    return CommandResult(pd.DataFrame({'t': grid, 'exact': values}))


def run_oracle(config: RunConfig) -> CommandResult:
    """Quadrature reference values over the grid."""
    case = _load_case(config)
    spec = OPERATOR_TABLE[config.operator]
    grid = config.grid
    values = _executor(config, len(grid)).map_ordered(
        lambda t: spec.oracle(case.function, case.order, float(t), tol=config.tol), grid)
    return CommandResult(pd.DataFrame({'t': grid, 'oracle': values}))


def run_approx(config: RunConfig) -> CommandResult:
    """Expansion values and error bounds for every requested N."""
    case = _load_case(config)
    spec = OPERATOR_TABLE[config.operator]
    grid = config.grid
    executor = _executor(config, len(grid))
    table = pd.DataFrame({'t': grid})

    for size in config.N:
        params = ExpansionParams(config.n, size)

        def evaluate(t: float) -> Dict[str, float]:
            t = float(t)
            report = spec.approx(case.function, case.order, params, t, bounds=False)
            return {'approx': report.value, **_bounds(spec, case, params, t, config.bound_samples)}

        rows = pd.DataFrame(executor.map_ordered(evaluate, grid))
        for column in rows.columns:
            table[f'{column}_N{size}'] = rows[column].to_numpy()
    return CommandResult(table)


def run_compare(config: RunConfig) -> CommandResult:
    """
    Expansion against the reference, with the error norm for every N.

    The reference is the closed form when the case has one for the
    operator, otherwise the quadrature oracle. The norm is taken over
    grid points with t >= delta.
    """
    case = _load_case(config)
    spec = OPERATOR_TABLE[config.operator]
    grid = config.grid
    executor = _executor(config, len(grid))

    if spec.exact is not None and case.power is not None:
        label = 'exact'
        reference = executor.map_ordered(lambda t: spec.exact(case.power, case.order, float(t)), grid)
    else:
        label = 'oracle'
        logger.info("No closed form for %s on %s; comparing against the oracle",
                    config.operator, config.case)
        reference = executor.map_ordered(
            lambda t: spec.oracle(case.function, case.order, float(t), tol=config.tol), grid)

    table = pd.DataFrame({'t': grid, label: reference})
    cutoff = case.function.a + config.delta
    window = error_window(grid, case.function.a, config.delta)
    if window.sum() < 2:
        raise ConfigError(f"Fewer than 2 grid points satisfy t >= a + delta = {cutoff}")

    metrics = {}
    for size in config.N:
        params = ExpansionParams(config.n, size)
        values = executor.map_ordered(
            lambda t: spec.approx(case.function, case.order, params, float(t), bounds=False).value,
            grid)
        column = f'approx_N{size}'
        table[column] = values
        metrics[f'error_norm_N{size}'] = error_norm(table[column].to_numpy()[window],
                                                    table[label].to_numpy()[window],
                                                    grid[window])
    return CommandResult(table, metrics)


def run_fde(config: RunConfig) -> CommandResult:
    """Reduced-ODE solution of the equation case, sampled on the grid."""
    case = _load_case(config)
    size = config.N[0]
    system = reduce(case.problem, size)
    trajectory = solve_ivp(system, start_eps=config.start_eps, step=config.step,
                           start_ratio=config.start_ratio)
    grid = config.grid
    approx = trajectory.sample(grid)
    exact = np.array([case.exact(t) for t in grid])
    table = pd.DataFrame({'t': grid, f'x_N{size}': approx, 'exact': exact,
                          'deviation': np.abs(approx - exact)})
    return CommandResult(table, {'max_deviation': float(table['deviation'].max())})


def run_varmin(config: RunConfig) -> CommandResult:
    """Pontryagin shooting solution of the variational case, sampled on the grid."""
    case = _load_case(config)
    problem: TrackingVariationalProblem = case.problem
    size = config.N[0]
    system = build_pontryagin(problem, size)
    result = shoot(system, problem, start_eps=config.start_eps, step=config.step,
                   newton_tol=config.newton_tol, max_iter=config.max_iter,
                   perturbation=config.fd_perturbation, start_ratio=config.start_ratio)

    grid = config.grid
    trajectory = result.trajectory
    approx = trajectory.sample(grid)
    exact = np.array([case.exact(t) for t in grid])
    table = pd.DataFrame({'t': grid, f'x_N{size}': approx, 'exact': exact,
                          'deviation': np.abs(approx - exact)})
    for k in range(1, size + 1):
        table[f'lambda_{k}'] = trajectory.sample(grid, f'lambda_{k}')

    metrics = {
        'functional': evaluate_functional(trajectory, problem, size),
        'terminal_deviation': abs(float(trajectory.x[-1]) - problem.x_b),
        'residual_norm': float(np.linalg.norm(result.residual)),
        'iterations': float(result.iterations),
        'max_deviation': float(table['deviation'].max()),
    }
    return CommandResult(table, metrics)


COMMAND_REGISTRY = {
    'exact': run_exact,
    'oracle': run_oracle,
    'approx': run_approx,
    'compare': run_compare,
    'fde': run_fde,
    'varmin': run_varmin,
}
