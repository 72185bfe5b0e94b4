"""
Built-in test cases addressable by name from the command line.

Operator cases pair a smooth function with an order function (and a
power-function closed form when one exists); solver cases carry a fully
specified problem together with its exact solution.
"""

from dataclasses import dataclass
from typing import Callable, Optional, Union

from varfrac.config import ConfigError
from varfrac.operators import PowerFunction, SmoothFunction
from varfrac.solvers import LinearFdeProblem, TrackingVariationalProblem
from varfrac.specfun import OrderFunction, gamma


@dataclass(frozen=True)
class OperatorCase:
    """Function and order for the exact/oracle/approx/compare commands."""
    name: str
    description: str
    function: SmoothFunction
    order: OrderFunction
    power: Optional[PowerFunction] = None


@dataclass(frozen=True)
class FdeCase:
    """Linear equation with a known solution, for the fde command."""
    name: str
    description: str
    problem: LinearFdeProblem
    exact: Callable[[float], float]


@dataclass(frozen=True)
class VarminCase:
    """Tracking problem with a known minimiser, for the varmin command."""
    name: str
    description: str
    problem: TrackingVariationalProblem
    exact: Callable[[float], float]


Case = Union[OperatorCase, FdeCase, VarminCase]


def _linear_order() -> OrderFunction:
    # α(t) = (t+1)/4 on [0, 1]
    return OrderFunction.from_closed_form(lambda t: (t + 1.0) / 4.0, lambda t: 0.25, (0.0, 1.0))


def _marchaud_of_identity(t: float) -> float:
    # Left Marchaud derivative of x(t) = t with α(t) = (t+1)/4
    return t ** ((3.0 - t) / 4.0) / gamma((7.0 - t) / 4.0)


def _power4() -> OperatorCase:
    power = PowerFunction(4.0)
    return OperatorCase(
        name='power4',
        description='x(t) = t^4 with alpha(t) = (t+1)/4 on [0, 1]',
        function=power.as_smooth(b=1.0, max_order=6),
        order=_linear_order(),
        power=power,
    )


def _power4_const() -> OperatorCase:
    power = PowerFunction(4.0)
    return OperatorCase(
        name='power4-const',
        description='x(t) = t^4 with constant alpha = 0.5 on [0, 1]',
        function=power.as_smooth(b=1.0, max_order=6),
        order=OrderFunction.constant(0.5, (0.0, 1.0)),
        power=power,
    )


def _fde_manufactured() -> FdeCase:
    problem = LinearFdeProblem(
        order=_linear_order(),
        source=lambda t: _marchaud_of_identity(t) + t,
        linear_coeff=1.0,
        a=0.0,
        x0=0.0,
        horizon=1.0,
    )
    return FdeCase(
        name='fde-manufactured',
        description='D^alpha x + x = t^((3-t)/4)/Gamma((7-t)/4) + t, x(0) = 0; exact x = t',
        problem=problem,
        exact=lambda t: t,
    )


def _varmin_tracking() -> VarminCase:
    problem = TrackingVariationalProblem(
        order=_linear_order(),
        target=_marchaud_of_identity,
        a=0.0,
        b=1.0,
        x_a=0.0,
        x_b=1.0,
    )
    return VarminCase(
        name='varmin-tracking',
        description='min int (D^alpha x - t^((3-t)/4)/Gamma((7-t)/4))^2, x(0)=0, x(1)=1; exact x = t',
        problem=problem,
        exact=lambda t: t,
    )


# Case registry mapping names to factories
CASE_REGISTRY = {
    'power4': _power4,
    'power4-const': _power4_const,
    'fde-manufactured': _fde_manufactured,
    'varmin-tracking': _varmin_tracking,
}


def get_case(name: str) -> Case:
    """
    Build a registered case by name.

    Raises:
        ConfigError: If name is not registered
    """
    if name not in CASE_REGISTRY:
        available = ', '.join(CASE_REGISTRY.keys())
        raise ConfigError(f"Unknown case '{name}'. Available cases: {available}")
    return CASE_REGISTRY[name]()
