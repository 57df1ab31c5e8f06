# -*- coding: utf-8 -*-

# MIT License
#
# Copyright 2026 The lambert_tube developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""The experiments run by the `lambert_sim` sub-commands. Each command takes
an :obj:`~lambert_tube.cli.config.ExperimentConfig` and returns a
:obj:`~lambert_tube.cli.results.ResultTable`.
"""


from functools import partial
import logging

import numpy as np

from lambert_tube.analytic import product_tail_constant
from lambert_tube.analytic import product_tail_closed_form
from lambert_tube.analytic import product_survival_method
from lambert_tube.analytic import step_survival, step_tail_constant
from lambert_tube.analytic import step_tail_constant_gamma, second_moment
from lambert_tube.analytic import tau_infty, centered_ball, touching_ball
from lambert_tube.analytic import rho_infty, corner_box
from lambert_tube.analytic import box_limit_probability
from lambert_tube.analytic import plane_hit_cube_asymptotic
from lambert_tube.analytic import plane_hit_density_asymptotic
from lambert_tube.analytic import offset_disc, lambda_from_ladders
from lambert_tube.analytic import lambda_slopes, centered_exit_bound
from lambert_tube.analytic import conditional_ratio_limit
from lambert_tube.analytic import renewal_limit, green_function_limit
from lambert_tube.analytic import brightness_constant
from lambert_tube.analytic import rim_brightness_constant
from lambert_tube.chain import BlockRunner, ExitBatch, LadderBatch
from lambert_tube.chain import VisitHistogram, LambertianSteps
from lambert_tube.chain import simulate_exits, simulate_ladders
from lambert_tube.chain import accumulate_visits
from lambert_tube.cli.config import echo
from lambert_tube.cli.results import result_table
from lambert_tube.errors import InsufficientTailDataError
from lambert_tube.estimators import empirical_distribution, empirical_cdf
from lambert_tube.estimators import ks_statistic, ks_critical_value
from lambert_tube.estimators import loglog_tail_fit
from lambert_tube.geometry import Dimension


_logger = logging.getLogger(__name__)

KS_LEVEL = 0.01

# Identity checks skip trajectories whose ratio is this close to t.
IDENTITY_TIE_TOL = 1e-9

# Step-budget exclusion rates above this bound are flagged.
EXCLUSION_BOUND = 1e-6

_BOUND_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
_PRODUCT_FACTORS = range(1, 11)
_STEP_DIMS = range(3, 7)
_BALL_RADII = (0.25, 0.5, 0.75, 1.0)
_PLANE_DEPTHS = (5.0, 10.0, 20.0, 50.0)


def _runner(config):
    return BlockRunner(config.seed, config.block_size, config.workers)


def _exclusion_check(what, excluded, total):
    """Returns the rate of walks that ran out of steps and whether it stays
    within :const:`EXCLUSION_BOUND`, warning when it does not.
    """

    rate = excluded / total if total else 0.0
    within = rate <= EXCLUSION_BOUND

    if not within:
        _logger.warning('%s: %d of %d walks ran out of steps (rate %.3g, '
                        'bound %g); raise --max-steps', what, excluded, total,
                        rate, EXCLUSION_BOUND)

    return rate, within


def _first_blocks(results, counts, target):
    # Shortest prefix of the block results reaching `target`.
    total = 0
    for i, count in enumerate(counts):
        total += count
        if total >= target:
            return results[:i + 1]
    return results


def _conditioned_exits(config, depth):
    """Simulates exits until `samples` of them have an undershoot of at
    least `depth`. Returns the first `samples` exits, the first `samples`
    conditioned exits and the diagnostics of the blocks used.
    """

    task = partial(simulate_exits, Dimension(config.dim), config.s,
                   max_steps=config.max_steps)
    target = config.samples

    def accepted(batch):
        return int(np.count_nonzero(batch.undershoot >= depth))

    results = _runner(config).collect_until(task, 'exits', accepted, target)
    used = _first_blocks(results, [accepted(b) for b in results], target)
    exits = ExitBatch.concatenate(used)

    mask = exits.undershoot >= depth
    conditioned = exits.select(mask, limit=target)
    unconditioned = exits.select(np.ones(exits.size, dtype=bool),
                                 limit=target)

    rate, within = _exclusion_check(config.command, exits.excluded,
                                    exits.size + exits.excluded)

    diagnostics = {
        'blocks': len(used),
        'excluded': exits.excluded,
        'excluded_rate': rate,
        'excluded_within_bound': within,
        'acceptance_rate': float(mask.mean()),
    }

    return unconditioned, conditioned, diagnostics


def cmd_exit_cdf(config):
    """Empirical law of the exit radius `|Y_s|`, with and without
    conditioning on a last reflection at least `beta` below the level,
    against the limit `r^(d - 1)`.
    """

    d = config.dim
    unconditioned, conditioned, diagnostics = _conditioned_exits(
        config, config.beta)

    r = np.asarray(config.t_grid)

    def reference(x):
        return np.clip(x, 0.0, 1.0) ** (d - 1)

    radii = {
        'unconditioned': np.linalg.norm(unconditioned.exit_point, axis=1),
        'conditioned': np.linalg.norm(conditioned.exit_point, axis=1),
    }
    dists = {k: empirical_distribution(v) for k, v in radii.items()}

    cdf = {
        'r': r,
        'reference': reference(r),
        'unconditioned': empirical_cdf(dists['unconditioned'], r),
        'conditioned': empirical_cdf(dists['conditioned'], r),
    }

    ks = {
        'sample': list(dists),
        'n': [dist.n for dist in dists.values()],
        'statistic': [ks_statistic(dist, reference)
                      for dist in dists.values()],
        'critical_value': [ks_critical_value(dist.n, KS_LEVEL)
                           for dist in dists.values()],
    }
    ks['passed'] = [s < c for s, c in zip(ks['statistic'],
                                          ks['critical_value'])]

    tables = [('cdf', cdf), ('ks', ks)]

    if d == 3:
        tables.append(('scatter', {'y1': conditioned.exit_point[:, 0],
                                   'y2': conditioned.exit_point[:, 1]}))

    _logger.info('exit-cdf: KS %s against critical value %s',
                 ks['statistic'], ks['critical_value'])

    return result_table('exit-cdf', echo(config), tables, diagnostics)


def _axial_block(dim, n, rng):
    return LambertianSteps(dim).axial(rng, n)


def cmd_tail(config):
    """Survival function of the axial step from quadrature and from
    simulation, its scaling against the tail constant and a log-log fit of
    the tail index.
    """

    dim = Dimension(config.dim)
    d = dim.d

    blocks = _runner(config).collect(partial(_axial_block, dim), 'steps',
                                     config.samples)
    steps = np.concatenate(blocks)
    n = steps.shape[0]

    x = np.asarray(config.x_grid)
    quad = np.array([step_survival(dim, xi) for xi in x])
    mc = np.array([np.count_nonzero(steps > xi) / n for xi in x])
    std_err = np.sqrt(np.maximum(mc * (1.0 - mc), 0.0) / n)

    with np.errstate(divide='ignore', invalid='ignore'):
        z = np.where(std_err > 0, (mc - quad) / std_err, np.nan)

    c_d = float(step_tail_constant(dim))

    survival = {
        'x': x,
        'survival_quad': quad,
        'survival_mc': mc,
        'mc_std_err': std_err,
        'z_score': z,
        'abs_scaled': 2.0 * x ** d * quad,
        'tail_constant': np.full(x.shape, c_d),
        'scaled': x ** d * quad,
        'half_constant': np.full(x.shape, 0.5 * c_d),
    }

    tables = [('survival', survival)]
    diagnostics = {'samples': n}

    try:
        fit = loglog_tail_fit(empirical_distribution(np.abs(steps)))
        tables.append(('fit', {
            'slope': [fit.slope],
            'intercept': [fit.intercept],
            'lo': [fit.x_range[0]],
            'hi': [fit.x_range[1]],
            'stderr_slope': [fit.stderr_slope],
            'expected_slope': [-float(d)],
        }))
    except InsufficientTailDataError as err:
        _logger.warning('tail: no index fit, %s', err)
        diagnostics['fit'] = str(err)

    return result_table('tail', echo(config), tables, diagnostics)


def cmd_lambda(config):
    """The ladder functional `Lambda` from simulated ladders, the empirical
    law of `U_s / (U_s + O_s)` at level `s` and its version conditioned on a
    last reflection at least `epsilon s` below the level, against `t^d`.
    """

    dim = Dimension(config.dim)
    t = np.asarray(config.t_grid)

    task = partial(simulate_ladders, dim, max_steps=config.max_steps)
    ladders = LadderBatch.concatenate(
        _runner(config).collect(task, 'ladders', config.ladders))
    estimate = lambda_from_ladders(ladders, t)

    unconditioned, conditioned, diagnostics = _conditioned_exits(
        config, config.epsilon * config.s)

    at_zero, at_one = lambda_slopes(dim, estimate)

    lam = {
        't': t,
        'lambda': estimate.values,
        'std_err': estimate.std_errs,
        'ratio_cdf': empirical_cdf(
            empirical_distribution(unconditioned.ratio), t),
        'conditioned_cdf': empirical_cdf(
            empirical_distribution(conditioned.ratio), t),
        'reference': conditional_ratio_limit(dim, t),
        'lower_bound': at_zero * t,
        'upper_bound': t,
    }

    radii = np.asarray(_BOUND_RADII)
    bound = {'r': radii, 'bound': centered_exit_bound(estimate, radii)}

    moments = {
        'mean_o0': [estimate.mean_o0],
        'mean_u0': [estimate.mean_u0],
        'slope_at_zero': [at_zero],
        'slope_at_one': [at_one],
        'rim_brightness': [rim_brightness_constant(
            dim, estimate.mean_o0, estimate.mean_o0 + estimate.mean_u0)],
    }

    ladder_rate, ladder_within = _exclusion_check(
        'lambda ladders', estimate.excluded,
        estimate.n_ladders + estimate.excluded)

    diagnostics = dict(diagnostics,
                       ladders=estimate.n_ladders,
                       ladders_excluded=estimate.excluded,
                       ladders_excluded_rate=ladder_rate,
                       ladders_excluded_within_bound=ladder_within)

    return result_table('lambda', echo(config),
                        [('lambda', lam), ('centred_bound', bound),
                         ('moments', moments)],
                        diagnostics)


def cmd_renewal(config):
    """Renewal visits below the level, scaled by `s^2`, against their
    limits, together with the brightness constant computed from the same
    second moment.
    """

    dim = Dimension(config.dim)
    s = config.s
    edges = np.asarray(config.bins)

    task = partial(accumulate_visits, dim, s, edges,
                   max_steps=config.max_steps)
    hist = VisitHistogram.merge(
        _runner(config).collect(task, 'visits', config.samples))

    e_x2 = second_moment(dim)

    lo, hi = edges[:-1], edges[1:]
    scaled = hist.mean_visits / s ** 2
    stated = np.array([renewal_limit(-b, -a, e_x2) for a, b in zip(lo, hi)])
    green = np.array([green_function_limit(-b, -a, e_x2)
                      for a, b in zip(lo, hi)])

    visits = {
        'lo': lo,
        'hi': hi,
        'visits_scaled': scaled,
        'std_err_scaled': hist.std_errs / s ** 2,
        'renewal_limit': stated,
        'green_limit': green,
        'deviation_renewal': scaled / stated - 1.0,
        'deviation_green': scaled / green - 1.0,
    }

    brightness = {
        'r1': [config.r1],
        'r2': [config.r2],
        'second_moment': [e_x2],
        'brightness_constant': [brightness_constant(dim, config.r1,
                                                    config.r2, e_x2)],
    }

    rate, within = _exclusion_check('renewal', hist.excluded,
                                    hist.trajectories)

    diagnostics = {
        'trajectories': hist.trajectories,
        'truncated': hist.excluded,
        'truncated_rate': rate,
        'truncated_within_bound': within,
    }

    return result_table('renewal', echo(config),
                        [('visits', visits), ('brightness', brightness)],
                        diagnostics)


def cmd_disc_identity(config):
    """Per-trajectory check that `U_s / (U_s + O_s) <= t` exactly when the
    exit point lies in the disc of radius `t` touching the sphere at the
    last reflection.
    """

    task = partial(simulate_exits, Dimension(config.dim), config.s,
                   max_steps=config.max_steps)
    exits = ExitBatch.concatenate(
        _runner(config).collect(task, 'exits', config.samples))
    ratio = exits.ratio

    rows = {'t': [], 'ratio_below': [], 'in_disc': [], 'disagreements': []}

    for t in config.t_grid:
        below = ratio <= t
        inside = offset_disc(exits.pre_exit_cross, t).contains(
            exits.exit_point)
        clear = np.abs(ratio - t) > IDENTITY_TIE_TOL

        rows['t'].append(t)
        rows['ratio_below'].append(int(np.count_nonzero(below)))
        rows['in_disc'].append(int(np.count_nonzero(inside)))
        rows['disagreements'].append(
            int(np.count_nonzero((below != inside) & clear)))

    rate, within = _exclusion_check('disc-identity', exits.excluded,
                                    exits.size + exits.excluded)

    diagnostics = {
        'trajectories': exits.size,
        'excluded': exits.excluded,
        'excluded_rate': rate,
        'excluded_within_bound': within,
        'max_disagreements': max(rows['disagreements']),
    }

    return result_table('disc-identity', echo(config), [('identity', rows)],
                        diagnostics)


def cmd_constants(config):
    """Tail constants, exit measures of balls, cube limits, plane-hit
    asymptotics and brightness constants. Only quadrature and closed forms
    are used.
    """

    dim = Dimension(config.dim)
    d = dim.d

    products = {
        'n': list(_PRODUCT_FACTORS),
        'recursion': [product_tail_constant(n).value
                      for n in _PRODUCT_FACTORS],
        'closed_form': [product_tail_closed_form(n).value
                        for n in _PRODUCT_FACTORS],
        'survival_method': [product_survival_method(n)
                            for n in _PRODUCT_FACTORS],
    }

    steps = {
        'd': list(_STEP_DIMS),
        'tail_constant': [step_tail_constant(k).value for k in _STEP_DIMS],
        'gamma_form': [step_tail_constant_gamma(k).value
                       for k in _STEP_DIMS],
        'one_sided': [0.5 * step_tail_constant(k).value
                      for k in _STEP_DIMS],
    }

    radii = np.asarray(_BALL_RADII)
    balls = {
        'r': radii,
        'centered': [tau_infty(dim, centered_ball(dim, r)).value
                     for r in radii],
        'centered_reference': radii ** (d - 1),
        'touching': [tau_infty(dim, touching_ball(dim, r)).value
                     for r in radii],
        'touching_reference': radii ** d,
    }

    sides = np.asarray(config.t_grid)[1:]
    cube = {
        't': sides,
        'rho_infty': [rho_infty(dim, corner_box(dim, np.full(d - 1, 2 * t)))
                      for t in sides],
        'box_limit': [box_limit_probability(dim, np.full(d - 1, 2 * t))
                      for t in sides],
    }

    depths = np.asarray(_PLANE_DEPTHS)
    plane = {
        'u': depths,
        'cube_probability': [plane_hit_cube_asymptotic(dim, u)
                             for u in depths],
        'density_at_origin': [plane_hit_density_asymptotic(dim, u)
                              for u in depths],
    }

    e_x2 = second_moment(dim)
    brightness = {
        'd': [d],
        'r1': [config.r1],
        'r2': [config.r2],
        'second_moment': [e_x2],
        'brightness_constant': [brightness_constant(dim, config.r1,
                                                    config.r2, e_x2)],
    }

    return result_table('constants', echo(config),
                        [('product_tails', products), ('step_tails', steps),
                         ('tau_infty_balls', balls), ('cube_limits', cube),
                         ('plane_hits', plane), ('brightness', brightness)])


COMMANDS = {
    'exit-cdf': cmd_exit_cdf,
    'tail': cmd_tail,
    'lambda': cmd_lambda,
    'renewal': cmd_renewal,
    'disc-identity': cmd_disc_identity,
    'constants': cmd_constants,
}
