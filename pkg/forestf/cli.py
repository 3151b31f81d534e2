"""
Command-line front end.

Every ELEMENT argument is either a word ("x0^-2 x1 x0^3 x1^-2") or, when it
contains "/", a diagram in text form ("^(..) / ^. .").

Exit codes: 0 success, 1 failed verification, 2 unparsable or malformed
input, 3 resource cap or interrupt (output marked partial).
"""

import json
import logging
import sys
from functools import wraps

import click

from forestf import metadata
from forestf.utils.constants import (
    ConvexityPairs,
    RenderStyle,
    VerificationScope,
)
from forestf.utils.exceptions import (
    ForestStructureError,
    ResourceCapExceeded,
    VerificationFailure,
    WordSyntaxError,
)
from forestf.utils.helper_functions import namedtuple_with_default
from forestf.utils.limits import DEFAULT_MAX_ELEMENTS, ResourceLimits
from forestf.diagram.word import parse_word, format_word
from forestf.diagram.forest import (
    canonicalize,
    from_word,
    inverse,
    multiply,
)
from forestf.diagram.text import (
    diagram_to_text,
    looks_like_diagram,
    parse_diagram,
)
from forestf.diagram.render import render
from forestf.metric.labels import length, labels_to_text
from forestf.metric.geodesic import geodesic_word
from forestf.cayley.cache import BallCache
from forestf.cayley.graph import (
    Ball,
    ConvexityResult,
    convexity_search,
    distance_conventions,
    enumerate_ball,
    restricted_distance,
)
from forestf.cayley.trace import analyze_path
from forestf.cayley.witnesses import witnesses
from forestf.plmap.dyadic import parse_dyadic
from forestf.plmap.maps import evaluate, to_plmap
from forestf.verification.protocol import VerificationContext
from forestf.verification.checks import run_verification

EXIT_VERIFICATION_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_PARTIAL = 3


CliConfig = namedtuple_with_default(
    'CliConfig',
    ('as_json', False),
    ('cache', None),
    ('limits', ResourceLimits()),
    ('seed', 0),
)


def parse_element(text, raw=False):
    if looks_like_diagram(text):
        return parse_diagram(text, raw=raw)
    return from_word(parse_word(text))


def _emit(config, payload, human):
    if config.as_json:
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        click.echo(human)


def _partial_payload(partial):
    if isinstance(partial, Ball):
        return partial.stats()
    if isinstance(partial, ConvexityResult):
        return {
            'radius': partial.radius,
            'value_so_far': partial.value,
            'pairs': partial.pairs,
        }
    return partial


def reporting(command):
    '''
    Maps library errors onto exit codes.
    '''
    @wraps(command)
    def _wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        config = ctx.obj
        try:
            return command(*args, **kwargs)
        except (WordSyntaxError, ForestStructureError, ValueError) as exc:
            click.echo(f'error: {exc}', err=True)
            ctx.exit(EXIT_BAD_INPUT)
        except VerificationFailure as exc:
            click.echo(f'verification failed: {exc}', err=True)
            _emit(config, {'passed': False, 'mismatch': exc.mismatch},
                  f'mismatch: {exc.mismatch}')
            ctx.exit(EXIT_VERIFICATION_FAILED)
        except ResourceCapExceeded as exc:
            payload = {
                'partial': True,
                'reason': str(exc),
                'result': _partial_payload(exc.partial),
            }
            _emit(config, payload, f'PARTIAL ({exc}): {payload["result"]}')
            ctx.exit(EXIT_PARTIAL)
        except KeyboardInterrupt:
            _emit(config, {'partial': True, 'reason': 'interrupted'},
                  'PARTIAL (interrupted)')
            ctx.exit(EXIT_PARTIAL)

    return _wrapper


@click.group()
@click.version_option(metadata.VERSION, prog_name=metadata.NAME)
@click.option('--json', 'as_json', is_flag=True,
              help='Emit JSON instead of a human summary.')
@click.option('--cache-dir', type=click.Path(file_okay=False),
              envvar='FORESTF_CACHE_DIR', default=None,
              help='Directory for enumerated balls.')
@click.option('--max-elements', type=int, default=DEFAULT_MAX_ELEMENTS,
              show_default=True,
              help='Cap on elements visited by a search.')
@click.option('--max-seconds', type=float, default=None,
              help='Cap on wall time of a search.')
@click.option('--seed', type=int, default=0, show_default=True,
              help='Seed for randomized sweeps.')
@click.option('-v', '--verbose', is_flag=True, help='Log at DEBUG level.')
@click.pass_context
def cli(ctx, as_json, cache_dir, max_elements, max_seconds, seed, verbose):
    '''
    Exact computations in Thompson's group F over {x0, x1}.
    '''
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
    )
    ctx.obj = CliConfig(
        as_json=as_json,
        cache=BallCache(cache_dir) if cache_dir else None,
        limits=ResourceLimits(max_elements, max_seconds),
        seed=seed,
    )


@cli.command(name='len')
@click.argument('element')
@click.pass_obj
@reporting
def cmd_len(config, element):
    '''
    Word length from the space labels.
    '''
    breakdown = length(parse_element(element))
    labeling = breakdown.labeling
    human = '\n'.join([
        f'length {breakdown.total} = {breakdown.top_carets} + '
        f'{breakdown.bottom_carets} + {breakdown.x0_count}',
        f'top labels:    {labels_to_text(labeling.top_labels)}',
        f'bottom labels: {labels_to_text(labeling.bottom_labels)}',
        f'weights:       {" ".join(map(str, labeling.weights))}',
    ])
    _emit(config, breakdown.to_json(), human)


@cli.command(name='normalize')
@click.argument('element')
@click.option('--raw', is_flag=True,
              help='Accept a non-canonical diagram.')
@click.pass_obj
@reporting
def cmd_normalize(config, element, raw):
    diagram = canonicalize(parse_element(element, raw=raw))
    text = diagram_to_text(diagram)
    _emit(config, {'diagram': text}, text)


@cli.command(name='mul')
@click.argument('left')
@click.argument('right')
@click.pass_obj
@reporting
def cmd_mul(config, left, right):
    product = multiply(parse_element(left), parse_element(right))
    text = diagram_to_text(product)
    _emit(config, {'diagram': text}, text)


@cli.command(name='inv')
@click.argument('element')
@click.pass_obj
@reporting
def cmd_inv(config, element):
    text = diagram_to_text(inverse(parse_element(element)))
    _emit(config, {'diagram': text}, text)


@cli.command(name='geodesic')
@click.argument('element')
@click.pass_obj
@reporting
def cmd_geodesic(config, element):
    '''
    A minimum-length word.
    '''
    word = geodesic_word(parse_element(element))
    text = format_word(word)
    _emit(config, {'word': text, 'length': len(word)},
          f'{text}  (length {len(word)})')


@cli.command(name='ball')
@click.argument('radius', type=click.IntRange(min=0))
@click.pass_obj
@reporting
def cmd_ball(config, radius):
    ball = enumerate_ball(radius, config.limits, config.cache)
    stats = ball.stats()
    _emit(config, stats, str(stats['count']))


_PAIR_RULES = [rule.value for rule in ConvexityPairs]


@cli.command(name='convexity')
@click.argument('radius', type=click.IntRange(min=1))
@click.option('--pairs', type=click.Choice(_PAIR_RULES),
              default=ConvexityPairs.GRAPH.value, show_default=True,
              help='graph: d(g, h) = 2. left: l(g^-1 h) = 2.')
@click.pass_obj
@reporting
def cmd_convexity(config, radius, pairs):
    '''
    c(k) for k = 1..RADIUS.
    '''
    ball = enumerate_ball(radius, config.limits, config.cache)
    table = []
    for current in range(1, radius + 1):
        result = convexity_search(
            current, ball, config.limits, rule=pairs,
        )
        table.append({
            'radius': current,
            'c': result.value,
            'pairs': result.pairs,
        })

    human = '\n'.join(f'c({row["radius"]}) = {row["c"]}' for row in table)
    _emit(
        config,
        {'table': table, 'value': table[-1]['c'], 'rule': pairs},
        human,
    )


@cli.command(name='distance')
@click.argument('left')
@click.argument('right')
@click.option('--radius', type=click.IntRange(min=0), default=None,
              help='Also search for the shortest path inside this ball.')
@click.pass_obj
@reporting
def cmd_distance(config, left, right, radius):
    u, v = parse_element(left), parse_element(right)
    payload = distance_conventions(u, v, config.limits)
    if radius is not None:
        payload['radius'] = radius
        payload['restricted'] = restricted_distance(
            u, v, radius, config.limits,
        )
    human = ', '.join(f'{key}={payload[key]}' for key in sorted(payload))
    _emit(config, payload, human)


@cli.command(name='verify')
@click.option('--n', 'n', type=click.IntRange(min=1), default=1,
              show_default=True)
@click.option('--full', 'scope', flag_value=VerificationScope.FULL.value,
              help='Restricted search for every n and the map sweep.')
@click.option('--examples-only', 'scope',
              flag_value=VerificationScope.EXAMPLES_ONLY.value,
              help='Witness lengths and the explicit paths only.')
@click.option('--timings', is_flag=True,
              help='Include per-check elapsed seconds.')
@click.pass_obj
@reporting
def cmd_verify(config, n, scope, timings):
    context = VerificationContext(
        n=n,
        scope=VerificationScope(scope or VerificationScope.PARTIAL.value),
        limits=config.limits,
        seed=config.seed,
    )
    report = run_verification(context)

    lines = [
        f'{result.name}: {result.status.value}' for result in report.results
    ]
    lines.append('PASSED' if report.passed else 'FAILED')
    _emit(config, report.to_json(timings=timings), '\n'.join(lines))

    if not report.passed:
        click.get_current_context().exit(EXIT_VERIFICATION_FAILED)


@cli.command(name='analyze-path')
@click.argument('word')
@click.option('--start', default=None,
              help='Start element, the identity by default.')
@click.option('--n', 'n', type=click.IntRange(min=1), default=None,
              help='Start at the witness l for this n.')
@click.option('--radius', type=click.IntRange(min=0), default=None)
@click.pass_obj
@reporting
def cmd_analyze_path(config, word, start, n, radius):
    '''
    Right foot / critical leaf trace of WORD applied to the start.
    '''
    if start is not None:
        origin = parse_element(start)
    elif n is not None:
        origin, _ = witnesses(n)
        radius = 2 * n + 2 if radius is None else radius
    else:
        origin = from_word(())

    trace = analyze_path(origin, parse_word(word), radius)
    payload = trace.to_json()

    lines = []
    for step in payload['steps']:
        marks = []
        if step['foot_on_critical']:
            marks.append('on-critical')
        if step['jump']:
            marks.append('jump')
        if step['in_ball'] is False:
            marks.append('outside')
        lines.append(
            f'{step["index"]:>3} {step["letter"] or "-":>2} '
            f'len={step["length"]:<3} offset={step["foot_offset"]:>3} '
            f'{" ".join(marks)}'.rstrip(),
        )
    lines.append(f'h_l={payload["h_l"]} h_r={payload["h_r"]}')
    _emit(config, payload, '\n'.join(lines))


@cli.command(name='plmap')
@click.argument('element')
@click.pass_obj
@reporting
def cmd_plmap(config, element):
    plmap = to_plmap(parse_element(element))
    points = ' '.join(f'({x}, {y})' for x, y in plmap.breakpoints)
    human = (
        f'k_minus={plmap.k_minus} k_plus={plmap.k_plus} '
        f'breakpoints: {points or "none"}'
    )
    _emit(config, plmap.to_json(), human)


@cli.command(name='pl-eval')
@click.argument('element')
@click.argument('point')
@click.pass_obj
@reporting
def cmd_pl_eval(config, element, point):
    value = evaluate(to_plmap(parse_element(element)), parse_dyadic(point))
    _emit(config, {'value': value.to_parts(), 'text': str(value)}, str(value))


_STYLES = [style.value for style in RenderStyle]


@cli.command(name='render')
@click.argument('element')
@click.option('--style', type=click.Choice(_STYLES),
              default=RenderStyle.ASCII.value, show_default=True)
@click.pass_obj
@reporting
def cmd_render(config, element, style):
    drawing = render(parse_element(element), style)
    _emit(config, {'style': style, 'drawing': drawing}, drawing)


def entry_point():
    cli(prog_name=metadata.NAME)


if __name__ == '__main__':
    sys.exit(entry_point())
