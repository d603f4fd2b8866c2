import argparse

from modules.verify import SUITES


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['text', 'json', 'csv'], default=None,
                        help='output format (default from cli.default_format)')
    common.add_argument('--fixtures', default=None, help='directory holding the table fixtures')
    common.add_argument('--log-level', default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'])
    common.add_argument('--set', dest='overrides', action='append', default=[], metavar='KEY=VALUE',
                        help='configuration override, repeatable (e.g. repnum.validation_order=200)')
    return common


def _discriminant(parser: argparse.ArgumentParser):
    parser.add_argument('-D', '--discriminant', type=int, required=True,
                        help='magnitude D of the discriminant -D')


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog='qformlab',
        description='Representation numbers of binary quadratic forms of odd class number',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('forms', parents=[common], help='reduced forms, class number and w')
    _discriminant(p)

    p = sub.add_parser('repcount', parents=[common], help='a(n, Q_i) by lattice count or formula')
    _discriminant(p)
    p.add_argument('-i', '--index', type=int, default=0, help='form index 0..k (default 0)')
    p.add_argument('-n', type=int, default=None)
    p.add_argument('--method', choices=['brute', 'formula', 'both'], default='brute')
    p.add_argument('--validate', type=int, default=None, metavar='N',
                   help='compare formula and lattice counts for every form and n <= N')

    p = sub.add_parser('fdr', parents=[common], help='coefficients t_r(1..N) of F_{D,r}')
    _discriminant(p)
    p.add_argument('-r', '--index', type=int, default=1)
    p.add_argument('-N', '--order', type=int, default=None, help='default cli.fdr_order (25)')

    p = sub.add_parser('product-exponents', parents=[common], help='c(n) of F_{D,r} = q prod (1-q^n)^c(n)')
    _discriminant(p)
    p.add_argument('-r', '--index', type=int, default=1)
    p.add_argument('-N', '--order', type=int, default=100, help='default 100')

    p = sub.add_parser('eta-search', parents=[common], help='eta(z)^i eta(Dz)^j of weight 1 at prime level')
    _discriminant(p)
    p.add_argument('--holomorphic', action='store_true',
                   help='allow order 0 at the cusps instead of requiring cusp forms')

    p = sub.add_parser('schoeneberg', parents=[common], help='Schoeneberg pair identity or uniqueness search')
    _discriminant(p)
    p.add_argument('-N', '--order', type=int, default=None,
                   help='default classify.identity_order (1000), or classify.search_order (500) with --search')
    p.add_argument('--search', action='store_true', help='scan all pairs of reduced forms')

    p = sub.add_parser('cusp', parents=[common], help='orders of F_{D,r} at i-infinity and 1/1')
    _discriminant(p)
    p.add_argument('-r', '--index', type=int, default=1)
    p.add_argument('-N', '--order', type=int, default=None, help='exponent bound at 1/1 (default 2D)')
    p.add_argument('--terms', type=int, default=10, help='expansion terms to list (default 10)')

    p = sub.add_parser('probe', parents=[common], help='growth of the product exponents of F_{D,r}')
    _discriminant(p)
    p.add_argument('-r', '--index', type=int, default=1)
    p.add_argument('-N', '--order', type=int, default=None, help='default classify.probe_order (300)')
    p.add_argument('--threshold', type=int, default=None, help='default classify.probe_threshold (10)')
    p.add_argument('--alpha', type=float, default=None,
                   help='also list |sum_{d|n} d c(d)| / n^alpha')

    p = sub.add_parser('verify', parents=[common], help='reproduce the tables and check every identity')
    p.add_argument('--suite', choices=list(SUITES), default='all')
    p.add_argument('--deterministic', action='store_true', help='omit timings so output is byte-stable')

    return parser
