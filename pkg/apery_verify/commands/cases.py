import json
import sys

from ..services.registry import list_cases
from . import EXIT_OK


def list_command(args) -> int:
    cases = list_cases()
    if args.format == 'json':
        sys.stdout.write(json.dumps(cases, indent=2) + '\n')
        return EXIT_OK
    for case in cases:
        print(f"{case['id']}  [{case['kind']}]  {case['description']}")
        print(f"      {case['formula']}")
        for name, spec in case['params'].items():
            print(f"      {name} = {spec['default']}  {spec['range']}")
    return EXIT_OK


def register(subparsers) -> None:
    parser = subparsers.add_parser('list', help='list the identity catalog')
    parser.add_argument('--format', choices=('text', 'json'), default='text')
    parser.set_defaults(handler=list_command)
