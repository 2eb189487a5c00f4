"""
Main entry point for running the identity verifier from a checkout.

    python run.py suite --jobs 4 --format json --out reports/suite.json
"""
import sys

from apery_verify import create_app

app = create_app()

if __name__ == '__main__':
    sys.exit(app.run(sys.argv[1:]))
