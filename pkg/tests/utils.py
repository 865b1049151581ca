import os
import sys
import json
import shlex
import subprocess
import pandas as pd

from io import BytesIO

from pqe_tools.facts import Fact
from pqe_tools.instance import Instance

DATA = os.path.join(os.path.dirname(__file__), 'data')


def _data(name):
    return os.path.join(DATA, name)


def _run(cmd):
    args = [sys.executable, '-m', 'pqe_tools.cli.main'] + shlex.split(cmd)
    print(f'Executing: pqe {cmd}')
    return subprocess.run(args, stdin=subprocess.DEVNULL, stdout=subprocess.PIPE,
                          stderr=subprocess.PIPE)


def _cmd(cmd, table=True):
    # We go through Pandas to CSV to JSON instead of directly to JSON to improve coverage
    if table:
        cmd += ' --format csv'
    proc = _run(cmd)
    if proc.returncode != 0:
        raise subprocess.CalledProcessError(proc.returncode, cmd, proc.stdout, proc.stderr)
    text = proc.stdout
    if not table or not text.strip():
        return text.decode()
    csv = pd.read_csv(BytesIO(text), dtype=str, keep_default_na=False)
    if tuple(csv.columns) == ('field', 'value'):
        return csv.set_index('field').T.iloc[0].to_dict()
    return json.loads(csv.to_json(index=False, orient='table'))['data']


def _report(cmd):
    proc = _run(cmd)
    return proc.returncode, json.loads(proc.stdout.decode()) if proc.stdout.strip() else None


def _status(cmd):
    proc = _run(cmd)
    return proc.returncode, proc.stdout.decode(), proc.stderr.decode()


def _random_instance(rng, constants='abcd', relations='RST', min_facts=3, max_facts=6, monadic=''):
    '''A random instance; relations listed in ``monadic`` get arity-one facts.'''
    size = rng.randint(min_facts, max_facts)
    facts = set()
    while len(facts) < size:
        rel = rng.choice(relations + monadic)
        if rel in monadic:
            facts.add(Fact(rel, rng.choice(constants), None))
        else:
            facts.add(Fact(rel, rng.choice(constants), rng.choice(constants)))
    return Instance(facts)
