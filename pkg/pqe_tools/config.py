import json
import os

DEFAULTS = {
    'max_worlds': 2 ** 24,
    'hom_budget': 10 ** 7,
    'n_max': 16,
    'domain_bound': 4,
    'max_facts': 4,
    'sample': 100,
    'rng_seed': 0,
}


def envvar(key):
    return 'PQE_' + key.upper()


class ConfigManager:
    def __init__(self):
        self._path = os.path.expanduser(os.getenv('PQE_TOOLS_CONFIG_DIR') or '~/.pqe')
        self.load()

    def load(self):
        cpath = os.path.join(self._path, 'config.json')
        self._data = {}
        if os.path.isfile(cpath):
            with open(cpath, 'r') as fp:
                data = fp.read()
            if data.startswith('{'):
                self._data.update(json.loads(data))

    def save(self):
        os.makedirs(self._path, mode=0o700, exist_ok=True)
        cpath = os.path.join(self._path, 'config.json')
        with open(cpath, 'w') as fp:
            json.dump(self._data, fp, indent=2, sort_keys=True)

    def _lookup(self, key):
        if key not in DEFAULTS:
            raise KeyError(f'Unknown configuration key: {key}')
        env = os.environ.get(envvar(key))
        if env:
            return int(env), 'env'
        if key in self._data:
            return int(self._data[key]), 'config'
        return DEFAULTS[key], 'default'

    def get(self, key):
        return self._lookup(key)[0]

    def set(self, key, value):
        if key not in DEFAULTS:
            raise KeyError(f'Unknown configuration key: {key}')
        self._data[key] = int(value)

    def limits(self, **overrides):
        '''Effective limits: configured values with non-None overrides applied.'''
        result = {key: self.get(key) for key in DEFAULTS}
        result.update((k, v) for k, v in overrides.items() if v is not None and k in DEFAULTS)
        return result

    def list(self):
        '''(key, value, source) for every limit; source is env, config or default.'''
        return [(key,) + self._lookup(key) for key in DEFAULTS]


config = ConfigManager()
