class PQEException(RuntimeError):
    pass


class ParseError(PQEException, ValueError):
    def __init__(self, message, source=None, lineno=None, text=None):
        msg = [f'Parse error: {message}']
        if source or lineno:
            where = source or '<string>'
            if lineno:
                where += f', line {lineno}'
            msg.append(f'  at: {where}')
        if text:
            msg.append(f'  text: {text.strip()}')
        super(ParseError, self).__init__('\n'.join(msg))
        self.source = source
        self.lineno = lineno


class InvalidInputError(PQEException, ValueError):
    pass


class LimitExceeded(PQEException):
    pass


class HomomorphismBudgetExceeded(LimitExceeded):
    def __init__(self, budget):
        super(HomomorphismBudgetExceeded, self).__init__(
            f'Homomorphism search budget exhausted after {budget} steps; '
            'raise --hom-budget to search further')
        self.budget = budget


class WorldCapExceeded(LimitExceeded):
    def __init__(self, uncertain, cap, what='uncertain facts'):
        super(WorldCapExceeded, self).__init__(
            f'Refusing to enumerate 2^{uncertain} worlds ({uncertain} {what}); '
            f'the world cap is {cap}')
        self.uncertain = uncertain
        self.cap = cap
