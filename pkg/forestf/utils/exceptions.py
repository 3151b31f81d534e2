class ForestfError(RuntimeError):
    pass


class ForestStructureError(ForestfError):
    pass


class GeneratorIndexError(ForestfError):
    pass


class WordSyntaxError(ForestfError):

    def __init__(self, message, text='', position=None):
        if position is not None:
            message = f'{message} (column {position})'
        super().__init__(message)
        self.text = text
        self.position = position


class ResourceCapExceeded(ForestfError):

    '''
    `partial` holds whatever was computed before the cap was hit.
    '''

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class VerificationFailure(ForestfError):

    def __init__(self, message, mismatch=None):
        super().__init__(message)
        self.mismatch = mismatch or {}


class CheckRegistrationError(ForestfError):
    pass


class LengthFormulaError(ForestfError):

    '''
    The length formula disagrees with the Cayley graph.
    '''
