"""
Group words over the four letters x0, x0^-1, x1, x1^-1.

Grammar of the text form:

    word := term*
    term := atom ("^" int)?
    atom := "x" digits | "X" digits | "(" word ")"

Whitespace and "*" separate terms; a capital X denotes the inverse
generator, so "x0^-2" and "X0^2" are the same word. Higher generators
x_i (i >= 2) are sugar for x0^(1-i) x1 x0^(i-1). Exponent 0 gives the
empty word.

A word acts by left multiplication, read right to left: the last letter
is applied first.
"""

from enum import Enum

from lark import Lark, Transformer, LarkError
from lark.exceptions import UnexpectedInput

from forestf.utils.exceptions import (
    GeneratorIndexError,
    WordSyntaxError,
)
from forestf.utils.helper_functions import run_length_groups


class Letter(Enum):

    X0 = 'x0'
    X0_INV = 'X0'
    X1 = 'x1'
    X1_INV = 'X1'

    @property
    def inverse(self):
        return _INVERSES[self]

    @property
    def generator(self):
        return 0 if self in (Letter.X0, Letter.X0_INV) else 1

    @property
    def sign(self):
        return 1 if self in (Letter.X0, Letter.X1) else -1

    def __repr__(self):
        return self.value


_INVERSES = {
    Letter.X0: Letter.X0_INV,
    Letter.X0_INV: Letter.X0,
    Letter.X1: Letter.X1_INV,
    Letter.X1_INV: Letter.X1,
}

# fixed iteration order for every search.
LETTERS = (Letter.X0, Letter.X0_INV, Letter.X1, Letter.X1_INV)

_BY_GENERATOR = {
    (0, 1): Letter.X0,
    (0, -1): Letter.X0_INV,
    (1, 1): Letter.X1,
    (1, -1): Letter.X1_INV,
}


def letter_of(generator, sign=1):
    return _BY_GENERATOR[(generator, sign)]


def word_power(word, exponent):
    word = tuple(word)
    if exponent < 0:
        return invert_word(word) * -exponent
    return word * exponent


def invert_word(word):
    return tuple(letter.inverse for letter in reversed(tuple(word)))


def free_reduce(word):
    reduced = []
    for letter in word:
        if reduced and reduced[-1] is letter.inverse:
            reduced.pop()
        else:
            reduced.append(letter)
    return tuple(reduced)


def expand_higher_generator(index):
    '''
    x_i = x0^(1-i) x1 x0^(i-1) for i >= 2.
    '''
    if index < 2:
        raise GeneratorIndexError(
            f'higher generators start at x2, got x{index}',
        )
    return (
        (Letter.X0_INV,) * (index - 1) +
        (Letter.X1,) +
        (Letter.X0,) * (index - 1)
    )


def generator_word(index):
    if index < 2:
        return (letter_of(index),)
    return expand_higher_generator(index)


def letter_counts(word):
    '''
    (number of x1, number of x1^-1, number of x0 and x0^-1).
    '''
    word = tuple(word)
    return (
        word.count(Letter.X1),
        word.count(Letter.X1_INV),
        word.count(Letter.X0) + word.count(Letter.X0_INV),
    )


_WORD_GRAMMAR = r'''
    start: term*

    term: atom exponent?

    exponent: "^" INT

    atom: GENERATOR          -> generator
        | "(" start ")"      -> group

    GENERATOR: /[xX][0-9]+/
    INT: /[+-]?[0-9]+/

    %ignore /[\s*]+/
'''


class _WordBuilder(Transformer):

    def start(self, children):
        word = ()
        for term in children:
            word += term
        return word

    def term(self, children):
        atom = children[0]
        if len(children) == 1:
            return atom
        return word_power(atom, children[1])

    def exponent(self, children):
        return int(children[0])

    def generator(self, children):
        token = str(children[0])
        word = generator_word(int(token[1:]))
        if token[0] == 'X':
            word = invert_word(word)
        return word

    def group(self, children):
        return children[0]


_word_parser = Lark(_WORD_GRAMMAR, parser='lalr')


def parse_word(text):
    try:
        tree = _word_parser.parse(text)
    except UnexpectedInput as exc:
        column = getattr(exc, 'column', -1)
        raise WordSyntaxError(
            f'cannot parse word {text!r}',
            text=text,
            position=column - 1 if column and column > 0 else len(text),
        ) from exc
    except LarkError as exc:
        raise WordSyntaxError(
            f'cannot parse word {text!r}', text=text,
        ) from exc
    return _WordBuilder().transform(tree)


def format_word(word):
    '''
    Inverse letters are written with negative exponents:
    (X0, X0, X1) -> "x0^-2 x1".
    '''
    terms = []
    for letter, count in run_length_groups(tuple(word)):
        exponent = count * letter.sign
        name = f'x{letter.generator}'
        if exponent == 1:
            terms.append(name)
        else:
            terms.append(f'{name}^{exponent}')
    return ' '.join(terms)


def random_word(rng, max_length):
    '''
    Uniform length in 0..max_length, uniform letters. `rng` is a
    random.Random so sweeps are reproducible.
    '''
    size = rng.randint(0, max_length)
    return tuple(rng.choice(LETTERS) for _ in range(size))
