from forestf.diagram.word import Letter


x0, X0, x1, X1 = Letter.X0, Letter.X0_INV, Letter.X1, Letter.X1_INV

# a geodesic word: 6 x1, 4 x1^-1, 8 x0^+-1.
SAMPLE_WORD_TEXT = (
    'x0^-1 x1 x0 x1 x0^-1 x1 x0^-1 x1^-1 x0^2 x1 x0 x1^2 x0^-1 x1^-3'
)
SAMPLE_LENGTH = 18

IDENTITY_TEXT = '^. / ^.'
X0_TEXT = '. ^. / ^. .'
X0_INV_TEXT = '^. . / . ^.'
X1_TEXT = '^(..) / ^. .'
X1_INV_TEXT = '^. . / ^(..)'
X2_TEXT = '^. (..) / ^. . .'

# l for n = 2.
L2_TEXT = '. ^. . (..) / ^((..).) . .'

WORDS = [
    '',
    'x0',
    'x1^-1',
    'x0^-2 x1 x0^3 x1^-2',
    'x1^2 x0^-1 x1^-1 x0',
    'x0^3 x1^-1 x0^-2 x1^2',
    SAMPLE_WORD_TEXT,
]
