from fractions import Fraction


def _is_power_of_two(value):
    return value > 0 and value & (value - 1) == 0


class Dyadic(Fraction):

    '''
    Rational number m / 2^e. Arithmetic is inherited from Fraction; wrap
    results with `Dyadic(...)` to keep the denominator check.
    '''

    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        self = super().__new__(cls, numerator, denominator)
        if not _is_power_of_two(self.denominator):
            raise ValueError(f'{Fraction(self)} is not a dyadic rational')
        return self

    @classmethod
    def from_parts(cls, numerator, exponent):
        if exponent < 0:
            raise ValueError(f'negative exponent {exponent}')
        return cls(numerator, 2 ** exponent)

    @property
    def exponent(self):
        return self.denominator.bit_length() - 1

    def scaled(self, power):
        '''
        self * 2^power.
        '''
        if power >= 0:
            return Dyadic(self.numerator * 2 ** power, self.denominator)
        return Dyadic(self.numerator, self.denominator * 2 ** -power)

    def to_parts(self):
        return [self.numerator, self.exponent]

    def __repr__(self):
        return f'Dyadic({self})'


def dyadic(value):
    if isinstance(value, Dyadic):
        return value
    return Dyadic(value)


def parse_dyadic(text):
    '''
    "7/8", "-3", "0.375" -> Dyadic.
    '''
    return Dyadic(Fraction(text.strip()))


def log2_of_power(value):
    '''
    k for value = 2^k, None if `value` is not an integral power of 2.
    '''
    value = Fraction(value)
    if _is_power_of_two(value.numerator) and value.denominator == 1:
        return value.numerator.bit_length() - 1
    if value.numerator == 1 and _is_power_of_two(value.denominator):
        return -(value.denominator.bit_length() - 1)
    return None
