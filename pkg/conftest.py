import pytest

from forestf.cayley.graph import enumerate_ball


@pytest.fixture(scope='session')
def ball_of():
    '''
    Memoized balls; a smaller radius is cut from any larger ball already
    enumerated.
    '''
    enumerated = {}

    def _ball(radius):
        for cached_radius in sorted(enumerated):
            if cached_radius >= radius:
                return enumerated[cached_radius].restricted(radius)
        enumerated[radius] = enumerate_ball(radius)
        return enumerated[radius]

    return _ball


@pytest.fixture(scope='session')
def ball4(ball_of):
    return ball_of(4)


@pytest.fixture(scope='session')
def ball5(ball_of):
    return ball_of(5)


@pytest.fixture(scope='session')
def ball6(ball_of):
    return ball_of(6)


@pytest.fixture(scope='session')
def ball7(ball_of):
    return ball_of(7)


@pytest.fixture(scope='session')
def ball8(ball_of):
    return ball_of(8)
