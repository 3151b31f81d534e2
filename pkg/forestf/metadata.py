NAME = 'forestf'
VERSION = '0.1.0'
AUTHORS = [
    'huntzhan',
]
EMAILS = [
    'programmer.zhx@gmail.com',
]
LICENSE = 'MIT'
URL = ''
DESCRIPTION = (
    "exact forest-diagram engine for Thompson's group F "
    'over the {x0, x1} generating set.'
)
