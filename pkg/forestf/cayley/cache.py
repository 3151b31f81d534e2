"""
On-disk cache of enumerated balls.

File layout (gzip text):

    {"count": 17, "engine": "...", "generators": ["x0", "x1"], "radius": 2}
    ^. / ^.<TAB>0
    . ^. / ^. .<TAB>1
    ...

Elements are listed layer by layer. File names embed the first 12 hex
digits of the SHA-1 of the engine version, so caches written by another
version are never read.
"""

import gzip
import hashlib
import json
import logging
import os
import re

from forestf import metadata
from forestf.utils.exceptions import ForestfError
from forestf.diagram.text import diagram_to_text, parse_diagram
from .graph import Ball


logger = logging.getLogger(__name__)

GENERATORS = ['x0', 'x1']


def engine_digest(version=metadata.VERSION):
    return hashlib.sha1(version.encode('utf-8')).hexdigest()


class BallCache:

    def __init__(self, directory, version=metadata.VERSION):
        self.directory = directory
        self.engine = engine_digest(version)

    def path(self, radius):
        return os.path.join(
            self.directory,
            f'ball-r{radius}-{self.engine[:12]}.txt.gz',
        )

    def _cached_radii(self):
        if not os.path.isdir(self.directory):
            return []
        pattern = re.compile(
            r'^ball-r(\d+)-' + re.escape(self.engine[:12]) + r'\.txt\.gz$',
        )
        radii = []
        for name in os.listdir(self.directory):
            match = pattern.match(name)
            if match:
                radii.append(int(match.group(1)))
        return sorted(radii)

    def load(self, radius):
        '''
        The ball of `radius`, read from the smallest cached ball that covers
        it, or None.
        '''
        candidates = [
            cached for cached in self._cached_radii() if cached >= radius
        ]
        if not candidates:
            logger.info('ball cache miss: radius %d', radius)
            return None

        path = self.path(candidates[0])
        with gzip.open(path, 'rt', encoding='utf-8') as fin:
            header = json.loads(fin.readline())
            if header.get('engine') != self.engine:
                raise ForestfError(f'cache engine mismatch in {path}')

            layers = [[] for _ in range(radius + 1)]
            for line in fin:
                text, depth = line.rstrip('\n').split('\t')
                depth = int(depth)
                if depth > radius:
                    break
                layers[depth].append(parse_diagram(text, raw=True))

        logger.info('ball cache hit: radius %d from %s', radius, path)
        return Ball(radius, layers)

    def store(self, ball):
        os.makedirs(self.directory, exist_ok=True)
        path = self.path(ball.radius)
        header = {
            'generators': GENERATORS,
            'radius': ball.radius,
            'count': len(ball),
            'engine': self.engine,
        }
        partial_path = path + '.part'
        with gzip.open(partial_path, 'wt', encoding='utf-8') as fout:
            fout.write(json.dumps(header, sort_keys=True) + '\n')
            for depth, layer in enumerate(ball.layers):
                for element in layer:
                    fout.write(f'{diagram_to_text(element)}\t{depth}\n')
        os.replace(partial_path, path)
        logger.info('ball cache stored: radius %d at %s', ball.radius, path)
        return path
