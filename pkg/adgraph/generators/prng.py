"""
SplitMix64, a fixed 64-bit generator, so that seeded corpora come out the
same on every platform and Python version.
"""

MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed=0):
        self.state = seed & MASK

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def random(self):
        """
        A float in [0, 1) from the top 53 bits.
        """
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def below(self, n):
        if n <= 0:
            raise ValueError("bound must be positive")
        return self.next() % n

    def choice(self, items):
        return items[self.below(len(items))]
